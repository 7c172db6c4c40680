#include "shiftlab/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <unordered_map>

#include "shiftlab/error.hpp"

namespace shiftlab {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string t; in >> t;) out.push_back(std::move(t));
  return out;
}

struct Line {
  std::size_t number;
  std::string key;
  std::string value;
};

// Non-blank lines split at the first ':' with '#' comments removed.
std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(number, "expected 'key: value'");
    out.push_back({number, std::string(trim(line.substr(0, colon))),
                   std::string(trim(line.substr(colon + 1)))});
  }
  return out;
}

Symbol symbol_at(std::size_t line, const std::string& text) {
  try {
    return Symbol(text);
  } catch (const Error& e) {
    throw ParseError(line, e.what());
  }
}

std::string header_block(const std::vector<std::string>& header) {
  std::string out;
  for (const auto& h : header) out += "# " + h + "\n";
  return out;
}

std::string join(const std::vector<Symbol>& symbols) {
  std::string out;
  for (const auto& s : symbols) {
    if (!out.empty()) out += ' ';
    out += s.text();
  }
  return out;
}

// One side of a rule, or a word token list, against a declared alphabet.
Word read_tokens(std::size_t line, const std::vector<std::string>& toks, const Alphabet* alphabet) {
  Word out;
  for (const auto& t : toks) {
    if (alphabet == nullptr) {
      out.push_back(symbol_at(line, t));
      continue;
    }
    Word part;
    try {
      part = parse_word(t, *alphabet);
    } catch (const Error& e) {
      throw ParseError(line, e.what());
    }
    for (auto& s : part) {
      if (!alphabet->contains(s))
        throw ParseError(line, "symbol '" + s.text() + "' is not in the alphabet");
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace

// ------------------------------------------------------------ automata

Nfa parse_automaton(std::string_view text) {
  auto lines = split_lines(text);
  std::vector<Symbol> alphabet;
  std::unordered_map<std::string, State> states;
  for (const auto& l : lines) {
    if (l.key == "alphabet") {
      for (const auto& t : tokens(l.value)) {
        Symbol s = symbol_at(l.number, t);
        if (std::find(alphabet.begin(), alphabet.end(), s) != alphabet.end())
          throw ParseError(l.number, "duplicate symbol '" + t + "'");
        alphabet.push_back(std::move(s));
      }
    } else if (l.key == "states") {
      for (const auto& t : tokens(l.value))
        if (!states.emplace(t, static_cast<State>(states.size())).second)
          throw ParseError(l.number, "duplicate state '" + t + "'");
    } else if (l.key != "start" && l.key != "finals" && l.key != "trans") {
      throw ParseError(l.number, "unknown key '" + l.key + "'");
    }
  }

  Nfa nfa(Alphabet(alphabet), states.size());
  auto state = [&](const Line& l, const std::string& name) {
    auto it = states.find(name);
    if (it == states.end()) throw ParseError(l.number, "undeclared state '" + name + "'");
    return it->second;
  };
  for (const auto& l : lines) {
    auto toks = tokens(l.value);
    if (l.key == "start") {
      for (const auto& t : toks) nfa.add_start(state(l, t));
    } else if (l.key == "finals") {
      for (const auto& t : toks) nfa.add_final(state(l, t));
    } else if (l.key == "trans") {
      if (toks.size() != 3) throw ParseError(l.number, "expected 'trans: <from> <symbol> <to>'");
      State from = state(l, toks[0]);
      State to = state(l, toks[2]);
      if (toks[1] == kEpsilonToken) {
        nfa.add_epsilon(from, to);
        continue;
      }
      auto idx = nfa.alphabet().find(symbol_at(l.number, toks[1]));
      if (!idx) throw ParseError(l.number, "symbol '" + toks[1] + "' is not in the alphabet");
      nfa.add_transition(from, *idx, to);
    }
  }
  return nfa;
}

std::string print_automaton(const Nfa& a, const std::vector<std::string>& header) {
  std::ostringstream out;
  out << header_block(header);
  out << "alphabet:";
  for (const auto& s : a.alphabet().symbols()) out << ' ' << s.text();
  out << "\nstates:";
  for (State q = 0; q < a.num_states(); ++q) out << ' ' << q;
  std::vector<State> starts = a.starts();
  std::sort(starts.begin(), starts.end());
  out << "\nstart:";
  for (State q : starts) out << ' ' << q;
  out << "\nfinals:";
  for (State q : a.finals()) out << ' ' << q;
  out << '\n';
  for (State q = 0; q < a.num_states(); ++q) {
    std::vector<Edge> edges(a.edges(q).begin(), a.edges(q).end());
    std::sort(edges.begin(), edges.end());
    for (const auto& e : edges)
      out << "trans: " << q << ' '
          << (e.symbol == kEpsilon ? std::string(kEpsilonToken) : a.alphabet()[e.symbol].text())
          << ' ' << e.to << '\n';
  }
  return out.str();
}

std::string print_automaton(const Dfa& a, const std::vector<std::string>& header) {
  return print_automaton(a.to_nfa(), header);
}

// ------------------------------------------------------------ rewriting

RewritingSystem parse_rewriting(std::string_view text) {
  auto lines = split_lines(text);
  std::optional<Alphabet> declared;
  for (const auto& l : lines) {
    if (l.key != "alphabet") continue;
    if (declared) throw ParseError(l.number, "alphabet declared twice");
    std::vector<Symbol> symbols;
    for (const auto& t : tokens(l.value)) symbols.push_back(symbol_at(l.number, t));
    try {
      declared = Alphabet(std::move(symbols));
    } catch (const Error& e) {
      throw ParseError(l.number, e.what());
    }
  }

  std::vector<Symbol> collected;
  std::vector<Rule> rules;
  for (const auto& l : lines) {
    if (l.key == "alphabet") continue;
    if (l.key != "rule") throw ParseError(l.number, "unknown key '" + l.key + "'");
    auto toks = tokens(l.value);
    auto arrow = std::find(toks.begin(), toks.end(), "->");
    if (arrow == toks.end()) throw ParseError(l.number, "expected 'rule: <lhs> -> <rhs>'");
    std::vector<std::string> lhs_toks(toks.begin(), arrow), rhs_toks(arrow + 1, toks.end());
    const Alphabet* alphabet = declared ? &*declared : nullptr;
    Rule rule{read_tokens(l.number, lhs_toks, alphabet), read_tokens(l.number, rhs_toks, alphabet)};
    if (rule.lhs.empty()) throw ParseError(l.number, "rule has an empty left side");
    if (rule.lhs.size() != rule.rhs.size())
      throw ParseError(l.number, "rule is not length-preserving");
    if (!declared)
      for (const auto& side : {rule.lhs, rule.rhs})
        for (const auto& s : side)
          if (std::find(collected.begin(), collected.end(), s) == collected.end())
            collected.push_back(s);
    rules.push_back(std::move(rule));
  }
  return RewritingSystem(declared ? *declared : Alphabet(std::move(collected)), std::move(rules));
}

std::string print_rewriting(const RewritingSystem& s, const std::vector<std::string>& header) {
  std::string out = header_block(header);
  out += "alphabet: " + s.alphabet().to_string() + "\n";
  for (const auto& r : s.rules()) out += "rule: " + join(r.lhs) + " -> " + join(r.rhs) + "\n";
  return out;
}

// ------------------------------------------------------------ Turing machines

TuringMachine parse_tm(std::string_view text) {
  TuringMachine m;
  bool have_blank = false, have_start = false, have_final = false;
  auto single = [](const Line& l) {
    auto toks = tokens(l.value);
    if (toks.size() != 1) throw ParseError(l.number, "expected exactly one symbol");
    return symbol_at(l.number, toks.front());
  };
  auto many = [](const Line& l) {
    std::vector<Symbol> out;
    for (const auto& t : tokens(l.value)) out.push_back(symbol_at(l.number, t));
    return out;
  };
  auto append = [](std::vector<Symbol>& dst, std::vector<Symbol> src) {
    dst.insert(dst.end(), src.begin(), src.end());
  };
  for (const auto& l : split_lines(text)) {
    if (l.key == "tm-states") {
      append(m.states, many(l));
    } else if (l.key == "tm-input") {
      append(m.input_alphabet, many(l));
    } else if (l.key == "tm-tape") {
      append(m.tape_alphabet, many(l));
    } else if (l.key == "tm-blank") {
      m.blank = single(l);
      have_blank = true;
    } else if (l.key == "tm-start") {
      m.start = single(l);
      have_start = true;
    } else if (l.key == "tm-final") {
      m.final_state = single(l);
      have_final = true;
    } else if (l.key == "tm-delta") {
      auto toks = tokens(l.value);
      if (toks.size() != 6 || toks[2] != "->" || (toks[5] != "L" && toks[5] != "R"))
        throw ParseError(l.number, "expected 'tm-delta: <q> <c> -> <p> <d> L|R'");
      m.moves.push_back({symbol_at(l.number, toks[0]), symbol_at(l.number, toks[1]),
                         symbol_at(l.number, toks[3]), symbol_at(l.number, toks[4]),
                         toks[5] == "L" ? Direction::left : Direction::right});
    } else {
      throw ParseError(l.number, "unknown key '" + l.key + "'");
    }
  }
  if (!have_blank) throw ParseError(0, "missing tm-blank");
  if (!have_start) throw ParseError(0, "missing tm-start");
  if (!have_final) throw ParseError(0, "missing tm-final");
  try {
    m.validate();
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
  return m;
}

std::string print_tm(const TuringMachine& m) {
  std::string out;
  out += "tm-states: " + join(m.states) + "\n";
  out += "tm-input: " + join(m.input_alphabet) + "\n";
  out += "tm-tape: " + join(m.tape_alphabet) + "\n";
  out += "tm-blank: " + m.blank.text() + "\n";
  out += "tm-start: " + m.start.text() + "\n";
  out += "tm-final: " + m.final_state.text() + "\n";
  for (const auto& mv : m.moves)
    out += "tm-delta: " + mv.from.text() + " " + mv.read.text() + " -> " + mv.to.text() + " " +
           mv.write.text() + (mv.direction == Direction::left ? " L\n" : " R\n");
  return out;
}

// ------------------------------------------------------------ words

namespace {

Word parse_word_impl(std::string_view text, const Alphabet* alphabet) {
  text = trim(text);
  if (text.empty() || text == kEpsilonToken) return {};
  Word out;
  if (text.find(',') != std::string_view::npos) {
    while (true) {
      auto comma = text.find(',');
      auto atom = trim(text.substr(0, comma));
      out.emplace_back(std::string(atom));
      if (comma == std::string_view::npos) break;
      text = text.substr(comma + 1);
    }
    return out;
  }
  auto toks = tokens(text);
  for (const auto& t : toks) {
    if (alphabet != nullptr && t.find('|') == std::string::npos) {
      Symbol whole(t);
      if (alphabet->contains(whole)) {
        out.push_back(std::move(whole));
        continue;
      }
    }
    if (t.find('|') != std::string::npos || (alphabet == nullptr && toks.size() > 1)) {
      out.emplace_back(t);
      continue;
    }
    for (char ch : t) out.emplace_back(std::string(1, ch));
  }
  return out;
}

}  // namespace

Word parse_word(std::string_view text) { return parse_word_impl(text, nullptr); }

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  Word w = parse_word_impl(text, &alphabet);
  for (const auto& s : w)
    if (!alphabet.contains(s))
      throw Error(ErrorCode::alphabet_mismatch,
                  "symbol '" + s.text() + "' is not in the alphabet {" + alphabet.to_string() + "}");
  return w;
}

std::string format_word(const Word& w) {
  if (w.empty()) return std::string(kEpsilonToken);
  bool compact = std::all_of(w.begin(), w.end(), [](const Symbol& s) { return s.text().size() == 1; });
  std::string out;
  for (const auto& s : w) {
    if (!compact && !out.empty()) out += ',';
    out += s.text();
  }
  return out;
}

std::string format_word(const IndexWord& w, const Alphabet& alphabet) {
  return format_word(alphabet.decode(w));
}

}  // namespace shiftlab
