#include "shiftlab/regex.hpp"

namespace shiftlab {

Regex Regex::empty() { return Regex(std::make_shared<const Node>(Node{Kind::empty, {}, {}})); }

Regex Regex::epsilon() {
  return Regex(std::make_shared<const Node>(Node{Kind::epsilon, {}, {}}));
}

Regex Regex::symbol(Symbol s) { return any_of({std::move(s)}); }

Regex Regex::any_of(std::vector<Symbol> symbols) {
  if (symbols.empty()) return empty();
  return Regex(std::make_shared<const Node>(Node{Kind::symbols, std::move(symbols), {}}));
}

Regex Regex::word(const Word& w) {
  std::vector<Regex> parts;
  parts.reserve(w.size());
  for (const auto& s : w) parts.push_back(symbol(s));
  return concat(std::move(parts));
}

Regex Regex::concat(std::vector<Regex> parts) {
  if (parts.empty()) return epsilon();
  if (parts.size() == 1) return parts.front();
  return Regex(std::make_shared<const Node>(Node{Kind::concat, {}, std::move(parts)}));
}

Regex Regex::alt(std::vector<Regex> parts) {
  if (parts.empty()) return empty();
  if (parts.size() == 1) return parts.front();
  return Regex(std::make_shared<const Node>(Node{Kind::alt, {}, std::move(parts)}));
}

Regex Regex::star(Regex r) {
  return Regex(std::make_shared<const Node>(Node{Kind::star, {}, {std::move(r)}}));
}

Regex Regex::plus(Regex r) { return concat({r, star(r)}); }

std::pair<State, State> Regex::build(Nfa& nfa) const {
  State in = nfa.add_state();
  State out = nfa.add_state();
  switch (node_->kind) {
    case Kind::empty:
      break;
    case Kind::epsilon:
      nfa.add_epsilon(in, out);
      break;
    case Kind::symbols:
      for (const auto& s : node_->symbols) nfa.add_transition(in, s, out);
      break;
    case Kind::concat: {
      State cursor = in;
      for (const auto& child : node_->children) {
        auto [cin, cout] = child.build(nfa);
        nfa.add_epsilon(cursor, cin);
        cursor = cout;
      }
      nfa.add_epsilon(cursor, out);
      break;
    }
    case Kind::alt:
      for (const auto& child : node_->children) {
        auto [cin, cout] = child.build(nfa);
        nfa.add_epsilon(in, cin);
        nfa.add_epsilon(cout, out);
      }
      break;
    case Kind::star: {
      auto [cin, cout] = node_->children.front().build(nfa);
      nfa.add_epsilon(in, cin);
      nfa.add_epsilon(in, out);
      nfa.add_epsilon(cout, cin);
      nfa.add_epsilon(cout, out);
      break;
    }
  }
  return {in, out};
}

Nfa Regex::to_nfa(const Alphabet& alphabet) const {
  Nfa nfa(alphabet);
  auto [in, out] = build(nfa);
  nfa.add_start(in);
  nfa.add_final(out);
  return nfa;
}

}  // namespace shiftlab
