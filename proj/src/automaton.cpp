#include "shiftlab/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "shiftlab/error.hpp"

namespace shiftlab {

// ---------------------------------------------------------------- Nfa

Nfa::Nfa(Alphabet alphabet, std::size_t num_states)
    : alphabet_(std::move(alphabet)), finals_(num_states, false), edges_(num_states) {}

State Nfa::add_state() {
  edges_.emplace_back();
  finals_.push_back(false);
  return static_cast<State>(edges_.size() - 1);
}

void Nfa::check_state(State q) const {
  if (q >= edges_.size())
    throw Error(ErrorCode::invalid_argument, "state " + std::to_string(q) + " out of range");
}

void Nfa::add_start(State q) {
  check_state(q);
  if (std::find(starts_.begin(), starts_.end(), q) == starts_.end()) starts_.push_back(q);
}

void Nfa::add_final(State q) {
  check_state(q);
  finals_[q] = true;
}

void Nfa::add_transition(State from, SymbolIndex symbol, State to) {
  check_state(from);
  check_state(to);
  if (symbol != kEpsilon && symbol >= alphabet_.size())
    throw Error(ErrorCode::invalid_argument, "symbol index out of range");
  if (symbol == kEpsilon) has_epsilon_ = true;
  Edge e{symbol, to};
  auto& out = edges_[from];
  if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
}

void Nfa::add_transition(State from, const Symbol& symbol, State to) {
  add_transition(from, alphabet_.index_of(symbol), to);
}

void Nfa::add_epsilon(State from, State to) { add_transition(from, kEpsilon, to); }

bool Nfa::is_start(State q) const {
  return std::find(starts_.begin(), starts_.end(), q) != starts_.end();
}

std::vector<State> Nfa::finals() const {
  std::vector<State> out;
  for (State q = 0; q < finals_.size(); ++q)
    if (finals_[q]) out.push_back(q);
  return out;
}

std::vector<State> Nfa::epsilon_closure(std::vector<State> states) const {
  if (has_epsilon_) {
    std::vector<bool> seen(num_states(), false);
    std::vector<State> stack;
    for (State q : states)
      if (!seen[q]) {
        seen[q] = true;
        stack.push_back(q);
      }
    states.clear();
    while (!stack.empty()) {
      State q = stack.back();
      stack.pop_back();
      states.push_back(q);
      for (const auto& e : edges_[q])
        if (e.symbol == kEpsilon && !seen[e.to]) {
          seen[e.to] = true;
          stack.push_back(e.to);
        }
    }
  }
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());
  return states;
}

std::vector<State> Nfa::step(const std::vector<State>& closed, SymbolIndex symbol) const {
  std::vector<State> next;
  for (State q : closed)
    for (const auto& e : edges_[q])
      if (e.symbol == symbol) next.push_back(e.to);
  return epsilon_closure(std::move(next));
}

bool Nfa::accepts(std::span<const SymbolIndex> word) const {
  auto current = epsilon_closure(starts_);
  for (auto a : word) {
    if (a >= alphabet_.size()) throw Error(ErrorCode::invalid_argument, "symbol index out of range");
    current = step(current, a);
    if (current.empty()) return false;
  }
  return std::any_of(current.begin(), current.end(), [&](State q) { return finals_[q]; });
}

bool Nfa::accepts(const Word& word) const { return accepts(alphabet_.encode(word)); }

// ---------------------------------------------------------------- Dfa

Dfa::Dfa(Alphabet alphabet, State start, std::vector<State> table, std::vector<bool> finals)
    : alphabet_(std::move(alphabet)),
      start_(start),
      table_(std::move(table)),
      finals_(std::move(finals)) {
  const std::size_t n = finals_.size();
  if (n == 0) throw Error(ErrorCode::invalid_argument, "a DFA needs at least one state");
  if (start_ >= n) throw Error(ErrorCode::invalid_argument, "DFA start state out of range");
  if (table_.size() != n * alphabet_.size())
    throw Error(ErrorCode::invalid_argument, "DFA transition table is not complete");
  for (State q : table_)
    if (q >= n) throw Error(ErrorCode::invalid_argument, "DFA successor out of range");
}

std::vector<State> Dfa::finals() const {
  std::vector<State> out;
  for (State q = 0; q < finals_.size(); ++q)
    if (finals_[q]) out.push_back(q);
  return out;
}

State Dfa::run(State q, std::span<const SymbolIndex> word) const {
  for (auto a : word) {
    if (a >= alphabet_.size()) throw Error(ErrorCode::invalid_argument, "symbol index out of range");
    q = next(q, a);
  }
  return q;
}

bool Dfa::accepts(std::span<const SymbolIndex> word) const { return finals_[run(start_, word)]; }

bool Dfa::accepts(const Word& word) const { return accepts(alphabet_.encode(word)); }

std::vector<bool> Dfa::live_states() const {
  const std::size_t n = num_states();
  const std::size_t k = alphabet_.size();
  std::vector<std::vector<State>> preds(n);
  for (State q = 0; q < n; ++q)
    for (SymbolIndex a = 0; a < k; ++a) preds[next(q, a)].push_back(q);
  std::vector<bool> live(finals_);
  std::vector<State> stack = finals();
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (State p : preds[q])
      if (!live[p]) {
        live[p] = true;
        stack.push_back(p);
      }
  }
  return live;
}

Nfa Dfa::to_nfa() const {
  Nfa out(alphabet_, num_states());
  out.add_start(start_);
  for (State q = 0; q < num_states(); ++q) {
    if (finals_[q]) out.add_final(q);
    for (SymbolIndex a = 0; a < alphabet_.size(); ++a) out.add_transition(q, a, next(q, a));
  }
  return out;
}

// ---------------------------------------------------------------- algorithms

Dfa determinize(const Nfa& nfa) {
  const std::size_t k = nfa.alphabet().size();
  std::map<std::vector<State>, State> ids;
  std::vector<std::vector<State>> subsets;
  std::vector<State> table;
  std::vector<bool> finals;

  auto intern = [&](std::vector<State> subset) -> State {
    auto [it, fresh] = ids.emplace(subset, static_cast<State>(subsets.size()));
    if (fresh) {
      finals.push_back(std::any_of(subset.begin(), subset.end(),
                                   [&](State q) { return nfa.is_final(q); }));
      subsets.push_back(std::move(subset));
    }
    return it->second;
  };

  intern(nfa.epsilon_closure(nfa.starts()));
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (SymbolIndex a = 0; a < k; ++a) {
      State target = intern(nfa.step(subsets[i], a));
      table.push_back(target);
    }
  }
  return Dfa(nfa.alphabet(), 0, std::move(table), std::move(finals));
}

Dfa to_dfa(const Nfa& nfa) {
  const std::size_t n = nfa.num_states();
  const std::size_t k = nfa.alphabet().size();
  if (nfa.starts().size() != 1 || nfa.has_epsilon()) return determinize(nfa);
  const State sink = static_cast<State>(n);
  std::vector<State> table(n * k, sink);
  bool partial = false;
  for (State q = 0; q < n; ++q) {
    std::vector<bool> seen(k, false);
    for (const auto& e : nfa.edges(q)) {
      if (seen[e.symbol]) return determinize(nfa);
      seen[e.symbol] = true;
      table[q * k + e.symbol] = e.to;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) partial = true;
  }
  std::vector<bool> finals(n, false);
  for (State q = 0; q < n; ++q) finals[q] = nfa.is_final(q);
  if (partial) {
    table.resize((n + 1) * k, sink);
    finals.push_back(false);
  }
  return Dfa(nfa.alphabet(), nfa.starts().front(), std::move(table), std::move(finals));
}

Dfa product(const Dfa& a, const Dfa& b, BoolOp op) {
  require_same_alphabet(a.alphabet(), b.alphabet(), "product");
  const std::size_t k = a.alphabet().size();
  std::map<std::pair<State, State>, State> ids;
  std::vector<std::pair<State, State>> pairs;
  std::vector<State> table;
  std::vector<bool> finals;

  auto intern = [&](State p, State q) -> State {
    auto [it, fresh] = ids.emplace(std::make_pair(p, q), static_cast<State>(pairs.size()));
    if (fresh) {
      pairs.emplace_back(p, q);
      bool fp = a.is_final(p), fq = b.is_final(q);
      switch (op) {
        case BoolOp::intersect: finals.push_back(fp && fq); break;
        case BoolOp::unite: finals.push_back(fp || fq); break;
        case BoolOp::difference: finals.push_back(fp && !fq); break;
      }
    }
    return it->second;
  };

  intern(a.start(), b.start());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [p, q] = pairs[i];
    for (SymbolIndex s = 0; s < k; ++s) table.push_back(intern(a.next(p, s), b.next(q, s)));
  }
  return Dfa(a.alphabet(), 0, std::move(table), std::move(finals));
}

Dfa complement(const Dfa& a) {
  std::vector<State> table;
  const std::size_t k = a.alphabet().size();
  table.reserve(a.num_states() * k);
  std::vector<bool> finals(a.num_states());
  for (State q = 0; q < a.num_states(); ++q) {
    finals[q] = !a.is_final(q);
    for (SymbolIndex s = 0; s < k; ++s) table.push_back(a.next(q, s));
  }
  return Dfa(a.alphabet(), a.start(), std::move(table), std::move(finals));
}

Dfa trim_unreachable(const Dfa& a) {
  const std::size_t k = a.alphabet().size();
  std::vector<State> id(a.num_states(), kEpsilon);
  std::vector<State> order{a.start()};
  id[a.start()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (SymbolIndex s = 0; s < k; ++s) {
      State t = a.next(order[i], s);
      if (id[t] == kEpsilon) {
        id[t] = static_cast<State>(order.size());
        order.push_back(t);
      }
    }
  std::vector<State> table;
  std::vector<bool> finals;
  for (State q : order) {
    finals.push_back(a.is_final(q));
    for (SymbolIndex s = 0; s < k; ++s) table.push_back(id[a.next(q, s)]);
  }
  return Dfa(a.alphabet(), 0, std::move(table), std::move(finals));
}

Dfa minimize(const Dfa& input) {
  Dfa a = trim_unreachable(input);
  const std::size_t n = a.num_states();
  const std::size_t k = a.alphabet().size();
  std::vector<State> cls(n);
  for (State q = 0; q < n; ++q) cls[q] = a.is_final(q) ? 1 : 0;
  std::size_t num_classes = 0;
  // Moore refinement: split by (class, successor classes) until stable.
  while (true) {
    std::map<std::vector<State>, State> sig_ids;
    std::vector<State> next_cls(n);
    for (State q = 0; q < n; ++q) {
      std::vector<State> sig{cls[q]};
      for (SymbolIndex s = 0; s < k; ++s) sig.push_back(cls[a.next(q, s)]);
      auto [it, fresh] = sig_ids.emplace(std::move(sig), static_cast<State>(sig_ids.size()));
      next_cls[q] = it->second;
    }
    std::size_t count = sig_ids.size();
    cls = std::move(next_cls);
    if (count == num_classes) break;
    num_classes = count;
  }
  std::vector<State> table(num_classes * k);
  std::vector<bool> finals(num_classes);
  for (State q = 0; q < n; ++q) {
    finals[cls[q]] = a.is_final(q);
    for (SymbolIndex s = 0; s < k; ++s) table[cls[q] * k + s] = cls[a.next(q, s)];
  }
  return trim_unreachable(Dfa(a.alphabet(), cls[a.start()], std::move(table), std::move(finals)));
}

Dfa universal_dfa(const Alphabet& alphabet) {
  return Dfa(alphabet, 0, std::vector<State>(alphabet.size(), 0), {true});
}

Dfa empty_dfa(const Alphabet& alphabet) {
  return Dfa(alphabet, 0, std::vector<State>(alphabet.size(), 0), {false});
}

std::optional<IndexWord> shortest_word(const Nfa& a) {
  // BFS over groups of states that share their least reaching word. Groups
  // are created in length-lex order of that word, so the first group holding
  // a final state carries the answer.
  struct Group {
    std::vector<State> states;
    std::size_t parent;
    SymbolIndex via;
  };
  constexpr std::size_t root = static_cast<std::size_t>(-1);
  std::vector<bool> seen(a.num_states(), false);
  std::vector<Group> groups;

  auto word_to = [&](std::size_t g) {
    IndexWord w;
    for (; groups[g].parent != root; g = groups[g].parent) w.push_back(groups[g].via);
    std::reverse(w.begin(), w.end());
    return w;
  };
  auto has_final = [&](const std::vector<State>& qs) {
    return std::any_of(qs.begin(), qs.end(), [&](State q) { return a.is_final(q); });
  };

  std::vector<State> init = a.epsilon_closure(a.starts());
  if (init.empty()) return std::nullopt;
  for (State q : init) seen[q] = true;
  groups.push_back({std::move(init), root, 0});
  if (has_final(groups[0].states)) return IndexWord{};

  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (SymbolIndex s = 0; s < a.alphabet().size(); ++s) {
      std::vector<State> fresh;
      for (State q : a.step(groups[g].states, s))
        if (!seen[q]) {
          seen[q] = true;
          fresh.push_back(q);
        }
      if (fresh.empty()) continue;
      groups.push_back({std::move(fresh), g, s});
      if (has_final(groups.back().states)) return word_to(groups.size() - 1);
    }
  }
  return std::nullopt;
}

std::optional<IndexWord> shortest_word(const Dfa& a) {
  const std::size_t n = a.num_states();
  const std::size_t k = a.alphabet().size();
  constexpr State none = kEpsilon;
  std::vector<State> parent(n, none);
  std::vector<SymbolIndex> via(n, none);
  std::vector<bool> seen(n, false);
  std::deque<State> queue{a.start()};
  seen[a.start()] = true;
  while (!queue.empty()) {
    State p = queue.front();
    queue.pop_front();
    if (a.is_final(p)) {
      IndexWord w;
      for (State q = p; parent[q] != none; q = parent[q]) w.push_back(via[q]);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (SymbolIndex s = 0; s < k; ++s) {
      State q = a.next(p, s);
      if (seen[q]) continue;
      seen[q] = true;
      parent[q] = p;
      via[q] = s;
      queue.push_back(q);
    }
  }
  return std::nullopt;
}

bool is_empty(const Nfa& a) { return !shortest_word(a).has_value(); }
bool is_empty(const Dfa& a) { return !shortest_word(a).has_value(); }

SubsetResult is_subset(const Dfa& a, const Dfa& b) {
  require_same_alphabet(a.alphabet(), b.alphabet(), "subset test");
  auto w = shortest_word(product(a, b, BoolOp::difference));
  if (!w) return {true, std::nullopt};
  return {false, std::move(w)};
}

void for_each_word(const Dfa& a, std::size_t max_len,
                   const std::function<bool(const IndexWord&)>& visit) {
  const std::size_t n = a.num_states();
  const std::size_t k = a.alphabet().size();
  // accepts_in[r][q]: some word of exactly r letters leads from q to a final state.
  std::vector<std::vector<bool>> accepts_in(max_len + 1, std::vector<bool>(n, false));
  for (State q = 0; q < n; ++q) accepts_in[0][q] = a.is_final(q);
  for (std::size_t r = 1; r <= max_len; ++r)
    for (State q = 0; q < n; ++q)
      for (SymbolIndex s = 0; s < k && !accepts_in[r][q]; ++s)
        if (accepts_in[r - 1][a.next(q, s)]) accepts_in[r][q] = true;

  IndexWord w;
  bool keep_going = true;
  auto dfs = [&](auto&& self, State q, std::size_t remaining) -> void {
    if (remaining == 0) {
      keep_going = visit(w);
      return;
    }
    for (SymbolIndex s = 0; s < k && keep_going; ++s) {
      State t = a.next(q, s);
      if (!accepts_in[remaining - 1][t]) continue;
      w.push_back(s);
      self(self, t, remaining - 1);
      w.pop_back();
    }
  };
  for (std::size_t len = 0; len <= max_len && keep_going; ++len)
    if (accepts_in[len][a.start()]) dfs(dfs, a.start(), len);
}

std::vector<IndexWord> enumerate_words(const Dfa& a, std::size_t max_len, std::size_t limit) {
  std::vector<IndexWord> out;
  if (limit == 0) return out;
  for_each_word(a, max_len, [&](const IndexWord& w) {
    out.push_back(w);
    return out.size() < limit;
  });
  return out;
}

Nfa relabel(const Nfa& nfa, const Alphabet& target, std::span<const SymbolIndex> mapping) {
  if (mapping.size() != nfa.alphabet().size())
    throw Error(ErrorCode::invalid_argument, "relabel: mapping does not cover the alphabet");
  Nfa out(target, nfa.num_states());
  for (State q : nfa.starts()) out.add_start(q);
  for (State q = 0; q < nfa.num_states(); ++q) {
    if (nfa.is_final(q)) out.add_final(q);
    for (const auto& e : nfa.edges(q))
      out.add_transition(q, e.symbol == kEpsilon ? kEpsilon : mapping[e.symbol], e.to);
  }
  return out;
}

}  // namespace shiftlab
