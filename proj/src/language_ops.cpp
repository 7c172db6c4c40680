#include "shiftlab/language_ops.hpp"

#include <map>

#include "shiftlab/error.hpp"
#include "shiftlab/words.hpp"

namespace shiftlab {

Dfa lexleast(const Dfa& m) {
  const std::size_t n = m.num_states();
  const std::size_t k = m.alphabet().size();
  using Key = std::pair<State, std::vector<bool>>;
  std::map<Key, State> ids;
  std::vector<Key> keys;
  std::vector<State> table;
  std::vector<bool> finals;

  auto intern = [&](State q, std::vector<bool> smaller) -> State {
    Key key{q, std::move(smaller)};
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    bool accept = m.is_final(q);
    for (State s = 0; s < n && accept; ++s)
      if (key.second[s] && m.is_final(s)) accept = false;
    State id = static_cast<State>(keys.size());
    ids.emplace(key, id);
    keys.push_back(std::move(key));
    finals.push_back(accept);
    return id;
  };

  intern(m.start(), std::vector<bool>(n, false));
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const State q = keys[i].first;
    const std::vector<bool> smaller = keys[i].second;
    // Words already smaller stay smaller whatever letter follows.
    std::vector<bool> carried(n, false);
    for (State s = 0; s < n; ++s)
      if (smaller[s])
        for (SymbolIndex b = 0; b < k; ++b) carried[m.next(s, b)] = true;
    std::vector<bool> next_smaller = carried;
    for (SymbolIndex a = 0; a < k; ++a) {
      table.push_back(intern(m.next(q, a), next_smaller));
      // Before moving on to a+1, the run on letter a becomes a smaller sibling.
      next_smaller[m.next(q, a)] = true;
    }
  }
  return Dfa(m.alphabet(), 0, std::move(table), std::move(finals));
}

Nfa cyc(const Dfa& m) {
  const std::size_t n = m.num_states();
  const std::size_t k = m.alphabet().size();
  // (pivot g, current p, phase): phase 0 reads v from g into F, phase 1
  // reads u from the start back to g.
  auto id = [n](State g, State p, unsigned phase) -> State {
    return static_cast<State>((g * n + p) * 2 + phase);
  };
  Nfa out(m.alphabet(), 2 * n * n);
  for (State g = 0; g < n; ++g) {
    out.add_start(id(g, g, 0));
    out.add_final(id(g, g, 1));
    for (State p = 0; p < n; ++p) {
      for (SymbolIndex a = 0; a < k; ++a) {
        out.add_transition(id(g, p, 0), a, id(g, m.next(p, a), 0));
        out.add_transition(id(g, p, 1), a, id(g, m.next(p, a), 1));
      }
      if (m.is_final(p)) out.add_epsilon(id(g, p, 0), id(g, m.start(), 1));
    }
  }
  return out;
}

namespace {

std::vector<State> copy_table(const Dfa& m) {
  std::vector<State> table;
  table.reserve(m.num_states() * m.alphabet().size());
  for (State q = 0; q < m.num_states(); ++q)
    for (SymbolIndex a = 0; a < m.alphabet().size(); ++a) table.push_back(m.next(q, a));
  return table;
}

}  // namespace

Dfa left_quotient(const Dfa& m, std::span<const SymbolIndex> x) {
  std::vector<bool> finals(m.num_states());
  for (State q = 0; q < m.num_states(); ++q) finals[q] = m.is_final(q);
  return Dfa(m.alphabet(), m.run(m.start(), x), copy_table(m), std::move(finals));
}

Dfa right_context(const Dfa& m, std::span<const SymbolIndex> x) {
  std::vector<bool> finals(m.num_states());
  for (State q = 0; q < m.num_states(); ++q) finals[q] = m.is_final(m.run(q, x));
  return Dfa(m.alphabet(), m.start(), copy_table(m), std::move(finals));
}

Dfa non_powers_of(const Alphabet& alphabet, std::span<const SymbolIndex> t) {
  if (t.empty()) throw Error(ErrorCode::invalid_argument, "non_powers_of: empty root");
  const std::size_t len = t.size();
  const std::size_t k = alphabet.size();
  const State sink = static_cast<State>(len);
  std::vector<State> table((len + 1) * k, sink);
  for (std::size_t i = 0; i < len; ++i) {
    if (t[i] >= k) throw Error(ErrorCode::invalid_argument, "symbol index out of range");
    table[i * k + t[i]] = static_cast<State>((i + 1) % len);
  }
  std::vector<bool> finals(len + 1, true);
  finals[0] = false;
  return Dfa(alphabet, 0, std::move(table), std::move(finals));
}

Dfa build_lx(const Dfa& m, std::span<const SymbolIndex> x) {
  if (x.empty()) throw Error(ErrorCode::invalid_argument, "build_lx: x must be nonempty");
  IndexWord xw(x.begin(), x.end());
  auto root = primitive_root(xw).root;
  Dfa both = product(left_quotient(m, x), right_context(m, x), BoolOp::intersect);
  return product(both, non_powers_of(m.alphabet(), root), BoolOp::intersect);
}

std::optional<IndexWord> lexleast_of_length(const Dfa& m, std::size_t length) {
  const std::size_t n = m.num_states();
  const std::size_t k = m.alphabet().size();
  std::vector<std::vector<bool>> accepts_in(length + 1, std::vector<bool>(n, false));
  for (State q = 0; q < n; ++q) accepts_in[0][q] = m.is_final(q);
  for (std::size_t r = 1; r <= length; ++r)
    for (State q = 0; q < n; ++q)
      for (SymbolIndex a = 0; a < k && !accepts_in[r][q]; ++a)
        accepts_in[r][q] = accepts_in[r - 1][m.next(q, a)];
  if (!accepts_in[length][m.start()]) return std::nullopt;
  IndexWord w;
  State q = m.start();
  for (std::size_t r = length; r > 0; --r) {
    for (SymbolIndex a = 0; a < k; ++a) {
      if (accepts_in[r - 1][m.next(q, a)]) {
        w.push_back(a);
        q = m.next(q, a);
        break;
      }
    }
  }
  return w;
}

}  // namespace shiftlab
