#ifndef SHIFTLAB_AUTOMATON_HPP
#define SHIFTLAB_AUTOMATON_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shiftlab/symbol.hpp"

namespace shiftlab {

using State = std::uint32_t;

// Label used for epsilon moves in an Nfa.
inline constexpr SymbolIndex kEpsilon = std::numeric_limits<SymbolIndex>::max();

struct Edge {
  SymbolIndex symbol;  // kEpsilon for an epsilon move
  State to;

  auto operator<=>(const Edge&) const = default;
};

// Nondeterministic automaton with epsilon moves. States are 0..num_states()-1.
class Nfa {
 public:
  explicit Nfa(Alphabet alphabet, std::size_t num_states = 0);

  State add_state();
  void add_start(State q);
  void add_final(State q);
  void add_transition(State from, SymbolIndex symbol, State to);
  void add_transition(State from, const Symbol& symbol, State to);
  void add_epsilon(State from, State to);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return edges_.size(); }
  const std::vector<State>& starts() const noexcept { return starts_; }
  bool is_start(State q) const;
  bool is_final(State q) const { return finals_[q]; }
  std::vector<State> finals() const;
  std::span<const Edge> edges(State q) const { return edges_[q]; }
  bool has_epsilon() const noexcept { return has_epsilon_; }

  // Sorted, duplicate-free closure.
  std::vector<State> epsilon_closure(std::vector<State> states) const;
  std::vector<State> step(const std::vector<State>& closed, SymbolIndex symbol) const;

  bool accepts(std::span<const SymbolIndex> word) const;
  bool accepts(const Word& word) const;

 private:
  void check_state(State q) const;

  Alphabet alphabet_;
  std::vector<State> starts_;
  std::vector<bool> finals_;
  std::vector<std::vector<Edge>> edges_;
  bool has_epsilon_ = false;
};

// Complete deterministic automaton: exactly one successor per (state, symbol).
class Dfa {
 public:
  // `table[q * |alphabet| + a]` is the successor of q on a.
  Dfa(Alphabet alphabet, State start, std::vector<State> table, std::vector<bool> finals);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return finals_.size(); }
  State start() const noexcept { return start_; }
  bool is_final(State q) const { return finals_[q]; }
  std::vector<State> finals() const;
  State next(State q, SymbolIndex a) const { return table_[q * alphabet_.size() + a]; }
  State run(State q, std::span<const SymbolIndex> word) const;

  bool accepts(std::span<const SymbolIndex> word) const;
  bool accepts(const Word& word) const;

  // States from which some final state is reachable.
  std::vector<bool> live_states() const;

  Nfa to_nfa() const;

 private:
  Alphabet alphabet_;
  State start_;
  std::vector<State> table_;
  std::vector<bool> finals_;
};

enum class BoolOp { intersect, unite, difference };

// Subset construction over reachable subsets; the empty subset is the sink.
Dfa determinize(const Nfa& nfa);

// Reuses the numbering of an NFA that is already deterministic (adding a sink
// state if it is partial); otherwise determinizes.
Dfa to_dfa(const Nfa& nfa);

Dfa product(const Dfa& a, const Dfa& b, BoolOp op);
Dfa complement(const Dfa& a);
Dfa minimize(const Dfa& a);

// Reachable part only, renumbered in BFS order.
Dfa trim_unreachable(const Dfa& a);

// The automaton of all words over `alphabet` (one state).
Dfa universal_dfa(const Alphabet& alphabet);
Dfa empty_dfa(const Alphabet& alphabet);

bool is_empty(const Nfa& a);
bool is_empty(const Dfa& a);

// Shortest accepted word, least in alphabet order among those of that length.
std::optional<IndexWord> shortest_word(const Nfa& a);
std::optional<IndexWord> shortest_word(const Dfa& a);

struct SubsetResult {
  bool holds = true;
  std::optional<IndexWord> counterexample;  // shortest word of L(a) \ L(b)
};

SubsetResult is_subset(const Dfa& a, const Dfa& b);

// Calls `visit` on each accepted word of length <= max_len, ordered by length
// then alphabet order, until it returns false.
void for_each_word(const Dfa& a, std::size_t max_len,
                   const std::function<bool(const IndexWord&)>& visit);

// Every accepted word of length <= max_len, ordered by length then alphabet
// order. Stops after `limit` words.
std::vector<IndexWord> enumerate_words(const Dfa& a, std::size_t max_len,
                                       std::size_t limit = std::numeric_limits<std::size_t>::max());

// Copy of `nfa` over `target`, relabelling symbol i as mapping[i].
Nfa relabel(const Nfa& nfa, const Alphabet& target, std::span<const SymbolIndex> mapping);

}  // namespace shiftlab

#endif
