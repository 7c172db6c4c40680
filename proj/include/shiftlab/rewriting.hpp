#ifndef SHIFTLAB_REWRITING_HPP
#define SHIFTLAB_REWRITING_HPP

#include <cstddef>
#include <limits>
#include <vector>

#include "shiftlab/outcome.hpp"
#include "shiftlab/symbol.hpp"

namespace shiftlab {

struct Rule {
  Word lhs;
  Word rhs;

  friend bool operator==(const Rule&, const Rule&) = default;
};

// Finite length-preserving rewriting system over an alphabet.
class RewritingSystem {
 public:
  // Throws if a rule is not length-preserving, has an empty side, or uses a
  // symbol outside `alphabet`.
  RewritingSystem(Alphabet alphabet, std::vector<Rule> rules);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }

 private:
  Alphabet alphabet_;
  std::vector<Rule> rules_;
};

struct Rewrite {
  std::size_t rule;
  std::size_t position;
  Word result;
};

// Every single rewrite of w, by rule order then left-to-right position.
std::vector<Rewrite> rewrites(const RewritingSystem& s, const Word& w);
// The distinct words reachable in exactly one step, sorted.
std::vector<Word> one_step(const RewritingSystem& s, const Word& w);

struct Derivation {
  std::vector<Word> words;      // words.front() = source, words.back() = target
  std::vector<std::size_t> rules;     // rule applied between words[i] and words[i+1]
  std::vector<std::size_t> positions;

  std::size_t length() const noexcept { return rules.size(); }
};

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

// Breadth-first search over the words of |from| letters. `budget` caps the
// number of distinct words visited. A "no" is exhaustive.
Decision<Derivation> reachable(const RewritingSystem& s, const Word& from, const Word& to,
                               std::size_t budget = kUnlimited);

struct PowerDerivation {
  std::size_t n;
  Derivation derivation;
};

// Tries a^n =>* b^n for n = 1..max_n. Never answers no.
Decision<PowerDerivation> rewrite_power_search(const RewritingSystem& s, const Symbol& a,
                                               const Symbol& b, std::size_t max_n,
                                               std::size_t budget = kUnlimited,
                                               unsigned jobs = 1);

enum class Direction { left, right };

struct TmMove {
  Symbol from;
  Symbol read;
  Symbol to;
  Symbol write;
  Direction direction;
};

// One-tape machine with a tape infinite to the right. Moves form a relation,
// so nondeterministic machines are representable.
struct TuringMachine {
  std::vector<Symbol> states;
  std::vector<Symbol> input_alphabet;
  std::vector<Symbol> tape_alphabet;
  Symbol blank;
  Symbol start;
  Symbol final_state;
  std::vector<TmMove> moves;

  // Structural checks; throws ErrorCode::invalid_argument.
  void validate() const;
};

struct TmEncoding {
  RewritingSystem system;
  std::vector<unsigned> origin;  // which of the seven rule families emitted each rule
};

// Encoding of a halting computation on blank tape as a^n =>* b^n.
TmEncoding tm_to_rewriting(const TuringMachine& m);

struct TmRun {
  enum class Status { halted, running, stuck };
  Status status;
  std::size_t steps;
  std::size_t cells_used;  // distinct cells on which a move was executed
};

// Runs on an all-blank tape, taking the first listed applicable move.
// Stuck means no move in a non-final state, or a left move off cell 0.
TmRun tm_run(const TuringMachine& m, std::size_t max_steps);

}  // namespace shiftlab

#endif
