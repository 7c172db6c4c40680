#ifndef SHIFTLAB_PROCEDURES_HPP
#define SHIFTLAB_PROCEDURES_HPP

#include <cstddef>
#include <set>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "shiftlab/automaton.hpp"
#include "shiftlab/outcome.hpp"
#include "shiftlab/reductions.hpp"

namespace shiftlab {

using BigInt = boost::multiprecision::cpp_int;

// Non-negative rational in lowest terms.
class Rational {
 public:
  Rational(BigInt numerator, BigInt denominator);

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

 private:
  BigInt num_;
  BigInt den_;
};

// Witness shared by the shift problems.
using LongShiftWitness = ShiftWitness;

// Exact decision: does M accept x c^n x c^n x for some n >= |x|?
// Runs in time cubic in the size of the determinized automaton.
Decision<LongShiftWitness> accepts_long_shift(const ShiftInstance& inst);

struct ConjugatePair {
  IndexWord u;
  IndexWord v;  // uv and vu are both accepted and differ
};

struct DistinctConjugatesOptions {
  // Live prefixes examined before giving up with ErrorCode::limit_exceeded.
  // Automata with at most `uncapped_states` states are never capped.
  std::size_t max_candidates = 1'000'000;
  std::size_t uncapped_states = 4;
  bool uncapped = false;
};

// Exact decision: does m accept uv and vu with uv != vu? Candidates u are
// tried by length then alphabet order up to length n^2.
Decision<ConjugatePair> accepts_distinct_conjugates(const Dfa& m,
                                                    const DistinctConjugatesOptions& opts = {});

struct NonConjugatePair {
  IndexWord x;  // shortest word outside cyc(lexleast(L))
  IndexWord y;  // least accepted word of length |x|
};

// Exact decision: does m accept two words of equal length that are not
// conjugates?
Decision<NonConjugatePair> accepts_non_conjugates(const Dfa& m);

// Value of a digit word in base k, most significant digit first; empty is 0.
BigInt base_k_value(std::span<const unsigned> digits, unsigned k);
BigInt base_k_value(const Word& digits, unsigned k);

struct QuotientSet {
  std::set<Rational> values;
  std::size_t zero_denominators = 0;  // accepted words whose second track is 0
  std::size_t words = 0;              // accepted words examined
};

// [pi1(x)]_k / [pi2(x)]_k over accepted x with |x| <= max_len.
QuotientSet quo_enumerate(const Nfa& m, unsigned k, std::size_t max_len);

struct PowerWitness {
  std::size_t exponent;
  Word word;
};

// Bounded search for an accepted word whose quotient is k^i, i >= 0.
Decision<PowerWitness> accepts_power_search(const Nfa& m, unsigned k, std::size_t max_len);

// (a^t)+ b (a^(t+1))+ bb  u  (a^t)+ bb (a^(t+1))+ b, minimal complete DFA
// over the ordered alphabet {a, b}.
Dfa make_lt_language(std::size_t t);

}  // namespace shiftlab

#endif
