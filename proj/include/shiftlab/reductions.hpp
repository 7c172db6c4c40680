#ifndef SHIFTLAB_REDUCTIONS_HPP
#define SHIFTLAB_REDUCTIONS_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "shiftlab/automaton.hpp"
#include "shiftlab/outcome.hpp"
#include "shiftlab/regex.hpp"
#include "shiftlab/rewriting.hpp"

namespace shiftlab {

// An alphabet gamma, a letter c outside it, and an automaton over the pairs
// of gamma + {c}.
class ShiftInstance {
 public:
  ShiftInstance(Alphabet gamma, Symbol c, Nfa automaton);

  // Gamma is read off the automaton's pair alphabet (every component but c).
  static ShiftInstance from_automaton(Nfa automaton, const Symbol& c);

  const Alphabet& gamma() const noexcept { return gamma_; }
  const Symbol& c() const noexcept { return c_; }
  const Nfa& automaton() const noexcept { return automaton_; }

  // gamma followed by c.
  Alphabet letters() const;

 private:
  Alphabet gamma_;
  Symbol c_;
  Nfa automaton_;
};

// First symbol of the sequence base0, base1, ... not in `taken`.
Symbol fresh_symbol(std::string_view base, const std::vector<Symbol>& taken);

struct ShiftReduction {
  ShiftInstance instance;
  Symbol d;
};

// E = {[e,e]}, R = {r x l : l -> r in S}, E* R E*.
Regex step_regex(const RewritingSystem& s);

// Language L = [d,c][a,c]+[d,d](E*RE*[d,d])*[c,b]+[c,d] over (Sigma+{d}+{c})^2.
ShiftReduction rewrite_to_shift(const RewritingSystem& s, const Symbol& a, const Symbol& b);

struct ShiftWitness {
  Word x;
  std::size_t n;
};

// Bounded search for x c^n x c^n x with |x| <= max_len and 1 <= n <= max_len,
// in order of |x|, then x, then n.
Decision<ShiftWitness> shift_search(const ShiftInstance& inst, std::size_t max_len,
                                    unsigned jobs = 1);

// The word x c^n x c^n x (pairs).
Word shift_word(const Word& x, const Symbol& c, std::size_t n);

Alphabet digit_alphabet(std::size_t k);

struct PowerInstance {
  std::size_t k;
  Nfa automaton;                                  // over digit_alphabet(k) pairs
  std::vector<std::pair<Symbol, Symbol>> renaming;  // source letter -> digit
};

// Gamma[i] becomes digit i+1, c becomes 0, k = |gamma| + 1. digit_cap = 0
// means no cap.
PowerInstance shift_to_power(const ShiftInstance& inst, std::size_t digit_cap = 0);

// Uniform-length binary block code.
class Morphism {
 public:
  Morphism(std::vector<Symbol> source, std::vector<Word> images);

  const std::vector<Symbol>& source() const noexcept { return source_; }
  const Word& image(const Symbol& s) const;
  Word apply(const Word& w) const;
  std::size_t block_length() const;

 private:
  std::vector<Symbol> source_;
  std::vector<Word> images_;
};

// phi(a_i) = 1^i 0^(m-i) 1 for sigma = a_1..a_m, phi(c) = 0^(m+1).
Morphism binary_block_code(const std::vector<Symbol>& sigma, const Symbol& c);

struct RecodedInstance {
  Morphism phi;
  Symbol c;
  Symbol d;
  ShiftInstance instance;  // gamma {1}, c = 0
};

// E'* R' E'* over {0,1}^2 for the recoded rules.
Regex binary_step_regex(const RewritingSystem& s, const Morphism& phi);

// The binary form of rewrite_to_shift. phi is built over sigma + {d}, so
// every block has |sigma| + 2 bits.
RecodedInstance recode_binary(const RewritingSystem& s, const Symbol& a, const Symbol& b);

struct GeneralShiftRestriction {
  bool diagonal_hit;
  std::optional<Word> diagonal_witness;  // shortest accepted x x x, as pairs
  Nfa restricted;                        // L(M) intersect { s c+ x c+ t }
};

GeneralShiftRestriction general_shift_restrict(const ShiftInstance& inst);

}  // namespace shiftlab

#endif
