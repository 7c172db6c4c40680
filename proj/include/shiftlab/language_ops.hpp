#ifndef SHIFTLAB_LANGUAGE_OPS_HPP
#define SHIFTLAB_LANGUAGE_OPS_HPP

#include <optional>

#include "shiftlab/automaton.hpp"

namespace shiftlab {

// For each length, keeps only the alphabetically least word of L(m) of that
// length. States pair the run of the word with the set of states reached by
// strictly smaller words of the same length.
Dfa lexleast(const Dfa& m);

// Closure of L(m) under conjugation: { vu : uv in L(m) }.
Nfa cyc(const Dfa& m);

// { y : xy in L(m) }.
Dfa left_quotient(const Dfa& m, std::span<const SymbolIndex> x);
// { y : yx in L(m) }.
Dfa right_context(const Dfa& m, std::span<const SymbolIndex> x);
// Complement of t* over `alphabet`.
Dfa non_powers_of(const Alphabet& alphabet, std::span<const SymbolIndex> t);

// { y : xy in L, yx in L, xy != yx } for nonempty x.
Dfa build_lx(const Dfa& m, std::span<const SymbolIndex> x);

// Least accepted word of exactly `length` letters.
std::optional<IndexWord> lexleast_of_length(const Dfa& m, std::size_t length);

}  // namespace shiftlab

#endif
