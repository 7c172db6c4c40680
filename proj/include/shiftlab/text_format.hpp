#ifndef SHIFTLAB_TEXT_FORMAT_HPP
#define SHIFTLAB_TEXT_FORMAT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "shiftlab/automaton.hpp"
#include "shiftlab/rewriting.hpp"

namespace shiftlab {

// Automaton files:
//
//   alphabet: a b c
//   states: 0 1 2
//   start: 0
//   finals: 2
//   trans: 0 a 1
//   trans: 1 b|c 2      # pair symbol [b,c]
//   trans: 0 @ 2        # epsilon
//
// State names are arbitrary tokens, numbered in declaration order.
Nfa parse_automaton(std::string_view text);

// Canonical form: states 0..n-1, transitions sorted. Each header line is
// emitted as a "# " comment.
std::string print_automaton(const Nfa& a, const std::vector<std::string>& header = {});
std::string print_automaton(const Dfa& a, const std::vector<std::string>& header = {});

// Rewriting files: an optional "alphabet:" line followed by
// "rule: <lhs> -> <rhs>" lines. Sides are whitespace-separated tokens;
// with a declared alphabet, a token that is not a declared atom is split into
// single-character atoms. Without one, tokens are atoms and the alphabet is
// collected in first-use order.
RewritingSystem parse_rewriting(std::string_view text);
std::string print_rewriting(const RewritingSystem& s, const std::vector<std::string>& header = {});

// Turing machine files (tm-states, tm-input, tm-tape, tm-blank, tm-start,
// tm-final, and one "tm-delta: q c -> p d L|R" per move).
TuringMachine parse_tm(std::string_view text);
std::string print_tm(const TuringMachine& m);

// Words: "@" or "" is the empty word; text containing ',' is a list of
// atoms; otherwise a single pair symbol "x|y", or one atom per character.
Word parse_word(std::string_view text);
// As above, but a token that is itself a symbol of `alphabet` stays whole.
Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const Word& w);
std::string format_word(const IndexWord& w, const Alphabet& alphabet);

}  // namespace shiftlab

#endif
