#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "oracles.hpp"
#include "shiftlab/error.hpp"
#include "shiftlab/procedures.hpp"
#include "shiftlab/records.hpp"
#include "shiftlab/reductions.hpp"
#include "shiftlab/regex.hpp"
#include "shiftlab/text_format.hpp"
#include "shiftlab/words.hpp"

using namespace shiftlab;

namespace {

const Alphabet ab = oracle::letters(2);

IndexWord iw(std::string_view text) {
  IndexWord out;
  for (char c : text) out.push_back(static_cast<SymbolIndex>(c - 'a'));
  return out;
}

Word atoms(std::initializer_list<const char*> list) {
  Word out;
  for (auto t : list) out.emplace_back(t);
  return out;
}

template <class Container>
Nfa finite_over(const Alphabet& alphabet, const Container& words) {
  std::vector<Regex> alts;
  for (const auto& w : words) alts.push_back(Regex::word(w));
  return Regex::alt(alts).to_nfa(alphabet);
}

Dfa finite(std::initializer_list<std::string_view> words) {
  std::vector<Word> ws;
  for (auto t : words) ws.push_back(ab.decode(iw(t)));
  return determinize(finite_over(ab, ws));
}

bool length_lex_less(const IndexWord& x, const IndexWord& y) {
  return x.size() != y.size() ? x.size() < y.size() : x < y;
}

// First (u, v) in length-lex order of u, then of v, with uv, vu in L and
// uv != vu, looking at |u| <= max_u and |v| <= max_v.
std::optional<std::pair<IndexWord, IndexWord>> brute_conjugates(const Dfa& m, std::size_t max_u,
                                                                std::size_t max_v) {
  const auto vs = oracle::words_up_to(2, max_v);
  for (std::size_t len = 1; len <= max_u; ++len)
    for (const auto& u : oracle::words_of_length(2, len))
      for (const auto& v : vs) {
        IndexWord uv = oracle::cat(u, v), vu = oracle::cat(v, u);
        if (uv != vu && oracle::accepts(m, uv) && oracle::accepts(m, vu)) return std::make_pair(u, v);
      }
  return std::nullopt;
}

// Some length holds two accepted non-conjugates.
bool brute_non_conjugates(const Dfa& m, std::size_t max_len) {
  std::map<std::size_t, std::vector<IndexWord>> by_length;
  for (const auto& w : oracle::language_up_to(m, max_len)) by_length[w.size()].push_back(w);
  for (const auto& [len, words] : by_length)
    for (const auto& x : words)
      for (const auto& y : words)
        if (!oracle::conjugate_by_split(x, y)) return true;
  return false;
}

ShiftInstance random_shift_instance(std::mt19937& rng, const Alphabet& gamma) {
  std::vector<Symbol> l = gamma.symbols();
  l.emplace_back("c");
  Alphabet letters(l);
  return ShiftInstance(gamma, Symbol("c"),
                       oracle::random_dfa(rng, Alphabet::pairs(letters, letters), 3).to_nfa());
}

}  // namespace

TEST_CASE("rationals are kept in lowest terms") {
  CHECK(Rational(4, 6).to_string() == "2/3");
  CHECK(Rational(0, 5).to_string() == "0/1");
  CHECK(Rational(3, 1) == Rational(6, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("long shift examples") {
  const Alphabet a = Alphabet::from_atoms({"a"});
  const Alphabet letters = Alphabet::from_atoms({"a", "c"});
  const Alphabet pairs = Alphabet::pairs(letters, letters);
  ShiftInstance yes(a, Symbol("c"), finite_over(pairs, std::vector<Word>{atoms({"a|c", "c|c", "c|a"})}));
  auto r = accepts_long_shift(yes);
  REQUIRE(r.is_yes());
  CHECK(r.witness->x == atoms({"a"}));
  CHECK(r.witness->n == 2);

  // The top track a c a c is not of the form x c^n.
  ShiftInstance alt(a, Symbol("c"),
                    finite_over(pairs, std::vector<Word>{atoms({"a|c", "c|a", "a|c", "c|a"})}));
  CHECK(accepts_long_shift(alt).verdict == Verdict::no);

  ShiftInstance empty(a, Symbol("c"), Nfa(pairs, 1));
  CHECK(accepts_long_shift(empty).verdict == Verdict::no);
}

TEST_CASE("long shift agrees with bounded enumeration") {
  std::mt19937 rng(131);
  for (const auto& gamma : {Alphabet::from_atoms({"a"}), Alphabet::from_atoms({"a", "b"})}) {
    int yes = 0;
    for (int trial = 0; trial < 100; ++trial) {
      ShiftInstance inst = random_shift_instance(rng, gamma);
      bool brute = false;
      for (std::size_t len = 0; len <= 3 && !brute; ++len)
        for (const auto& x : oracle::words_of_length(gamma.size(), len)) {
          for (std::size_t n = len; n <= 6 && !brute; ++n)
            brute = inst.automaton().accepts(shift_word(gamma.decode(x), inst.c(), n));
          if (brute) break;
        }
      auto r = accepts_long_shift(inst);
      REQUIRE(r.verdict != Verdict::unknown);
      REQUIRE(r.is_yes() == brute);
      if (r.is_yes()) {
        ++yes;
        REQUIRE(r.witness->n >= r.witness->x.size());
        REQUIRE(inst.automaton().accepts(shift_word(r.witness->x, inst.c(), r.witness->n)));
      }
    }
    CHECK(yes > 0);
    CHECK(yes < 100);
  }
}

TEST_CASE("distinct conjugates examples") {
  auto r = accepts_distinct_conjugates(finite({"ab", "ba"}));
  REQUIRE(r.is_yes());
  CHECK(r.witness->u == iw("a"));
  CHECK(r.witness->v == iw("b"));

  Dfa abstar = determinize(Regex::star(Regex::word(ab.decode(iw("ab")))).to_nfa(ab));
  auto n = accepts_distinct_conjugates(abstar);
  CHECK(n.verdict == Verdict::no);
  CHECK(n.bound == abstar.num_states() * abstar.num_states());
  CHECK(accepts_distinct_conjugates(finite({"aab"})).verdict == Verdict::no);
  CHECK(accepts_distinct_conjugates(empty_dfa(ab)).verdict == Verdict::no);
}

TEST_CASE("distinct conjugates agree with pair enumeration") {
  std::mt19937 rng(137);
  for (int trial = 0; trial < 100; ++trial) {
    Dfa m = oracle::random_dfa(rng, ab, 3);
    auto r = accepts_distinct_conjugates(m);
    auto brute = brute_conjugates(m, 9, 6);
    REQUIRE(r.verdict != Verdict::unknown);
    if (brute) {
      REQUIRE(r.is_yes());
      REQUIRE(!length_lex_less(brute->first, r.witness->u));
    }
    if (r.is_yes()) {
      const auto& [u, v] = *r.witness;
      IndexWord uv = oracle::cat(u, v), vu = oracle::cat(v, u);
      REQUIRE(oracle::accepts(m, uv));
      REQUIRE(oracle::accepts(m, vu));
      REQUIRE(uv != vu);
      REQUIRE(u.size() <= 9);
      // v is the least partner of u, and no earlier u has a short partner.
      if (v.size() <= 6) {
        REQUIRE(brute);
        REQUIRE(brute->first == u);
        REQUIRE(brute->second == v);
      }
    }
  }
}

TEST_CASE("L_t family") {
  for (std::size_t t = 1; t <= 3; ++t) {
    Dfa lt = make_lt_language(t);
    CHECK(lt.num_states() == 3 * t + 8);
    IndexWord shortest;
    for (std::size_t i = 0; i < t; ++i) shortest.push_back(0);
    shortest.push_back(1);
    for (std::size_t i = 0; i <= t; ++i) shortest.push_back(0);
    shortest.push_back(1);
    shortest.push_back(1);
    CHECK(lt.accepts(shortest));
  }
  for (std::size_t t = 1; t <= 2; ++t) {
    Dfa lt = make_lt_language(t);
    auto r = accepts_distinct_conjugates(lt);
    REQUIRE(r.is_yes());
    CHECK(r.witness->u.size() == t * t + t + 1);
    CHECK(r.witness->v.size() == t * t + t + 2);
    auto brute = brute_conjugates(lt, t * t + t + 1, t * t + t + 2);
    REQUIRE(brute);
    CHECK(brute->first == r.witness->u);
    CHECK(brute->second == r.witness->v);
  }
  CHECK_THROWS_AS(make_lt_language(0), Error);
}

TEST_CASE("distinct conjugates cap") {
  DistinctConjugatesOptions tight;
  tight.max_candidates = 2;
  try {
    accepts_distinct_conjugates(make_lt_language(1), tight);
    FAIL("expected the cap to trip");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::limit_exceeded);
  }
  tight.uncapped = true;
  CHECK(accepts_distinct_conjugates(make_lt_language(1), tight).is_yes());
  // Small automata are never capped.
  DistinctConjugatesOptions none;
  none.max_candidates = 0;
  Dfa abstar = minimize(determinize(Regex::star(Regex::word(ab.decode(iw("ab")))).to_nfa(ab)));
  REQUIRE(abstar.num_states() <= 4);
  CHECK(accepts_distinct_conjugates(abstar, none).verdict == Verdict::no);
}

TEST_CASE("non-conjugates examples") {
  CHECK(accepts_non_conjugates(finite({"ab", "ba"})).verdict == Verdict::no);
  auto r = accepts_non_conjugates(finite({"aa", "ab"}));
  REQUIRE(r.is_yes());
  CHECK(r.witness->x == iw("ab"));
  CHECK(r.witness->y == iw("aa"));
  Dfa abstar = determinize(Regex::star(Regex::word(ab.decode(iw("ab")))).to_nfa(ab));
  CHECK(accepts_non_conjugates(abstar).verdict == Verdict::no);
  CHECK(accepts_non_conjugates(universal_dfa(ab)).is_yes());
}

TEST_CASE("non-conjugates agree with pairwise conjugacy") {
  std::mt19937 rng(139);
  for (int trial = 0; trial < 100; ++trial) {
    Dfa m = oracle::random_dfa(rng, ab, 3);
    auto r = accepts_non_conjugates(m);
    bool brute = brute_non_conjugates(m, 8);
    REQUIRE(r.verdict != Verdict::unknown);
    if (brute) REQUIRE(r.is_yes());
    if (r.is_yes()) {
      const auto& [x, y] = *r.witness;
      REQUIRE(x.size() == y.size());
      REQUIRE(oracle::accepts(m, x));
      REQUIRE(oracle::accepts(m, y));
      REQUIRE_FALSE(oracle::conjugate_by_split(x, y));
      if (x.size() <= 8) REQUIRE(brute);
    }
  }
}

TEST_CASE("single word per length means no on both procedures") {
  std::vector<Dfa> thin{
      finite({"aab"}),
      determinize(Regex::star(Regex::word(ab.decode(iw("ab")))).to_nfa(ab)),
      determinize(Regex::star(Regex::symbol(Symbol("b"))).to_nfa(ab)),
      finite({"a", "ab", "bab"}),
  };
  for (const auto& m : thin) {
    CHECK(accepts_distinct_conjugates(m).verdict == Verdict::no);
    CHECK(accepts_non_conjugates(m).verdict == Verdict::no);
  }
}

TEST_CASE("base-k values") {
  std::vector<unsigned> d101{1, 0, 1}, d0077{0, 0, 7, 7}, none;
  CHECK(base_k_value(d101, 2) == 5);
  CHECK(base_k_value(none, 7) == 0);
  CHECK(base_k_value(d0077, 10) == 77);
  CHECK(base_k_value(atoms({"1", "0", "1"}), 2) == 5);
  CHECK_THROWS_AS(base_k_value(d101, 1), Error);
  std::vector<unsigned> bad{2};
  CHECK_THROWS_AS(base_k_value(bad, 2), Error);
}

TEST_CASE("quotient enumeration") {
  const Alphabet bits = digit_alphabet(2);
  const Alphabet pairs = Alphabet::pairs(bits, bits);
  auto one = quo_enumerate(finite_over(pairs, std::vector<Word>{atoms({"1|1"})}), 2, 4);
  CHECK(one.values == std::set<Rational>{Rational(1, 1)});
  auto two = quo_enumerate(finite_over(pairs, std::vector<Word>{atoms({"1|0", "0|1"})}), 2, 4);
  CHECK(two.values == std::set<Rational>{Rational(2, 1)});
  auto zero = quo_enumerate(finite_over(pairs, std::vector<Word>{atoms({"1|0"}), atoms({"1|1"})}), 2, 4);
  CHECK(zero.zero_denominators == 1);
  CHECK(zero.words == 2);
  CHECK_THROWS_AS(quo_enumerate(Nfa(pairs, 1), 1, 3), Error);
  CHECK_THROWS_AS(quo_enumerate(Nfa(Alphabet::pairs(digit_alphabet(3), digit_alphabet(3)), 1), 2, 3),
                  Error);
}

TEST_CASE("quotients agree with per-word recomputation") {
  std::mt19937 rng(149);
  for (unsigned k : {2u, 3u}) {
    const Alphabet digits = digit_alphabet(k);
    const Alphabet pairs = Alphabet::pairs(digits, digits);
    for (int trial = 0; trial < 20; ++trial) {
      Nfa m = oracle::random_nfa(rng, pairs, 3, 0.2, 0.05);
      const std::size_t max_len = k == 2 ? 5 : 4;
      std::set<Rational> expected;
      std::size_t zeros = 0, words = 0;
      for (const auto& w : oracle::language_up_to(m, max_len)) {
        ++words;
        unsigned long long num = 0, den = 0;
        for (auto s : w) {
          num = num * k + s / k;
          den = den * k + s % k;
        }
        if (den == 0)
          ++zeros;
        else
          expected.insert(Rational(num, den));
      }
      auto got = quo_enumerate(m, k, max_len);
      REQUIRE(got.values == expected);
      REQUIRE(got.zero_denominators == zeros);
      REQUIRE(got.words == words);
    }
  }
}

TEST_CASE("power search") {
  const Alphabet bits = digit_alphabet(2);
  const Alphabet pairs = Alphabet::pairs(bits, bits);
  auto r = accepts_power_search(finite_over(pairs, std::vector<Word>{atoms({"1|1"})}), 2, 3);
  REQUIRE(r.is_yes());
  CHECK(r.witness->exponent == 0);
  auto e = accepts_power_search(Nfa(pairs, 1), 2, 6);
  CHECK(e.verdict == Verdict::unknown);
  CHECK(e.bound == 6u);
  auto four = accepts_power_search(finite_over(pairs, std::vector<Word>{atoms({"1|0", "0|0", "0|1"})}), 2, 3);
  REQUIRE(four.is_yes());
  CHECK(four.witness->exponent == 2);
}

TEST_CASE("power search through the shift reduction") {
  auto s = parse_rewriting("alphabet: a b\nrule: a -> b\n");
  auto p = shift_to_power(rewrite_to_shift(s, Symbol("a"), Symbol("b")).instance);
  CHECK(p.k == 4);
  std::optional<std::size_t> first_yes;
  for (std::size_t len = 12; len <= 16; ++len) {
    auto r = accepts_power_search(p.automaton, static_cast<unsigned>(p.k), len);
    if (first_yes) REQUIRE(r.is_yes());  // monotone in max_len
    if (r.is_yes()) {
      if (!first_yes) first_yes = len;
      REQUIRE(p.automaton.accepts(r.witness->word));
      BigInt num = base_k_value(project(r.witness->word, 1), static_cast<unsigned>(p.k));
      BigInt den = base_k_value(project(r.witness->word, 2), static_cast<unsigned>(p.k));
      BigInt power = 1;
      for (std::size_t i = 0; i < r.witness->exponent; ++i) power *= p.k;
      REQUIRE(num == den * power);
    }
  }
  REQUIRE(first_yes);
  CHECK(*first_yes <= 14);
}

TEST_CASE("result records") {
  auto r = accepts_distinct_conjugates(make_lt_language(1));
  auto rec = to_record(r, ab);
  CHECK(*rec.find("verdict") == "yes");
  CHECK(*rec.find("u") == "aab");
  CHECK(*rec.find("v") == "aabb");
  CHECK(*rec.find("u-length") == "3");
  CHECK(*rec.find("v-length") == "4");
  CHECK(rec.render().rfind("verdict: yes\n", 0) == 0);
}
