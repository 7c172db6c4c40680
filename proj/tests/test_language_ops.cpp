#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "oracles.hpp"
#include "shiftlab/error.hpp"
#include "shiftlab/language_ops.hpp"
#include "shiftlab/regex.hpp"
#include "shiftlab/words.hpp"

using namespace shiftlab;

namespace {

const Alphabet ab = oracle::letters(2);

IndexWord iw(std::string_view text) {
  IndexWord out;
  for (char c : text) out.push_back(static_cast<SymbolIndex>(c - 'a'));
  return out;
}

Dfa finite(const std::vector<std::string_view>& words) {
  std::vector<Regex> alts;
  for (auto t : words) alts.push_back(Regex::word(ab.decode(iw(t))));
  return determinize(Regex::alt(alts).to_nfa(ab));
}

// Least accepted word of every length up to max_len, by enumeration.
std::map<std::size_t, IndexWord> minima(const Dfa& m, std::size_t max_len) {
  std::map<std::size_t, IndexWord> out;
  for (const auto& w : oracle::language_up_to(m, max_len)) out.emplace(w.size(), w);
  return out;
}

std::set<IndexWord> rotation_closure(const std::vector<IndexWord>& lang) {
  std::set<IndexWord> out;
  for (const auto& w : lang)
    for (std::size_t i = 0; i <= w.size(); ++i) out.insert(rotate_left(w, i));
  return out;
}

}  // namespace

TEST_CASE("lexleast basics") {
  Dfa ll = lexleast(universal_dfa(ab));
  for (const auto& w : oracle::words_up_to(2, 6))
    CHECK(ll.accepts(w) == std::all_of(w.begin(), w.end(), [](auto s) { return s == 0; }));

  Dfa l = lexleast(finite({"ab", "ba", "aa"}));
  for (const auto& w : oracle::words_of_length(2, 2)) CHECK(l.accepts(w) == (w == iw("aa")));

  Dfa with_eps = finite({"", "b"});
  CHECK(lexleast(with_eps).accepts(IndexWord{}));
  CHECK_FALSE(lexleast(finite({"b"})).accepts(IndexWord{}));
}

TEST_CASE("lexleast holds exactly the per-length minima") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    Dfa m = oracle::random_dfa(rng, ab, 3);
    auto mins = minima(m, 8);
    Dfa ll = lexleast(m);
    for (const auto& w : oracle::words_up_to(2, 8)) {
      auto it = mins.find(w.size());
      REQUIRE(ll.accepts(w) == (it != mins.end() && it->second == w));
    }
    for (std::size_t len = 0; len <= 8; ++len) {
      auto it = mins.find(len);
      auto got = lexleast_of_length(m, len);
      REQUIRE(got.has_value() == (it != mins.end()));
      if (got) REQUIRE(*got == it->second);
    }
  }
}

TEST_CASE("cyc basics") {
  Nfa c = cyc(finite({"ab"}));
  for (const auto& w : oracle::words_up_to(2, 4))
    CHECK(c.accepts(w) == (w == iw("ab") || w == iw("ba")));
  Nfa none = cyc(empty_dfa(ab));
  CHECK(is_empty(none));
  CHECK(cyc(finite({""})).accepts(IndexWord{}));
  CHECK_FALSE(cyc(finite({"a"})).accepts(IndexWord{}));
}

TEST_CASE("cyc equals the rotation closure and is idempotent") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    Dfa m = oracle::random_dfa(rng, ab, 3);
    auto closure = rotation_closure(oracle::language_up_to(m, 7));
    Nfa c = cyc(m);
    Nfa cc = cyc(determinize(c));
    for (const auto& w : oracle::words_up_to(2, 7)) {
      bool expected = closure.count(w) > 0;
      REQUIRE(oracle::accepts(c, w) == expected);
      REQUIRE(oracle::accepts(cc, w) == expected);
    }
  }
}

TEST_CASE("build_lx") {
  Dfa m = finite({"ab", "ba"});
  Dfa la = build_lx(m, iw("a"));
  for (const auto& y : oracle::words_up_to(2, 3)) CHECK(la.accepts(y) == (y == iw("b")));
  CHECK(is_empty(build_lx(finite({"aa"}), iw("a"))));
  CHECK_THROWS_AS(build_lx(m, IndexWord{}), Error);
}

TEST_CASE("build_lx matches the three-clause definition") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    Dfa m = oracle::random_dfa(rng, ab, 3);
    for (std::size_t len = 1; len <= 3; ++len)
      for (const auto& x : oracle::words_of_length(2, len)) {
        Dfa lx = build_lx(m, x);
        for (const auto& y : oracle::words_up_to(2, 6)) {
          IndexWord xy = oracle::cat(x, y), yx = oracle::cat(y, x);
          bool expected = oracle::accepts(m, xy) && oracle::accepts(m, yx) && xy != yx;
          REQUIRE(lx.accepts(y) == expected);
        }
      }
  }
}

TEST_CASE("quotient helpers") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    Dfa m = oracle::random_dfa(rng, ab, 3);
    for (const auto& x : oracle::words_up_to(2, 2)) {
      Dfa lq = left_quotient(m, x), rc = right_context(m, x);
      for (const auto& y : oracle::words_up_to(2, 5)) {
        REQUIRE(lq.accepts(y) == oracle::accepts(m, oracle::cat(x, y)));
        REQUIRE(rc.accepts(y) == oracle::accepts(m, oracle::cat(y, x)));
      }
    }
  }
  Dfa np = non_powers_of(ab, iw("ab"));
  for (const auto& y : oracle::words_up_to(2, 6)) {
    bool power = y.size() % 2 == 0;
    for (std::size_t i = 0; power && i < y.size(); ++i) power = y[i] == (i % 2);
    CHECK(np.accepts(y) == !power);
  }
}
