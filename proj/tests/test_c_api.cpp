#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "shiftlab/c_api.h"

namespace {

const char* kPairs =
    "alphabet: a|a a|c c|a c|c\n"
    "states: 0 1 2\n"
    "start: 0\n"
    "finals: 2\n"
    "trans: 0 a|c 1\n"
    "trans: 1 c|a 2\n";

std::string take(char* s) {
  std::string out = s ? s : "";
  sl_string_free(s);
  return out;
}

sl_automaton* parse(const char* text) {
  sl_automaton* a = nullptr;
  REQUIRE(sl_automaton_parse(text, &a) == SL_OK);
  return a;
}

}  // namespace

TEST_CASE("parse, print and free") {
  sl_automaton* a = parse(kPairs);
  CHECK(sl_automaton_num_states(a) == 3);
  char* alphabet = nullptr;
  REQUIRE(sl_automaton_alphabet(a, &alphabet) == SL_OK);
  CHECK(take(alphabet) == "a|a a|c c|a c|c");
  char* text = nullptr;
  REQUIRE(sl_automaton_print(a, "one\ntwo", &text) == SL_OK);
  std::string printed = take(text);
  CHECK(printed.rfind("# one\n# two\nalphabet:", 0) == 0);
  int in = -1;
  REQUIRE(sl_automaton_accepts(a, "a|c,c|a", &in) == SL_OK);
  CHECK(in == 1);
  REQUIRE(sl_automaton_accepts(a, "@", &in) == SL_OK);
  CHECK(in == 0);
  sl_automaton_free(a);
  sl_automaton_free(nullptr);
}

TEST_CASE("errors carry codes and messages") {
  sl_automaton* a = nullptr;
  CHECK(sl_automaton_parse("alphabet: a\nstates: 0\nstart: 4\n", &a) == SL_ERR_PARSE);
  CHECK(a == nullptr);
  CHECK(std::string(sl_last_error()).find("line 3") != std::string::npos);

  sl_automaton* ab = nullptr;
  sl_automaton* lt = nullptr;
  REQUIRE(sl_gen_lt(1, &lt) == SL_OK);
  ab = parse("alphabet: x y\nstates: 0\nstart: 0\n");
  sl_automaton* out = nullptr;
  CHECK(sl_automaton_product(lt, ab, SL_INTERSECT, &out) == SL_ERR_ALPHABET);
  std::string msg = sl_last_error();
  CHECK(msg.find("{a b}") != std::string::npos);
  CHECK(msg.find("{x y}") != std::string::npos);

  CHECK(sl_automaton_determinize(nullptr, &out) == SL_ERR_INVALID);
  CHECK(sl_gen_lt(0, &out) == SL_ERR_INVALID);
  int in = 0;
  CHECK(sl_automaton_accepts(lt, "z", &in) == SL_ERR_ALPHABET);
  CHECK(std::string(sl_status_name(SL_ERR_LIMIT)) == "limit exceeded");

  sl_result* r = nullptr;
  sl_automaton* lt3 = nullptr;
  REQUIRE(sl_gen_lt(3, &lt3) == SL_OK);
  CHECK(sl_check_distinct_conjugates(lt3, 3, 0, &r) == SL_ERR_LIMIT);
  REQUIRE(sl_check_distinct_conjugates(lt3, 3, 1, &r) == SL_OK);
  CHECK(sl_result_verdict(r) == SL_YES);
  CHECK(std::string(sl_result_get(r, "u-length")) == "13");
  sl_result_free(r);
  sl_automaton_free(lt3);
  sl_automaton_free(lt);
  sl_automaton_free(ab);
}

TEST_CASE("language operations") {
  sl_automaton* lt = nullptr;
  REQUIRE(sl_gen_lt(1, &lt) == SL_OK);
  sl_automaton *ll = nullptr, *c = nullptr, *comp = nullptr, *min = nullptr, *det = nullptr;
  REQUIRE(sl_automaton_lexleast(lt, &ll) == SL_OK);
  REQUIRE(sl_automaton_cyc(ll, &c) == SL_OK);
  REQUIRE(sl_automaton_complement(lt, &comp) == SL_OK);
  REQUIRE(sl_automaton_determinize(c, &det) == SL_OK);
  REQUIRE(sl_automaton_minimize(c, &min) == SL_OK);

  int in = 0;
  REQUIRE(sl_automaton_accepts(comp, "ab", &in) == SL_OK);
  CHECK(in == 1);
  REQUIRE(sl_automaton_accepts(c, "baaabb", &in) == SL_OK);  // rotation of aabaabb? no
  CHECK(in == 0);
  REQUIRE(sl_automaton_accepts(c, "abbaaba", &in) == SL_OK);  // rotation of aabaabb
  CHECK(in == 1);
  REQUIRE(sl_automaton_accepts(min, "abbaaba", &in) == SL_OK);
  CHECK(in == 1);

  sl_result* r = nullptr;
  REQUIRE(sl_automaton_subset(lt, c, &r) == SL_OK);
  CHECK(sl_result_verdict(r) == SL_NO);
  CHECK(sl_result_get(r, "counterexample") != nullptr);
  sl_result_free(r);
  REQUIRE(sl_automaton_subset(ll, lt, &r) == SL_OK);
  CHECK(sl_result_verdict(r) == SL_YES);
  sl_result_free(r);

  for (auto* p : {lt, ll, c, comp, min, det}) sl_automaton_free(p);
}

TEST_CASE("rewriting, machines and reductions") {
  const char* tm_text =
      "tm-states: q0 qf\ntm-input:\ntm-tape: B\ntm-blank: B\ntm-start: q0\ntm-final: qf\n"
      "tm-delta: q0 B -> qf B R\n";
  sl_tm* m = nullptr;
  REQUIRE(sl_tm_parse(tm_text, &m) == SL_OK);
  sl_result* run = nullptr;
  REQUIRE(sl_tm_run(m, 100, &run) == SL_OK);
  CHECK(sl_result_verdict(run) == SL_YES);
  CHECK(std::string(sl_result_get(run, "cells-used")) == "1");
  sl_result_free(run);

  sl_rewriting* s = nullptr;
  REQUIRE(sl_tm_to_rewriting(m, &s) == SL_OK);
  CHECK(sl_rewriting_num_rules(s) == 6);
  char* text = nullptr;
  REQUIRE(sl_rewriting_print(s, nullptr, &text) == SL_OK);
  sl_rewriting* again = nullptr;
  std::string printed = take(text);
  REQUIRE(sl_rewriting_parse(printed.c_str(), &again) == SL_OK);
  REQUIRE(sl_rewriting_print(again, nullptr, &text) == SL_OK);
  CHECK(take(text) == printed);

  sl_result* r = nullptr;
  REQUIRE(sl_search_rewrite_power(again, "a", "b", 5, 0, 2, &r) == SL_OK);
  CHECK(sl_result_verdict(r) == SL_YES);
  CHECK(std::string(sl_result_get(r, "n")) == "3");
  sl_result_free(r);

  sl_rewriting* ab = nullptr;
  REQUIRE(sl_rewriting_parse("alphabet: a b\nrule: a -> b\n", &ab) == SL_OK);
  REQUIRE(sl_oracle_reachable(ab, "aa", "bb", 0, &r) == SL_OK);
  CHECK(sl_result_verdict(r) == SL_YES);
  sl_result_free(r);
  REQUIRE(sl_oracle_reachable(ab, "aaaa", "bbbb", 2, &r) == SL_OK);
  CHECK(sl_result_verdict(r) == SL_UNKNOWN);
  sl_result_free(r);

  sl_automaton* inst = nullptr;
  char *c = nullptr, *d = nullptr;
  REQUIRE(sl_reduce_rewrite_to_shift(ab, "a", "b", &inst, &c, &d) == SL_OK);
  CHECK(take(c) == "c");
  CHECK(take(d) == "_d0");
  REQUIRE(sl_search_shift(inst, "c", 6, 3, &r) == SL_OK);
  CHECK(std::string(sl_result_get(r, "x")) == "_d0,a,_d0,b,_d0");
  CHECK(std::string(sl_result_get(r, "n")) == "2");
  sl_result_free(r);
  // Here n is pinned to |a^(n-1)| + 1, so no witness has n >= |x|.
  REQUIRE(sl_check_long_shift(inst, "c", &r) == SL_OK);
  CHECK(sl_result_verdict(r) == SL_NO);
  sl_result_free(r);

  sl_automaton* power = nullptr;
  unsigned k = 0;
  char* renaming = nullptr;
  REQUIRE(sl_reduce_shift_to_power(inst, "c", 0, &power, &k, &renaming) == SL_OK);
  CHECK(k == 4);
  CHECK(take(renaming) == "a->1 b->2 _d0->3 c->0");
  REQUIRE(sl_search_power(power, 0, 14, &r) == SL_OK);
  CHECK(sl_result_verdict(r) == SL_YES);
  CHECK(std::string(sl_result_get(r, "k")) == "4");
  sl_result_free(r);
  sl_automaton* capped = nullptr;
  CHECK(sl_reduce_shift_to_power(inst, "c", 3, &capped, &k, nullptr) == SL_ERR_LIMIT);

  sl_automaton* bin = nullptr;
  char* phi = nullptr;
  REQUIRE(sl_reduce_recode_binary(ab, "a", "b", &bin, &phi) == SL_OK);
  CHECK(take(phi) == "a->1001 b->1101 _d0->1111 c->0000");

  sl_result* diag = nullptr;
  sl_automaton* restricted = nullptr;
  REQUIRE(sl_reduce_restrict_general_shift(inst, "c", &diag, &restricted) == SL_OK);
  CHECK(sl_result_verdict(diag) == SL_NO);
  sl_result_free(diag);

  for (auto* p : {inst, power, bin, restricted}) sl_automaton_free(p);
  sl_rewriting_free(s);
  sl_rewriting_free(again);
  sl_rewriting_free(ab);
  sl_tm_free(m);
}

TEST_CASE("result records") {
  sl_automaton* lt = nullptr;
  REQUIRE(sl_gen_lt(1, &lt) == SL_OK);
  sl_result* r = nullptr;
  REQUIRE(sl_check_non_conjugates(lt, &r) == SL_OK);
  CHECK(sl_result_verdict(r) == SL_YES);
  REQUIRE(sl_result_num_fields(r) >= 3);
  CHECK(std::string(sl_result_key(r, 0)) == "verdict");
  CHECK(sl_result_key(r, 99) == nullptr);
  CHECK(sl_result_get(r, "missing") == nullptr);
  REQUIRE(sl_result_add(r, "note", "extra") == SL_OK);
  char* text = nullptr;
  REQUIRE(sl_result_render(r, &text) == SL_OK);
  std::string rendered = take(text);
  CHECK(rendered.rfind("verdict: yes\n", 0) == 0);
  CHECK(rendered.find("note: extra\n") != std::string::npos);
  sl_result_free(r);

  REQUIRE(sl_oracle_membership(lt, "abaabb", &r) == SL_OK);
  CHECK(sl_result_verdict(r) == SL_YES);
  sl_result_free(r);
  sl_automaton_free(lt);
}
