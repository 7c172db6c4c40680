#include "shiftlab/c_api.h"

#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "shiftlab/error.hpp"
#include "shiftlab/language_ops.hpp"
#include "shiftlab/procedures.hpp"
#include "shiftlab/records.hpp"
#include "shiftlab/reductions.hpp"
#include "shiftlab/rewriting.hpp"
#include "shiftlab/text_format.hpp"
#include "shiftlab/words.hpp"

using namespace shiftlab;

struct sl_automaton {
  Nfa nfa;
};

struct sl_rewriting {
  RewritingSystem system;
};

struct sl_tm {
  TuringMachine machine;
};

struct sl_result {
  Verdict verdict;
  Record record;
};

namespace {

thread_local std::string last_error;

sl_status fail(sl_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

sl_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse: return SL_ERR_PARSE;
    case ErrorCode::alphabet_mismatch: return SL_ERR_ALPHABET;
    case ErrorCode::invalid_argument: return SL_ERR_INVALID;
    case ErrorCode::limit_exceeded: return SL_ERR_LIMIT;
  }
  return SL_ERR_INTERNAL;
}

template <class F>
sl_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return SL_OK;
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SL_ERR_INTERNAL, e.what());
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw Error(ErrorCode::invalid_argument, std::string(what) + " is null");
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void put_string(char** out, const std::string& s) {
  if (out != nullptr) *out = copy_string(s);
}

std::vector<std::string> header_lines(const char* header) {
  std::vector<std::string> lines;
  if (header == nullptr) return lines;
  std::istringstream in(header);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) lines.push_back(line);
  return lines;
}

sl_automaton* wrap(Nfa n) { return new sl_automaton{std::move(n)}; }
sl_automaton* wrap(const Dfa& d) { return new sl_automaton{d.to_nfa()}; }

sl_verdict c_verdict(Verdict v) {
  switch (v) {
    case Verdict::yes: return SL_YES;
    case Verdict::no: return SL_NO;
    case Verdict::unknown: return SL_UNKNOWN;
  }
  return SL_UNKNOWN;
}

template <class W>
sl_result* wrap(const Decision<W>& d, Record r) {
  return new sl_result{d.verdict, std::move(r)};
}

ShiftInstance shift_instance(const sl_automaton* a, const char* c) {
  require(a, "instance");
  return ShiftInstance::from_automaton(a->nfa, Symbol(c == nullptr ? "c" : c));
}

std::string join_pairs(const std::vector<std::pair<Symbol, Symbol>>& pairs) {
  std::string out;
  for (const auto& [x, y] : pairs) out += (out.empty() ? "" : " ") + x.text() + "->" + y.text();
  return out;
}

unsigned infer_base(const Alphabet& pairs) {
  unsigned top = 1;
  for (const auto& s : pairs.symbols()) {
    if (!s.is_pair())
      throw Error(ErrorCode::invalid_argument, "power search needs an alphabet of digit pairs");
    for (const auto& part : {s.first(), s.second()}) {
      const std::string& t = part.text();
      if (t.empty() || t.size() > 9 || t.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorCode::invalid_argument, "'" + t + "' is not a digit");
      top = std::max(top, static_cast<unsigned>(std::stoul(t)));
    }
  }
  return top + 1;
}

}  // namespace

extern "C" {

const char* sl_last_error(void) { return last_error.c_str(); }

const char* sl_status_name(sl_status status) {
  switch (status) {
    case SL_OK: return "ok";
    case SL_ERR_PARSE: return "parse error";
    case SL_ERR_ALPHABET: return "alphabet mismatch";
    case SL_ERR_INVALID: return "invalid argument";
    case SL_ERR_LIMIT: return "limit exceeded";
    case SL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void sl_string_free(char* s) { delete[] s; }

// ---- automata

sl_status sl_automaton_parse(const char* text, sl_automaton** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = wrap(parse_automaton(text));
  });
}

sl_status sl_automaton_print(const sl_automaton* a, const char* header, char** out) {
  return guarded([&] {
    require(a, "automaton");
    require(out, "out");
    *out = copy_string(print_automaton(a->nfa, header_lines(header)));
  });
}

void sl_automaton_free(sl_automaton* a) { delete a; }

size_t sl_automaton_num_states(const sl_automaton* a) { return a ? a->nfa.num_states() : 0; }

sl_status sl_automaton_alphabet(const sl_automaton* a, char** out) {
  return guarded([&] {
    require(a, "automaton");
    require(out, "out");
    *out = copy_string(a->nfa.alphabet().to_string());
  });
}

sl_status sl_automaton_determinize(const sl_automaton* a, sl_automaton** out) {
  return guarded([&] {
    require(a, "automaton");
    require(out, "out");
    *out = wrap(determinize(a->nfa));
  });
}

sl_status sl_automaton_minimize(const sl_automaton* a, sl_automaton** out) {
  return guarded([&] {
    require(a, "automaton");
    require(out, "out");
    *out = wrap(minimize(determinize(a->nfa)));
  });
}

sl_status sl_automaton_complement(const sl_automaton* a, sl_automaton** out) {
  return guarded([&] {
    require(a, "automaton");
    require(out, "out");
    *out = wrap(complement(to_dfa(a->nfa)));
  });
}

sl_status sl_automaton_product(const sl_automaton* a, const sl_automaton* b, sl_bool_op op,
                               sl_automaton** out) {
  return guarded([&] {
    require(a, "automaton");
    require(b, "automaton");
    require(out, "out");
    BoolOp mode;
    switch (op) {
      case SL_INTERSECT: mode = BoolOp::intersect; break;
      case SL_UNION: mode = BoolOp::unite; break;
      case SL_DIFFERENCE: mode = BoolOp::difference; break;
      default: throw Error(ErrorCode::invalid_argument, "unknown product mode");
    }
    *out = wrap(product(to_dfa(a->nfa), to_dfa(b->nfa), mode));
  });
}

sl_status sl_automaton_lexleast(const sl_automaton* a, sl_automaton** out) {
  return guarded([&] {
    require(a, "automaton");
    require(out, "out");
    *out = wrap(lexleast(to_dfa(a->nfa)));
  });
}

sl_status sl_automaton_cyc(const sl_automaton* a, sl_automaton** out) {
  return guarded([&] {
    require(a, "automaton");
    require(out, "out");
    *out = wrap(cyc(to_dfa(a->nfa)));
  });
}

sl_status sl_automaton_subset(const sl_automaton* a, const sl_automaton* b, sl_result** out) {
  return guarded([&] {
    require(a, "automaton");
    require(b, "automaton");
    require(out, "out");
    auto r = is_subset(to_dfa(a->nfa), to_dfa(b->nfa));
    *out = new sl_result{r.holds ? Verdict::yes : Verdict::no, to_record(r, a->nfa.alphabet())};
  });
}

sl_status sl_automaton_accepts(const sl_automaton* a, const char* word, int* out) {
  return guarded([&] {
    require(a, "automaton");
    require(word, "word");
    require(out, "out");
    *out = a->nfa.accepts(parse_word(word, a->nfa.alphabet())) ? 1 : 0;
  });
}

sl_status sl_gen_lt(size_t t, sl_automaton** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(make_lt_language(t));
  });
}

// ---- rewriting systems and Turing machines

sl_status sl_rewriting_parse(const char* text, sl_rewriting** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new sl_rewriting{parse_rewriting(text)};
  });
}

sl_status sl_rewriting_print(const sl_rewriting* s, const char* header, char** out) {
  return guarded([&] {
    require(s, "rewriting system");
    require(out, "out");
    *out = copy_string(print_rewriting(s->system, header_lines(header)));
  });
}

void sl_rewriting_free(sl_rewriting* s) { delete s; }

size_t sl_rewriting_num_rules(const sl_rewriting* s) { return s ? s->system.rules().size() : 0; }

sl_status sl_tm_parse(const char* text, sl_tm** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new sl_tm{parse_tm(text)};
  });
}

void sl_tm_free(sl_tm* m) { delete m; }

sl_status sl_tm_to_rewriting(const sl_tm* m, sl_rewriting** out) {
  return guarded([&] {
    require(m, "machine");
    require(out, "out");
    *out = new sl_rewriting{tm_to_rewriting(m->machine).system};
  });
}

sl_status sl_tm_run(const sl_tm* m, size_t max_steps, sl_result** out) {
  return guarded([&] {
    require(m, "machine");
    require(out, "out");
    TmRun run = tm_run(m->machine, max_steps);
    Verdict v = run.status == TmRun::Status::halted  ? Verdict::yes
                : run.status == TmRun::Status::stuck ? Verdict::no
                                                     : Verdict::unknown;
    *out = new sl_result{v, to_record(run)};
  });
}

// ---- reductions

sl_status sl_reduce_rewrite_to_shift(const sl_rewriting* s, const char* a, const char* b,
                                     sl_automaton** out, char** c, char** d) {
  return guarded([&] {
    require(s, "rewriting system");
    require(a, "a");
    require(b, "b");
    require(out, "out");
    auto red = rewrite_to_shift(s->system, Symbol(a), Symbol(b));
    std::string c_text = red.instance.c().text(), d_text = red.d.text();
    *out = wrap(red.instance.automaton());
    put_string(c, c_text);
    put_string(d, d_text);
  });
}

sl_status sl_reduce_shift_to_power(const sl_automaton* instance, const char* c, size_t digit_cap,
                                   sl_automaton** out, unsigned* k, char** renaming) {
  return guarded([&] {
    require(out, "out");
    auto p = shift_to_power(shift_instance(instance, c), digit_cap);
    if (k != nullptr) *k = static_cast<unsigned>(p.k);
    put_string(renaming, join_pairs(p.renaming));
    *out = wrap(std::move(p.automaton));
  });
}

sl_status sl_reduce_recode_binary(const sl_rewriting* s, const char* a, const char* b,
                                  sl_automaton** out, char** phi) {
  return guarded([&] {
    require(s, "rewriting system");
    require(a, "a");
    require(b, "b");
    require(out, "out");
    auto rec = recode_binary(s->system, Symbol(a), Symbol(b));
    std::string desc;
    for (const auto& x : rec.phi.source())
      desc += (desc.empty() ? "" : " ") + x.text() + "->" + format_word(rec.phi.image(x));
    put_string(phi, desc);
    *out = wrap(rec.instance.automaton());
  });
}

sl_status sl_reduce_restrict_general_shift(const sl_automaton* instance, const char* c,
                                           sl_result** diagonal, sl_automaton** restricted) {
  return guarded([&] {
    require(diagonal, "diagonal");
    require(restricted, "restricted");
    auto r = general_shift_restrict(shift_instance(instance, c));
    Record rec;
    rec.add("verdict", r.diagonal_hit ? "yes" : "no");
    rec.add("diagonal-hit", r.diagonal_hit ? "true" : "false");
    if (r.diagonal_witness) rec.add("diagonal-witness", format_word(*r.diagonal_witness));
    auto* res = new sl_result{r.diagonal_hit ? Verdict::yes : Verdict::no, std::move(rec)};
    *restricted = wrap(std::move(r.restricted));
    *diagonal = res;
  });
}

// ---- decision procedures and searches

sl_status sl_check_long_shift(const sl_automaton* instance, const char* c, sl_result** out) {
  return guarded([&] {
    require(out, "out");
    ShiftInstance inst = shift_instance(instance, c);
    auto d = accepts_long_shift(inst);
    *out = wrap(d, to_record(d, inst));
  });
}

sl_status sl_check_distinct_conjugates(const sl_automaton* a, size_t max_candidates, int uncapped,
                                       sl_result** out) {
  return guarded([&] {
    require(a, "automaton");
    require(out, "out");
    DistinctConjugatesOptions opts;
    if (max_candidates != 0) opts.max_candidates = max_candidates;
    opts.uncapped = uncapped != 0;
    Dfa m = to_dfa(a->nfa);
    auto d = accepts_distinct_conjugates(m, opts);
    Record rec = to_record(d, m.alphabet());
    rec.add("states", std::to_string(m.num_states()));
    *out = wrap(d, std::move(rec));
  });
}

sl_status sl_check_non_conjugates(const sl_automaton* a, sl_result** out) {
  return guarded([&] {
    require(a, "automaton");
    require(out, "out");
    Dfa m = to_dfa(a->nfa);
    auto d = accepts_non_conjugates(m);
    *out = wrap(d, to_record(d, m.alphabet()));
  });
}

sl_status sl_search_shift(const sl_automaton* instance, const char* c, size_t max_len,
                          unsigned jobs, sl_result** out) {
  return guarded([&] {
    require(out, "out");
    ShiftInstance inst = shift_instance(instance, c);
    auto d = shift_search(inst, max_len, jobs);
    *out = wrap(d, to_record(d, inst));
  });
}

sl_status sl_search_power(const sl_automaton* a, unsigned k, size_t max_len, sl_result** out) {
  return guarded([&] {
    require(a, "automaton");
    require(out, "out");
    if (k == 0) k = infer_base(a->nfa.alphabet());
    auto d = accepts_power_search(a->nfa, k, max_len);
    *out = wrap(d, to_record(d, k));
  });
}

sl_status sl_search_rewrite_power(const sl_rewriting* s, const char* a, const char* b,
                                  size_t max_n, size_t budget, unsigned jobs, sl_result** out) {
  return guarded([&] {
    require(s, "rewriting system");
    require(a, "a");
    require(b, "b");
    require(out, "out");
    auto d = rewrite_power_search(s->system, Symbol(a), Symbol(b), max_n,
                                  budget == 0 ? kUnlimited : budget, jobs);
    *out = wrap(d, to_record(d, s->system));
  });
}

sl_status sl_oracle_reachable(const sl_rewriting* s, const char* from, const char* to,
                              size_t budget, sl_result** out) {
  return guarded([&] {
    require(s, "rewriting system");
    require(from, "from");
    require(to, "to");
    require(out, "out");
    const Alphabet& alphabet = s->system.alphabet();
    auto d = reachable(s->system, parse_word(from, alphabet), parse_word(to, alphabet),
                       budget == 0 ? kUnlimited : budget);
    *out = wrap(d, to_record(d, s->system));
  });
}

sl_status sl_oracle_membership(const sl_automaton* a, const char* word, sl_result** out) {
  return guarded([&] {
    require(a, "automaton");
    require(word, "word");
    require(out, "out");
    Word w = parse_word(word, a->nfa.alphabet());
    bool in = a->nfa.accepts(w);
    Record rec;
    rec.add("verdict", in ? "yes" : "no");
    rec.add("word", format_word(w));
    rec.add("length", std::to_string(w.size()));
    *out = new sl_result{in ? Verdict::yes : Verdict::no, std::move(rec)};
  });
}

// ---- results

sl_verdict sl_result_verdict(const sl_result* r) { return r ? c_verdict(r->verdict) : SL_UNKNOWN; }

const char* sl_result_get(const sl_result* r, const char* key) {
  if (r == nullptr || key == nullptr) return nullptr;
  const std::string* v = r->record.find(key);
  return v ? v->c_str() : nullptr;
}

size_t sl_result_num_fields(const sl_result* r) { return r ? r->record.fields().size() : 0; }

const char* sl_result_key(const sl_result* r, size_t i) {
  if (r == nullptr || i >= r->record.fields().size()) return nullptr;
  return r->record.fields()[i].first.c_str();
}

const char* sl_result_value(const sl_result* r, size_t i) {
  if (r == nullptr || i >= r->record.fields().size()) return nullptr;
  return r->record.fields()[i].second.c_str();
}

sl_status sl_result_add(sl_result* r, const char* key, const char* value) {
  return guarded([&] {
    require(r, "result");
    require(key, "key");
    require(value, "value");
    r->record.add(key, value);
  });
}

sl_status sl_result_render(const sl_result* r, char** out) {
  return guarded([&] {
    require(r, "result");
    require(out, "out");
    *out = copy_string(r->record.render());
  });
}

void sl_result_free(sl_result* r) { delete r; }

}  // extern "C"
