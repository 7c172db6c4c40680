// Command-line front end. Talks to the library only through the C API.
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "shiftlab/c_api.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnknown = 2;

struct Failure {
  std::string message;
};

struct Free {
  void operator()(sl_automaton* p) const { sl_automaton_free(p); }
  void operator()(sl_rewriting* p) const { sl_rewriting_free(p); }
  void operator()(sl_tm* p) const { sl_tm_free(p); }
  void operator()(sl_result* p) const { sl_result_free(p); }
  void operator()(char* p) const { sl_string_free(p); }
};
using Automaton = std::unique_ptr<sl_automaton, Free>;
using Rewriting = std::unique_ptr<sl_rewriting, Free>;
using Tm = std::unique_ptr<sl_tm, Free>;
using Result = std::unique_ptr<sl_result, Free>;
using CString = std::unique_ptr<char, Free>;

void check(sl_status status, const std::string& context) {
  if (status != SL_OK)
    throw Failure{context + ": " + sl_status_name(status) + ": " + sl_last_error()};
}

std::string take(char* s) {
  CString owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot open '" + path + "'"};
  return {std::istreambuf_iterator<char>(in), {}};
}

Automaton load_automaton(const std::string& path) {
  std::string text = read_input(path);
  sl_automaton* a = nullptr;
  check(sl_automaton_parse(text.c_str(), &a), path);
  return Automaton(a);
}

Rewriting load_rewriting(const std::string& path) {
  std::string text = read_input(path);
  sl_rewriting* s = nullptr;
  check(sl_rewriting_parse(text.c_str(), &s), path);
  return Rewriting(s);
}

Tm load_tm(const std::string& path) {
  std::string text = read_input(path);
  sl_tm* m = nullptr;
  check(sl_tm_parse(text.c_str(), &m), path);
  return Tm(m);
}

struct Settings {
  bool timing = false;
  unsigned jobs = 1;
  std::string command_line;  // provenance for emitted files
};

void emit_automaton(const sl_automaton* a, const std::string& header) {
  char* text = nullptr;
  check(sl_automaton_print(a, header.c_str(), &text), "print");
  std::cout << take(text);
}

int emit_result(sl_result* r, const Settings& settings,
                std::chrono::steady_clock::time_point started) {
  if (settings.timing) {
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
    std::ostringstream value;
    value.setf(std::ios::fixed);
    value.precision(3);
    value << ms.count();
    check(sl_result_add(r, "elapsed-ms", value.str().c_str()), "record");
  }
  char* text = nullptr;
  check(sl_result_render(r, &text), "record");
  std::cout << take(text);
  return sl_result_verdict(r) == SL_UNKNOWN ? kExitUnknown : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shiftlab: automata, rewriting systems and the reductions between them"};
  app.require_subcommand(1);
  Settings settings;
  app.add_flag("--timing", settings.timing, "Add elapsed-ms to result records");
  app.add_option("--jobs", settings.jobs, "Worker threads for bounded searches")
      ->check(CLI::Range(1u, 256u));
  for (int i = 1; i < argc; ++i) settings.command_line += std::string(i > 1 ? " " : "") + argv[i];

  std::function<int()> action;
  const auto started = std::chrono::steady_clock::now();
  auto run_result = [&](std::function<sl_result*()> produce) {
    action = [&settings, started, produce] {
      Result r(produce());
      return emit_result(r.get(), settings, started);
    };
  };
  auto provenance = [&](std::vector<std::string> extra = {}) {
    std::string header = "produced by: shiftlab " + settings.command_line;
    for (auto& line : extra) header += "\n" + line;
    return header;
  };

  // ------------------------------------------------------------ lang
  auto* lang = app.add_subcommand("lang", "Regular-language operations");
  lang->require_subcommand(1);
  {
    static std::string file, file2, mode = "intersect";
    auto* lex = lang->add_subcommand("lexleast", "Least word of each length");
    lex->add_option("file", file, "Automaton ('-' for stdin)")->required();
    lex->callback([&] {
      action = [&] {
        auto a = load_automaton(file);
        sl_automaton* out = nullptr;
        check(sl_automaton_lexleast(a.get(), &out), "lexleast");
        emit_automaton(Automaton(out).get(), provenance());
        return kExitOk;
      };
    });
    auto* cyc = lang->add_subcommand("cyc", "Closure under conjugation");
    cyc->add_option("file", file, "Automaton ('-' for stdin)")->required();
    cyc->callback([&] {
      action = [&] {
        auto a = load_automaton(file);
        sl_automaton* out = nullptr;
        check(sl_automaton_cyc(a.get(), &out), "cyc");
        emit_automaton(Automaton(out).get(), provenance());
        return kExitOk;
      };
    });
    auto* prod = lang->add_subcommand("product", "Boolean product of two automata");
    prod->add_option("left", file, "First automaton")->required();
    prod->add_option("right", file2, "Second automaton")->required();
    prod->add_option("--mode", mode, "intersect, union or difference")
        ->check(CLI::IsMember({"intersect", "union", "difference"}));
    prod->callback([&] {
      action = [&] {
        auto a = load_automaton(file);
        auto b = load_automaton(file2);
        sl_bool_op op = mode == "union" ? SL_UNION : mode == "difference" ? SL_DIFFERENCE : SL_INTERSECT;
        sl_automaton* out = nullptr;
        check(sl_automaton_product(a.get(), b.get(), op, &out), "product");
        emit_automaton(Automaton(out).get(), provenance());
        return kExitOk;
      };
    });
    auto* comp = lang->add_subcommand("complement", "Complement of an automaton");
    comp->add_option("file", file, "Automaton ('-' for stdin)")->required();
    comp->callback([&] {
      action = [&] {
        auto a = load_automaton(file);
        sl_automaton* out = nullptr;
        check(sl_automaton_complement(a.get(), &out), "complement");
        emit_automaton(Automaton(out).get(), provenance());
        return kExitOk;
      };
    });
    auto* sub = lang->add_subcommand("subset", "Is L(left) a subset of L(right)?");
    sub->add_option("left", file, "First automaton")->required();
    sub->add_option("right", file2, "Second automaton")->required();
    sub->callback([&] {
      run_result([&] {
        auto a = load_automaton(file);
        auto b = load_automaton(file2);
        sl_result* r = nullptr;
        check(sl_automaton_subset(a.get(), b.get(), &r), "subset");
        return r;
      });
    });
  }

  // ------------------------------------------------------------ check
  auto* checks = app.add_subcommand("check", "Exact decision procedures");
  checks->require_subcommand(1);
  {
    static std::string file, c = "c";
    static std::size_t max_candidates = 0;
    static bool uncapped = false;
    auto* ls = checks->add_subcommand("long-shift", "Accepts x c^n x c^n x with n >= |x|?");
    ls->add_option("file", file, "Shift instance automaton")->required();
    ls->add_option("--c", c, "The separator letter c");
    ls->callback([&] {
      run_result([&] {
        auto a = load_automaton(file);
        sl_result* r = nullptr;
        check(sl_check_long_shift(a.get(), c.c_str(), &r), "long-shift");
        return r;
      });
    });
    auto* dc = checks->add_subcommand("distinct-conjugates", "Accepts uv and vu with uv != vu?");
    dc->add_option("file", file, "Automaton")->required();
    dc->add_option("--max-candidates", max_candidates,
                   "Candidate prefixes examined before giving up (large automata only)");
    dc->add_flag("--uncapped", uncapped, "Never give up");
    dc->callback([&] {
      run_result([&] {
        auto a = load_automaton(file);
        sl_result* r = nullptr;
        check(sl_check_distinct_conjugates(a.get(), max_candidates, uncapped, &r),
              "distinct-conjugates");
        return r;
      });
    });
    auto* nc = checks->add_subcommand("non-conjugates", "Accepts two equal-length non-conjugates?");
    nc->add_option("file", file, "Automaton")->required();
    nc->callback([&] {
      run_result([&] {
        auto a = load_automaton(file);
        sl_result* r = nullptr;
        check(sl_check_non_conjugates(a.get(), &r), "non-conjugates");
        return r;
      });
    });
  }

  // ------------------------------------------------------------ search
  auto* search = app.add_subcommand("search", "Bounded semi-decision searches");
  search->require_subcommand(1);
  {
    static std::string file, c = "c", a = "a", b = "b";
    static std::size_t max_len = 8, power_len = 14, max_n = 8, budget = 0;
    static unsigned k = 0;
    auto* sh = search->add_subcommand("shift", "Search for x c^n x c^n x");
    sh->add_option("file", file, "Shift instance automaton")->required();
    sh->add_option("--c", c, "The separator letter c");
    sh->add_option("--max-len", max_len, "Largest |x| and n tried");
    sh->callback([&] {
      run_result([&] {
        auto inst = load_automaton(file);
        sl_result* r = nullptr;
        check(sl_search_shift(inst.get(), c.c_str(), max_len, settings.jobs, &r), "shift");
        return r;
      });
    });
    auto* pw = search->add_subcommand("power", "Search for an accepted quotient k^i");
    pw->add_option("file", file, "Automaton over digit pairs")->required();
    pw->add_option("--k", k, "Base (inferred from the digits by default)");
    pw->add_option("--max-len", power_len, "Longest word examined");
    pw->callback([&] {
      run_result([&] {
        auto m = load_automaton(file);
        sl_result* r = nullptr;
        check(sl_search_power(m.get(), k, power_len, &r), "power");
        return r;
      });
    });
    auto* rp = search->add_subcommand("rewrite-power", "Search for n with a^n =>* b^n");
    rp->add_option("file", file, "Rewriting system")->required();
    rp->add_option("--a", a, "Source letter");
    rp->add_option("--b", b, "Target letter");
    rp->add_option("--max-n", max_n, "Largest n tried");
    rp->add_option("--budget", budget, "Words visited per n before giving up (0 = no limit)");
    rp->callback([&] {
      run_result([&] {
        auto s = load_rewriting(file);
        sl_result* r = nullptr;
        check(sl_search_rewrite_power(s.get(), a.c_str(), b.c_str(), max_n, budget, settings.jobs, &r),
              "rewrite-power");
        return r;
      });
    });
  }

  // ------------------------------------------------------------ reduce
  auto* reduce = app.add_subcommand("reduce", "Reduction constructions");
  reduce->require_subcommand(1);
  {
    static std::string file, c = "c", a = "a", b = "b";
    static std::size_t digit_cap = 0;
    auto* tm = reduce->add_subcommand("tm-to-rewrite", "Turing machine to rewriting system");
    tm->add_option("file", file, "Turing machine")->required();
    tm->callback([&] {
      action = [&] {
        auto m = load_tm(file);
        sl_rewriting* s = nullptr;
        check(sl_tm_to_rewriting(m.get(), &s), "tm-to-rewrite");
        Rewriting owned(s);
        char* text = nullptr;
        check(sl_rewriting_print(owned.get(), provenance().c_str(), &text), "print");
        std::cout << take(text);
        return kExitOk;
      };
    });
    auto* rs = reduce->add_subcommand("rewrite-to-shift", "Rewriting system to shift instance");
    rs->add_option("file", file, "Rewriting system")->required();
    rs->add_option("--a", a, "Source letter");
    rs->add_option("--b", b, "Target letter");
    rs->callback([&] {
      action = [&] {
        auto s = load_rewriting(file);
        sl_automaton* out = nullptr;
        char *c_out = nullptr, *d_out = nullptr;
        check(sl_reduce_rewrite_to_shift(s.get(), a.c_str(), b.c_str(), &out, &c_out, &d_out),
              "rewrite-to-shift");
        Automaton owned(out);
        emit_automaton(owned.get(), provenance({"c: " + take(c_out), "d: " + take(d_out)}));
        return kExitOk;
      };
    });
    auto* sp = reduce->add_subcommand("shift-to-power", "Rename a shift instance to digits");
    sp->add_option("file", file, "Shift instance automaton")->required();
    sp->add_option("--c", c, "The separator letter c");
    sp->add_option("--digit-cap", digit_cap, "Refuse bases above this (0 = no cap)");
    sp->callback([&] {
      action = [&] {
        auto inst = load_automaton(file);
        sl_automaton* out = nullptr;
        unsigned k_out = 0;
        char* renaming = nullptr;
        check(sl_reduce_shift_to_power(inst.get(), c.c_str(), digit_cap, &out, &k_out, &renaming),
              "shift-to-power");
        Automaton owned(out);
        emit_automaton(owned.get(),
                       provenance({"k: " + std::to_string(k_out), "renaming: " + take(renaming)}));
        return kExitOk;
      };
    });
    auto* rb = reduce->add_subcommand("recode-binary", "Rewriting system to a binary instance");
    rb->add_option("file", file, "Rewriting system")->required();
    rb->add_option("--a", a, "Source letter");
    rb->add_option("--b", b, "Target letter");
    rb->callback([&] {
      action = [&] {
        auto s = load_rewriting(file);
        sl_automaton* out = nullptr;
        char* phi = nullptr;
        check(sl_reduce_recode_binary(s.get(), a.c_str(), b.c_str(), &out, &phi), "recode-binary");
        Automaton owned(out);
        emit_automaton(owned.get(), provenance({"c: 0", "phi: " + take(phi)}));
        return kExitOk;
      };
    });
    auto* gs = reduce->add_subcommand("restrict-general-shift",
                                      "Diagonal check and the s c+ x c+ t restriction");
    gs->add_option("file", file, "Shift instance automaton")->required();
    gs->add_option("--c", c, "The separator letter c");
    gs->callback([&] {
      action = [&] {
        auto inst = load_automaton(file);
        sl_result* diag = nullptr;
        sl_automaton* restricted = nullptr;
        check(sl_reduce_restrict_general_shift(inst.get(), c.c_str(), &diag, &restricted),
              "restrict-general-shift");
        Result d(diag);
        Automaton owned(restricted);
        std::vector<std::string> extra;
        for (std::size_t i = 0; i < sl_result_num_fields(d.get()); ++i) {
          std::string key = sl_result_key(d.get(), i);
          if (key != "verdict") extra.push_back(key + ": " + sl_result_value(d.get(), i));
        }
        emit_automaton(owned.get(), provenance(extra));
        return kExitOk;
      };
    });
  }

  // ------------------------------------------------------------ oracle
  auto* oracle = app.add_subcommand("oracle", "Brute-force oracles");
  oracle->require_subcommand(1);
  {
    static std::string file, from, to, word;
    static std::size_t budget = 0, max_steps = 1000;
    auto* re = oracle->add_subcommand("reachable", "Does from =>* to?");
    re->add_option("file", file, "Rewriting system")->required();
    re->add_option("from", from, "Source word")->required();
    re->add_option("to", to, "Target word")->required();
    re->add_option("--budget", budget, "Words visited before giving up (0 = no limit)");
    re->callback([&] {
      run_result([&] {
        auto s = load_rewriting(file);
        sl_result* r = nullptr;
        check(sl_oracle_reachable(s.get(), from.c_str(), to.c_str(), budget, &r), "reachable");
        return r;
      });
    });
    auto* mem = oracle->add_subcommand("membership", "Is the word accepted?");
    mem->add_option("file", file, "Automaton")->required();
    mem->add_option("word", word, "Word ('@' for the empty word)")->required();
    mem->callback([&] {
      run_result([&] {
        auto a = load_automaton(file);
        sl_result* r = nullptr;
        check(sl_oracle_membership(a.get(), word.c_str(), &r), "membership");
        return r;
      });
    });
    auto* run = oracle->add_subcommand("tm-run", "Run a Turing machine on the blank tape");
    run->add_option("file", file, "Turing machine")->required();
    run->add_option("--max-steps", max_steps, "Steps before reporting 'running'");
    run->callback([&] {
      run_result([&] {
        auto m = load_tm(file);
        sl_result* r = nullptr;
        check(sl_tm_run(m.get(), max_steps, &r), "tm-run");
        return r;
      });
    });
  }

  // ------------------------------------------------------------ gen
  auto* gen = app.add_subcommand("gen", "Generators");
  gen->require_subcommand(1);
  {
    static std::size_t t = 1;
    auto* lt = gen->add_subcommand("lt", "The L_t family over {a, b}");
    lt->add_option("t", t, "Family parameter")->required()->check(CLI::PositiveNumber);
    lt->callback([&] {
      action = [&] {
        sl_automaton* out = nullptr;
        check(sl_gen_lt(t, &out), "gen lt");
        Automaton owned(out);
        emit_automaton(owned.get(), provenance({"states: " + std::to_string(sl_automaton_num_states(owned.get()))}));
        return kExitOk;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }
  try {
    return action ? action() : kExitError;
  } catch (const Failure& f) {
    std::cerr << "shiftlab: " << f.message << "\n";
    return kExitError;
  }
}
