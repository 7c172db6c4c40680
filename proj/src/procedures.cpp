#include "shiftlab/procedures.hpp"

#include <deque>
#include <stdexcept>

#include "shiftlab/error.hpp"
#include "shiftlab/language_ops.hpp"
#include "shiftlab/regex.hpp"
#include "shiftlab/words.hpp"

namespace shiftlab {

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ <= 0) throw Error(ErrorCode::invalid_argument, "rational with non-positive denominator");
  if (num_ < 0) throw Error(ErrorCode::invalid_argument, "rational must be non-negative");
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

std::string Rational::to_string() const { return num_.str() + "/" + den_.str(); }

// ------------------------------------------------------------ long shift

Decision<LongShiftWitness> accepts_long_shift(const ShiftInstance& inst) {
  const Dfa m = minimize(determinize(inst.automaton()));
  const std::size_t n = m.num_states();
  const std::size_t g = inst.gamma().size();
  const SymbolIndex c = static_cast<SymbolIndex>(g);
  auto pair_index = [g](SymbolIndex x, SymbolIndex y) {
    return static_cast<SymbolIndex>(x * (g + 1) + y);
  };
  const SymbolIndex cc = pair_index(c, c);

  // cc_steps[p * n + q]: least i with [c,c]^i leading p to q, or none.
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> cc_steps(n * n, none);
  for (State p = 0; p < n; ++p) {
    State q = p;
    for (std::size_t i = 0; cc_steps[p * n + q] == none; ++i) {
      cc_steps[p * n + q] = i;
      q = m.next(q, cc);
    }
  }

  // M' states (p, guess, r): p runs x x c^|x| from the start, r runs
  // c^|x| x x from the guessed state.
  auto id = [n](State p, State guess, State r) { return (p * n + guess) * n + r; };
  const std::size_t total = n * n * n;
  std::vector<bool> seen(total, false);
  std::vector<std::size_t> parent(total, none);
  std::vector<SymbolIndex> via(total, 0);
  std::deque<std::size_t> queue;
  for (State guess = 0; guess < n; ++guess) {
    std::size_t s = id(m.start(), guess, guess);
    seen[s] = true;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    const State p = static_cast<State>(s / (n * n));
    const State guess = static_cast<State>((s / n) % n);
    const State r = static_cast<State>(s % n);
    if (m.is_final(r) && cc_steps[p * n + guess] != none) {
      IndexWord x;
      for (std::size_t t = s; parent[t] != none; t = parent[t]) x.push_back(via[t]);
      std::reverse(x.begin(), x.end());
      LongShiftWitness w{inst.gamma().decode(x), x.size() + cc_steps[p * n + guess]};
      if (!inst.automaton().accepts(shift_word(w.x, inst.c(), w.n)))
        throw std::logic_error("long-shift witness failed to re-verify");
      return Decision<LongShiftWitness>::yes(std::move(w));
    }
    for (SymbolIndex a = 0; a < g; ++a) {
      std::size_t t = id(m.next(p, pair_index(a, c)), guess, m.next(r, pair_index(c, a)));
      if (seen[t]) continue;
      seen[t] = true;
      parent[t] = s;
      via[t] = a;
      queue.push_back(t);
    }
  }
  return Decision<LongShiftWitness>::no();
}

// ------------------------------------------------------------ conjugates

Decision<ConjugatePair> accepts_distinct_conjugates(const Dfa& m,
                                                    const DistinctConjugatesOptions& opts) {
  const std::size_t n = m.num_states();
  const std::size_t k = m.alphabet().size();
  const std::size_t bound = n * n;
  const bool capped = !opts.uncapped && n > opts.uncapped_states;
  const std::vector<bool> live = m.live_states();

  // Candidates u by length then alphabet order. A prefix whose run is dead
  // has an empty left quotient, and so do all its extensions.
  struct Prefix {
    IndexWord u;
    State q;
  };
  std::vector<Prefix> level{{{}, m.start()}};
  std::size_t examined = 0;
  for (std::size_t len = 1; len <= bound && !level.empty(); ++len) {
    std::vector<Prefix> next;
    for (const auto& pre : level)
      for (SymbolIndex a = 0; a < k; ++a) {
        State q = m.next(pre.q, a);
        if (!live[q]) continue;
        IndexWord u = pre.u;
        u.push_back(a);
        next.push_back({std::move(u), q});
      }
    for (const auto& cand : next) {
      if (capped && ++examined > opts.max_candidates)
        throw Error(ErrorCode::limit_exceeded,
                    "distinct-conjugates: more than " + std::to_string(opts.max_candidates) +
                        " candidate prefixes; lift the cap to continue");
      auto v = shortest_word(build_lx(m, cand.u));
      if (v) {
        IndexWord uv(cand.u), vu(*v);
        uv.insert(uv.end(), v->begin(), v->end());
        vu.insert(vu.end(), cand.u.begin(), cand.u.end());
        if (!m.accepts(uv) || !m.accepts(vu) || uv == vu)
          throw std::logic_error("distinct-conjugates witness failed to re-verify");
        return Decision<ConjugatePair>::yes({cand.u, std::move(*v)});
      }
    }
    level = std::move(next);
  }
  return Decision<ConjugatePair>::no(bound);
}

Decision<NonConjugatePair> accepts_non_conjugates(const Dfa& m) {
  const Dfa closure = determinize(cyc(lexleast(m)));
  auto x = shortest_word(product(m, closure, BoolOp::difference));
  if (!x) return Decision<NonConjugatePair>::no();
  auto y = lexleast_of_length(m, x->size());
  if (!y || are_conjugates(*x, *y) || !m.accepts(*x))
    throw std::logic_error("non-conjugates witness failed to re-verify");
  return Decision<NonConjugatePair>::yes({std::move(*x), std::move(*y)});
}

// ------------------------------------------------------------ base k

BigInt base_k_value(std::span<const unsigned> digits, unsigned k) {
  if (k < 2) throw Error(ErrorCode::invalid_argument, "base must be at least 2");
  BigInt value = 0;
  for (unsigned d : digits) {
    if (d >= k)
      throw Error(ErrorCode::invalid_argument,
                  "digit " + std::to_string(d) + " is not below base " + std::to_string(k));
    value = value * k + d;
  }
  return value;
}

namespace {

unsigned digit_value(const Symbol& s) {
  const std::string& t = s.text();
  if (t.empty() || t.size() > 9 || t.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorCode::invalid_argument, "'" + t + "' is not a digit");
  return static_cast<unsigned>(std::stoul(t));
}

struct DigitPairs {
  std::vector<unsigned> first, second;
};

DigitPairs digit_pairs(const Alphabet& alphabet) {
  DigitPairs out;
  for (const auto& s : alphabet.symbols()) {
    out.first.push_back(digit_value(s.first()));
    out.second.push_back(digit_value(s.second()));
  }
  return out;
}

template <class Visit>
void for_each_quotient(const Nfa& m, unsigned k, std::size_t max_len, Visit&& visit) {
  if (k < 2) throw Error(ErrorCode::invalid_argument, "base must be at least 2");
  const Dfa dfa = minimize(determinize(m));
  const DigitPairs pairs = digit_pairs(dfa.alphabet());
  for (std::size_t i = 0; i < pairs.first.size(); ++i)
    if (pairs.first[i] >= k || pairs.second[i] >= k)
      throw Error(ErrorCode::invalid_argument,
                  "alphabet symbol '" + dfa.alphabet()[static_cast<SymbolIndex>(i)].text() +
                      "' is not a pair of base-" + std::to_string(k) + " digits");
  for_each_word(dfa, max_len, [&](const IndexWord& w) {
    BigInt num = 0, den = 0;
    for (auto s : w) {
      num = num * k + pairs.first[s];
      den = den * k + pairs.second[s];
    }
    return visit(w, dfa.alphabet(), num, den);
  });
}

}  // namespace

BigInt base_k_value(const Word& digits, unsigned k) {
  std::vector<unsigned> values;
  for (const auto& s : digits) values.push_back(digit_value(s));
  return base_k_value(values, k);
}

QuotientSet quo_enumerate(const Nfa& m, unsigned k, std::size_t max_len) {
  QuotientSet out;
  for_each_quotient(m, k, max_len,
                    [&](const IndexWord&, const Alphabet&, const BigInt& num, const BigInt& den) {
                      ++out.words;
                      if (den == 0)
                        ++out.zero_denominators;
                      else
                        out.values.insert(Rational(num, den));
                      return true;
                    });
  return out;
}

Decision<PowerWitness> accepts_power_search(const Nfa& m, unsigned k, std::size_t max_len) {
  std::optional<PowerWitness> found;
  for_each_quotient(m, k, max_len,
                    [&](const IndexWord& w, const Alphabet& alphabet, const BigInt& num,
                        const BigInt& den) {
                      if (den == 0 || num % den != 0) return true;
                      BigInt q = num / den;
                      if (q == 0) return true;
                      std::size_t exponent = 0;
                      while (q % k == 0) {
                        q /= k;
                        ++exponent;
                      }
                      if (q != 1) return true;
                      found = PowerWitness{exponent, alphabet.decode(w)};
                      return false;
                    });
  if (found) return Decision<PowerWitness>::yes(std::move(*found));
  return Decision<PowerWitness>::unknown(max_len);
}

// ------------------------------------------------------------ L_t family

Dfa make_lt_language(std::size_t t) {
  if (t == 0) throw Error(ErrorCode::invalid_argument, "L_t needs t >= 1");
  const Alphabet ab = Alphabet::from_atoms({"a", "b"});
  const Symbol a("a"), b("b");
  Regex short_blocks = Regex::plus(Regex::word(repeat(a, t)));
  Regex long_blocks = Regex::plus(Regex::word(repeat(a, t + 1)));
  Regex one_b = Regex::symbol(b);
  Regex two_b = Regex::word({b, b});
  Regex lt = Regex::alt({
      Regex::concat({short_blocks, one_b, long_blocks, two_b}),
      Regex::concat({short_blocks, two_b, long_blocks, one_b}),
  });
  return minimize(determinize(lt.to_nfa(ab)));
}

}  // namespace shiftlab
