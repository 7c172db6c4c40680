#include "shiftlab/reductions.hpp"

#include <algorithm>
#include <future>

#include "shiftlab/error.hpp"
#include "shiftlab/words.hpp"

namespace shiftlab {
namespace {

std::vector<Symbol> with(std::vector<Symbol> v, const Symbol& s) {
  v.push_back(s);
  return v;
}

Dfa canonical_dfa(const Nfa& nfa) { return minimize(determinize(nfa)); }

// The letter c of a reduction: "c" unless sigma already uses it.
Symbol pick_c(const RewritingSystem& s) {
  const Symbol c("c");
  if (!s.alphabet().contains(c)) return c;
  return fresh_symbol("_c", s.alphabet().symbols());
}

void require_letter(const RewritingSystem& s, const Symbol& x) {
  if (!s.alphabet().contains(x))
    throw Error(ErrorCode::alphabet_mismatch, "letter '" + x.text() + "' is not in alphabet {" +
                                                  s.alphabet().to_string() + "}");
}

}  // namespace

ShiftInstance::ShiftInstance(Alphabet gamma, Symbol c, Nfa automaton)
    : gamma_(std::move(gamma)), c_(std::move(c)), automaton_(std::move(automaton)) {
  if (c_.is_pair()) throw Error(ErrorCode::invalid_argument, "c must be an atom");
  if (gamma_.contains(c_))
    throw Error(ErrorCode::invalid_argument, "c = '" + c_.text() + "' must not belong to gamma");
  const Alphabet expected = Alphabet::pairs(letters(), letters());
  require_same_alphabet(automaton_.alphabet(), expected, "shift instance");
}

ShiftInstance ShiftInstance::from_automaton(Nfa automaton, const Symbol& c) {
  std::vector<Symbol> gamma;
  const Alphabet components = automaton.alphabet().pair_components();
  for (const auto& x : components.symbols())
    if (!(x == c)) gamma.push_back(x);
  Alphabet g(std::move(gamma));
  Alphabet letters(with(g.symbols(), c));
  Alphabet full = Alphabet::pairs(letters, letters);
  std::vector<SymbolIndex> mapping;
  for (const auto& s : automaton.alphabet().symbols()) mapping.push_back(full.index_of(s));
  return ShiftInstance(std::move(g), c, relabel(automaton, full, mapping));
}

Alphabet ShiftInstance::letters() const { return Alphabet(with(gamma_.symbols(), c_)); }

Symbol fresh_symbol(std::string_view base, const std::vector<Symbol>& taken) {
  for (std::size_t i = 0;; ++i) {
    Symbol s(std::string(base) + std::to_string(i));
    if (std::find(taken.begin(), taken.end(), s) == taken.end()) return s;
  }
}

Regex step_regex(const RewritingSystem& s) {
  std::vector<Symbol> diagonal;
  for (const auto& e : s.alphabet().symbols()) diagonal.push_back(Symbol::pair(e, e));
  std::vector<Regex> rules;
  for (const auto& r : s.rules()) rules.push_back(Regex::word(convolve(r.rhs, r.lhs)));
  Regex e_star = Regex::star(Regex::any_of(diagonal));
  return Regex::concat({e_star, Regex::alt(std::move(rules)), e_star});
}

ShiftReduction rewrite_to_shift(const RewritingSystem& s, const Symbol& a, const Symbol& b) {
  require_letter(s, a);
  require_letter(s, b);
  Symbol c = pick_c(s);
  Symbol d = fresh_symbol("_d", with(s.alphabet().symbols(), c));
  Alphabet gamma(with(s.alphabet().symbols(), d));
  Alphabet letters(with(gamma.symbols(), c));

  auto pair = [](const Symbol& x, const Symbol& y) { return Regex::symbol(Symbol::pair(x, y)); };
  Regex l = Regex::concat({
      pair(d, c),
      Regex::plus(pair(a, c)),
      pair(d, d),
      Regex::star(Regex::concat({step_regex(s), pair(d, d)})),
      Regex::plus(pair(c, b)),
      pair(c, d),
  });
  Nfa automaton = canonical_dfa(l.to_nfa(Alphabet::pairs(letters, letters))).to_nfa();
  return {ShiftInstance(std::move(gamma), c, std::move(automaton)), d};
}

Word shift_word(const Word& x, const Symbol& c, std::size_t n) {
  return convolve(concat(x, repeat(c, n)), concat(repeat(c, n), x));
}

namespace {

// Least x of length len (alphabet order) with x c^n x c^n x accepted, for
// each n in 1..max_n; returns the least (x, n) pair.
std::optional<ShiftWitness> search_length(const Dfa& dfa, const std::vector<bool>& live,
                                          const ShiftInstance& inst, std::size_t len,
                                          std::size_t max_n) {
  const std::size_t g = inst.gamma().size();
  const SymbolIndex c = static_cast<SymbolIndex>(g);
  const std::size_t width = g + 1;
  // Letter x, y of gamma + {c} -> index of [x,y] in the pair alphabet.
  auto pair_index = [width](SymbolIndex x, SymbolIndex y) {
    return static_cast<SymbolIndex>(x * width + y);
  };

  std::optional<std::pair<IndexWord, std::size_t>> best;
  for (std::size_t n = 1; n <= max_n; ++n) {
    IndexWord x(len);
    // Position i reads [ (x c^n)_i, (c^n x)_i ]; x_i is chosen at step i.
    auto dfs = [&](auto&& self, std::size_t i, State q) -> bool {
      if (!live[q]) return false;
      if (i == len + n) return dfa.is_final(q);
      SymbolIndex second = i < n ? c : x[i - n];
      if (i >= len) return self(self, i + 1, dfa.next(q, pair_index(c, second)));
      for (SymbolIndex letter = 0; letter < g; ++letter) {
        x[i] = letter;
        SymbolIndex sec = i < n ? c : x[i - n];
        if (self(self, i + 1, dfa.next(q, pair_index(letter, sec)))) return true;
      }
      return false;
    };
    if (dfs(dfs, 0, dfa.start())) {
      if (!best || x < best->first) best = std::make_pair(x, n);
    }
  }
  if (!best) return std::nullopt;
  return ShiftWitness{inst.gamma().decode(best->first), best->second};
}

}  // namespace

Decision<ShiftWitness> shift_search(const ShiftInstance& inst, std::size_t max_len, unsigned jobs) {
  const Dfa dfa = canonical_dfa(inst.automaton());
  const std::vector<bool> live = dfa.live_states();
  jobs = std::max(1u, jobs);
  for (std::size_t lo = 0; lo <= max_len; lo += jobs) {
    const std::size_t hi = std::min<std::size_t>(max_len, lo + jobs - 1);
    std::vector<std::future<std::optional<ShiftWitness>>> batch;
    for (std::size_t len = lo; len <= hi; ++len) {
      auto policy = jobs > 1 ? std::launch::async : std::launch::deferred;
      batch.push_back(std::async(policy, [&, len] {
        return search_length(dfa, live, inst, len, max_len);
      }));
    }
    std::optional<ShiftWitness> found;
    for (auto& f : batch) {
      auto r = f.get();
      if (!found && r) found = std::move(r);
    }
    if (found) return Decision<ShiftWitness>::yes(std::move(*found));
  }
  return Decision<ShiftWitness>::unknown(max_len);
}

Alphabet digit_alphabet(std::size_t k) {
  std::vector<Symbol> digits;
  for (std::size_t i = 0; i < k; ++i) digits.emplace_back(std::to_string(i));
  return Alphabet(std::move(digits));
}

PowerInstance shift_to_power(const ShiftInstance& inst, std::size_t digit_cap) {
  const std::size_t k = inst.gamma().size() + 1;
  if (digit_cap != 0 && k > digit_cap)
    throw Error(ErrorCode::limit_exceeded, "shift-to-power needs k = " + std::to_string(k) +
                                               " digits, above the cap of " +
                                               std::to_string(digit_cap));
  const Alphabet digits = digit_alphabet(k);
  const Alphabet target = Alphabet::pairs(digits, digits);
  const Alphabet letters = inst.letters();
  // gamma[i] -> i + 1, c -> 0
  auto digit_of = [&](const Symbol& s) -> SymbolIndex {
    SymbolIndex i = letters.index_of(s);
    return i == inst.gamma().size() ? 0 : i + 1;
  };
  std::vector<SymbolIndex> mapping;
  for (const auto& p : inst.automaton().alphabet().symbols())
    mapping.push_back(static_cast<SymbolIndex>(digit_of(p.first()) * k + digit_of(p.second())));
  std::vector<std::pair<Symbol, Symbol>> renaming;
  for (const auto& s : letters.symbols()) renaming.emplace_back(s, digits[digit_of(s)]);
  return {k, relabel(inst.automaton(), target, mapping), std::move(renaming)};
}

Morphism::Morphism(std::vector<Symbol> source, std::vector<Word> images)
    : source_(std::move(source)), images_(std::move(images)) {
  if (source_.size() != images_.size())
    throw Error(ErrorCode::invalid_argument, "morphism: one image per source symbol");
  const Symbol zero("0"), one("1");
  for (const auto& img : images_) {
    if (img.empty()) throw Error(ErrorCode::invalid_argument, "morphism: empty image");
    if (img.size() != images_.front().size())
      throw Error(ErrorCode::invalid_argument, "morphism: images differ in length");
    for (const auto& s : img)
      if (!(s == zero) && !(s == one))
        throw Error(ErrorCode::invalid_argument, "morphism: images must be binary");
  }
}

const Word& Morphism::image(const Symbol& s) const {
  auto it = std::find(source_.begin(), source_.end(), s);
  if (it == source_.end())
    throw Error(ErrorCode::alphabet_mismatch, "morphism: no image for '" + s.text() + "'");
  return images_[static_cast<std::size_t>(it - source_.begin())];
}

Word Morphism::apply(const Word& w) const {
  Word out;
  for (const auto& s : w) {
    const Word& img = image(s);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

std::size_t Morphism::block_length() const { return images_.empty() ? 0 : images_.front().size(); }

Morphism binary_block_code(const std::vector<Symbol>& sigma, const Symbol& c) {
  if (std::find(sigma.begin(), sigma.end(), c) != sigma.end())
    throw Error(ErrorCode::invalid_argument, "c must not belong to sigma");
  const Symbol zero("0"), one("1");
  const std::size_t m = sigma.size();
  std::vector<Word> images;
  for (std::size_t i = 1; i <= m; ++i)
    images.push_back(concat(concat(repeat(one, i), repeat(zero, m - i)), {one}));
  images.push_back(repeat(zero, m + 1));
  return Morphism(with(sigma, c), std::move(images));
}

namespace {

Regex block(const Morphism& phi, const Symbol& x, const Symbol& y) {
  return Regex::word(convolve(phi.image(x), phi.image(y)));
}

}  // namespace

Regex binary_step_regex(const RewritingSystem& s, const Morphism& phi) {
  std::vector<Regex> diagonal;
  for (const auto& e : s.alphabet().symbols()) diagonal.push_back(block(phi, e, e));
  std::vector<Regex> rules;
  for (const auto& r : s.rules())
    rules.push_back(Regex::word(convolve(phi.apply(r.rhs), phi.apply(r.lhs))));
  Regex e_star = Regex::star(Regex::alt(std::move(diagonal)));
  return Regex::concat({e_star, Regex::alt(std::move(rules)), e_star});
}

RecodedInstance recode_binary(const RewritingSystem& s, const Symbol& a, const Symbol& b) {
  require_letter(s, a);
  require_letter(s, b);
  Symbol c = pick_c(s);
  Symbol d = fresh_symbol("_d", with(s.alphabet().symbols(), c));
  Morphism phi = binary_block_code(with(s.alphabet().symbols(), d), c);

  Regex l = Regex::concat({
      block(phi, d, c),
      Regex::plus(block(phi, a, c)),
      block(phi, d, d),
      Regex::star(Regex::concat({binary_step_regex(s, phi), block(phi, d, d)})),
      Regex::plus(block(phi, c, b)),
      block(phi, c, d),
  });
  const Symbol one("1"), zero("0");
  Alphabet gamma({one});
  Alphabet letters({one, zero});
  Nfa automaton = canonical_dfa(l.to_nfa(Alphabet::pairs(letters, letters))).to_nfa();
  return {std::move(phi), c, d, ShiftInstance(std::move(gamma), zero, std::move(automaton))};
}

GeneralShiftRestriction general_shift_restrict(const ShiftInstance& inst) {
  const Dfa m = determinize(inst.automaton());
  const Alphabet& pairs = m.alphabet();
  const std::size_t k = pairs.size();
  const Symbol& c = inst.c();

  // { x x x : x in gamma* }
  std::vector<State> diag(2 * k, 1);
  for (SymbolIndex s = 0; s < k; ++s)
    if (pairs[s].first() == pairs[s].second() && !(pairs[s].first() == c)) diag[s] = 0;
  Dfa diagonal(pairs, 0, std::move(diag), {true, false});
  auto hit = shortest_word(product(m, diagonal, BoolOp::intersect));

  // First track in gamma* c+: 0 = gamma part, 1 = c part, 2 = dead.
  std::vector<State> first(3 * k);
  // Second track in c+ gamma*: 0 = start, 1 = c part, 2 = gamma part, 3 = dead.
  std::vector<State> second(4 * k);
  for (SymbolIndex s = 0; s < k; ++s) {
    bool x_is_c = pairs[s].first() == c;
    bool y_is_c = pairs[s].second() == c;
    first[0 * k + s] = x_is_c ? 1 : 0;
    first[1 * k + s] = x_is_c ? 1 : 2;
    first[2 * k + s] = 2;
    second[0 * k + s] = y_is_c ? 1 : 3;
    second[1 * k + s] = y_is_c ? 1 : 2;
    second[2 * k + s] = y_is_c ? 3 : 2;
    second[3 * k + s] = 3;
  }
  Dfa first_track(pairs, 0, std::move(first), {false, true, false});
  Dfa second_track(pairs, 0, std::move(second), {false, true, true, false});
  Dfa restricted = minimize(
      product(product(m, first_track, BoolOp::intersect), second_track, BoolOp::intersect));

  GeneralShiftRestriction out{hit.has_value(), std::nullopt, restricted.to_nfa()};
  if (hit) out.diagonal_witness = pairs.decode(*hit);
  return out;
}

}  // namespace shiftlab
