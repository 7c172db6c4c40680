#include "shiftlab/rewriting.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <set>
#include <unordered_map>

#include "shiftlab/error.hpp"
#include "shiftlab/words.hpp"

namespace shiftlab {
namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (const auto& s : w) h = (h ^ std::hash<Symbol>{}(s)) * 1099511628211ull;
    return h;
  }
};

void require_in(const Alphabet& alphabet, const Word& w, std::string_view what) {
  for (const auto& s : w)
    if (!alphabet.contains(s))
      throw Error(ErrorCode::alphabet_mismatch, std::string(what) + ": symbol '" + s.text() +
                                                    "' is not in alphabet {" +
                                                    alphabet.to_string() + "}");
}

}  // namespace

RewritingSystem::RewritingSystem(Alphabet alphabet, std::vector<Rule> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
  for (const auto& r : rules_) {
    if (r.lhs.empty())
      throw Error(ErrorCode::invalid_argument, "rewriting rule with an empty left side");
    if (r.lhs.size() != r.rhs.size())
      throw Error(ErrorCode::invalid_argument, "rewriting rule is not length-preserving");
    require_in(alphabet_, r.lhs, "rule");
    require_in(alphabet_, r.rhs, "rule");
  }
}

std::vector<Rewrite> rewrites(const RewritingSystem& s, const Word& w) {
  std::vector<Rewrite> out;
  for (std::size_t i = 0; i < s.rules().size(); ++i) {
    const auto& rule = s.rules()[i];
    if (rule.lhs.size() > w.size()) continue;
    for (std::size_t pos = 0; pos + rule.lhs.size() <= w.size(); ++pos) {
      if (!std::equal(rule.lhs.begin(), rule.lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(pos)))
        continue;
      Word result(w);
      std::copy(rule.rhs.begin(), rule.rhs.end(), result.begin() + static_cast<std::ptrdiff_t>(pos));
      out.push_back({i, pos, std::move(result)});
    }
  }
  return out;
}

std::vector<Word> one_step(const RewritingSystem& s, const Word& w) {
  std::set<Word> distinct;
  for (auto& r : rewrites(s, w)) distinct.insert(std::move(r.result));
  return {distinct.begin(), distinct.end()};
}

Decision<Derivation> reachable(const RewritingSystem& s, const Word& from, const Word& to,
                               std::size_t budget) {
  require_in(s.alphabet(), from, "reachable");
  require_in(s.alphabet(), to, "reachable");
  if (from.size() != to.size()) return Decision<Derivation>::no(0);
  if (from == to) return Decision<Derivation>::yes({{from}, {}, {}});

  struct Visit {
    const Word* parent;
    std::size_t rule;
    std::size_t position;
  };
  std::unordered_map<Word, Visit, WordHash> visited;
  std::deque<const Word*> queue;
  if (budget == 0) return Decision<Derivation>::unknown(budget);
  auto root = visited.emplace(from, Visit{nullptr, 0, 0}).first;
  queue.push_back(&root->first);

  while (!queue.empty()) {
    const Word* current = queue.front();
    queue.pop_front();
    for (auto& rw : rewrites(s, *current)) {
      if (visited.count(rw.result)) continue;
      if (visited.size() >= budget) return Decision<Derivation>::unknown(budget);
      bool found = rw.result == to;
      auto it = visited.emplace(std::move(rw.result), Visit{current, rw.rule, rw.position}).first;
      if (found) {
        Derivation d;
        for (const Word* w = &it->first; w != nullptr;) {
          const Visit& v = visited.at(*w);
          d.words.push_back(*w);
          if (v.parent != nullptr) {
            d.rules.push_back(v.rule);
            d.positions.push_back(v.position);
          }
          w = v.parent;
        }
        std::reverse(d.words.begin(), d.words.end());
        std::reverse(d.rules.begin(), d.rules.end());
        std::reverse(d.positions.begin(), d.positions.end());
        return Decision<Derivation>::yes(std::move(d));
      }
      queue.push_back(&it->first);
    }
  }
  return Decision<Derivation>::no(visited.size());
}

Decision<PowerDerivation> rewrite_power_search(const RewritingSystem& s, const Symbol& a,
                                               const Symbol& b, std::size_t max_n,
                                               std::size_t budget, unsigned jobs) {
  require_in(s.alphabet(), {a, b}, "rewrite-power");
  jobs = std::max(1u, jobs);
  for (std::size_t lo = 1; lo <= max_n; lo += jobs) {
    const std::size_t hi = std::min<std::size_t>(max_n, lo + jobs - 1);
    std::vector<std::future<Decision<Derivation>>> batch;
    for (std::size_t n = lo; n <= hi; ++n) {
      auto policy = jobs > 1 ? std::launch::async : std::launch::deferred;
      batch.push_back(std::async(policy, [&s, &a, &b, n, budget] {
        return reachable(s, repeat(a, n), repeat(b, n), budget);
      }));
    }
    // Smallest n wins; the batch is drained so no task outlives the call.
    std::optional<PowerDerivation> best;
    for (std::size_t i = 0; i < batch.size(); ++i) {
      auto d = batch[i].get();
      if (!best && d.is_yes()) best = PowerDerivation{lo + i, std::move(*d.witness)};
    }
    if (best) return Decision<PowerDerivation>::yes(std::move(*best));
  }
  return Decision<PowerDerivation>::unknown(max_n);
}

void TuringMachine::validate() const {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::invalid_argument, msg); };
  auto has = [](const std::vector<Symbol>& v, const Symbol& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
  };
  auto distinct = [](std::vector<Symbol> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  if (states.empty()) fail("Turing machine has no states");
  if (!distinct(states)) fail("duplicate Turing machine state");
  if (!distinct(tape_alphabet)) fail("duplicate tape symbol");
  if (!has(tape_alphabet, blank)) fail("blank '" + blank.text() + "' is not a tape symbol");
  for (const auto& s : input_alphabet)
    if (!has(tape_alphabet, s)) fail("input symbol '" + s.text() + "' is not a tape symbol");
  if (!has(states, start)) fail("start state '" + start.text() + "' is not a state");
  if (!has(states, final_state)) fail("final state '" + final_state.text() + "' is not a state");
  for (const auto& mv : moves) {
    if (!has(states, mv.from) || !has(states, mv.to))
      fail("move uses an undeclared state");
    if (!has(tape_alphabet, mv.read) || !has(tape_alphabet, mv.write))
      fail("move uses an undeclared tape symbol");
    if (mv.from == final_state) fail("the final state must have no moves");
  }
}

TmEncoding tm_to_rewriting(const TuringMachine& m) {
  m.validate();
  const Symbol a("a"), b("b"), dollar("$");
  for (const auto& reserved : {a, b, dollar}) {
    auto clash = [&](const std::vector<Symbol>& v) {
      return std::find(v.begin(), v.end(), reserved) != v.end();
    };
    if (clash(m.tape_alphabet) || clash(m.states))
      throw Error(ErrorCode::invalid_argument,
                  "symbol '" + reserved.text() + "' is reserved by the encoding");
  }
  for (const auto& q : m.states)
    if (std::find(m.tape_alphabet.begin(), m.tape_alphabet.end(), q) != m.tape_alphabet.end())
      throw Error(ErrorCode::invalid_argument,
                  "'" + q.text() + "' is both a state and a tape symbol");

  std::vector<Symbol> sigma{a, b, dollar};
  sigma.insert(sigma.end(), m.tape_alphabet.begin(), m.tape_alphabet.end());
  sigma.insert(sigma.end(), m.states.begin(), m.states.end());

  std::vector<Rule> rules;
  std::vector<unsigned> origin;
  auto emit = [&](unsigned family, Word lhs, Word rhs) {
    rules.push_back({std::move(lhs), std::move(rhs)});
    origin.push_back(family);
  };
  const Symbol& qf = m.final_state;

  emit(1, {a, a}, {dollar, m.start});
  emit(2, {a}, {m.blank});
  for (const auto& mv : m.moves)
    if (mv.direction == Direction::right) emit(3, {mv.from, mv.read}, {mv.write, mv.to});
  for (const auto& mv : m.moves)
    if (mv.direction == Direction::left)
      for (const auto& f : m.tape_alphabet) emit(4, {f, mv.from, mv.read}, {mv.to, f, mv.write});
  for (const auto& c : m.tape_alphabet) emit(5, {qf, c}, {c, qf});
  for (const auto& c : m.tape_alphabet) emit(6, {c, qf}, {qf, b});
  emit(7, {dollar, qf}, {b, b});

  return {RewritingSystem(Alphabet(std::move(sigma)), std::move(rules)), std::move(origin)};
}

TmRun tm_run(const TuringMachine& m, std::size_t max_steps) {
  m.validate();
  std::vector<Symbol> tape{m.blank};
  std::size_t head = 0;
  Symbol state = m.start;
  std::size_t steps = 0;
  std::size_t cells = 0;
  while (true) {
    if (state == m.final_state) return {TmRun::Status::halted, steps, cells};
    if (steps >= max_steps) return {TmRun::Status::running, steps, cells};
    auto mv = std::find_if(m.moves.begin(), m.moves.end(), [&](const TmMove& x) {
      return x.from == state && x.read == tape[head];
    });
    if (mv == m.moves.end()) return {TmRun::Status::stuck, steps, cells};
    if (mv->direction == Direction::left && head == 0) return {TmRun::Status::stuck, steps, cells};
    tape[head] = mv->write;
    cells = std::max(cells, head + 1);
    state = mv->to;
    if (mv->direction == Direction::right) {
      ++head;
      if (head == tape.size()) tape.push_back(m.blank);
    } else {
      --head;
    }
    ++steps;
  }
}

}  // namespace shiftlab
