#include "shiftlab/records.hpp"

#include "shiftlab/text_format.hpp"
#include "shiftlab/words.hpp"

namespace shiftlab {

void Record::add(std::string key, std::string value) {
  fields_.emplace_back(std::move(key), std::move(value));
}

const std::string* Record::find(std::string_view key) const {
  for (const auto& [k, v] : fields_)
    if (k == key) return &v;
  return nullptr;
}

std::string Record::render() const {
  std::string out;
  for (const auto& [k, v] : fields_) out += k + ": " + v + "\n";
  return out;
}

namespace {

template <class W>
Record start(const Decision<W>& d) {
  Record r;
  r.add("verdict", std::string(to_string(d.verdict)));
  return r;
}

void add_derivation(Record& r, const Derivation& d) {
  r.add("steps", std::to_string(d.length()));
  std::string chain, rules;
  for (const auto& w : d.words) chain += (chain.empty() ? "" : " => ") + format_word(w);
  for (std::size_t i = 0; i < d.rules.size(); ++i)
    rules += (i ? " " : "") + std::to_string(d.rules[i] + 1) + "@" + std::to_string(d.positions[i]);
  r.add("derivation", chain);
  r.add("rules", rules.empty() ? "-" : rules);
}

}  // namespace

Record to_record(const Decision<Derivation>& d, const RewritingSystem&) {
  Record r = start(d);
  switch (d.verdict) {
    case Verdict::yes: add_derivation(r, *d.witness); break;
    case Verdict::no:
      r.add("exhaustive", "true");
      r.add("explored", std::to_string(d.bound.value_or(0)));
      break;
    case Verdict::unknown: r.add("budget", std::to_string(d.bound.value_or(0))); break;
  }
  return r;
}

Record to_record(const Decision<PowerDerivation>& d, const RewritingSystem&) {
  Record r = start(d);
  if (d.is_yes()) {
    r.add("n", std::to_string(d.witness->n));
    add_derivation(r, d.witness->derivation);
  } else {
    r.add("bound", std::to_string(d.bound.value_or(0)));
  }
  return r;
}

Record to_record(const Decision<ShiftWitness>& d, const ShiftInstance& inst) {
  Record r = start(d);
  if (d.is_yes()) {
    r.add("x", format_word(d.witness->x));
    r.add("n", std::to_string(d.witness->n));
    r.add("c", inst.c().text());
    r.add("word", format_word(shift_word(d.witness->x, inst.c(), d.witness->n)));
  } else if (d.bound) {
    r.add("bound", std::to_string(*d.bound));
  }
  return r;
}

Record to_record(const Decision<ConjugatePair>& d, const Alphabet& alphabet) {
  Record r = start(d);
  if (d.is_yes()) {
    const auto& w = *d.witness;
    IndexWord uv(w.u), vu(w.v);
    uv.insert(uv.end(), w.v.begin(), w.v.end());
    vu.insert(vu.end(), w.u.begin(), w.u.end());
    r.add("u", format_word(w.u, alphabet));
    r.add("v", format_word(w.v, alphabet));
    r.add("u-length", std::to_string(w.u.size()));
    r.add("v-length", std::to_string(w.v.size()));
    r.add("uv", format_word(uv, alphabet));
    r.add("vu", format_word(vu, alphabet));
  } else if (d.bound) {
    r.add("bound", std::to_string(*d.bound));
  }
  return r;
}

Record to_record(const Decision<NonConjugatePair>& d, const Alphabet& alphabet) {
  Record r = start(d);
  if (d.is_yes()) {
    r.add("x", format_word(d.witness->x, alphabet));
    r.add("y", format_word(d.witness->y, alphabet));
    r.add("length", std::to_string(d.witness->x.size()));
  }
  return r;
}

Record to_record(const Decision<PowerWitness>& d, unsigned k) {
  Record r = start(d);
  r.add("k", std::to_string(k));
  if (d.is_yes()) {
    const auto& w = *d.witness;
    r.add("exponent", std::to_string(w.exponent));
    r.add("word", format_word(w.word));
    Rational q(base_k_value(project(w.word, 1), k), base_k_value(project(w.word, 2), k));
    r.add("quotient", q.to_string());
  } else {
    r.add("bound", std::to_string(d.bound.value_or(0)));
  }
  return r;
}

Record to_record(const SubsetResult& s, const Alphabet& alphabet) {
  Record r;
  r.add("verdict", s.holds ? "yes" : "no");
  if (s.counterexample) r.add("counterexample", format_word(*s.counterexample, alphabet));
  return r;
}

Record to_record(const TmRun& run) {
  Record r;
  switch (run.status) {
    case TmRun::Status::halted: r.add("status", "halted"); break;
    case TmRun::Status::running: r.add("status", "running"); break;
    case TmRun::Status::stuck: r.add("status", "stuck"); break;
  }
  r.add("steps", std::to_string(run.steps));
  r.add("cells-used", std::to_string(run.cells_used));
  if (run.status == TmRun::Status::halted) r.add("predicted-n", std::to_string(run.cells_used + 2));
  return r;
}

}  // namespace shiftlab
