#ifndef SHIFTLAB_RECORDS_HPP
#define SHIFTLAB_RECORDS_HPP

#include <string>
#include <utility>
#include <vector>

#include "shiftlab/procedures.hpp"
#include "shiftlab/reductions.hpp"
#include "shiftlab/rewriting.hpp"

namespace shiftlab {

// Ordered "key: value" lines describing one result.
class Record {
 public:
  void add(std::string key, std::string value);
  const std::string* find(std::string_view key) const;
  const std::vector<std::pair<std::string, std::string>>& fields() const noexcept {
    return fields_;
  }
  std::string render() const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

Record to_record(const Decision<Derivation>& d, const RewritingSystem& s);
Record to_record(const Decision<PowerDerivation>& d, const RewritingSystem& s);
Record to_record(const Decision<ShiftWitness>& d, const ShiftInstance& inst);
Record to_record(const Decision<ConjugatePair>& d, const Alphabet& alphabet);
Record to_record(const Decision<NonConjugatePair>& d, const Alphabet& alphabet);
Record to_record(const Decision<PowerWitness>& d, unsigned k);
Record to_record(const SubsetResult& r, const Alphabet& alphabet);
Record to_record(const TmRun& r);

}  // namespace shiftlab

#endif
