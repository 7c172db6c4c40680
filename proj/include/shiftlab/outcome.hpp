#ifndef SHIFTLAB_OUTCOME_HPP
#define SHIFTLAB_OUTCOME_HPP

#include <cstddef>
#include <optional>
#include <string_view>

namespace shiftlab {

enum class Verdict { yes, no, unknown };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

// Result of an exact procedure or a bounded search. A yes always carries a
// witness; unknown only comes out of bounded searches and records the bound.
template <class Witness>
struct Decision {
  Verdict verdict = Verdict::unknown;
  std::optional<Witness> witness;
  std::optional<std::size_t> bound;

  static Decision yes(Witness w) { return {Verdict::yes, std::move(w), std::nullopt}; }
  static Decision no(std::optional<std::size_t> bound = std::nullopt) {
    return {Verdict::no, std::nullopt, bound};
  }
  static Decision unknown(std::size_t bound) { return {Verdict::unknown, std::nullopt, bound}; }

  bool is_yes() const noexcept { return verdict == Verdict::yes; }
};

}  // namespace shiftlab

#endif
