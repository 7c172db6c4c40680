#ifndef SHIFTLAB_SYMBOL_HPP
#define SHIFTLAB_SYMBOL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace shiftlab {

// An input letter. Either an atom (a non-empty token without whitespace,
// ',', '#' or '|') or an ordered pair of atoms, spelled "x|y".
class Symbol {
 public:
  Symbol() = default;
  explicit Symbol(std::string text);

  static Symbol pair(const Symbol& first, const Symbol& second);

  const std::string& text() const noexcept { return text_; }
  bool is_pair() const noexcept;
  Symbol first() const;
  Symbol second() const;

  auto operator<=>(const Symbol&) const = default;

 private:
  std::string text_;
};

using Word = std::vector<Symbol>;

// Reserved token for the empty word / epsilon label in text formats.
inline constexpr std::string_view kEpsilonToken = "@";

}  // namespace shiftlab

template <>
struct std::hash<shiftlab::Symbol> {
  std::size_t operator()(const shiftlab::Symbol& s) const noexcept {
    return std::hash<std::string>{}(s.text());
  }
};

namespace shiftlab {

using SymbolIndex = std::uint32_t;
using IndexWord = std::vector<SymbolIndex>;

// Finite, totally ordered alphabet. The declaration order is the order used
// by every lexicographic operation. Copies share storage.
class Alphabet {
 public:
  Alphabet();
  explicit Alphabet(std::vector<Symbol> symbols);
  static Alphabet from_atoms(std::initializer_list<std::string_view> atoms);

  // All pairs [x,y] with x from `first` and y from `second`, row-major.
  static Alphabet pairs(const Alphabet& first, const Alphabet& second);

  std::size_t size() const noexcept { return data_->symbols.size(); }
  bool empty() const noexcept { return size() == 0; }
  const Symbol& operator[](SymbolIndex i) const { return data_->symbols[i]; }
  const std::vector<Symbol>& symbols() const noexcept { return data_->symbols; }

  std::optional<SymbolIndex> find(const Symbol& s) const;
  SymbolIndex index_of(const Symbol& s) const;  // throws on unknown symbol
  bool contains(const Symbol& s) const { return find(s).has_value(); }

  IndexWord encode(std::span<const Symbol> word) const;
  Word decode(std::span<const SymbolIndex> word) const;

  // Distinct atoms occurring as pair components, in first-seen order.
  // Throws if some symbol is not a pair.
  Alphabet pair_components() const;

  std::string to_string() const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.data_ == b.data_ || a.data_->symbols == b.data_->symbols;
  }

 private:
  struct Data {
    std::vector<Symbol> symbols;
    std::unordered_map<Symbol, SymbolIndex> index;
  };
  std::shared_ptr<const Data> data_;
};

// Throws ErrorCode::alphabet_mismatch naming both alphabets.
void require_same_alphabet(const Alphabet& a, const Alphabet& b, std::string_view what);

}  // namespace shiftlab

#endif
