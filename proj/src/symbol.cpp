#include "shiftlab/symbol.hpp"

#include <cctype>

#include "shiftlab/error.hpp"

namespace shiftlab {
namespace {

void check_atom(std::string_view atom, std::string_view whole) {
  if (atom.empty())
    throw Error(ErrorCode::invalid_argument, "empty atom in symbol '" + std::string(whole) + "'");
  if (atom == kEpsilonToken)
    throw Error(ErrorCode::invalid_argument, "'@' is reserved for epsilon");
  for (char ch : atom) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == '#' || ch == '|')
      throw Error(ErrorCode::invalid_argument,
                  "invalid character in symbol '" + std::string(whole) + "'");
  }
}

}  // namespace

Symbol::Symbol(std::string text) : text_(std::move(text)) {
  auto bar = text_.find('|');
  if (bar == std::string::npos) {
    check_atom(text_, text_);
    return;
  }
  std::string_view view(text_);
  check_atom(view.substr(0, bar), text_);
  check_atom(view.substr(bar + 1), text_);
}

Symbol Symbol::pair(const Symbol& first, const Symbol& second) {
  if (first.is_pair() || second.is_pair())
    throw Error(ErrorCode::invalid_argument, "pair components must be atoms");
  Symbol s;
  s.text_ = first.text_ + "|" + second.text_;
  return s;
}

bool Symbol::is_pair() const noexcept { return text_.find('|') != std::string::npos; }

Symbol Symbol::first() const {
  auto bar = text_.find('|');
  if (bar == std::string::npos)
    throw Error(ErrorCode::invalid_argument, "'" + text_ + "' is not a pair symbol");
  Symbol s;
  s.text_ = text_.substr(0, bar);
  return s;
}

Symbol Symbol::second() const {
  auto bar = text_.find('|');
  if (bar == std::string::npos)
    throw Error(ErrorCode::invalid_argument, "'" + text_ + "' is not a pair symbol");
  Symbol s;
  s.text_ = text_.substr(bar + 1);
  return s;
}

Alphabet::Alphabet() : data_(std::make_shared<const Data>()) {}

Alphabet::Alphabet(std::vector<Symbol> symbols) {
  auto data = std::make_shared<Data>();
  data->symbols = std::move(symbols);
  for (SymbolIndex i = 0; i < data->symbols.size(); ++i) {
    if (!data->index.emplace(data->symbols[i], i).second)
      throw Error(ErrorCode::invalid_argument,
                  "duplicate symbol '" + data->symbols[i].text() + "' in alphabet");
  }
  data_ = std::move(data);
}

Alphabet Alphabet::from_atoms(std::initializer_list<std::string_view> atoms) {
  std::vector<Symbol> symbols;
  for (auto a : atoms) symbols.emplace_back(std::string(a));
  return Alphabet(std::move(symbols));
}

Alphabet Alphabet::pairs(const Alphabet& first, const Alphabet& second) {
  std::vector<Symbol> symbols;
  symbols.reserve(first.size() * second.size());
  for (const auto& x : first.symbols())
    for (const auto& y : second.symbols()) symbols.push_back(Symbol::pair(x, y));
  return Alphabet(std::move(symbols));
}

std::optional<SymbolIndex> Alphabet::find(const Symbol& s) const {
  auto it = data_->index.find(s);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

SymbolIndex Alphabet::index_of(const Symbol& s) const {
  auto i = find(s);
  if (!i)
    throw Error(ErrorCode::alphabet_mismatch,
                "symbol '" + s.text() + "' is not in alphabet {" + to_string() + "}");
  return *i;
}

IndexWord Alphabet::encode(std::span<const Symbol> word) const {
  IndexWord out;
  out.reserve(word.size());
  for (const auto& s : word) out.push_back(index_of(s));
  return out;
}

Word Alphabet::decode(std::span<const SymbolIndex> word) const {
  Word out;
  out.reserve(word.size());
  for (auto i : word) out.push_back(data_->symbols.at(i));
  return out;
}

Alphabet Alphabet::pair_components() const {
  std::vector<Symbol> atoms;
  std::unordered_map<Symbol, bool> seen;
  auto note = [&](Symbol s) {
    if (seen.emplace(s, true).second) atoms.push_back(std::move(s));
  };
  for (const auto& s : symbols()) {
    if (!s.is_pair())
      throw Error(ErrorCode::invalid_argument, "'" + s.text() + "' is not a pair symbol");
    note(s.first());
    note(s.second());
  }
  return Alphabet(std::move(atoms));
}

std::string Alphabet::to_string() const {
  std::string out;
  for (const auto& s : symbols()) {
    if (!out.empty()) out += ' ';
    out += s.text();
  }
  return out;
}

void require_same_alphabet(const Alphabet& a, const Alphabet& b, std::string_view what) {
  if (!(a == b))
    throw Error(ErrorCode::alphabet_mismatch, std::string(what) + ": alphabets differ: {" +
                                                  a.to_string() + "} vs {" + b.to_string() + "}");
}

}  // namespace shiftlab
