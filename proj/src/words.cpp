#include "shiftlab/words.hpp"

namespace shiftlab {

Word convolve(const Word& w, const Word& x) {
  if (w.size() != x.size())
    throw Error(ErrorCode::invalid_argument, "convolve: lengths differ (" +
                                                 std::to_string(w.size()) + " vs " +
                                                 std::to_string(x.size()) + ")");
  Word out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(Symbol::pair(w[i], x[i]));
  return out;
}

Word project(const Word& y, int coordinate) {
  if (coordinate != 1 && coordinate != 2)
    throw Error(ErrorCode::invalid_argument, "project: coordinate must be 1 or 2");
  Word out;
  out.reserve(y.size());
  for (const auto& s : y) out.push_back(coordinate == 1 ? s.first() : s.second());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word repeat(const Word& w, std::size_t times) {
  Word out;
  out.reserve(w.size() * times);
  for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

Word repeat(const Symbol& s, std::size_t times) { return Word(times, s); }

}  // namespace shiftlab
