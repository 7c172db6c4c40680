#ifndef SHIFTLAB_WORDS_HPP
#define SHIFTLAB_WORDS_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "shiftlab/error.hpp"
#include "shiftlab/symbol.hpp"

namespace shiftlab {

// w x x: the word of pairs [w1,x1]...[wn,xn]. Throws on length mismatch.
Word convolve(const Word& w, const Word& x);

// Coordinate 1 or 2 of a word of pair symbols.
Word project(const Word& y, int coordinate);

Word concat(const Word& a, const Word& b);
Word repeat(const Word& w, std::size_t times);
Word repeat(const Symbol& s, std::size_t times);

namespace detail {

// Smallest p with p | n and s[i] == s[i - p] for all i >= p.
template <class T>
std::size_t primitive_period(std::span<const T> s) {
  const std::size_t n = s.size();
  // failure function of KMP; the least period is n - border.
  std::vector<std::size_t> border(n + 1, 0);
  for (std::size_t i = 1, k = 0; i < n; ++i) {
    while (k > 0 && !(s[i] == s[k])) k = border[k];
    if (s[i] == s[k]) ++k;
    border[i + 1] = k;
  }
  std::size_t p = n - border[n];
  return n % p == 0 ? p : n;
}

template <class T>
bool occurs_in(std::span<const T> needle, std::span<const T> hay) {
  const std::size_t m = needle.size();
  if (m == 0) return true;
  std::vector<std::size_t> border(m + 1, 0);
  for (std::size_t i = 1, k = 0; i < m; ++i) {
    while (k > 0 && !(needle[i] == needle[k])) k = border[k];
    if (needle[i] == needle[k]) ++k;
    border[i + 1] = k;
  }
  for (std::size_t i = 0, k = 0; i < hay.size(); ++i) {
    while (k > 0 && !(hay[i] == needle[k])) k = border[k];
    if (hay[i] == needle[k]) ++k;
    if (k == m) return true;
  }
  return false;
}

}  // namespace detail

template <class T>
struct PrimitiveRoot {
  std::vector<T> root;
  std::size_t exponent;
};

// x = root^exponent with root primitive. x must be nonempty.
template <class T>
PrimitiveRoot<T> primitive_root(const std::vector<T>& x) {
  if (x.empty()) throw Error(ErrorCode::invalid_argument, "primitive root of the empty word");
  std::size_t p = detail::primitive_period(std::span<const T>(x));
  return {std::vector<T>(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(p)), x.size() / p};
}

template <class T>
bool is_primitive(const std::vector<T>& x) {
  return !x.empty() && detail::primitive_period(std::span<const T>(x)) == x.size();
}

template <class T>
bool commutes(const std::vector<T>& x, const std::vector<T>& y) {
  if (x.size() + y.size() == 0) return true;
  // xy == yx compared without materializing either product.
  const std::size_t n = x.size() + y.size();
  auto at_xy = [&](std::size_t i) -> const T& { return i < x.size() ? x[i] : y[i - x.size()]; };
  auto at_yx = [&](std::size_t i) -> const T& { return i < y.size() ? y[i] : x[i - y.size()]; };
  for (std::size_t i = 0; i < n; ++i)
    if (!(at_xy(i) == at_yx(i))) return false;
  return true;
}

// x = uv and y = vu for some u, v. Linear time: |x| = |y| and y occurs in xx.
template <class T>
bool are_conjugates(const std::vector<T>& x, const std::vector<T>& y) {
  if (x.size() != y.size()) return false;
  if (x.empty()) return true;
  std::vector<T> doubled(x);
  doubled.insert(doubled.end(), x.begin(), x.end());
  return detail::occurs_in(std::span<const T>(y), std::span<const T>(doubled));
}

template <class T>
std::vector<T> rotate_left(const std::vector<T>& x, std::size_t k) {
  if (x.empty()) return x;
  k %= x.size();
  std::vector<T> out(x.begin() + static_cast<std::ptrdiff_t>(k), x.end());
  out.insert(out.end(), x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

}  // namespace shiftlab

#endif
