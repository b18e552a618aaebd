#ifndef SDISO_PERM_HPP
#define SDISO_PERM_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cassert>
#include <numeric>
#include <string>
#include <vector>

namespace sdiso {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(int k) {
  BigInt r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

// Permutation of {0..n-1}. Composition is function composition:
// (a * b)(x) = a(b(x)).
struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(std::vector<int> v) : img(std::move(v)) {}
  static Perm identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Perm(std::move(v));
  }

  int n() const { return int(img.size()); }
  int operator()(int x) const {
    assert(x >= 0 && x < n());
    return img[x];
  }

  Perm operator*(const Perm& o) const {
    assert(n() == o.n());
    std::vector<int> v(img.size());
    for (int x = 0; x < n(); ++x) v[x] = img[o.img[x]];
    return Perm(std::move(v));
  }
  Perm inverse() const {
    std::vector<int> v(img.size());
    for (int x = 0; x < n(); ++x) v[img[x]] = x;
    return Perm(std::move(v));
  }

  bool is_identity() const {
    for (int x = 0; x < n(); ++x)
      if (img[x] != x) return false;
    return true;
  }
  bool operator==(const Perm&) const = default;

  // Cycle notation with fixed points omitted; "()" for the identity.
  std::string cycles() const {
    std::string out;
    std::vector<bool> seen(img.size(), false);
    for (int x = 0; x < n(); ++x) {
      if (seen[x] || img[x] == x) continue;
      out += '(';
      int y = x;
      bool first = true;
      do {
        if (!first) out += ' ';
        out += std::to_string(y);
        seen[y] = true;
        y = img[y];
        first = false;
      } while (y != x);
      out += ')';
    }
    return out.empty() ? "()" : out;
  }
};

}  // namespace sdiso

#endif
