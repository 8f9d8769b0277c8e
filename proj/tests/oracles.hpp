#pragma once

// Slow reference computations used only to cross-check the library.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <vector>

#include <boost/integer/common_factor.hpp>

#include "abnet/matrix.hpp"

namespace oracle {

using abnet::Int;
using abnet::IntMatrix;

/// Laplace expansion along the first row.
inline Int cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t c = 0, k = 0; c < n; ++c)
        if (c != j) minor(i - 1, k++) = m(i, c);
    Int term = m(0, j) * cofactor_det(minor);
    total += (j % 2 == 0) ? term : Int(-term);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

/// gcd of all k x k minors (0 if all vanish).
inline Int determinantal_divisor(const IntMatrix& m, std::size_t k) {
  Int g = 0;
  subsets(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
    subsets(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
      Int d = cofactor_det(sub);
      g = boost::integer::gcd(g, d < 0 ? Int(-d) : d);
    });
  });
  return g;
}

/// Invariant factors of coker(m) from determinantal divisors, with 1s removed
/// and one 0 per missing rank.
inline std::vector<Int> invariant_factors(const IntMatrix& m) {
  std::vector<Int> out;
  Int prev = 1;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    Int d = k <= m.cols() ? determinantal_divisor(m, k) : Int(0);
    if (d == 0) {
      out.push_back(0);
      continue;
    }
    Int s = d / prev;
    if (s != 1) out.push_back(s);
    prev = d;
  }
  return out;
}

/// Lattice membership by closing the generators modulo d, where d * Z^n is
/// contained in the lattice (d must be a nonzero multiple of the index).
class ModularMembership {
 public:
  ModularMembership(std::size_t n, const std::vector<std::vector<Int>>& gens, Int d) : n_(n), d_(d) {
    std::vector<std::vector<Int>> frontier{std::vector<Int>(n, 0)};
    seen_.insert(frontier.front());
    while (!frontier.empty()) {
      auto x = frontier.back();
      frontier.pop_back();
      for (const auto& g : gens) {
        auto y = x;
        for (std::size_t i = 0; i < n; ++i) y[i] = reduce(y[i] + g[i]);
        if (seen_.insert(y).second) frontier.push_back(y);
      }
    }
  }
  bool contains(const std::vector<Int>& v) const {
    std::vector<Int> r(n_);
    for (std::size_t i = 0; i < n_; ++i) r[i] = reduce(v[i]);
    return seen_.count(r) > 0;
  }
  std::size_t residue_count() const { return seen_.size(); }

 private:
  Int reduce(const Int& x) const {
    Int r = x % d_;
    return r < 0 ? Int(r + d_) : r;
  }
  std::size_t n_;
  Int d_;
  std::set<std::vector<Int>> seen_;
};

}  // namespace oracle
