#include "abnet/lattice.hpp"

#include <algorithm>
#include <optional>

namespace abnet {

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int gcd_int(Int a, Int b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Int t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

}  // namespace

IntMatrix hnf(const IntMatrix& m) {
  IntMatrix h = m;
  const std::size_t n = h.rows();
  const std::size_t k = h.cols();
  std::size_t pivot_col = 0;
  std::vector<std::size_t> pivot_rows;
  for (std::size_t i = 0; i < n && pivot_col < k; ++i) {
    // Euclid on row i across the remaining columns.
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t j = pivot_col; j < k; ++j) {
        if (h(i, j) == 0) continue;
        if (!best || abs(h(i, j)) < abs(h(i, *best))) best = j;
      }
      if (!best) break;
      h.swap_columns(pivot_col, *best);
      bool cleared = true;
      for (std::size_t j = pivot_col + 1; j < k; ++j) {
        if (h(i, j) == 0) continue;
        h.subtract_column(j, pivot_col, h(i, j) / h(i, pivot_col));
        if (h(i, j) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h(i, pivot_col) == 0) continue;  // row i lies outside the span of the pivots so far
    if (h(i, pivot_col) < 0)
      for (std::size_t r = 0; r < n; ++r) h(r, pivot_col) = -h(r, pivot_col);
    for (std::size_t j = 0; j < pivot_col; ++j)
      h.subtract_column(j, pivot_col, floor_div(h(i, j), h(i, pivot_col)));
    pivot_rows.push_back(i);
    ++pivot_col;
  }
  IntMatrix out(n, pivot_col);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < pivot_col; ++j) out(i, j) = h(i, j);
  return out;
}

Int GroupDesc::order() const {
  if (!finite()) fail(ErrorKind::invalid_argument, "group has positive free rank");
  Int o = 1;
  for (const auto& d : invariant_factors) o *= d;
  return o;
}

GroupDesc GroupDesc::from_diagonal(std::vector<Int> diagonal, std::size_t extra_free_rank) {
  GroupDesc g;
  g.free_rank = extra_free_rank;
  std::vector<Int> nonzero;
  for (auto& d : diagonal) {
    if (d == 0)
      ++g.free_rank;
    else
      nonzero.push_back(abs(d));
  }
  // Normalize to a divisibility chain: (d_i, d_j) -> (gcd, lcm).
  for (std::size_t i = 0; i < nonzero.size(); ++i)
    for (std::size_t j = i + 1; j < nonzero.size(); ++j) {
      Int g_ij = gcd_int(nonzero[i], nonzero[j]);
      Int l_ij = nonzero[i] / g_ij * nonzero[j];
      nonzero[i] = g_ij;
      nonzero[j] = l_ij;
    }
  for (auto& d : nonzero)
    if (d != 1) g.invariant_factors.push_back(d);
  return g;
}

std::string to_string(const GroupDesc& g) {
  if (g.trivial()) return "trivial";
  std::string s;
  for (const auto& d : g.invariant_factors) {
    if (!s.empty()) s += " x ";
    s += "Z/" + d.str();
  }
  for (std::size_t i = 0; i < g.free_rank; ++i) {
    if (!s.empty()) s += " x ";
    s += "Z";
  }
  return s;
}

GroupDesc snf_invariant_factors(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t n = a.rows();
  const std::size_t k = a.cols();
  std::vector<Int> diagonal;
  for (std::size_t t = 0; t < std::min(n, k); ++t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < n; ++i)
      for (std::size_t j = t; j < k; ++j)
        if (a(i, j) != 0 && (!best || abs(a(i, j)) < abs(a(best->first, best->second)))) best = {{i, j}};
    if (!best) break;
    a.swap_rows(t, best->first);
    a.swap_columns(t, best->second);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a(i, t) == 0) continue;
        a.subtract_row(i, t, a(i, t) / a(t, t));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < k; ++j) {
        if (a(t, j) == 0) continue;
        a.subtract_column(j, t, a(t, j) / a(t, t));
        if (a(t, j) != 0) clean = false;
      }
      if (clean) {
        // Enforce divisibility of the remaining block by the pivot.
        std::optional<std::size_t> offending;
        for (std::size_t i = t + 1; i < n && !offending; ++i)
          for (std::size_t j = t + 1; j < k; ++j)
            if (a(i, j) % a(t, t) != 0) {
              offending = i;
              break;
            }
        if (!offending) break;
        a.subtract_row(t, *offending, Int(-1));
        clean = false;
      }
      // Move the smallest nonzero entry of row t / column t into the pivot.
      std::size_t bi = t, bj = t;
      for (std::size_t i = t + 1; i < n; ++i)
        if (a(i, t) != 0 && abs(a(i, t)) < abs(a(bi, bj))) bi = i, bj = t;
      for (std::size_t j = t + 1; j < k; ++j)
        if (a(t, j) != 0 && abs(a(t, j)) < abs(a(bi, bj))) bi = t, bj = j;
      a.swap_rows(t, bi);
      a.swap_columns(t, bj);
    }
    diagonal.push_back(abs(a(t, t)));
  }
  const std::size_t missing = n - diagonal.size();
  return GroupDesc::from_diagonal(std::move(diagonal), missing);
}

Int det_exact(const IntMatrix& m) {
  if (!m.square()) fail(ErrorKind::structural, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      a.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<Int> leading_principal_minors(const IntMatrix& m) {
  if (!m.square()) fail(ErrorKind::structural, "principal minors of a non-square matrix");
  std::vector<Int> minors;
  for (std::size_t k = 1; k <= m.rows(); ++k) minors.push_back(det_exact(m.leading(k)));
  return minors;
}

RationalVector rational_solve(const RationalMatrix& m, const RationalVector& b) {
  if (!m.square() || b.size() != m.rows()) fail(ErrorKind::structural, "rational_solve size mismatch");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalVector x = b;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) fail(ErrorKind::singular, "matrix is singular");
    a.swap_rows(c, p);
    std::swap(x[c], x[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = a(i, c) / a(c, c);
      a.subtract_row(i, c, f);
      x[i] -= f * x[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) x[i] /= a(i, i);
  return x;
}

RationalVector rational_solve(const IntMatrix& m, const RationalVector& b) {
  return rational_solve(to_rational(m), b);
}

Lattice::Lattice(const IntMatrix& generators) : basis_(hnf(generators)) {}

Lattice Lattice::from_generators(std::size_t dimension, const std::vector<CountVector>& generators) {
  return Lattice(IntMatrix::from_columns(dimension, generators));
}

Lattice Lattice::diagonal(const CountVector& r) {
  IntMatrix m(r.size(), r.size());
  for (std::size_t i = 0; i < r.size(); ++i) m(i, i) = r[i];
  return Lattice(m);
}

Lattice Lattice::whole(std::size_t dimension) { return Lattice(IntMatrix::identity(dimension)); }

Lattice Lattice::product(const std::vector<Lattice>& blocks) {
  std::size_t n = 0, k = 0;
  for (const auto& b : blocks) {
    n += b.dimension();
    k += b.rank();
  }
  IntMatrix m(n, k);
  std::size_t row0 = 0, col0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.dimension(); ++i)
      for (std::size_t j = 0; j < b.rank(); ++j) m(row0 + i, col0 + j) = b.basis()(i, j);
    row0 += b.dimension();
    col0 += b.rank();
  }
  return Lattice(m);
}

bool Lattice::contains(const CountVector& v) const {
  if (v.size() != dimension()) fail(ErrorKind::structural, "lattice membership dimension mismatch");
  CountVector r = v;
  std::size_t row = 0;
  for (std::size_t c = 0; c < rank(); ++c) {
    while (basis_(row, c) == 0) {
      if (r[row] != 0) return false;
      ++row;
    }
    if (r[row] % basis_(row, c) != 0) return false;
    Int t = r[row] / basis_(row, c);
    for (std::size_t i = row; i < dimension(); ++i) r[i] -= t * basis_(i, c);
    ++row;
  }
  return is_zero(r);
}

bool Lattice::contains(const Lattice& other) const {
  for (const auto& v : other.basis_vectors())
    if (!contains(v)) return false;
  return true;
}

Int Lattice::determinant() const {
  if (!full_rank()) fail(ErrorKind::invalid_argument, "lattice is not full rank");
  Int d = 1;
  for (std::size_t i = 0; i < rank(); ++i) d *= basis_(i, i);
  return d;
}

Int lattice_index(const Lattice& sub, const Lattice& sup) {
  if (sub.dimension() != sup.dimension()) fail(ErrorKind::structural, "lattice dimension mismatch");
  if (!sub.full_rank() || !sup.full_rank()) fail(ErrorKind::invalid_argument, "lattice_index needs full-rank lattices");
  if (!sup.contains(sub)) fail(ErrorKind::not_contained, "first lattice is not contained in the second");
  return sub.determinant() / sup.determinant();
}

}  // namespace abnet
