#pragma once

// Exact integer linear algebra. Everything here is arbitrary precision;
// there is no floating point in this module.

#include <cstddef>
#include <string>
#include <vector>

#include "abnet/matrix.hpp"
#include "abnet/types.hpp"

namespace abnet {

/// Column Hermite normal form.
///
/// The result has the same column span as `m` and is in lower-triangular
/// echelon form: each column has a positive pivot strictly below the pivot of
/// the previous column, entries above a pivot are zero, and entries to the left
/// of a pivot in its row lie in [0, pivot). Zero columns are dropped, so the
/// result is n x rank. The form is unique for a given lattice.
IntMatrix hnf(const IntMatrix& m);

/// Finite abelian group given by its invariant factors d1 | d2 | ... | dk,
/// each >= 2, plus a free rank for cokernels that are not finite.
struct GroupDesc {
  std::vector<Int> invariant_factors;
  std::size_t free_rank = 0;

  bool finite() const { return free_rank == 0; }
  bool trivial() const { return finite() && invariant_factors.empty(); }
  /// Throws if the group is infinite.
  Int order() const;
  /// Builds a GroupDesc from arbitrary nonnegative diagonal entries (Smith form
  /// diagonal, possibly unsorted, possibly containing 0 and 1).
  static GroupDesc from_diagonal(std::vector<Int> diagonal, std::size_t extra_free_rank = 0);

  friend bool operator==(const GroupDesc&, const GroupDesc&) = default;
};

std::string to_string(const GroupDesc& g);

/// Invariant factors of the cokernel Z^rows / (column span of m).
GroupDesc snf_invariant_factors(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant.
Int det_exact(const IntMatrix& m);

/// Leading principal minors det(m[0..k, 0..k]) for k = 1..n.
std::vector<Int> leading_principal_minors(const IntMatrix& m);

/// Exact solution of m y = b. Throws ErrorKind::singular.
RationalVector rational_solve(const RationalMatrix& m, const RationalVector& b);
RationalVector rational_solve(const IntMatrix& m, const RationalVector& b);

/// Full-rank sublattice of Z^n, stored by its canonical HNF basis (columns).
class Lattice {
 public:
  Lattice() = default;
  /// Lattice spanned by the columns of `generators`.
  explicit Lattice(const IntMatrix& generators);
  static Lattice from_generators(std::size_t dimension, const std::vector<CountVector>& generators);
  /// Diagonal lattice r_1 Z x ... x r_n Z.
  static Lattice diagonal(const CountVector& r);
  static Lattice whole(std::size_t dimension);
  /// Block-diagonal product of lattices on consecutive coordinate blocks.
  static Lattice product(const std::vector<Lattice>& blocks);

  std::size_t dimension() const noexcept { return basis_.rows(); }
  std::size_t rank() const noexcept { return basis_.cols(); }
  bool full_rank() const noexcept { return rank() == dimension(); }
  const IntMatrix& basis() const noexcept { return basis_; }
  std::vector<CountVector> basis_vectors() const { return basis_.columns(); }

  bool contains(const CountVector& v) const;
  bool contains(const Lattice& other) const;
  /// |det basis| = index of the lattice in Z^n.
  Int determinant() const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.basis_ == b.basis_; }

 private:
  IntMatrix basis_;
};

/// [sup : sub]. Throws ErrorKind::not_contained unless sub is a sublattice of
/// sup; both must have full rank.
Int lattice_index(const Lattice& sub, const Lattice& sup);

}  // namespace abnet
