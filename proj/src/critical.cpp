#include "abnet/critical.hpp"

namespace abnet {

GroupDesc critical_group(const ProductionData& pd) {
  if (!pd.kernel.full_rank()) fail(ErrorKind::invalid_argument, "total kernel is not full rank");
  const std::size_t n = pd.letter_count();
  const RationalMatrix i_minus_p = RationalMatrix::identity(n) - pd.production;
  std::vector<CountVector> columns;
  for (const auto& k : pd.kernel.basis_vectors()) {
    const RationalVector image = i_minus_p * to_rational(k);
    CountVector c;
    for (const auto& x : image) {
      if (denominator(x) != 1) fail(ErrorKind::invariant_breach, "(I - P) k is not integral for k in K");
      c.push_back(numerator(x));
    }
    columns.push_back(std::move(c));
  }
  return snf_invariant_factors(IntMatrix::from_columns(n, columns));
}

GroupDesc laplacian_cokernel(const ProductionData& pd) { return snf_invariant_factors(pd.laplacian); }

Int iota(const ProductionData& pd) {
  const Int index = lattice_index(Lattice::diagonal(pd.reset), pd.kernel);
  Int product = 1;
  for (const auto& d : pd.local) product *= d.local_index;
  if (product != index) fail(ErrorKind::invariant_breach, "iota disagrees with the product of local indices");
  return index;
}

bool is_rectangular(const ProductionData& pd) { return iota(pd) == 1; }

Int recurrent_count(const ProductionData& pd) {
  const Int det = det_exact(pd.laplacian);
  if (det <= 0) fail(ErrorKind::non_halting, "det L is not positive; the network does not halt");
  const Int i = iota(pd);
  if (det % i != 0) fail(ErrorKind::invariant_breach, "det L is not divisible by iota");
  return det / i;
}

CriticalReport critical_report(const ProductionData& pd) {
  CriticalReport r;
  r.det_laplacian = det_exact(pd.laplacian);
  r.iota = iota(pd);
  r.rectangular = r.iota == 1;
  r.rec_count = recurrent_count(pd);
  r.crit = critical_group(pd);
  r.laplacian_cokernel = laplacian_cokernel(pd);
  if (!r.crit.finite() || r.crit.order() != r.rec_count)
    fail(ErrorKind::invariant_breach, "critical group order differs from det L / iota");
  if (!r.laplacian_cokernel.finite() || r.laplacian_cokernel.order() != r.det_laplacian)
    fail(ErrorKind::invariant_breach, "Laplacian cokernel order differs from det L");
  if (r.rectangular && r.crit != r.laplacian_cokernel)
    fail(ErrorKind::invariant_breach, "rectangular network with Crit different from the Laplacian cokernel");
  return r;
}

bool homotopic(const ProductionData& a, const ProductionData& b) {
  if (a.letter_count() != b.letter_count()) fail(ErrorKind::invalid_argument, "alphabets differ");
  return a.kernel.contains(b.kernel) && b.kernel.contains(a.kernel) && a.production == b.production;
}

}  // namespace abnet
