#pragma once

#include "abnet/lattice.hpp"
#include "abnet/spectra.hpp"

namespace abnet {

struct CriticalReport {
  GroupDesc crit;                // Z^A / (I - P) K
  GroupDesc laplacian_cokernel;  // Z^A / L Z^A
  Int det_laplacian;
  Int iota;  // [K : D Z^A]
  Int rec_count;
  bool rectangular = true;
};

/// Invariant factors of Z^A / (I - P) K.
GroupDesc critical_group(const ProductionData& pd);
GroupDesc laplacian_cokernel(const ProductionData& pd);

/// [K : D Z^A], cross-checked against the product of the local indices.
Int iota(const ProductionData& pd);
bool is_rectangular(const ProductionData& pd);

/// det L / iota. Throws ErrorKind::non_halting when det L <= 0.
Int recurrent_count(const ProductionData& pd);

/// Everything above, with the internal identities checked
/// (ErrorKind::invariant_breach on failure).
CriticalReport critical_report(const ProductionData& pd);

/// Same total kernel and same production matrix. Throws
/// ErrorKind::invalid_argument when the alphabets differ in size.
bool homotopic(const ProductionData& a, const ProductionData& b);

}  // namespace abnet
