#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace abnet {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using LetterId = std::size_t;
using VertexId = std::size_t;
using StateId = std::uint32_t;

/// Integer vector indexed by the total alphabet (pending letters, odometers, emissions).
using CountVector = std::vector<Int>;
using RationalVector = std::vector<Rational>;
/// One state index per vertex.
using JointState = std::vector<StateId>;

enum class ErrorKind {
  structural,        // malformed input: index out of range, size mismatch
  validation,        // abelian axioms, irreducibility, reachability
  non_halting,       // halting certificate is negative
  budget_exhausted,  // round or iteration budget ran out
  illegal_step,      // checked step without a pending letter
  singular,          // singular linear system
  not_contained,     // lattice containment failed
  oracle_unavailable,
  invariant_breach,  // two routes that must agree did not
  parse,
  invalid_argument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when stabilization runs out of rounds; carries the work done so far.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(const std::string& what, CountVector partial_odometer, std::uint64_t rounds)
      : Error(ErrorKind::budget_exhausted, what),
        partial_odometer_(std::move(partial_odometer)),
        rounds_(rounds) {}
  const CountVector& partial_odometer() const noexcept { return partial_odometer_; }
  std::uint64_t rounds() const noexcept { return rounds_; }

 private:
  CountVector partial_odometer_;
  std::uint64_t rounds_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline CountVector zeros(std::size_t n) { return CountVector(n, Int(0)); }

inline CountVector unit(std::size_t n, std::size_t i, Int scale = 1) {
  CountVector v = zeros(n);
  v.at(i) = std::move(scale);
  return v;
}

CountVector& operator+=(CountVector& lhs, const CountVector& rhs);
CountVector& operator-=(CountVector& lhs, const CountVector& rhs);
CountVector operator+(CountVector lhs, const CountVector& rhs);
CountVector operator-(CountVector lhs, const CountVector& rhs);
CountVector operator*(const Int& scale, CountVector v);

bool is_zero(const CountVector& v);
bool is_nonnegative(const CountVector& v);
/// Pointwise a <= b.
bool leq(const CountVector& a, const CountVector& b);
Int l1_norm(const CountVector& v);

RationalVector to_rational(const CountVector& v);
std::string to_string(const Rational& q);
std::string to_string(const CountVector& v);
std::string to_string(const RationalVector& v);

}  // namespace abnet
