#include "abnet/matrix.hpp"
#include "abnet/types.hpp"

#include <sstream>

namespace abnet {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::structural: return "structural";
    case ErrorKind::validation: return "validation";
    case ErrorKind::non_halting: return "non-halting";
    case ErrorKind::budget_exhausted: return "budget-exhausted";
    case ErrorKind::illegal_step: return "illegal-step";
    case ErrorKind::singular: return "singular";
    case ErrorKind::not_contained: return "not-contained";
    case ErrorKind::oracle_unavailable: return "oracle-unavailable";
    case ErrorKind::invariant_breach: return "invariant-breach";
    case ErrorKind::parse: return "parse";
    case ErrorKind::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

CountVector& operator+=(CountVector& lhs, const CountVector& rhs) {
  if (lhs.size() != rhs.size()) fail(ErrorKind::structural, "vector size mismatch");
  for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] += rhs[i];
  return lhs;
}

CountVector& operator-=(CountVector& lhs, const CountVector& rhs) {
  if (lhs.size() != rhs.size()) fail(ErrorKind::structural, "vector size mismatch");
  for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] -= rhs[i];
  return lhs;
}

CountVector operator+(CountVector lhs, const CountVector& rhs) { return lhs += rhs; }
CountVector operator-(CountVector lhs, const CountVector& rhs) { return lhs -= rhs; }

CountVector operator*(const Int& scale, CountVector v) {
  for (auto& x : v) x *= scale;
  return v;
}

bool is_zero(const CountVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_nonnegative(const CountVector& v) {
  for (const auto& x : v)
    if (x < 0) return false;
  return true;
}

bool leq(const CountVector& a, const CountVector& b) {
  if (a.size() != b.size()) fail(ErrorKind::structural, "vector size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Int l1_norm(const CountVector& v) {
  Int s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

RationalVector to_rational(const CountVector& v) { return RationalVector(v.begin(), v.end()); }

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {
template <typename V, typename F>
std::string join(const V& v, F&& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += f(v[i]);
  }
  return s + ")";
}

template <typename M, typename F>
std::string matrix_string(const M& m, F&& f) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << f(m(i, j));
    out << "]\n";
  }
  return out.str();
}
}  // namespace

std::string to_string(const CountVector& v) {
  return join(v, [](const Int& x) { return x.str(); });
}

std::string to_string(const RationalVector& v) {
  return join(v, [](const Rational& x) { return to_string(x); });
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

std::string to_string(const IntMatrix& m) {
  return matrix_string(m, [](const Int& x) { return x.str(); });
}

std::string to_string(const RationalMatrix& m) {
  return matrix_string(m, [](const Rational& x) { return to_string(x); });
}

}  // namespace abnet
