#pragma once

// Finite monoids of self-maps of {0, ..., n-1}, used both for the local
// (per-processor) monoids and for the global monoid of a whole network.

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "abnet/types.hpp"

namespace abnet {

using Transformation = std::vector<StateId>;

Transformation identity_map(std::size_t n);
/// (f . g)(q) = f(g(q)).
Transformation compose(const Transformation& f, const Transformation& g);
Transformation power(const Transformation& f, std::uint64_t exponent);
bool is_idempotent(const Transformation& f);
/// The unique idempotent among the powers of f. The power sequence is walked
/// with Floyd's cycle detection on exact map equality.
Transformation idempotent_power(const Transformation& f);
/// Image of f as a sorted list of states.
std::vector<StateId> image(const Transformation& f);

struct TransformationHash {
  std::size_t operator()(const Transformation& t) const noexcept;
};

/// Submonoid of End({0..n-1}) generated by a list of maps. Elements are
/// discovered by breadth-first closure; element 0 is the identity.
class TransformationMonoid {
 public:
  TransformationMonoid() = default;
  /// Throws ErrorKind::oracle_unavailable when more than `size_cap` elements,
  /// or more than `entry_cap` stored map entries in total, would be needed.
  TransformationMonoid(std::size_t state_count, std::vector<Transformation> generators, std::size_t size_cap,
                       std::size_t entry_cap = std::size_t(1) << 26);

  std::size_t state_count() const noexcept { return state_count_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t generator_count() const noexcept { return generator_index_.size(); }
  const Transformation& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<Transformation>& elements() const noexcept { return elements_; }
  /// Element index of generator k.
  std::size_t generator(std::size_t k) const { return generator_index_.at(k); }
  /// Index of element(i) . generator(k) (i.e. generator applied after element i).
  std::size_t times_generator(std::size_t i, std::size_t k) const { return cayley_.at(i * generator_count() + k); }
  std::optional<std::size_t> find(const Transformation& t) const;
  /// Index of f . g; both must be elements.
  std::size_t product(std::size_t f, std::size_t g) const;
  bool commutative() const;

  std::vector<std::size_t> idempotents() const;
  /// Product of all idempotents: the unique idempotent reachable from every element.
  const Transformation& minimal_idempotent() const;

 private:
  std::size_t state_count_ = 0;
  std::vector<Transformation> elements_;
  std::unordered_map<Transformation, std::size_t, TransformationHash> index_;
  std::vector<std::size_t> generator_index_;
  std::vector<std::size_t> cayley_;
  Transformation minimal_idempotent_;
};

}  // namespace abnet
