#include "abnet/monoid.hpp"

#include <algorithm>

#include <boost/container_hash/hash.hpp>

namespace abnet {

Transformation identity_map(std::size_t n) {
  Transformation t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<StateId>(i);
  return t;
}

Transformation compose(const Transformation& f, const Transformation& g) {
  Transformation out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[g[i]];
  return out;
}

Transformation power(const Transformation& f, std::uint64_t exponent) {
  Transformation result = identity_map(f.size());
  Transformation base = f;
  while (exponent) {
    if (exponent & 1U) result = compose(base, result);
    exponent >>= 1U;
    if (exponent) base = compose(base, base);
  }
  return result;
}

bool is_idempotent(const Transformation& f) { return compose(f, f) == f; }

Transformation idempotent_power(const Transformation& f) {
  // Powers x_k = f^k (x_0 = identity) are eventually periodic: x_(mu + lambda) = x_mu.
  auto next = [&f](const Transformation& x) { return compose(f, x); };
  Transformation tortoise = f;
  Transformation hare = next(f);
  while (tortoise != hare) {
    tortoise = next(tortoise);
    hare = next(next(hare));
  }
  std::uint64_t mu = 0;
  tortoise = identity_map(f.size());
  while (tortoise != hare) {
    tortoise = next(tortoise);
    hare = next(hare);
    ++mu;
  }
  std::uint64_t lambda = 1;
  hare = next(tortoise);
  while (tortoise != hare) {
    hare = next(hare);
    ++lambda;
  }
  // Smallest positive multiple of lambda that is at least mu.
  const std::uint64_t exponent = lambda * std::max<std::uint64_t>(1, (mu + lambda - 1) / lambda);
  return power(f, exponent);
}

std::vector<StateId> image(const Transformation& f) {
  std::vector<StateId> im(f.begin(), f.end());
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return im;
}

std::size_t TransformationHash::operator()(const Transformation& t) const noexcept {
  return boost::hash_range(t.begin(), t.end());
}

TransformationMonoid::TransformationMonoid(std::size_t state_count, std::vector<Transformation> generators,
                                           std::size_t size_cap, std::size_t entry_cap)
    : state_count_(state_count) {
  for (const auto& g : generators)
    if (g.size() != state_count) fail(ErrorKind::structural, "generator has wrong domain size");
  auto insert = [&](Transformation t) -> std::size_t {
    auto [it, inserted] = index_.try_emplace(t, elements_.size());
    if (inserted) {
      if (elements_.size() >= size_cap)
        fail(ErrorKind::oracle_unavailable, "monoid exceeds the size cap of " + std::to_string(size_cap));
      if ((elements_.size() + 1) * state_count > entry_cap)
        fail(ErrorKind::oracle_unavailable, "monoid storage exceeds " + std::to_string(entry_cap) + " map entries");
      elements_.push_back(std::move(t));
    }
    return it->second;
  };
  insert(identity_map(state_count));
  for (auto& g : generators) generator_index_.push_back(insert(g));
  const std::size_t k = generators.size();
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    cayley_.resize((i + 1) * k);
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t idx = insert(compose(generators[j], elements_[i]));
      cayley_[i * k + j] = idx;
    }
  }

  minimal_idempotent_ = identity_map(state_count);
  for (std::size_t i : idempotents()) minimal_idempotent_ = compose(elements_[i], minimal_idempotent_);
}

std::optional<std::size_t> TransformationMonoid::find(const Transformation& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t TransformationMonoid::product(std::size_t f, std::size_t g) const {
  auto idx = find(compose(elements_.at(f), elements_.at(g)));
  if (!idx) fail(ErrorKind::invariant_breach, "monoid is not closed under composition");
  return *idx;
}

bool TransformationMonoid::commutative() const {
  for (std::size_t i = 0; i < generator_count(); ++i)
    for (std::size_t j = i + 1; j < generator_count(); ++j)
      if (compose(elements_[generator(i)], elements_[generator(j)]) !=
          compose(elements_[generator(j)], elements_[generator(i)]))
        return false;
  return true;
}

std::vector<std::size_t> TransformationMonoid::idempotents() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (is_idempotent(elements_[i])) out.push_back(i);
  return out;
}

const Transformation& TransformationMonoid::minimal_idempotent() const { return minimal_idempotent_; }

}  // namespace abnet
