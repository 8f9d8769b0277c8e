#include "abnet/processor.hpp"

#include <algorithm>
#include <numeric>

namespace abnet {

namespace {

bool states_connected(std::size_t n, const std::vector<Transformation>& maps) {
  if (n <= 1) return true;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const auto& t : maps)
    for (std::size_t q = 0; q < n; ++q) {
      auto a = root(q), b = root(t[q]);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  return components == 1;
}

void require_irreducible(const ProcessorSpec& spec) {
  if (!is_irreducible(spec)) fail(ErrorKind::validation, "processor is reducible");
}

// Permutation of the locally recurrent states induced by each letter,
// expressed on positions within `recurrent`.
std::vector<std::vector<std::size_t>> recurrent_permutations(const ProcessorSpec& spec,
                                                             const std::vector<StateId>& recurrent) {
  std::vector<std::vector<std::size_t>> perms;
  for (std::size_t i = 0; i < spec.letter_count(); ++i) {
    std::vector<std::size_t> p(recurrent.size());
    for (std::size_t k = 0; k < recurrent.size(); ++k) {
      auto it = std::lower_bound(recurrent.begin(), recurrent.end(), spec.map(i)[recurrent[k]]);
      if (it == recurrent.end() || *it != spec.map(i)[recurrent[k]])
        fail(ErrorKind::invariant_breach, "letter maps a locally recurrent state outside the recurrent set");
      p[k] = static_cast<std::size_t>(it - recurrent.begin());
    }
    perms.push_back(std::move(p));
  }
  return perms;
}

std::uint64_t permutation_order(const std::vector<std::size_t>& p) {
  std::uint64_t order = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::uint64_t len = 0;
    for (std::size_t x = s; !seen[x]; x = p[x]) {
      seen[x] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

}  // namespace

void check_structure(const ProcessorSpec& spec) {
  if (spec.state_count == 0) fail(ErrorKind::structural, "processor has no states");
  if (spec.transition.size() != spec.letter_count() || spec.output.size() != spec.letter_count())
    fail(ErrorKind::structural, "transition/output tables do not match the letter list");
  for (LetterId a : spec.letters)
    if (a >= spec.alphabet_size) fail(ErrorKind::structural, "owned letter outside the alphabet");
  for (std::size_t i = 0; i < spec.letter_count(); ++i) {
    if (spec.transition[i].size() != spec.state_count || spec.output[i].size() != spec.state_count)
      fail(ErrorKind::structural, "table row has the wrong number of states");
    for (StateId q : spec.transition[i])
      if (q >= spec.state_count) fail(ErrorKind::structural, "transition target out of range");
    for (const auto& o : spec.output[i])
      if (o.size() != spec.alphabet_size) fail(ErrorKind::structural, "output vector has the wrong length");
  }
}

std::string AxiomViolation::describe() const {
  const std::string where = " (letters " + std::to_string(first_letter) + ", " + std::to_string(second_letter) +
                            ", state " + std::to_string(state) + ")";
  switch (kind) {
    case Kind::commutation: return "transitions do not commute" + where;
    case Kind::output_exchange: return "outputs depend on processing order" + where;
    case Kind::negative_output: return "negative output count" + where;
  }
  return "unknown violation";
}

std::vector<AxiomViolation> validate_abelian(const ProcessorSpec& spec) {
  check_structure(spec);
  std::vector<AxiomViolation> report;
  for (std::size_t a = 0; a < spec.letter_count(); ++a)
    for (StateId q = 0; q < spec.state_count; ++q)
      if (!is_nonnegative(spec.output[a][q]))
        report.push_back({AxiomViolation::Kind::negative_output, a, a, q});
  for (std::size_t a = 0; a < spec.letter_count(); ++a)
    for (std::size_t b = a + 1; b < spec.letter_count(); ++b)
      for (StateId q = 0; q < spec.state_count; ++q) {
        const StateId ab = spec.transition[b][spec.transition[a][q]];
        const StateId ba = spec.transition[a][spec.transition[b][q]];
        if (ab != ba) report.push_back({AxiomViolation::Kind::commutation, a, b, q});
        const CountVector lhs = spec.output[a][q] + spec.output[b][spec.transition[a][q]];
        const CountVector rhs = spec.output[b][q] + spec.output[a][spec.transition[b][q]];
        if (lhs != rhs) report.push_back({AxiomViolation::Kind::output_exchange, a, b, q});
      }
  return report;
}

bool is_irreducible(const ProcessorSpec& spec) {
  check_structure(spec);
  return states_connected(spec.state_count, spec.transition);
}

LocalMonoid::LocalMonoid(const ProcessorSpec& spec, std::size_t size_cap)
    : monoid_((check_structure(spec), spec.state_count), spec.transition, size_cap) {}

std::vector<std::size_t> LocalMonoid::product_table() const {
  std::vector<std::size_t> table(size() * size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) table[i * size() + j] = product(i, j);
  return table;
}

LocalMonoid local_monoid(const ProcessorSpec& spec) { return LocalMonoid(spec); }

Transformation minimal_idempotent(const LocalMonoid& m) {
  std::vector<Transformation> idempotents;
  for (const auto& x : m.elements()) {
    Transformation e = idempotent_power(x);
    if (std::find(idempotents.begin(), idempotents.end(), e) == idempotents.end()) idempotents.push_back(std::move(e));
  }
  Transformation e = m.element(m.identity());
  for (const auto& f : idempotents) e = compose(f, e);
  return e;
}

std::vector<StateId> locally_recurrent_states(const ProcessorSpec& spec) {
  return image(minimal_idempotent(local_monoid(spec)));
}

CountVector reset_numbers(const ProcessorSpec& spec) {
  require_irreducible(spec);
  const auto recurrent = locally_recurrent_states(spec);
  const auto perms = recurrent_permutations(spec, recurrent);
  CountVector r;
  for (const auto& p : perms) r.emplace_back(permutation_order(p));
  return r;
}

Lattice local_kernel(const ProcessorSpec& spec, std::uint64_t budget) {
  require_irreducible(spec);
  const std::size_t k = spec.letter_count();
  const auto recurrent = locally_recurrent_states(spec);
  const auto perms = recurrent_permutations(spec, recurrent);
  std::vector<std::uint64_t> r;
  std::uint64_t box = 1;
  for (const auto& p : perms) {
    r.push_back(permutation_order(p));
    if (box > budget / r.back()) fail(ErrorKind::budget_exhausted, "local kernel box exceeds the enumeration budget");
    box *= r.back();
  }
  if (k == 0) return Lattice::whole(0);

  // powers[i][j] = (t_i restricted to eQ)^j, j < r_i
  std::vector<std::vector<std::vector<std::size_t>>> powers(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::size_t> cur(recurrent.size());
    std::iota(cur.begin(), cur.end(), std::size_t{0});
    for (std::uint64_t j = 0; j < r[i]; ++j) {
      powers[i].push_back(cur);
      for (auto& x : cur) x = perms[i][x];
    }
  }

  std::vector<CountVector> generators;
  for (std::size_t i = 0; i < k; ++i) generators.push_back(unit(k, i, Int(r[i])));
  std::vector<std::uint64_t> x(k, 0);
  for (std::uint64_t n = 0; n < box; ++n) {
    bool trivial = true;
    for (std::size_t s = 0; s < recurrent.size() && trivial; ++s) {
      std::size_t pos = s;
      for (std::size_t i = 0; i < k; ++i) pos = powers[i][x[i]][pos];
      trivial = pos == s;
    }
    if (trivial && n != 0) {
      CountVector v;
      for (auto xi : x) v.emplace_back(xi);
      generators.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (++x[i] < r[i]) break;
      x[i] = 0;
    }
  }
  return Lattice::from_generators(k, generators);
}

LocalData analyze_processor(const ProcessorSpec& spec, std::uint64_t budget) {
  LocalData d;
  d.idempotent = minimal_idempotent(local_monoid(spec));
  d.recurrent_states = image(d.idempotent);
  d.reset = reset_numbers(spec);
  d.kernel = local_kernel(spec, budget);
  d.local_index = lattice_index(Lattice::diagonal(d.reset), d.kernel);
  return d;
}

bool fixes(const ProcessorSpec& spec, const CountVector& local_counts, StateId state) {
  if (local_counts.size() != spec.letter_count()) fail(ErrorKind::structural, "count vector has the wrong length");
  StateId q = state;
  for (std::size_t i = 0; i < spec.letter_count(); ++i) {
    if (local_counts[i] < 0) fail(ErrorKind::invalid_argument, "fixes() needs nonnegative counts");
    q = power(spec.map(i), local_counts[i].convert_to<std::uint64_t>())[q];
  }
  return q == state;
}

}  // namespace abnet
