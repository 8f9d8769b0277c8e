#include "abnet/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

namespace abnet {

namespace {

// Strongly connected components of the digraph q -> succ(q), iteratively
// (state graphs can be deep enough to overflow a recursive search).
std::vector<std::size_t> strong_components(std::size_t n, const std::vector<Transformation>& maps) {
  constexpr std::size_t unvisited = SIZE_MAX;
  std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call;  // (node, next edge)
  std::size_t counter = 0, components = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, edge] = call.back();
      if (edge < maps.size()) {
        const std::size_t w = maps[edge++][v];
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const std::size_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = components;
        } while (w != done);
        ++components;
      }
    }
  }
  return comp;
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

std::vector<std::size_t> restrict_to(const Transformation& f, const std::vector<StateId>& rec) {
  std::vector<std::size_t> p(rec.size());
  for (std::size_t k = 0; k < rec.size(); ++k) {
    auto it = std::lower_bound(rec.begin(), rec.end(), f[rec[k]]);
    if (it == rec.end() || *it != f[rec[k]]) fail(ErrorKind::invariant_breach, "map leaves the recurrent set");
    p[k] = static_cast<std::size_t>(it - rec.begin());
  }
  return p;
}

}  // namespace

StateIndexer::StateIndexer(const NetworkSpec& net, std::size_t cap) {
  size_ = 1;
  for (const auto& p : net.vertices()) {
    if (size_ > cap / p.state_count)
      fail(ErrorKind::oracle_unavailable, "joint state space exceeds " + std::to_string(cap) + " states");
    radix_.push_back(p.state_count);
    size_ *= p.state_count;
  }
}

std::size_t StateIndexer::encode(const JointState& q) const {
  if (q.size() != radix_.size()) fail(ErrorKind::structural, "joint state has the wrong number of vertices");
  std::size_t index = 0;
  for (std::size_t v = radix_.size(); v-- > 0;) {
    if (q[v] >= radix_[v]) fail(ErrorKind::structural, "state index out of range");
    index = index * radix_[v] + q[v];
  }
  return index;
}

JointState StateIndexer::decode(std::size_t index) const {
  JointState q(radix_.size());
  for (std::size_t v = 0; v < radix_.size(); ++v) {
    q[v] = static_cast<StateId>(index % radix_[v]);
    index /= radix_[v];
  }
  return q;
}

GlobalMonoid global_monoid(const NetworkSpec& net, std::size_t state_cap, std::size_t monoid_cap) {
  const ProductionData pd = production_data(net);
  if (!halting_check(pd.laplacian).halts) fail(ErrorKind::non_halting, "the network does not halt on all inputs");
  GlobalMonoid gm;
  gm.states = StateIndexer(net, state_cap);
  const std::size_t n = gm.states.size();
  std::vector<Transformation> taus;
  for (LetterId a = 0; a < net.letter_count(); ++a) {
    Transformation t(n);
    const CountVector x = unit(net.letter_count(), a);
    for (std::size_t q = 0; q < n; ++q)
      t[q] = static_cast<StateId>(gm.states.encode(stabilize(net, x, gm.states.decode(q)).final_state));
    taus.push_back(std::move(t));
  }
  gm.monoid = TransformationMonoid(n, taus, monoid_cap, kOracleEntryCap);
  if (!gm.monoid.commutative()) fail(ErrorKind::invariant_breach, "global monoid is not commutative");
  for (LetterId a = 0; a < net.letter_count(); ++a) gm.generators.push_back(gm.monoid.generator(a));
  gm.idempotent = gm.monoid.minimal_idempotent();
  gm.recurrent = image(gm.idempotent);

  std::set<Transformation> seen;
  for (const auto& m : gm.monoid.elements()) {
    Transformation em = compose(gm.idempotent, m);
    if (!seen.insert(em).second) continue;
    if (em == gm.idempotent) gm.group_identity = gm.group.size();
    gm.group.push_back(restrict_to(em, gm.recurrent));
  }
  return gm;
}

Transformation global_map(const NetworkSpec& net, const GlobalMonoid& gm, const CountVector& x) {
  Transformation t(gm.states.size());
  for (std::size_t q = 0; q < t.size(); ++q)
    t[q] = static_cast<StateId>(gm.states.encode(stabilize(net, x, gm.states.decode(q)).final_state));
  return t;
}

std::vector<JointState> recurrent_states(const GlobalMonoid& gm) {
  const std::size_t n = gm.states.size();
  std::vector<Transformation> gens;
  for (std::size_t a = 0; a < gm.generators.size(); ++a) gens.push_back(gm.tau(a));
  const auto comp = strong_components(n, gens);

  // (1) reachable from every state: the unique terminal component.
  const std::size_t comps = n == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<bool> terminal(comps, true);
  for (const auto& g : gens)
    for (std::size_t q = 0; q < n; ++q)
      if (comp[g[q]] != comp[q]) terminal[comp[q]] = false;
  const auto terminal_count = std::count(terminal.begin(), terminal.end(), true);
  std::vector<bool> c1(n, false), c2(n, true), c3(n, true), c4(n, false), c5(n, false);
  for (std::size_t q = 0; q < n; ++q) c1[q] = terminal_count == 1 && terminal[comp[q]];

  // (2) x reachable from mx for every m; (3) x in the image of every m.
  for (const auto& m : gm.monoid.elements()) {
    std::vector<bool> in_image(n, false);
    for (std::size_t q = 0; q < n; ++q) {
      in_image[m[q]] = true;
      if (comp[m[q]] != comp[q]) c2[q] = false;
    }
    for (std::size_t q = 0; q < n; ++q)
      if (!in_image[q]) c3[q] = false;
  }
  // (4) x in eX; (5) x = ex.
  for (std::size_t q = 0; q < n; ++q) {
    c4[gm.idempotent[q]] = true;
    c5[q] = gm.idempotent[q] == q;
  }
  std::vector<JointState> rec;
  for (std::size_t q = 0; q < n; ++q) {
    if (c1[q] != c5[q] || c2[q] != c5[q] || c3[q] != c5[q] || c4[q] != c5[q])
      fail(ErrorKind::invariant_breach, "recurrence conditions disagree at state " + std::to_string(q));
    if (c5[q]) rec.push_back(gm.states.decode(q));
  }
  return rec;
}

GroupDesc crit_group_oracle(const GlobalMonoid& gm) {
  const std::size_t size = gm.group.size();
  std::vector<std::uint64_t> orders;
  for (const auto& g : gm.group) orders.push_back(permutation_order(g));
  std::vector<Int> prime_powers;
  std::size_t rest = size;
  for (std::size_t p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    std::size_t p_part = 1;
    while (rest % p == 0) {
      rest /= p;
      p_part *= p;
    }
    // counts[k] = #{g : g^(p^k) = 1} = prod_i p^min(k, e_i)
    std::vector<std::size_t> counts{1};
    std::uint64_t pk = 1;
    while (counts.back() < p_part) {
      pk *= p;
      counts.push_back(static_cast<std::size_t>(
          std::count_if(orders.begin(), orders.end(), [pk](std::uint64_t o) { return pk % o == 0; })));
    }
    // at_least[k] = #{i : e_i >= k}
    std::vector<std::size_t> at_least(counts.size() + 1, 0);
    for (std::size_t k = 1; k < counts.size(); ++k) {
      std::size_t ratio = counts[k] / counts[k - 1], e = 0;
      while (ratio > 1) {
        ratio /= p;
        ++e;
      }
      at_least[k] = e;
    }
    for (std::size_t k = 1; k < counts.size(); ++k) {
      Int power = 1;
      for (std::size_t j = 0; j < k; ++j) power *= p;
      for (std::size_t c = at_least[k + 1]; c < at_least[k]; ++c) prime_powers.push_back(power);
    }
  }
  GroupDesc g = GroupDesc::from_diagonal(prime_powers);
  if (g.order() != Int(size)) fail(ErrorKind::invariant_breach, "group decomposition lost elements");
  return g;
}

bool free_and_transitive(const GlobalMonoid& gm) {
  if (gm.recurrent.empty() || gm.group.size() != gm.recurrent.size()) return false;
  for (std::size_t start = 0; start < gm.recurrent.size(); ++start) {
    std::vector<bool> hit(gm.recurrent.size(), false);
    for (const auto& g : gm.group) {
      if (hit[g[start]]) return false;
      hit[g[start]] = true;
    }
  }
  return true;
}

bool generators_permute_recurrent(const GlobalMonoid& gm) {
  for (std::size_t a = 0; a < gm.generators.size(); ++a) {
    std::vector<bool> hit(gm.states.size(), false);
    for (StateId q : gm.recurrent) {
      const StateId r = gm.tau(a)[q];
      if (!std::binary_search(gm.recurrent.begin(), gm.recurrent.end(), r) || hit[r]) return false;
      hit[r] = true;
    }
  }
  return true;
}

void check_distribution(const NetworkSpec& net, const std::vector<double>& alpha) {
  if (alpha.size() != net.letter_count()) fail(ErrorKind::invalid_argument, "distribution has the wrong length");
  double total = 0;
  for (double w : alpha) {
    if (!(w >= 0) || !std::isfinite(w)) fail(ErrorKind::invalid_argument, "distribution has a negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) fail(ErrorKind::invalid_argument, "distribution does not sum to 1");
}

JointState markov_step(const NetworkSpec& net, const std::vector<double>& alpha, const JointState& q,
                       std::mt19937_64& rng) {
  check_distribution(net, alpha);
  std::discrete_distribution<std::size_t> pick(alpha.begin(), alpha.end());
  return stabilize(net, unit(net.letter_count(), pick(rng)), q).final_state;
}

MarkovRun run_markov(const NetworkSpec& net, const std::vector<double>& alpha, const JointState& q0,
                     std::uint64_t steps, std::uint64_t seed, std::size_t trajectory_limit) {
  check_distribution(net, alpha);
  net.check_state(q0);
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::size_t> pick(alpha.begin(), alpha.end());
  MarkovRun run;
  run.final_state = q0;
  run.trajectory.push_back(q0);
  for (std::uint64_t s = 0; s < steps; ++s) {
    run.final_state = stabilize(net, unit(net.letter_count(), pick(rng)), run.final_state).final_state;
    ++run.visits[run.final_state];
    if (run.trajectory.size() < trajectory_limit) run.trajectory.push_back(run.final_state);
  }
  return run;
}

bool adequate_support(const GlobalMonoid& gm, const std::vector<double>& alpha) {
  if (alpha.size() != gm.generators.size()) fail(ErrorKind::invalid_argument, "distribution has the wrong length");
  std::vector<Transformation> gens;
  for (std::size_t a = 0; a < alpha.size(); ++a)
    if (alpha[a] > 0) gens.push_back(gm.tau(a));
  const TransformationMonoid sub(gm.states.size(), gens, kOracleMonoidCap, kOracleEntryCap);
  const Transformation& e_alpha = sub.minimal_idempotent();
  std::set<Transformation> lhs, rhs;
  for (const auto& m : sub.elements()) lhs.insert(compose(e_alpha, m));
  for (const auto& m : gm.monoid.elements()) rhs.insert(compose(gm.idempotent, m));
  return lhs == rhs;
}

RationalVector expected_odometer_exact(const NetworkSpec& net, const GlobalMonoid& gm, const CountVector& x) {
  CountVector total = zeros(net.letter_count());
  for (StateId q : gm.recurrent) total += stabilize(net, x, gm.states.decode(q)).odometer;
  RationalVector mean;
  for (const auto& t : total) mean.emplace_back(t, Int(gm.recurrent.size()));
  return mean;
}

RationalVector mean_odometer(const ProductionData& pd, const CountVector& x) {
  const RationalMatrix m = RationalMatrix::identity(pd.letter_count()) - pd.production;
  return rational_solve(m, to_rational(x));
}

Rational deviation_scan(const NetworkSpec& net, const ProductionData& pd, const std::vector<CountVector>& inputs,
                        const std::vector<JointState>& states) {
  Rational worst = 0;
  for (const auto& x : inputs) {
    const RationalVector mean = mean_odometer(pd, x);
    for (const auto& q : states) {
      const CountVector k = stabilize(net, x, q).odometer;
      for (std::size_t a = 0; a < k.size(); ++a) worst = std::max(worst, Rational(abs(Rational(k[a]) - mean[a])));
    }
  }
  return worst;
}

std::vector<JointState> all_states(const NetworkSpec& net, std::size_t cap) {
  const StateIndexer idx(net, cap);
  std::vector<JointState> out;
  out.reserve(idx.size());
  for (std::size_t q = 0; q < idx.size(); ++q) out.push_back(idx.decode(q));
  return out;
}

CountVector dominating_idempotent_input(const NetworkSpec& net, const GlobalMonoid& gm, const CountVector& x) {
  if (!is_nonnegative(x)) fail(ErrorKind::invalid_argument, "input must be nonnegative");
  const CountVector w = x + CountVector(x.size(), Int(1));
  const Transformation f = global_map(net, gm, w);
  Transformation g = f;
  Int multiple = 1;
  while (!is_idempotent(g)) {
    g = compose(f, g);
    ++multiple;
    if (multiple > Int(gm.monoid.size()) + 1) fail(ErrorKind::invariant_breach, "no idempotent power found");
  }
  if (g != gm.idempotent) fail(ErrorKind::invariant_breach, "idempotent power of a full-support input is not e");
  return multiple * w;
}

}  // namespace abnet
