#include "abnet/report.hpp"

#include <sstream>

#include "abnet/burning.hpp"
#include "abnet/critical.hpp"
#include "abnet/nocycle.hpp"
#include "abnet/oracle.hpp"
#include "abnet/spectra.hpp"

namespace abnet {

namespace {

inline constexpr std::size_t kBurningCrossCheckStates = 5'000;

Json factors_json(const GroupDesc& g) {
  Json out = Json::array();
  for (const auto& d : g.invariant_factors) out.push_back(int_json(d));
  for (std::size_t i = 0; i < g.free_rank; ++i) out.push_back(0);
  return out;
}

Json int_matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json rational_matrix_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json optional_json(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

Json halting_json(const HaltingCertificate& hc) {
  Json out;
  out["halts"] = hc.halts;
  Json minors = Json::array();
  for (const auto& m : hc.minors) minors.push_back(int_json(m));
  out["leading_minors"] = std::move(minors);
  out["first_nonpositive_minor"] = hc.witness ? Json(*hc.witness) : Json(nullptr);
  return out;
}

Json certificate_json(const Naming& names, const BurningCertificate& cert) {
  Json out;
  out["method"] = to_string(cert.via);
  out["refined"] = cert.refined;
  out["script"] = counts_json(names, cert.y);
  out["odometer"] = counts_json(names, cert.k);
  out["element"] = counts_json(names, cert.beta);
  return out;
}

Json header(const std::string& command, const NetworkDocument& doc) {
  Json out;
  out["command"] = command;
  out["vertices"] = doc.names.vertices;
  out["letters"] = doc.names.letters;
  return out;
}

/// Production data of a network whose halting certificate is positive.
ProductionData halting_data(const NetworkDocument& doc) {
  ProductionData pd = production_data(doc.network);
  const HaltingCertificate hc = halting_check(pd.laplacian);
  if (!hc.halts)
    fail(ErrorKind::non_halting,
         "halting certificate is negative: leading minor " + std::to_string(*hc.witness) + " is not positive");
  return pd;
}

Report analyze(const NetworkDocument& doc, const CommandOptions& opt) {
  const ProductionData pd = production_data(doc.network, opt.budget.value_or(kDefaultKernelBudget));
  Report r{header("analyze", doc)};
  Json& b = r.body;
  b["reset"] = counts_json(doc.names, pd.reset);
  Json basis = Json::array();
  for (const auto& v : pd.kernel.basis_vectors()) basis.push_back(counts_json(doc.names, v));
  b["kernel_basis"] = std::move(basis);
  b["production"] = rational_matrix_json(pd.production);
  b["laplacian"] = int_matrix_json(pd.laplacian);
  const HaltingCertificate hc = halting_check(pd.laplacian);
  b["halting"] = halting_json(hc);
  Json cycle = Json::array();
  const auto on_cycle = cycle_letters(pd);
  for (LetterId a = 0; a < on_cycle.size(); ++a)
    if (on_cycle[a]) cycle.push_back(doc.names.letters[a]);
  b["production_graph"] = {{"acyclic", cycle.empty()}, {"cycle_letters", std::move(cycle)}};
  if (!hc.halts) {
    r.status = kExitNonHalting;
    return r;
  }
  const CriticalReport cr = critical_report(pd);
  b["det_laplacian"] = int_json(cr.det_laplacian);
  b["iota"] = int_json(cr.iota);
  b["rec_count"] = int_json(cr.rec_count);
  b["critical_group"] = factors_json(cr.crit);
  b["laplacian_cokernel"] = factors_json(cr.laplacian_cokernel);
  b["rectangular"] = cr.rectangular;
  const NocycleBattery nb = nocycle_battery(doc.network, pd);
  Json battery;
  battery["locally_recurrent_implies_recurrent"] = optional_json(nb.locally_rec_implies_rec);
  battery["det_laplacian_equals_det_reset"] = nb.detl_eq_detd;
  battery["all_sandpilization_states_recurrent"] = optional_json(nb.all_sandpilization_states_rec);
  battery["zero_sandpilization_state_recurrent"] = nb.zero_state_rec;
  battery["production_graph_acyclic"] = nb.gamma_acyclic;
  battery["production_nilpotent"] = nb.p_nilpotent;
  b["acyclicity_battery"] = std::move(battery);
  return r;
}

Report simulate(const NetworkDocument& doc, const CommandOptions& opt) {
  const CountVector x = parse_counts(doc, opt.pending);
  const JointState q = parse_state(doc, opt.state);
  Report r{header("simulate", doc)};
  Json& b = r.body;
  b["input"] = counts_json(doc.names, x);
  b["initial_state"] = state_json(doc.names, q);
  try {
    const StabilizationResult s = stabilize(doc.network, x, q, opt.budget);
    b["status"] = "halted";
    b["final_state"] = state_json(doc.names, s.final_state);
    b["odometer"] = counts_json(doc.names, s.odometer);
    b["rounds"] = s.rounds;
  } catch (const BudgetExhausted& e) {
    b["status"] = "budget_exhausted";
    b["partial_odometer"] = counts_json(doc.names, e.partial_odometer());
    b["rounds"] = e.rounds();
    r.status = kExitBudget;
  }
  return r;
}

Report recurrent(const NetworkDocument& doc, const CommandOptions& opt) {
  const JointState q = parse_state(doc, opt.state);
  const ProductionData pd = halting_data(doc);
  const BurningCertificate cert = burning_element(pd, BurningMethod::procedure, opt.refine_cycles);
  const RecurrenceVerdict v = is_recurrent(doc.network, pd, q, cert, opt.budget);
  Report r{header("recurrent", doc)};
  r.body["state"] = state_json(doc.names, q);
  r.body["recurrent"] = v.recurrent;
  r.body["certificate"] = certificate_json(doc.names, cert);
  r.body["odometer"] = counts_json(doc.names, v.odometer);
  return r;
}

Report burning(const NetworkDocument& doc, const CommandOptions& opt) {
  const ProductionData pd = halting_data(doc);
  // burning_element runs both constructions and rejects any disagreement.
  const BurningCertificate cert = burning_element(pd, BurningMethod::procedure, opt.refine_cycles);
  const BurningCertificate alt = burning_element(pd, BurningMethod::sandpilization, opt.refine_cycles);
  Report r{header("burning", doc)};
  r.body["certificate"] = certificate_json(doc.names, cert);
  r.body["methods_agree"] = cert.beta == alt.beta && cert.y == alt.y;
  return r;
}

Report oracle(const NetworkDocument& doc, const CommandOptions&) {
  const ProductionData pd = halting_data(doc);
  const CriticalReport cr = critical_report(pd);
  Report r{header("oracle", doc)};
  Json& b = r.body;
  GlobalMonoid gm;
  try {
    gm = global_monoid(doc.network);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::oracle_unavailable) throw;
    b["oracle"] = "unavailable";
    b["reason"] = e.what();
    b["rec_count"] = int_json(cr.rec_count);
    b["critical_group"] = factors_json(cr.crit);
    return r;
  }
  const auto rec = recurrent_states(gm);
  const GroupDesc crit = crit_group_oracle(gm);
  b["oracle"] = "available";
  b["joint_states"] = gm.states.size();
  b["monoid_size"] = gm.monoid.size();
  b["group_order"] = gm.group.size();
  b["critical_group"] = factors_json(crit);
  Json states = Json::array();
  for (const auto& q : rec) states.push_back(state_json(doc.names, q));
  b["recurrent_states"] = std::move(states);

  Json checks;
  checks["rec_count_formula"] = int_json(cr.rec_count);
  checks["rec_count_agrees"] = cr.rec_count == rec.size() && rec.size() == gm.group.size();
  checks["critical_group_agrees"] = crit == cr.crit;
  checks["free_and_transitive"] = free_and_transitive(gm);
  checks["generators_permute_recurrent"] = generators_permute_recurrent(gm);
  if (gm.states.size() <= kBurningCrossCheckStates) {
    const BurningCertificate cert = burning_element(pd);
    bool agree = true;
    for (std::size_t i = 0; i < gm.states.size(); ++i) {
      const bool member = gm.idempotent[i] == i;
      agree = agree && is_recurrent(doc.network, pd, gm.states.decode(i), cert).recurrent == member;
    }
    checks["burning_test_agrees"] = agree;
  } else {
    checks["burning_test_agrees"] = nullptr;
  }
  for (const auto& [key, value] : checks.items())
    if (value.is_boolean() && !value.get<bool>()) r.status = kExitInternal;
  b["cross_checks"] = std::move(checks);
  return r;
}

Report markov(const NetworkDocument& doc, const CommandOptions& opt) {
  const std::vector<double> alpha = parse_distribution(doc, opt.alpha);
  check_distribution(doc.network, alpha);
  const JointState q0 = parse_state(doc, opt.state);
  std::optional<GlobalMonoid> gm;
  try {
    gm = global_monoid(doc.network);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::oracle_unavailable) throw;
  }
  const MarkovRun run = run_markov(doc.network, alpha, q0, opt.steps, opt.seed);
  Report r{header("markov", doc)};
  Json& b = r.body;
  b["steps"] = opt.steps;
  b["seed"] = opt.seed;
  Json dist = Json::object();
  for (LetterId a = 0; a < alpha.size(); ++a) dist[doc.names.letters[a]] = alpha[a];
  b["alpha"] = std::move(dist);
  b["adequate_support"] = gm ? Json(adequate_support(*gm, alpha)) : Json(nullptr);
  Json trajectory = Json::array();
  for (const auto& q : run.trajectory) trajectory.push_back(state_json(doc.names, q));
  b["trajectory"] = std::move(trajectory);
  b["final_state"] = state_json(doc.names, run.final_state);

  auto frequency = [&](std::uint64_t visits) {
    return opt.steps == 0 ? 0.0 : static_cast<double>(visits) / static_cast<double>(opt.steps);
  };
  Json freq = Json::array();
  std::uint64_t outside = opt.steps;
  if (gm) {
    for (const auto& q : recurrent_states(*gm)) {
      auto it = run.visits.find(q);
      const std::uint64_t visits = it == run.visits.end() ? 0 : it->second;
      outside -= visits;
      freq.push_back({{"state", state_json(doc.names, q)}, {"visits", visits}, {"frequency", frequency(visits)}});
    }
  } else {
    for (const auto& [q, visits] : run.visits)
      freq.push_back({{"state", state_json(doc.names, q)}, {"visits", visits}, {"frequency", frequency(visits)}});
  }
  b["frequencies"] = std::move(freq);
  b["visits_outside_recurrent"] = gm ? Json(outside) : Json(nullptr);
  return r;
}

Report sandpilization(const NetworkDocument& doc, const CommandOptions&) {
  NetworkDocument s;
  s.network = sandpilize(production_data(doc.network));
  s.names.vertices = doc.names.letters;
  s.names.letters = doc.names.letters;
  for (const auto& p : s.network.vertices()) {
    std::vector<std::string> states;
    for (std::size_t q = 0; q < p.state_count; ++q) states.push_back(std::to_string(q));
    s.names.states.push_back(std::move(states));
  }
  return Report{to_json(s)};
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "n/a";
  return j.dump();
}

bool all_scalars(const Json& j) {
  for (const auto& x : j)
    if (!is_scalar(x)) return false;
  return true;
}

std::string inline_list(const Json& j) {
  std::string out = "[";
  for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + scalar_text(j[i]);
  return out + "]";
}

std::string inline_map(const Json& j) {
  std::string out = "{";
  bool first = true;
  for (const auto& [key, value] : j.items()) {
    out += (first ? "" : ", ") + key + "=" + scalar_text(value);
    first = false;
  }
  return out + "}";
}

bool flat_map(const Json& j) { return j.is_object() && all_scalars(j); }

/// Maps of counts or names print on one line.
bool compact_map(const Json& j) {
  if (!j.is_object() || j.empty()) return false;
  for (const auto& x : j)
    if (!x.is_number() && !x.is_string()) return false;
  return true;
}

void emit(std::ostringstream& out, const std::string& key, const Json& value, std::size_t indent) {
  const std::string pad(indent, ' ');
  if (is_scalar(value)) {
    out << pad << key << ": " << scalar_text(value) << "\n";
  } else if (compact_map(value)) {
    out << pad << key << ": " << inline_map(value) << "\n";
  } else if (value.is_array() && all_scalars(value)) {
    out << pad << key << ": " << inline_list(value) << "\n";
  } else if (value.is_array()) {
    out << pad << key << ":\n";
    for (const auto& item : value) {
      if (item.is_array() && all_scalars(item)) {
        out << pad << "  " << inline_list(item) << "\n";
      } else if (flat_map(item)) {
        out << pad << "  " << inline_map(item) << "\n";
      } else if (item.is_object()) {
        out << pad << "  -\n";
        for (const auto& [k, v] : item.items()) emit(out, k, v, indent + 4);
      } else {
        out << pad << "  " << item.dump() << "\n";
      }
    }
  } else if (value.empty()) {
    out << pad << key << ": {}\n";
  } else {
    out << pad << key << ":\n";
    for (const auto& [k, v] : value.items()) emit(out, k, v, indent + 2);
  }
}

}  // namespace

int exit_status(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::structural:
    case ErrorKind::validation:
    case ErrorKind::parse:
    case ErrorKind::invalid_argument:
    case ErrorKind::illegal_step:
    case ErrorKind::not_contained:
      return kExitValidation;
    case ErrorKind::non_halting:
      return kExitNonHalting;
    case ErrorKind::budget_exhausted:
      return kExitBudget;
    case ErrorKind::singular:
    case ErrorKind::oracle_unavailable:
    case ErrorKind::invariant_breach:
      return kExitInternal;
  }
  return kExitInternal;
}

Report run_command(const std::string& command, const NetworkDocument& doc, const CommandOptions& options) {
  if (command == "analyze") return analyze(doc, options);
  if (command == "simulate") return simulate(doc, options);
  if (command == "recurrent") return recurrent(doc, options);
  if (command == "burning") return burning(doc, options);
  if (command == "oracle") return oracle(doc, options);
  if (command == "markov") return markov(doc, options);
  if (command == "sandpilize") return sandpilization(doc, options);
  fail(ErrorKind::invalid_argument, "unknown command \"" + command + "\"");
}

std::string render(const Json& body, bool structured) {
  if (structured) return body.dump(2) + "\n";
  std::ostringstream out;
  for (const auto& [key, value] : body.items()) emit(out, key, value, 0);
  return out.str();
}

}  // namespace abnet
