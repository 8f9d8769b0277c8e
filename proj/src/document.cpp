#include "abnet/document.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "abnet/zoo.hpp"

namespace abnet {

namespace {

[[noreturn]] void invalid(const std::string& what) { fail(ErrorKind::validation, what); }

void check_keys(const Json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) invalid(where + ": unknown field \"" + key + "\"");
}

const Json& require(const Json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) invalid(where + ": missing field \"" + key + "\"");
  return *it;
}

bool is_nonnegative_integer(const Json& j) {
  return j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0);
}

/// Names may be written as strings or as nonnegative integers.
std::string name_of(const Json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (is_nonnegative_integer(j)) return std::to_string(j.get<std::uint64_t>());
  invalid(where + ": expected a name");
}

std::vector<std::string> name_list(const Json& j, const std::string& where) {
  if (!j.is_array()) invalid(where + ": expected a list of names");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& item : j) {
    out.push_back(name_of(item, where));
    if (!seen.insert(out.back()).second) invalid(where + ": duplicate name \"" + out.back() + "\"");
  }
  return out;
}

bool is_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Int count_of(const Json& j, const std::string& where) {
  if (is_nonnegative_integer(j)) return Int(j.get<std::uint64_t>());
  if (j.is_string() && is_digits(j.get<std::string>())) return Int(j.get<std::string>());
  invalid(where + ": expected a nonnegative integer");
}

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::size_t index_in(const std::vector<std::string>& names, const std::string& name) {
  auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? names.size() : static_cast<std::size_t>(it - names.begin());
}

/// Per-state entries of a table, given either as a list in state order or
/// as a map keyed by state name. Missing map entries stay null.
std::vector<Json> per_state(const Json& j, const std::vector<std::string>& states, const std::string& where) {
  std::vector<Json> out(states.size());
  if (j.is_array()) {
    if (j.size() != states.size())
      invalid(where + ": expected " + std::to_string(states.size()) + " entries, one per state");
    for (std::size_t q = 0; q < states.size(); ++q) out[q] = j[q];
    return out;
  }
  if (!j.is_object()) invalid(where + ": expected a list or a map keyed by state");
  for (const auto& [key, value] : j.items()) {
    const std::size_t q = index_in(states, key);
    if (q == states.size()) invalid(where + ": unknown state \"" + key + "\"");
    out[q] = value;
  }
  return out;
}

std::string describe(const AxiomViolation& v, const std::string& vertex, const std::vector<std::string>& letters,
                     const std::vector<std::string>& states) {
  const std::string a = letters.at(v.first_letter), b = letters.at(v.second_letter);
  const std::string q = states.at(v.state);
  switch (v.kind) {
    case AxiomViolation::Kind::commutation:
      return "vertex " + vertex + ": letters " + a + " and " + b + " do not commute at state " + q;
    case AxiomViolation::Kind::output_exchange:
      return "vertex " + vertex + ": outputs of letters " + a + " and " + b + " depend on their order at state " + q;
    case AxiomViolation::Kind::negative_output:
      return "vertex " + vertex + ": negative output for letter " + a + " at state " + q;
  }
  return "vertex " + vertex + ": abelian axiom violated";
}

NetworkDocument explicit_document(const Json& vertices) {
  if (!vertices.is_array() || vertices.empty()) invalid("vertices: expected a non-empty list");
  NetworkDocument doc;
  Naming& names = doc.names;
  std::vector<std::vector<LetterId>> owned;
  std::set<std::string> vertex_seen;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    const Json& vj = vertices[v];
    const std::string where = "vertices[" + std::to_string(v) + "]";
    if (!vj.is_object()) invalid(where + ": expected a map");
    check_keys(vj, {"name", "states", "letters", "transition", "output"}, where);
    const std::string name = name_of(require(vj, "name", where), where + ".name");
    if (!vertex_seen.insert(name).second) invalid("duplicate vertex name \"" + name + "\"");
    names.vertices.push_back(name);
    const Json& sj = require(vj, "states", "vertex " + name);
    if (is_nonnegative_integer(sj)) {
      names.states.push_back(numbered(sj.get<std::size_t>()));
    } else {
      names.states.push_back(name_list(sj, "vertex " + name + ".states"));
    }
    if (names.states.back().empty()) invalid("vertex " + name + ": needs at least one state");
    owned.emplace_back();
    for (const auto& letter : name_list(require(vj, "letters", "vertex " + name), "vertex " + name + ".letters")) {
      if (index_in(names.letters, letter) != names.letters.size())
        invalid("vertex " + name + ": letter \"" + letter + "\" is already owned by another vertex");
      owned.back().push_back(names.letters.size());
      names.letters.push_back(letter);
    }
  }

  const std::size_t alphabet = names.letters.size();
  std::vector<ProcessorSpec> specs;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    const Json& vj = vertices[v];
    const std::string& name = names.vertices[v];
    const auto& states = names.states[v];
    ProcessorSpec p;
    p.state_count = states.size();
    p.letters = owned[v];
    p.alphabet_size = alphabet;
    p.transition.assign(p.letters.size(), std::vector<StateId>(states.size(), 0));
    p.output.assign(p.letters.size(), std::vector<CountVector>(states.size(), zeros(alphabet)));

    const Json& tj = require(vj, "transition", "vertex " + name);
    if (!tj.is_object()) invalid("vertex " + name + ".transition: expected a map keyed by letter");
    for (const auto& [key, value] : tj.items())
      if (std::find(p.letters.begin(), p.letters.end(), index_in(names.letters, key)) == p.letters.end())
        invalid("vertex " + name + ".transition: letter \"" + key + "\" is not owned by this vertex");
    for (std::size_t i = 0; i < p.letters.size(); ++i) {
      const std::string& letter = names.letters[p.letters[i]];
      const std::string where = "vertex " + name + ".transition." + letter;
      auto it = tj.find(letter);
      if (it == tj.end()) invalid("vertex " + name + ": no transition for letter " + letter);
      const auto entries = per_state(*it, states, where);
      for (std::size_t q = 0; q < states.size(); ++q) {
        if (entries[q].is_null()) invalid(where + ": no target for state " + states[q]);
        const std::string target = name_of(entries[q], where);
        const std::size_t t = index_in(states, target);
        if (t == states.size()) invalid(where + ": unknown state \"" + target + "\"");
        p.transition[i][q] = static_cast<StateId>(t);
      }
    }

    if (auto oj = vj.find("output"); oj != vj.end()) {
      if (!oj->is_object()) invalid("vertex " + name + ".output: expected a map keyed by letter");
      for (const auto& [key, value] : oj->items()) {
        const auto local = std::find(p.letters.begin(), p.letters.end(), index_in(names.letters, key));
        if (local == p.letters.end())
          invalid("vertex " + name + ".output: letter \"" + key + "\" is not owned by this vertex");
        const std::size_t i = static_cast<std::size_t>(local - p.letters.begin());
        const std::string where = "vertex " + name + ".output." + key;
        const auto entries = per_state(value, states, where);
        for (std::size_t q = 0; q < states.size(); ++q) {
          if (entries[q].is_null()) continue;
          if (!entries[q].is_object()) invalid(where + ": expected a map from letter to count");
          for (const auto& [target, count] : entries[q].items()) {
            const std::size_t b = index_in(names.letters, target);
            if (b == alphabet) invalid(where + ": unknown letter \"" + target + "\"");
            p.output[i][q][b] = count_of(count, where + "." + target);
          }
        }
      }
    }

    std::vector<std::string> local_letters;
    for (LetterId a : p.letters) local_letters.push_back(names.letters[a]);
    const auto violations = validate_abelian(p);
    if (!violations.empty()) invalid(describe(violations.front(), name, local_letters, states));
    if (!is_irreducible(p)) invalid("vertex " + name + ": processor is not irreducible");
    specs.push_back(std::move(p));
  }
  doc.network = NetworkSpec(std::move(specs));
  return doc;
}

NetworkDocument family_document(const Json& fj) {
  if (!fj.is_object()) invalid("family: expected a map");
  const std::string kind = name_of(require(fj, "kind", "family"), "family.kind");
  if (kind == "nonrectangular-example") {
    check_keys(fj, {"kind"}, "family");
    NetworkDocument doc;
    doc.network = nonrectangular_example();
    doc.names.vertices = {"i", "j"};
    doc.names.states = {{"0", "1"}, {"0"}};
    doc.names.letters = {"a", "b", "c"};
    return doc;
  }
  if (kind != "sandpile" && kind != "rotor" && kind != "toppling")
    invalid("family.kind: unknown family \"" + kind + "\"");
  check_keys(fj, {"kind", "vertices", "edges", "sink", "thresholds", "rotor_order"}, "family");

  DigraphSpec g;
  g.names = name_list(require(fj, "vertices", "family"), "family.vertices");
  if (g.names.empty()) invalid("family.vertices: expected at least one vertex");
  auto vertex = [&](const Json& j, const std::string& where) {
    const std::string n = name_of(j, where);
    const std::size_t v = index_in(g.names, n);
    if (v == g.names.size()) invalid(where + ": unknown vertex \"" + n + "\"");
    return v;
  };
  const Json& ej = require(fj, "edges", "family");
  if (!ej.is_array()) invalid("family.edges: expected a list of [from, to] pairs");
  for (const auto& e : ej) {
    if (!e.is_array() || e.size() != 2) invalid("family.edges: expected [from, to] pairs");
    g.edges.emplace_back(vertex(e[0], "family.edges"), vertex(e[1], "family.edges"));
  }
  if (auto sj = fj.find("sink"); sj != fj.end()) g.sink = vertex(*sj, "family.sink");

  if (auto oj = fj.find("rotor_order"); oj != fj.end()) {
    if (kind != "rotor") invalid("family.rotor_order: only rotor networks take an edge ordering");
    if (!oj->is_object()) invalid("family.rotor_order: expected a map from vertex to target list");
    g.rotor_order.assign(g.names.size(), {});
    for (const auto& [key, targets] : oj->items()) {
      const std::size_t v = vertex(key, "family.rotor_order");
      const std::string where = "family.rotor_order." + key;
      if (!targets.is_array()) invalid(where + ": expected a list of targets");
      auto unused = g.out_edges(v);
      for (const auto& t : targets) {
        const std::size_t w = vertex(t, where);
        auto it = std::find_if(unused.begin(), unused.end(), [&](std::size_t e) { return g.edges[e].second == w; });
        if (it == unused.end()) invalid(where + ": no unused edge from " + key + " to " + g.names[w]);
        g.rotor_order[v].push_back(*it);
        unused.erase(it);
      }
      if (!unused.empty()) invalid(where + ": ordering must list every out-edge of " + key);
    }
  }

  NetworkSpec net;
  if (kind == "toppling") {
    const Json& tj = require(fj, "thresholds", "family");
    if (!tj.is_object()) invalid("family.thresholds: expected a map from vertex to threshold");
    std::vector<std::size_t> thresholds(g.names.size(), 0);
    for (const auto& [key, value] : tj.items()) {
      const std::size_t v = vertex(key, "family.thresholds");
      if (!is_nonnegative_integer(value) || value.get<std::size_t>() < 1)
        invalid("family.thresholds." + key + ": expected a positive integer");
      thresholds[v] = value.get<std::size_t>();
    }
    for (std::size_t v = 0; v < g.names.size(); ++v) {
      if (g.sink && v == *g.sink) thresholds[v] = 1;
      if (thresholds[v] == 0) invalid("family.thresholds: no threshold for vertex " + g.names[v]);
    }
    net = build_toppling(g, thresholds);
  } else {
    if (fj.contains("thresholds")) invalid("family.thresholds: only toppling networks take thresholds");
    net = kind == "sandpile" ? build_sandpile(g) : build_rotor(g);
  }
  NetworkDocument doc;
  doc.names.vertices = g.names;
  doc.names.letters = g.names;
  for (const auto& p : net.vertices()) doc.names.states.push_back(numbered(p.state_count));
  doc.network = std::move(net);
  return doc;
}

std::vector<std::pair<std::string, std::string>> assignments(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(start, end - start);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) {
      const std::size_t eq = item.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
        invalid("expected name=value, got \"" + item + "\"");
      out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
    start = end + 1;
  }
  return out;
}

}  // namespace

VertexId Naming::vertex(const std::string& name) const {
  const std::size_t v = index_in(vertices, name);
  if (v == vertices.size()) invalid("unknown vertex \"" + name + "\"");
  return v;
}

LetterId Naming::letter(const std::string& name) const {
  const std::size_t a = index_in(letters, name);
  if (a == letters.size()) invalid("unknown letter \"" + name + "\"");
  return a;
}

StateId Naming::state(VertexId v, const std::string& name) const {
  const std::size_t q = index_in(states.at(v), name);
  if (q == states[v].size()) invalid("vertex " + vertices[v] + ": unknown state \"" + name + "\"");
  return static_cast<StateId>(q);
}

NetworkDocument document_from_json(const Json& doc) {
  if (!doc.is_object()) invalid("document: expected a map");
  check_keys(doc, {"format_version", "vertices", "family"}, "document");
  const Json& version = require(doc, "format_version", "document");
  if (!version.is_number_integer() || version.get<long long>() != kFormatVersion)
    invalid("document: unsupported format_version (expected " + std::to_string(kFormatVersion) + ")");
  const bool has_vertices = doc.contains("vertices"), has_family = doc.contains("family");
  if (has_vertices == has_family) invalid("document: exactly one of \"vertices\" and \"family\" is required");
  return has_family ? family_document(doc["family"]) : explicit_document(doc["vertices"]);
}

NetworkDocument parse_document(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::parse, std::string("document is not valid JSON: ") + e.what());
  }
  return document_from_json(doc);
}

Json to_json(const NetworkDocument& doc) {
  const NetworkSpec& net = doc.network;
  const Naming& names = doc.names;
  Json vertices = Json::array();
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    const ProcessorSpec& p = net.vertex(v);
    Json vj;
    vj["name"] = names.vertices[v];
    vj["states"] = names.states[v];
    Json letters = Json::array(), transition = Json::object(), output = Json::object();
    for (std::size_t i = 0; i < p.letters.size(); ++i) {
      const std::string& letter = names.letters[p.letters[i]];
      letters.push_back(letter);
      Json targets = Json::array(), emitted = Json::array();
      for (std::size_t q = 0; q < p.state_count; ++q) {
        targets.push_back(names.states[v][p.transition[i][q]]);
        Json counts = Json::object();
        for (LetterId b = 0; b < net.letter_count(); ++b)
          if (p.output[i][q][b] != 0) counts[names.letters[b]] = int_json(p.output[i][q][b]);
        emitted.push_back(std::move(counts));
      }
      transition[letter] = std::move(targets);
      output[letter] = std::move(emitted);
    }
    vj["letters"] = std::move(letters);
    vj["transition"] = std::move(transition);
    vj["output"] = std::move(output);
    vertices.push_back(std::move(vj));
  }
  Json out;
  out["format_version"] = kFormatVersion;
  out["vertices"] = std::move(vertices);
  return out;
}

std::string serialize(const NetworkDocument& doc) { return to_json(doc).dump(2) + "\n"; }

Naming default_naming(const NetworkSpec& net) {
  Naming names;
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    names.vertices.push_back("v" + std::to_string(v));
    names.states.push_back(numbered(net.vertex(v).state_count));
  }
  for (LetterId a = 0; a < net.letter_count(); ++a) names.letters.push_back("l" + std::to_string(a));
  return names;
}

CountVector parse_counts(const NetworkDocument& doc, const std::string& text) {
  CountVector x = zeros(doc.network.letter_count());
  for (const auto& [name, value] : assignments(text)) {
    if (!is_digits(value)) invalid("letter " + name + ": expected a nonnegative count, got \"" + value + "\"");
    x[doc.names.letter(name)] += Int(value);
  }
  return x;
}

JointState parse_state(const NetworkDocument& doc, const std::string& text) {
  JointState q = doc.network.zero_state();
  for (const auto& [name, value] : assignments(text)) {
    const VertexId v = doc.names.vertex(name);
    q[v] = doc.names.state(v, value);
  }
  return q;
}

std::vector<double> parse_distribution(const NetworkDocument& doc, const std::string& text) {
  const std::size_t n = doc.network.letter_count();
  if (assignments(text).empty()) return std::vector<double>(n, 1.0 / static_cast<double>(n));
  std::vector<double> alpha(n, 0.0);
  for (const auto& [name, value] : assignments(text)) {
    std::size_t used = 0;
    double p = 0;
    try {
      p = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != value.size()) invalid("letter " + name + ": expected a probability, got \"" + value + "\"");
    alpha[doc.names.letter(name)] = p;
  }
  return alpha;
}

Json int_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

Json rational_json(const Rational& v) { return Json(to_string(v)); }

Json counts_json(const Naming& names, const CountVector& v) {
  Json out = Json::object();
  for (LetterId a = 0; a < v.size(); ++a) out[names.letters.at(a)] = int_json(v[a]);
  return out;
}

Json rationals_json(const Naming& names, const RationalVector& v) {
  Json out = Json::object();
  for (LetterId a = 0; a < v.size(); ++a) out[names.letters.at(a)] = rational_json(v[a]);
  return out;
}

Json state_json(const Naming& names, const JointState& q) {
  Json out = Json::object();
  for (VertexId v = 0; v < q.size(); ++v) out[names.vertices.at(v)] = names.states.at(v).at(q[v]);
  return out;
}

}  // namespace abnet
