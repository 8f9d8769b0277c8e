#pragma once
// Named network documents (JSON) and their conversion to NetworkSpec.
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "abnet/engine.hpp"

namespace abnet {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// Human-readable names for the dense indices of a NetworkSpec.
struct Naming {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> states;  // per vertex
  std::vector<std::string> letters;              // per global letter

  VertexId vertex(const std::string& name) const;
  LetterId letter(const std::string& name) const;
  StateId state(VertexId v, const std::string& name) const;
  friend bool operator==(const Naming&, const Naming&) = default;
};

/// Letters are numbered in vertex order, so vertex 0 owns the first block.
struct NetworkDocument {
  NetworkSpec network;
  Naming names;
};

/// Parses either the explicit form (vertex tables) or a family stanza
/// (sandpile | rotor | toppling | nonrectangular-example). Errors are
/// ErrorKind::parse for malformed JSON and ErrorKind::validation otherwise,
/// with messages that name the offending vertex, letter or state.
NetworkDocument parse_document(const std::string& text);
NetworkDocument document_from_json(const Json& doc);

/// Canonical explicit form: transitions and outputs as per-state lists,
/// zero outputs written as empty maps.
Json to_json(const NetworkDocument& doc);
std::string serialize(const NetworkDocument& doc);

/// Default names: vertex "v<i>", letter "l<a>", states "0", "1", ...
Naming default_naming(const NetworkSpec& net);

/// "a=2,c=1" -> pending letter counts (unlisted letters are 0).
CountVector parse_counts(const NetworkDocument& doc, const std::string& text);
/// "i=1,j=0" -> joint state (unlisted vertices are in their first state).
JointState parse_state(const NetworkDocument& doc, const std::string& text);
/// "a=0.5,b=0.5" -> distribution over letters (unlisted letters are 0);
/// empty text means uniform over all letters.
std::vector<double> parse_distribution(const NetworkDocument& doc, const std::string& text);

Json int_json(const Int& v);
Json rational_json(const Rational& v);
Json counts_json(const Naming& names, const CountVector& v);
Json rationals_json(const Naming& names, const RationalVector& v);
Json state_json(const Naming& names, const JointState& q);

}  // namespace abnet
