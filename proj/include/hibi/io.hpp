#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hibi/determinantal.hpp"
#include "hibi/gorenstein.hpp"
#include "hibi/poset.hpp"

namespace hibi::io {

using nlohmann::json;

/// Parses and returns the file; ErrorKind::malformed_input on unreadable
/// files and syntax errors.
json read_json_file(const std::string& path);

/// {"elements": [...], "covers": [[x, y], ...]}. Pairs need not be covers.
/// Shape errors raise ErrorKind::malformed_input; order errors (cycles,
/// unknown labels) keep their poset error kinds.
Poset poset_from_json(const json& j);
json poset_to_json(const Poset& p);

/// {"map": {"a": "b", ...}}
std::map<std::string, std::string> hom_map_from_json(const json& j);

/// {"poset": <poset>, "q": [...]}; a bare poset object reads as Q = ∅.
struct SemigroupDescriptor {
  Poset poset;
  std::vector<std::string> q;
};
SemigroupDescriptor semigroup_from_json(const json& j);

/// Comma separated labels; surrounding whitespace and brackets dropped.
std::vector<std::string> split_labels(std::string_view text);
std::vector<Element> resolve_labels(const Poset& p, const std::vector<std::string>& labels);

json labels_json(const Poset& p, std::span<const Element> xs);
/// {"label": value, ...}
json exponents_json(const Poset& p, const ExponentVector& nu);

/// {"gorenstein", "failure", "nu0", "witness"}; failure and witness are
/// null on a positive verdict.
json report_json(const Poset& p, std::span<const Element> q, const WitnessReport& r);

json blocks_json(const BlockDecomposition& b);

/// Hasse diagram, bottom to top, one edge per cover. Highlighted elements
/// are drawn filled.
std::string hasse_dot(const Poset& p, std::span<const Element> highlight = {},
                      std::string_view name = "P");

/// Indented key/value rendering of a JSON value for humans.
std::string pretty(const json& j);

}  // namespace hibi::io
