#include "hibi/io.hpp"

#include <fstream>
#include <sstream>

namespace hibi::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::malformed_input, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::vector<std::string> string_array(const json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) malformed(std::string(what) + " entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void pretty_into(const json& j, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      const bool nested = (v.is_object() && !v.empty()) || (v.is_array() && !v.empty() && v.front().is_structured());
      if (nested) {
        os << pad << k << ":\n";
        pretty_into(v, indent + 1, os);
      } else {
        os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured() && !v.empty() && (v.is_object() || v.front().is_structured())) {
        os << pad << "-\n";
        pretty_into(v, indent + 1, os);
      } else {
        os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    malformed(path + ": " + e.what());
  }
}

Poset poset_from_json(const json& j) {
  auto labels = string_array(field(j, "elements"), "elements");
  std::vector<std::pair<std::string, std::string>> rel;
  const json& covers = j.contains("covers") ? j.at("covers") : json::array();
  if (!covers.is_array()) malformed("covers must be an array");
  for (const auto& c : covers) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      malformed("each cover must be a pair of labels");
    rel.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  return Poset::from_relations(std::move(labels), rel);
}

json poset_to_json(const Poset& p) {
  json covers = json::array();
  for (const auto& [x, y] : p.cover_pairs()) covers.push_back({p.label(x), p.label(y)});
  return {{"elements", p.labels()}, {"covers", covers}};
}

std::map<std::string, std::string> hom_map_from_json(const json& j) {
  const json& m = field(j, "map");
  if (!m.is_object()) malformed("map must be an object");
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : m.items()) {
    if (!v.is_string()) malformed("map values must be labels");
    out.emplace(k, v.get<std::string>());
  }
  return out;
}

SemigroupDescriptor semigroup_from_json(const json& j) {
  if (j.is_object() && j.contains("poset")) {
    SemigroupDescriptor d{poset_from_json(j.at("poset")), {}};
    if (j.contains("q")) d.q = string_array(j.at("q"), "q");
    return d;
  }
  return {poset_from_json(j), {}};
}

std::vector<std::string> split_labels(std::string_view text) {
  std::vector<std::string> out;
  auto trim = [](std::string_view s) {
    const auto b = s.find_first_not_of(" \t[]");
    if (b == std::string_view::npos) return std::string_view{};
    return s.substr(b, s.find_last_not_of(" \t[]") - b + 1);
  };
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto piece = trim(text.substr(0, comma));
    if (!piece.empty()) out.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::vector<Element> resolve_labels(const Poset& p, const std::vector<std::string>& labels) {
  std::vector<Element> out;
  for (const auto& l : labels) out.push_back(p.index(l));
  return out;
}

json labels_json(const Poset& p, std::span<const Element> xs) {
  json out = json::array();
  for (Element x : xs) out.push_back(p.label(x));
  return out;
}

json exponents_json(const Poset& p, const ExponentVector& nu) {
  check_domain(p, nu);
  json out = json::object();
  for (Element x = 0; x < p.size(); ++x) out[p.label(x)] = nu[x];
  return out;
}

json report_json(const Poset& p, std::span<const Element> q, const WitnessReport& r) {
  json out = {{"gorenstein", r.gorenstein}, {"failure", nullptr}, {"nu0", exponents_json(p, r.nu0)},
              {"witness", nullptr}};
  if (r.failure != ConditionFailure::none) {
    const PTilde pt = build_p_tilde(p, q);
    json f = {{"kind", to_string(r.failure)}, {"both", r.both_failed}};
    f["short_chain"] = labels_json(pt.extended, r.short_chain);
    f["long_chain"] = labels_json(pt.extended, r.long_chain);
    f["odd_pair"] = r.odd_pair ? json{pt.extended.label(r.odd_pair->first), pt.extended.label(r.odd_pair->second)}
                               : json(nullptr);
    if (r.odd_pair)
      f["odd_rank"] = pt.extended.interval_rank(r.odd_pair->first, r.odd_pair->second);
    out["failure"] = f;
  }
  if (r.witness) {
    out["witness"] = {{"case", to_string(r.witness_case)},
                      {"cover", {p.label(r.witness_pair.first), p.label(r.witness_pair.second)}},
                      {"nu", exponents_json(p, *r.witness)}};
  }
  return out;
}

json blocks_json(const BlockDecomposition& b) {
  return {{"u", b.u}, {"blocks", b.blocks}, {"gaps", b.gaps}, {"k", b.k()}};
}

std::string hasse_dot(const Poset& p, std::span<const Element> highlight, std::string_view name) {
  std::vector<bool> marked(p.size(), false);
  for (Element x : highlight) marked.at(x) = true;
  std::ostringstream os;
  os << "digraph " << dot_quote(name) << " {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (Element x = 0; x < p.size(); ++x) {
    os << "  n" << x << " [label=" << dot_quote(p.label(x));
    if (marked[x]) os << ", style=filled, fillcolor=black, fontcolor=white";
    os << "];\n";
  }
  for (const auto& [x, y] : p.cover_pairs()) os << "  n" << x << " -> n" << y << ";\n";
  os << "}\n";
  return os.str();
}

std::string pretty(const json& j) {
  std::ostringstream os;
  pretty_into(j, 0, os);
  return os.str();
}

}  // namespace hibi::io
