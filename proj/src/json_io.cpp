#include "specalc/json_io.hpp"

#include "specalc/errors.hpp"

namespace specalc {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& msg) { fail(ErrKind::ParseError, msg); }

const json& need(const json& j, const char* key) {
  if (!j.is_object()) bad("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

Count to_count(const json& v, const char* key) {
  if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return v.get<Count>();
}

Count opt_count(const json& j, const char* key, Count dflt) {
  if (!j.is_object() || !j.contains(key)) return dflt;
  return to_count(j.at(key), key);
}

bool opt_bool(const json& j, const char* key, bool dflt) {
  if (!j.is_object() || !j.contains(key)) return dflt;
  const json& v = j.at(key);
  if (!v.is_boolean()) bad(std::string("field '") + key + "' must be a boolean");
  return v.get<bool>();
}

std::vector<Count> count_list(const json& v, const char* key) {
  if (!v.is_array()) bad(std::string("field '") + key + "' must be an array");
  std::vector<Count> out;
  out.reserve(v.size());
  for (const json& x : v) out.push_back(to_count(x, key));
  return out;
}

std::vector<std::vector<Count>> count_matrix(const json& v, const char* key) {
  if (!v.is_array()) bad(std::string("field '") + key + "' must be a matrix");
  std::vector<std::vector<Count>> out;
  out.reserve(v.size());
  for (const json& row : v) out.push_back(count_list(row, key));
  return out;
}

}  // namespace

nlohmann::json parse_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) bad("input is not valid JSON");
  return j;
}

nlohmann::json quiver_to_json(const Quiver& q) {
  json edges = json::array();
  for (const Edge& e : q.edges) {
    json je{{"id", e.id}, {"from", e.from}, {"to", e.to}};
    if (!e.label.empty()) je["label"] = e.label;
    edges.push_back(std::move(je));
  }
  return json{{"vertices", q.n_vertices}, {"edges", std::move(edges)}};
}

Quiver quiver_from_json(const nlohmann::json& j) {
  Quiver q;
  q.n_vertices = static_cast<int>(to_count(need(j, "vertices"), "vertices"));
  const json& edges = need(j, "edges");
  if (!edges.is_array()) bad("field 'edges' must be an array");
  for (const json& je : edges) {
    Edge e;
    e.id = static_cast<int>(opt_count(je, "id", static_cast<Count>(q.edges.size())));
    e.from = static_cast<int>(to_count(need(je, "from"), "from"));
    e.to = static_cast<int>(to_count(need(je, "to"), "to"));
    if (je.contains("label")) {
      if (!je.at("label").is_string()) bad("edge label must be a string");
      e.label = je.at("label").get<std::string>();
    }
    q.edges.push_back(std::move(e));
  }
  try {
    q.validate();
  } catch (const Error& e) {
    bad(std::string("invalid quiver: ") + e.what());
  }
  return q;
}

nlohmann::json species_to_json(const SpeciesData& s) {
  json hi = json::object();
  for (const auto& [deg, mat] : s.ext_higher) hi[std::to_string(deg)] = mat;
  return json{{"d", s.d}, {"m", s.m}, {"ext1", s.ext1}, {"ext_higher", std::move(hi)}};
}

SpeciesData species_from_json(const nlohmann::json& j) {
  SpeciesData s;
  s.d = count_list(need(j, "d"), "d");
  s.m = count_list(need(j, "m"), "m");
  s.ext1 = count_matrix(need(j, "ext1"), "ext1");
  s.n_vertices = static_cast<int>(s.d.size());
  if (j.contains("ext_higher")) {
    const json& hi = j.at("ext_higher");
    if (!hi.is_object()) bad("field 'ext_higher' must map degree strings to matrices");
    for (auto it = hi.begin(); it != hi.end(); ++it) {
      int deg = 0;
      try {
        deg = std::stoi(it.key());
      } catch (const std::exception&) {
        bad("ext_higher degree '" + it.key() + "' is not a number");
      }
      if (deg < 2) bad("ext_higher degrees start at 2");
      s.ext_higher[deg] = count_matrix(it.value(), "ext_higher");
    }
  }
  try {
    s.validate();
  } catch (const Error& e) {
    bad(std::string("invalid species: ") + e.what());
  }
  return s;
}

nlohmann::json presentation_to_json(const AlgebraPresentation& p) {
  return json{{"quiver", quiver_to_json(p.quiver())}, {"relations", p.relation_strings()}};
}

AlgebraPresentation presentation_from_json(const nlohmann::json& j, std::size_t max_paths) {
  const bool wrapped = j.is_object() && j.contains("quiver");
  Quiver q = quiver_from_json(wrapped ? j.at("quiver") : j);
  std::vector<std::string> rels;
  if (wrapped && j.contains("relations")) {
    const json& jr = j.at("relations");
    if (!jr.is_array()) bad("field 'relations' must be an array of strings");
    for (const json& r : jr) {
      if (!r.is_string()) bad("relations must be strings");
      rels.push_back(r.get<std::string>());
    }
  }
  return AlgebraPresentation(q, rels, max_paths);
}

nlohmann::json one_motive_to_json(const OneMotiveInput& inp) {
  json parts = json::array();
  for (const AbelianPart& a : inp.abelian_parts)
    parts.push_back(json{{"g", a.g},
                         {"d", a.d},
                         {"ext1_Q0_A", a.ext1_Q0_A},
                         {"ext1_A_Q1", a.ext1_A_Q1}});
  return json{{"has_lattice", inp.has_lattice},
              {"has_torus", inp.has_torus},
              {"lattice_rank", inp.lattice_rank},
              {"torus_rank", inp.torus_rank},
              {"abelian_parts", std::move(parts)},
              {"ext1_Q0_Q1", inp.ext1_Q0_Q1},
              {"ext2_Q0_Q1", inp.ext2_Q0_Q1}};
}

OneMotiveInput one_motive_from_json(const nlohmann::json& j) {
  OneMotiveInput inp;
  inp.has_lattice = opt_bool(j, "has_lattice", false);
  inp.has_torus = opt_bool(j, "has_torus", false);
  inp.lattice_rank = opt_count(j, "lattice_rank", inp.has_lattice ? 1 : 0);
  inp.torus_rank = opt_count(j, "torus_rank", inp.has_torus ? 1 : 0);
  inp.ext1_Q0_Q1 = opt_count(j, "ext1_Q0_Q1", 0);
  inp.ext2_Q0_Q1 = opt_count(j, "ext2_Q0_Q1", 0);
  if (j.contains("abelian_parts")) {
    const json& parts = j.at("abelian_parts");
    if (!parts.is_array()) bad("field 'abelian_parts' must be an array");
    for (const json& jp : parts) {
      AbelianPart a;
      a.g = to_count(need(jp, "g"), "g");
      a.d = to_count(need(jp, "d"), "d");
      a.ext1_Q0_A = opt_count(jp, "ext1_Q0_A", 0);
      a.ext1_A_Q1 = opt_count(jp, "ext1_A_Q1", 0);
      inp.abelian_parts.push_back(a);
    }
  }
  inp.validate();
  return inp;
}

}  // namespace specalc
