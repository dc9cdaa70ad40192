#include <pybind11/pybind11.h>

#include "specalc/dimforms.hpp"
#include "specalc/errors.hpp"
#include "specalc/json_io.hpp"
#include "specalc/mixedtate.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace specalc;

namespace {

py::object to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float:
      return py::float_(j.get<double>());
    case json::value_t::string:
      return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list l;
      for (const json& x : j) l.append(to_py(x));
      return l;
    }
    case json::value_t::object: {
      py::dict d;
      for (auto it = j.begin(); it != j.end(); ++it) d[py::str(it.key())] = to_py(it.value());
      return d;
    }
    default:
      return py::none();
  }
}

template <typename F>
py::object guarded(F&& f) {
  try {
    return to_py(f());
  } catch (const Error& e) {
    if (e.is_input_error())
      throw py::value_error(std::string(err_kind_name(e.kind())) + ": " + e.what());
    throw std::runtime_error(std::string(err_kind_name(e.kind())) + ": " + e.what());
  }
}

json dims_json(const std::string& text) {
  json j = parse_json_text(text);
  if (json_is_species(j)) {
    SpeciesData s = species_from_json(j);
    DimReport r = bounded_dim(s);
    json corr = json::object();
    for (const auto& [deg, c] : r.ext_corrections) corr[std::to_string(deg)] = c;
    return json{{"input", "species"},       {"delta_total", r.delta_total},
                {"bound_total", r.bound_total}, {"exact", r.exact},
                {"reason", r.exactness_reason}, {"delta_pairs", r.delta_pairs},
                {"ext_corrections", corr}};
  }
  AlgebraPresentation p = presentation_from_json(j);
  ExtTable t = bongartz_ext_pairwise(p);
  return json{{"input", "presentation"},
              {"dim_path_algebra", p.dim_path_algebra()},
              {"dim_ideal", p.dim_ideal()},
              {"dim_algebra", p.dim_algebra()},
              {"hereditary", is_hereditary(p)},
              {"ext_totals", t.totals},
              {"pair_dims", p.algebra_pair_dims()}};
}

json ext_json(const std::string& text, int max_degree) {
  AlgebraPresentation p = presentation_from_json(parse_json_text(text));
  ExtTable t = bongartz_ext_pairwise(p, max_degree);
  return json{{"max_degree", t.max_degree}, {"totals", t.totals}, {"tables", t.entries}};
}

json saturate_json(const std::string& text) {
  AlgebraPresentation sat = saturate(presentation_from_json(parse_json_text(text)));
  return json{{"presentation", presentation_to_json(sat)}, {"dim_algebra", sat.dim_algebra()}};
}

json species_json(const std::string& text) {
  json j = parse_json_text(text);
  SpeciesData s =
      json_is_species(j) ? species_from_json(j) : extract_species(presentation_from_json(j));
  return species_to_json(s);
}

json one_motive_json(const std::string& text) {
  OneMotiveInput inp = one_motive_from_json(parse_json_text(text));
  PeriodDimReport r = one_motive_dims(inp);
  SpeciesData s = one_motive_to_species(inp);
  return json{{"delta_alg", r.delta_alg},     {"delta_2", r.delta_2},
              {"delta_Ta", r.delta_Ta},       {"delta_3", r.delta_3},
              {"delta_inc2", r.delta_inc2},   {"delta_inc3", r.delta_inc3},
              {"total", r.total},             {"warnings", r.warnings},
              {"species", species_to_json(s)}};
}

json mtm_json(Count r1, Count r2, Count s, int n) {
  MtmReport r = mtm_report(FieldParams(r1, r2, s), n);
  json out{{"r1", r.fp.r1}, {"r2", r.fp.r2}, {"s", r.fp.s}, {"n", n},
           {"e", r.e},      {"p", r.p},      {"dimB", r.dimB}};
  if (r.fp.is_Z()) {
    out["ev"] = r.ev;
    out["odd"] = r.odd;
    out["d"] = r.d;
  }
  return out;
}

json check_json(const std::string& text) {
  AlgebraPresentation p = presentation_from_json(parse_json_text(text));
  ExtTable t = bongartz_ext_pairwise(p);
  bool ext_ok = true;
  for (int i = 0; i < p.quiver().n_vertices && ext_ok; ++i) {
    auto oracle = resolution_ext_oracle(p, i, t.max_degree);
    for (int k = 0; k <= t.max_degree && ext_ok; ++k)
      for (int jv = 0; jv < p.quiver().n_vertices; ++jv)
        if (t.entries[static_cast<size_t>(k)][static_cast<size_t>(i)][static_cast<size_t>(jv)] !=
            oracle[static_cast<size_t>(k)][static_cast<size_t>(jv)]) {
          ext_ok = false;
          break;
        }
  }
  const bool admissible = radical_power(p.basis(), 2).contains(p.ideal());
  const bool acyclic = is_acyclic(p.quiver());
  return json{{"ok", ext_ok && admissible && acyclic},
              {"acyclic", acyclic},
              {"admissible", admissible},
              {"ext_formulas_match", ext_ok},
              {"hereditary", p.ideal().is_zero()},
              {"dim_algebra", p.dim_algebra()}};
}

}  // namespace

PYBIND11_MODULE(specalc_py, m) {
  m.doc() = "exact dimension calculators for path algebras, species and period spaces";
  m.def("dims", [](const std::string& text) { return guarded([&] { return dims_json(text); }); },
        py::arg("text"), "dimension report for a presentation or species (JSON text in)");
  m.def("ext",
        [](const std::string& text, int max_degree) {
          return guarded([&] { return ext_json(text, max_degree); });
        },
        py::arg("text"), py::arg("max_degree") = -1, "Ext dimension tables");
  m.def("saturate",
        [](const std::string& text) { return guarded([&] { return saturate_json(text); }); },
        py::arg("text"), "relation-free presentation of the extracted species");
  m.def("species",
        [](const std::string& text) { return guarded([&] { return species_json(text); }); },
        py::arg("text"), "species of a presentation, or a validated species echo");
  m.def("one_motive",
        [](const std::string& text) { return guarded([&] { return one_motive_json(text); }); },
        py::arg("text"), "period dimensions of a 1-motive");
  m.def("mtm",
        [](Count r1, Count r2, Count s, int n) {
          return guarded([&] { return mtm_json(r1, r2, s, n); });
        },
        py::arg("r1"), py::arg("r2"), py::arg("s"), py::arg("n"), "mixed Tate dimension tables");
  m.def("check", [](const std::string& text) { return guarded([&] { return check_json(text); }); },
        py::arg("text"), "consistency diagnostics for a presentation");
}
