#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "specalc/dimforms.hpp"
#include "specalc/errors.hpp"
#include "specalc/json_io.hpp"
#include "specalc/mixedtate.hpp"

using nlohmann::json;
using namespace specalc;

namespace {

std::size_t max_paths_limit() {
  const char* env = std::getenv("SPECALC_MAX_DIM");
  if (!env || !*env) return kDefaultMaxPaths;
  char* end = nullptr;
  long long v = std::strtoll(env, &end, 10);
  if (end == env || *end != '\0' || v <= 0)
    fail(ErrKind::InconsistentInput, "SPECALC_MAX_DIM must be a positive integer");
  return static_cast<std::size_t>(v);
}

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) fail(ErrKind::ParseError, "cannot open input file '" + path + "'");
    ss << f.rdbuf();
  }
  return ss.str();
}

void emit(const json& out, const std::string& format, const std::string& table) {
  if (format == "json")
    std::cout << out.dump(2) << "\n";
  else
    std::cout << table;
}

void append_matrix(std::ostream& os, const std::string& title,
                   const std::vector<std::vector<Count>>& m) {
  os << title << " (row = source, col = target):\n";
  for (size_t i = 0; i < m.size(); ++i) {
    os << "  [" << i << "]";
    for (Count c : m[i]) os << " " << c;
    os << "\n";
  }
}

void run_dims(const std::string& input, const std::string& format) {
  json j = parse_json_text(read_input(input));
  json out{{"format", 1}, {"verb", "dims"}};
  std::ostringstream tab;
  if (json_is_species(j)) {
    SpeciesData s = species_from_json(j);
    DimReport r = bounded_dim(s, max_paths_limit());
    out["input"] = "species";
    out["delta_total"] = r.delta_total;
    out["bound_total"] = r.bound_total;
    out["exact"] = r.exact;
    out["reason"] = r.exactness_reason;
    out["delta_pairs"] = r.delta_pairs;
    json corr = json::object();
    for (const auto& [deg, c] : r.ext_corrections) corr[std::to_string(deg)] = c;
    out["ext_corrections"] = std::move(corr);
    tab << "delta total = " << r.delta_total << "\n";
    tab << "bound total = " << r.bound_total << "\n";
    tab << "exact: " << (r.exact ? "yes" : "no") << " (" << r.exactness_reason << ")\n";
    append_matrix(tab, "delta pairs", r.delta_pairs);
  } else {
    AlgebraPresentation p = presentation_from_json(j, max_paths_limit());
    ExtTable t = bongartz_ext_pairwise(p);
    const bool hered = is_hereditary(p);
    out["input"] = "presentation";
    out["dim_path_algebra"] = p.dim_path_algebra();
    out["dim_ideal"] = p.dim_ideal();
    out["dim_algebra"] = p.dim_algebra();
    out["hereditary"] = hered;
    out["ext_totals"] = t.totals;
    out["pair_dims"] = p.algebra_pair_dims();
    tab << "dim kQ = " << p.dim_path_algebra() << "\n";
    tab << "dim I = " << p.dim_ideal() << "\n";
    tab << "dim A = " << p.dim_algebra() << "\n";
    tab << "hereditary: " << (hered ? "true" : "false") << "\n";
    const Count ext2 = t.max_degree >= 2 ? t.totals[2] : 0;
    tab << "Ext^2 total = " << ext2 << "\n";
    for (int k = 3; k <= t.max_degree; ++k)
      if (t.totals[static_cast<size_t>(k)] != 0)
        tab << "Ext^" << k << " total = " << t.totals[static_cast<size_t>(k)] << "\n";
    append_matrix(tab, "pair dims of A", p.algebra_pair_dims());
  }
  emit(out, format, tab.str());
}

void run_ext(const std::string& input, const std::string& format, int max_degree) {
  AlgebraPresentation p =
      presentation_from_json(parse_json_text(read_input(input)), max_paths_limit());
  ExtTable t = bongartz_ext_pairwise(p, max_degree);
  json out{{"format", 1},
           {"verb", "ext"},
           {"max_degree", t.max_degree},
           {"totals", t.totals},
           {"tables", t.entries}};
  std::ostringstream tab;
  for (int k = 0; k <= t.max_degree; ++k) {
    tab << "Ext^" << k << " total = " << t.totals[static_cast<size_t>(k)] << "\n";
    append_matrix(tab, "Ext^" + std::to_string(k), t.entries[static_cast<size_t>(k)]);
  }
  emit(out, format, tab.str());
}

void run_saturate(const std::string& input, const std::string& format) {
  AlgebraPresentation p =
      presentation_from_json(parse_json_text(read_input(input)), max_paths_limit());
  AlgebraPresentation sat = saturate(p);
  json out{{"format", 1},
           {"verb", "saturate"},
           {"presentation", presentation_to_json(sat)},
           {"dim_algebra", sat.dim_algebra()}};
  std::ostringstream tab;
  tab << "vertices = " << sat.quiver().n_vertices << "\n";
  tab << "edges:\n";
  for (const Edge& e : sat.quiver().edges)
    tab << "  " << e.label << ": " << e.from << " -> " << e.to << "\n";
  tab << "relations: none\n";
  tab << "dim = " << sat.dim_algebra() << "\n";
  emit(out, format, tab.str());
}

void run_species(const std::string& input, const std::string& format) {
  json j = parse_json_text(read_input(input));
  SpeciesData s = json_is_species(j) ? species_from_json(j)
                                     : extract_species(presentation_from_json(j, max_paths_limit()));
  json out{{"format", 1}, {"verb", "species"}, {"species", species_to_json(s)}};
  std::ostringstream tab;
  tab << "vertices = " << s.n_vertices << "\n";
  tab << "d =";
  for (Count x : s.d) tab << " " << x;
  tab << "\nm =";
  for (Count x : s.m) tab << " " << x;
  tab << "\n";
  append_matrix(tab, "ext1", s.ext1);
  for (const auto& [deg, mat] : s.ext_higher) append_matrix(tab, "ext^" + std::to_string(deg), mat);
  emit(out, format, tab.str());
}

void run_mtm(const std::string& field, Count r1, Count r2, Count s, int n,
             const std::string& format) {
  FieldParams fp;
  if (!field.empty()) {
    if (field != "Z" && field != "z")
      fail(ErrKind::InconsistentInput, "--field only knows the shortcut Z");
    fp = FieldParams(1, 0, 0);
  } else {
    fp = FieldParams(r1, r2, s);
  }
  if (n < 0) fail(ErrKind::InconsistentInput, "--n must be nonnegative");
  MtmReport r = mtm_report(fp, n);
  json out{{"format", 1}, {"verb", "mtm"},    {"r1", fp.r1},   {"r2", fp.r2}, {"s", fp.s},
           {"n", n},      {"e", r.e},         {"p", r.p},      {"dimB", r.dimB}};
  if (fp.is_Z()) {
    out["ev"] = r.ev;
    out["odd"] = r.odd;
    out["d"] = r.d;
  }
  std::ostringstream tab;
  tab << "field: r1=" << fp.r1 << " r2=" << fp.r2 << " s=" << fp.s << (fp.is_Z() ? " (Z)" : "")
      << "\n";
  tab << std::setw(4) << "m" << std::setw(8) << "e_m" << std::setw(8) << "p_m" << std::setw(10)
      << "dim B_m";
  if (fp.is_Z()) tab << std::setw(8) << "ev" << std::setw(8) << "odd" << std::setw(8) << "d_m";
  tab << "\n";
  for (int m = 0; m <= n; ++m) {
    tab << std::setw(4) << m << std::setw(8) << r.e[static_cast<size_t>(m)] << std::setw(8)
        << r.p[static_cast<size_t>(m)] << std::setw(10) << r.dimB[static_cast<size_t>(m)];
    if (fp.is_Z())
      tab << std::setw(8) << r.ev[static_cast<size_t>(m)] << std::setw(8)
          << r.odd[static_cast<size_t>(m)] << std::setw(8) << r.d[static_cast<size_t>(m)];
    tab << "\n";
  }
  tab << "dim B_" << n << " = " << r.dimB[static_cast<size_t>(n)] << "\n";
  if (fp.is_Z()) {
    tab << "ev = " << r.ev[static_cast<size_t>(n)] << "\n";
    tab << "odd = " << r.odd[static_cast<size_t>(n)] << "\n";
  }
  emit(out, format, tab.str());
}

void run_one_motive(const std::string& input, const std::string& format) {
  OneMotiveInput inp = one_motive_from_json(parse_json_text(read_input(input)));
  PeriodDimReport r = one_motive_dims(inp);
  SpeciesData s = one_motive_to_species(inp);  // asserts total agreement
  json out{{"format", 1},          {"verb", "one-motive"},
           {"delta_alg", r.delta_alg},   {"delta_2", r.delta_2},
           {"delta_Ta", r.delta_Ta},     {"delta_3", r.delta_3},
           {"delta_inc2", r.delta_inc2}, {"delta_inc3", r.delta_inc3},
           {"total", r.total},           {"warnings", r.warnings},
           {"species", species_to_json(s)}};
  std::ostringstream tab;
  tab << "delta_alg  = " << r.delta_alg << "\n";
  tab << "delta_2    = " << r.delta_2 << "\n";
  tab << "delta_Ta   = " << r.delta_Ta << "\n";
  tab << "delta_3    = " << r.delta_3 << "\n";
  tab << "delta_inc2 = " << r.delta_inc2 << "\n";
  tab << "delta_inc3 = " << r.delta_inc3 << "\n";
  tab << "total      = " << r.total << "\n";
  for (const std::string& w : r.warnings) tab << "warning: " << w << "\n";
  tab << "species translation agrees: total " << r.total << "\n";
  emit(out, format, tab.str());
}

void run_check(const std::string& input, const std::string& format) {
  AlgebraPresentation p =
      presentation_from_json(parse_json_text(read_input(input)), max_paths_limit());
  json checks = json::array();
  bool all_ok = true;
  auto record = [&](const std::string& name, bool ok, const std::string& detail) {
    checks.push_back(json{{"name", name}, {"ok", ok}, {"detail", detail}});
    all_ok = all_ok && ok;
  };

  record("acyclic", is_acyclic(p.quiver()), "vertex count " + std::to_string(p.quiver().n_vertices));
  record("admissible", radical_power(p.basis(), 2).contains(p.ideal()),
         "ideal inside rad^2, " + std::to_string(p.relations().size()) + " relation(s)");

  Count pair_sum = 0;
  for (const auto& row : p.algebra_pair_dims())
    for (Count c : row) pair_sum += c;
  record("dim A = dim kQ - dim I", p.dim_algebra() == p.dim_path_algebra() - p.dim_ideal() &&
                                       pair_sum == p.dim_algebra(),
         "dim A = " + std::to_string(p.dim_algebra()));

  ExtTable t = bongartz_ext_pairwise(p);
  bool ext_ok = true;
  std::string ext_detail = "degrees 0.." + std::to_string(t.max_degree);
  for (int i = 0; i < p.quiver().n_vertices && ext_ok; ++i) {
    auto oracle = resolution_ext_oracle(p, i, t.max_degree);
    for (int k = 0; k <= t.max_degree && ext_ok; ++k) {
      for (int jv = 0; jv < p.quiver().n_vertices; ++jv) {
        if (t.entries[static_cast<size_t>(k)][static_cast<size_t>(i)][static_cast<size_t>(jv)] !=
            oracle[static_cast<size_t>(k)][static_cast<size_t>(jv)]) {
          ext_ok = false;
          ext_detail = "mismatch at degree " + std::to_string(k) + ", pair (" + std::to_string(i) +
                       ", " + std::to_string(jv) + ")";
          break;
        }
      }
    }
  }
  record("Ext formulas match resolution", ext_ok, ext_detail);
  record("hereditary", true, p.ideal().is_zero() ? "true" : "false");

  json out{{"format", 1}, {"verb", "check"}, {"ok", all_ok}, {"checks", checks}};
  std::ostringstream tab;
  for (const json& c : checks)
    tab << (c.at("ok").get<bool>() ? "ok:   " : "FAIL: ") << c.at("name").get<std::string>()
        << " (" << c.at("detail").get<std::string>() << ")\n";
  tab << (all_ok ? "all checks passed" : "some checks failed") << "\n";
  emit(out, format, tab.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact dimension calculator for path algebras, species and period spaces"};
  app.require_subcommand(1);

  std::string format = "table";
  std::string input = "-";
  int max_degree = -1;
  std::string field;
  Count r1 = 0, r2 = 0, s = 0;
  int n = -1;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json"}));
    if (with_input)
      sub->add_option("input", input, "input JSON file, or - for standard input");
  };

  CLI::App* dims = app.add_subcommand("dims", "dimension report for a presentation or species");
  add_common(dims, true);
  CLI::App* ext = app.add_subcommand("ext", "Ext dimension tables of a presentation");
  add_common(ext, true);
  ext->add_option("--max-degree", max_degree, "highest degree (default: longest path length)");
  CLI::App* sat = app.add_subcommand("saturate", "relation-free presentation of the species");
  add_common(sat, true);
  CLI::App* spec = app.add_subcommand("species", "species extracted from a presentation");
  add_common(spec, true);
  CLI::App* mtm = app.add_subcommand("mtm", "mixed Tate dimension tables");
  add_common(mtm, false);
  mtm->add_option("--r1", r1, "real places");
  mtm->add_option("--r2", r2, "complex places");
  mtm->add_option("--s", s, "inverted primes");
  mtm->add_option("--field", field, "field shortcut: Z");
  mtm->add_option("--n", n, "weight cutoff")->required();
  CLI::App* onem = app.add_subcommand("one-motive", "period dimensions of a 1-motive");
  add_common(onem, true);
  CLI::App* check = app.add_subcommand("check", "consistency diagnostics for a presentation");
  add_common(check, true);

  try {
    app.parse(argc, argv);
    if (dims->parsed()) run_dims(input, format);
    if (ext->parsed()) run_ext(input, format, max_degree);
    if (sat->parsed()) run_saturate(input, format);
    if (spec->parsed()) run_species(input, format);
    if (mtm->parsed()) run_mtm(field, r1, r2, s, n, format);
    if (onem->parsed()) run_one_motive(input, format);
    if (check->parsed()) run_check(input, format);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error (" << err_kind_name(e.kind()) << "): " << e.msg() << "\n";
    return e.is_input_error() ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
