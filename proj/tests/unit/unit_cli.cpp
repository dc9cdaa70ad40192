#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Full shell command; stderr is folded into the captured output.
Run sh(const std::string& cmd) {
  Run r;
  FILE* p = popen((cmd + " 2>&1").c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t k = 0;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, k);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string cli() {
  const char* b = std::getenv("SPECALC_BIN");
  REQUIRE(b != nullptr);
  return b;
}

std::string fx(const std::string& name) {
  const char* d = std::getenv("SPECALC_FIXTURES");
  REQUIRE(d != nullptr);
  return std::string(d) + "/" + name;
}

bool has(const Run& r, const std::string& needle) {
  return r.out.find(needle) != std::string::npos;
}

json parse_out(const Run& r) {
  json j = json::parse(r.out, nullptr, false);
  REQUIRE(!j.is_discarded());
  return j;
}

json load_fixture(const std::string& name) {
  std::ifstream f(fx(name));
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return json::parse(ss.str());
}

}  // namespace

TEST_CASE("dims on a presentation") {
  Run r = sh(cli() + " dims " + fx("presentation_cm.json"));
  CHECK(r.code == 0);
  CHECK(has(r, "dim kQ = 10"));
  CHECK(has(r, "dim I = 1"));
  CHECK(has(r, "dim A = 9"));
  CHECK(has(r, "hereditary: false"));
  CHECK(has(r, "Ext^2 total = 1"));
  CHECK(has(r, "(row = source, col = target)"));

  Run j = sh(cli() + " dims --format json " + fx("presentation_cm.json"));
  CHECK(j.code == 0);
  json o = parse_out(j);
  CHECK(o.at("format") == 1);
  CHECK(o.at("verb") == "dims");
  CHECK(o.at("input") == "presentation");
  CHECK(o.at("dim_algebra") == 9);
  CHECK(o.at("dim_ideal") == 1);
  CHECK(o.at("hereditary") == false);
  CHECK(o.at("ext_totals") == json::array({4, 4, 1}));
  CHECK(o.at("pair_dims")[0][3] == 1);

  Run h = sh(cli() + " dims " + fx("presentation_diamond_tau0.json"));
  CHECK(h.code == 0);
  CHECK(has(h, "dim A = 10"));
  CHECK(has(h, "hereditary: true"));
  CHECK(has(h, "Ext^2 total = 0"));
}

TEST_CASE("dims on a species") {
  Run r = sh(cli() + " dims " + fx("species_cm.json"));
  CHECK(r.code == 0);
  CHECK(has(r, "delta total = 9"));
  CHECK(has(r, "bound total = 9"));
  CHECK(has(r, "exact: yes (path-length <= 2)"));

  json o = parse_out(sh(cli() + " dims --format json " + fx("species_cm.json")));
  CHECK(o.at("input") == "species");
  CHECK(o.at("delta_total") == 9);
  CHECK(o.at("ext_corrections").at("2") == 1);
  CHECK(o.at("exact") == true);
}

TEST_CASE("dims reads standard input") {
  Run r = sh(cli() + " dims - < " + fx("presentation_cm.json"));
  CHECK(r.code == 0);
  CHECK(has(r, "dim A = 9"));

  // the input argument defaults to stdin as well
  Run d = sh(cli() + " dims < " + fx("species_cm.json"));
  CHECK(d.code == 0);
  CHECK(has(d, "delta total = 9"));
}

TEST_CASE("ext tables") {
  json o = parse_out(sh(cli() + " ext --format json " + fx("presentation_cm.json")));
  CHECK(o.at("max_degree") == 2);
  CHECK(o.at("totals") == json::array({4, 4, 1}));
  CHECK(o.at("tables")[2][0][3] == 1);

  Run t = sh(cli() + " ext " + fx("presentation_diamond_tau0.json"));
  CHECK(t.code == 0);
  CHECK(has(t, "Ext^0 total = 4"));
  CHECK(has(t, "Ext^1 total = 4"));
  CHECK(has(t, "Ext^2 total = 0"));

  json lim = parse_out(sh(cli() + " ext --max-degree 1 --format json " + fx("presentation_cm.json")));
  CHECK(lim.at("totals") == json::array({4, 4}));
}

TEST_CASE("saturate flattens to the hereditary cover") {
  Run r = sh(cli() + " saturate " + fx("presentation_cm.json"));
  CHECK(r.code == 0);
  CHECK(has(r, "dim = 10"));
  CHECK(has(r, "s0_1_0: 0 -> 1"));
  CHECK(has(r, "relations: none"));

  json o = parse_out(sh(cli() + " saturate --format json " + fx("linear_a5_rad2.json")));
  CHECK(o.at("dim_algebra") == 15);
  CHECK(o.at("presentation").at("relations").empty());
}

TEST_CASE("species extraction verb") {
  json o = parse_out(sh(cli() + " species --format json " + fx("presentation_cm.json")));
  const json& s = o.at("species");
  CHECK(s.at("d") == json::array({1, 1, 1, 1}));
  CHECK(s.at("ext1")[0][1] == 1);
  CHECK(s.at("ext_higher").at("2")[0][3] == 1);

  // species input passes through unchanged
  json p = parse_out(sh(cli() + " species --format json " + fx("species_cm.json")));
  CHECK(p.at("species").at("d") == json::array({1, 2, 1}));
}

TEST_CASE("mtm tables and goldens") {
  Run r = sh(cli() + " mtm --field Z --n 9");
  CHECK(r.code == 0);
  CHECK(has(r, "dim B_9 = 35"));
  CHECK(has(r, "ev = 20"));
  CHECK(has(r, "odd = 15"));

  json got = parse_out(sh(cli() + " mtm --r1 1 --r2 0 --s 0 --n 9 --format json"));
  CHECK(got == load_fixture("mtm_z_n9.json"));

  json f = parse_out(sh(cli() + " mtm --r2 1 --n 7 --format json"));
  CHECK(f.at("dimB")[7] == 54);
  CHECK(!f.contains("ev"));

  Run bad = sh(cli() + " mtm --n 4 --r1 0 --r2 0 --s 0");
  CHECK(bad.code == 2);  // not a number field
  Run missing = sh(cli() + " mtm --field Z");
  CHECK(missing.code == 2);  // --n is required
}

TEST_CASE("one-motive dimensions") {
  Run k = sh(cli() + " one-motive " + fx("one_motive_kummer.json"));
  CHECK(k.code == 0);
  CHECK(has(k, "total      = 3"));
  CHECK(has(k, "species translation agrees"));

  Run b = sh(cli() + " one-motive " + fx("one_motive_baker_r3.json"));
  CHECK(b.code == 0);
  CHECK(has(b, "total      = 5"));

  json c = parse_out(sh(cli() + " one-motive --format json " + fx("one_motive_cm.json")));
  CHECK(c.at("total") == 9);
  CHECK(c.at("delta_inc3") == 1);
  CHECK(c.at("warnings").empty());
  CHECK(c.at("species").at("d") == json::array({1, 2, 1}));

  // inconsistent ext data demotes to a warning, not a failure
  Run warn = sh("printf '%s' '{\"has_lattice\":true,\"has_torus\":true,\"ext1_Q0_Q1\":5}' | " +
                cli() + " one-motive -");
  CHECK(warn.code == 0);
  CHECK(has(warn, "warning:"));
  CHECK(has(warn, "exceeds"));
}

TEST_CASE("check diagnostics") {
  for (const std::string name :
       {"presentation_cm.json", "presentation_diamond_tau0.json", "presentation_diamond_tau1.json",
        "presentation_diamond_tau2.json", "linear_a4.json", "linear_a5_rad2.json"}) {
    Run r = sh(cli() + " check " + fx(name));
    CHECK(r.code == 0);
    CHECK(has(r, "all checks passed"));
    CHECK(!has(r, "FAIL:"));
  }
  json o = parse_out(sh(cli() + " check --format json " + fx("presentation_cm.json")));
  CHECK(o.at("ok") == true);
  CHECK(o.at("checks").size() == 5);
}

TEST_CASE("input errors exit with code 2") {
  Run bad = sh("printf '%s' '{oops' | " + cli() + " dims -");
  CHECK(bad.code == 2);
  CHECK(has(bad, "error (ParseError)"));

  Run nofile = sh(cli() + " dims /nonexistent/input.json");
  CHECK(nofile.code == 2);

  Run short_rel = sh("printf '%s' '{\"quiver\":{\"vertices\":2,\"edges\":[{\"from\":0,\"to\":1,"
                     "\"label\":\"a\"}]},\"relations\":[\"a\"]}' | " +
                     cli() + " dims -");
  CHECK(short_rel.code == 2);
  CHECK(has(short_rel, "NonAdmissible"));

  Run cyclic = sh("printf '%s' '{\"vertices\":1,\"edges\":[{\"from\":0,\"to\":0,\"label\":\"a\"}]}' | " +
                  cli() + " dims -");
  CHECK(cyclic.code == 2);
  CHECK(has(cyclic, "CyclicQuiver"));

  Run capped = sh("SPECALC_MAX_DIM=3 " + cli() + " dims " + fx("presentation_cm.json"));
  CHECK(capped.code == 2);
  CHECK(has(capped, "LimitExceeded"));

  Run badcap = sh("SPECALC_MAX_DIM=zero " + cli() + " dims " + fx("presentation_cm.json"));
  CHECK(badcap.code == 2);

  Run badsub = sh(cli() + " frobnicate");
  CHECK(badsub.code == 2);
}

TEST_CASE("a generous cap is not in the way") {
  Run r = sh("SPECALC_MAX_DIM=100000 " + cli() + " dims " + fx("presentation_cm.json"));
  CHECK(r.code == 0);
  CHECK(has(r, "dim A = 9"));
}
