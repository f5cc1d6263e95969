#include <doctest.h>

#include "monoendo/report.hpp"

using namespace monoendo;
using ojson = nlohmann::ordered_json;

namespace {

Config shipped(const std::string& name) { return load_config(std::string(MONOENDO_SOURCE_DIR) + "/configs/" + name); }

ojson run(const std::string& cmd, const Config& cfg, RunOptions opts = {}) { return run_command(cmd, cfg, opts); }

}  // namespace

TEST_CASE("config parsing") {
  const Config c = parse_config(R"({"cartan_type": "C2", "chi": ["1/2", "1/2"]})");
  CHECK(c.isogeny == "simply_connected");
  CHECK(c.chi.order() == 2);
  CHECK(c.sha256.size() == 64);
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");

  const Config l = parse_config(R"({"cartan_type": "A1", "lattice": [["1/2"]], "chi": ["1/2"]})");
  CHECK(l.isogeny == "custom");

  auto line_of = [](const std::string& text) {
    try {
      parse_config(text, "cfg");
    } catch (const ConfigError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("{\n \"cartan_type\": \"C2\",\n \"chi\": [\"1/2\", \"y\"]\n}") == 3);
  CHECK(line_of("{\n \"cartan_type\": \"C2\",\n \"chi\": [\"1/2\", \"0\"],\n}") == 4);
  CHECK(line_of("{\n \"cartan_type\": \"C2\",\n \"chi\": [\"1/2\", \"0\"],\n \"colour\": 1\n}") == 4);
  CHECK(line_of("{\n \"cartan_type\": \"C2\",\n \"isogeny\": \"so\",\n \"chi\": [\"0\", \"0\"]\n}") == 3);
  CHECK(line_of("{\n \"cartan_type\": \"C2\",\n \"chi\": [\"0\"]\n}") == 3);
  CHECK(line_of("{\"cartan_type\": \"C2\", \"chi\": [\"0\", \"0\"], \"twist\": {\"kind\": \"x\"}}") == 1);

  CHECK(parse_word("s1,s2, 1") == std::vector<int>{0, 1, 0});
  CHECK_THROWS_AS(parse_word("s0"), InputError);
  CHECK_THROWS_AS(parse_word("a"), InputError);
}

TEST_CASE("analyze reports") {
  // Sp_2n at (1/2,...,1/2): endoscopic SO_2n
  CHECK(run("analyze", shipped("sp4_half_half.json"))["endoscopic"]["H"] == "A1xA1");
  CHECK(run("analyze", shipped("sp6_half.json"))["endoscopic"]["H"] == "A3");
  const ojson sl3 = run("analyze", shipped("sl3_split.json"));
  CHECK(sl3["endoscopic"]["H"] == "torus");
  CHECK(sl3["omega"]["structure"] == "Z/3");
  const ojson a2 = run("analyze", shipped("a2_trivial.json"));
  CHECK(a2["endoscopic"]["H"] == "A2");
  CHECK(a2["blocks"].size() == 1);
  CHECK(a2["blocks"][0]["size"] == 6);
  CHECK(a2["schema"] == kReportSchema);
  CHECK(a2["version"] == MONOENDO_VERSION);
  CHECK(a2["config_sha256"] == shipped("a2_trivial.json").sha256);
}

TEST_CASE("kl report carries the S4 coefficient 1 + q") {
  const ojson r = run("kl", shipped("a3_trivial.json"));
  const ojson one_plus_q = ojson::array({ojson::array({0, 1}), ojson::array({1, 1})});
  int hits = 0;
  for (const auto& row : r["canonical_basis"])
    for (const auto& t : row["terms"])
      if (t["P"] == one_plus_q) {
        ++hits;
        // smallest such pair: x = s2, w = s2 s1 s3 s2
        if (t["y"] == ojson::array({2})) CHECK(row["w"].size() == 4);
      }
  CHECK(hits == 6);
  RunOptions o;
  o.depth = 1;
  CHECK(run("kl", shipped("a3_trivial.json"), o)["canonical_basis"].size() == 4);
}

TEST_CASE("count, cocycle, cells and bsl reports") {
  CHECK(run("count", shipped("sl3_split.json"))["count"] == 9);
  CHECK(run("count", shipped("su3.json"))["count"] == 9);
  RunOptions q2;
  q2.q = 2;
  CHECK(run("count", shipped("sl3_split.json"), q2)["count"] == 1);
  CHECK_THROWS_AS(run("count", shipped("sp4_half_zero.json")), RefusalError);
  RunOptions cell0;
  cell0.cell = 0;
  const ojson b = run("count", shipped("sp4_half_zero.json"), cell0);
  CHECK(b["count"].is_null());
  CHECK(b["report"]["orbits"].size() >= 1);

  const ojson c = run("cocycle", shipped("sp4_half_half.json"));
  CHECK(c["q"] == 5);
  CHECK(!c["trivialization"].is_null());
  CHECK_THROWS_AS(run("cocycle", shipped("a2_trivial.json")), InputError);

  const ojson cells = run("cells", shipped("sp4_half_half.json"));
  CHECK(cells["endoscopic_type"] == "A1xA1");
  CHECK(cells["cells"].size() == 4);
  CHECK(cells["extended_cells"].size() == 3);

  RunOptions w;
  w.word = parse_word("s2,s1,s2");
  const ojson bsl = run("bsl", shipped("sp4_half_zero.json"), w);
  CHECK(bsl["rewrite"]["ell_beta"] == 1);
  CHECK(bsl["character"].size() == 1);
  CHECK_THROWS_AS(run("bsl", shipped("sp4_half_zero.json")), InputError);
}

TEST_CASE("reports are deterministic") {
  for (const char* name : {"sp4_half_zero.json", "sl3_split.json"})
    for (const char* cmd : {"analyze", "kl", "cells", "count"}) {
      const Config cfg = shipped(name);
      std::string a, b;
      try {
        a = render(run(cmd, cfg));
        b = render(run(cmd, shipped(name)));
      } catch (const RefusalError&) {
        continue;
      }
      CHECK(a == b);
    }
}
