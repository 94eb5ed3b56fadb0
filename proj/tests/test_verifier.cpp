#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "univalence/verifier.hpp"

using namespace univalence;

namespace {

RunConfig small_bounds_config() {
  RunConfig cfg;
  cfg.command = "bounds-verify";
  cfg.v = {0.5, 1.5};
  cfg.n = {0, 1};
  cfg.lambda = std::vector<double>{0.5};
  cfg.gamma = std::vector<double>{0.0};
  cfg.grid = DiskGrid{8, 16, 0.999};
  return cfg;
}

std::string csv(const Report& r) {
  std::ostringstream out;
  write_csv(r, out);
  return out.str();
}

}  // namespace

TEST_CASE("real lists and ranges") {
  CHECK(parse_real_list("").empty());
  CHECK(parse_real_list("1.5") == std::vector<double>{1.5});
  CHECK(parse_real_list("-0.5, 2") == std::vector<double>{-0.5, 2.0});
  CHECK(parse_real_list("0:1:0.25") == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK(parse_real_list("0:0.3:0.1") == std::vector<double>{0.0, 0.1, 0.2, 0.3});
  CHECK(parse_real_list("-1:0:0.5,3") == std::vector<double>{-1.0, -0.5, 0.0, 3.0});
  CHECK_THROWS_AS(parse_real_list("0:1"), ConfigError);
  CHECK_THROWS_AS(parse_real_list("0:1:0"), ConfigError);
  CHECK_THROWS_AS(parse_real_list("abc"), ConfigError);
}

TEST_CASE("complex literals") {
  using c = std::complex<double>;
  CHECK(parse_complex_list("1") == std::vector<c>{{1.0, 0.0}});
  CHECK(parse_complex_list("-0.5") == std::vector<c>{{-0.5, 0.0}});
  CHECK(parse_complex_list("2i,-i,i") == std::vector<c>{{0.0, 2.0}, {0.0, -1.0}, {0.0, 1.0}});
  CHECK(parse_complex_list("1+2i, 1.5-0.5i") == std::vector<c>{{1.0, 2.0}, {1.5, -0.5}});
  CHECK(parse_complex_list("1e-3-2e+1i") == std::vector<c>{{1e-3, -20.0}});
  CHECK(parse_complex_list("0:1:0.5").size() == 3u);
  CHECK_THROWS_AS(parse_complex_list("1+2j"), ConfigError);
}

TEST_CASE("config text") {
  const auto kv = parse_config_text("# sweep\nn = 0\nn = 1  # again\n\nlambda=0.5\n");
  CHECK(kv.count("n") == 2u);
  CHECK(kv.find("lambda")->second == "0.5");
  CHECK_THROWS_AS(parse_config_text("just words\n"), ConfigError);
}

TEST_CASE("set_option") {
  RunConfig cfg;
  set_option(cfg, "n", {"0", "1:2:1"});
  CHECK(*cfg.n == std::vector<int>{0, 1, 2});
  set_option(cfg, "max-radius", {"0.9"});
  CHECK(cfg.grid->max_radius == 0.9);
  CHECK(cfg.grid->radii == 64);
  CHECK_THROWS_AS(set_option(cfg, "max-radius", {"1"}), ConfigError);
  CHECK_THROWS_AS(set_option(cfg, "n", {"0.5"}), ConfigError);
  CHECK_THROWS_AS(set_option(cfg, "which", {"K"}), ConfigError);
  CHECK_THROWS_AS(set_option(cfg, "colour", {"red"}), ConfigError);
  CHECK_THROWS_AS(set_option(cfg, "seed", {"1", "2"}), ConfigError);
  for (const auto& key : option_keys()) CHECK_FALSE(key.empty());
}

TEST_CASE("constants report") {
  const Report r = run_constants();
  CHECK(r.rows.size() == 5u);
  CHECK(r.all_passed());
  CHECK(r.rows[0].quantity.find("28/233") != std::string::npos);
}

TEST_CASE("empty sweep gives a header-only CSV") {
  RunConfig cfg = small_bounds_config();
  cfg.v = std::vector<double>{};
  const Report r = run_bounds_verify(cfg);
  CHECK(r.rows.empty());
  CHECK(r.all_passed());
  CHECK(csv(r) == "v,b,d_re,d_im,lambda,gamma,n,m_index,quantity,bound,attained,margin,pass\n");
}

TEST_CASE("inadmissible tuples become skipped rows with a reason") {
  RunConfig cfg = small_bounds_config();
  cfg.v = std::vector<double>{0.5};
  cfg.n = std::vector<int>{0};
  cfg.d = std::vector<std::complex<double>>{{40.0, 0.0}};
  const Report r = run_bounds_verify(cfg);
  REQUIRE(r.rows.size() == 1u);
  CHECK(r.rows[0].status == RowStatus::Skip);
  CHECK(r.rows[0].quantity.find("violated") != std::string::npos);
  CHECK(r.all_passed());
}

TEST_CASE("bounds-verify at n = 0 passes every row") {
  RunConfig cfg = small_bounds_config();
  cfg.n = std::vector<int>{0};
  const Report r = run_bounds_verify(cfg);
  CHECK(r.rows.size() == 14u);
  CHECK(r.all_passed());
}

TEST_CASE("CSV round trip and determinism") {
  const RunConfig cfg = small_bounds_config();
  const Report a = run_bounds_verify(cfg);
  const Report b = run_bounds_verify(cfg);
  CHECK(csv(a) == csv(b));
  std::istringstream in(csv(a));
  CHECK(parse_csv(in) == a);

  Report odd{{"x"}, {{{1.0}, "has, comma and \"quotes\"", 1.0, INFINITY, -INFINITY, RowStatus::Fail},
                     {{2.0}, "skipped", std::nullopt, std::nullopt, std::nullopt, RowStatus::Skip}}};
  std::istringstream in2(csv(odd));
  CHECK(parse_csv(in2) == odd);
}

TEST_CASE("rows are sorted by parameter tuple") {
  const Report r = run_bounds_verify(small_bounds_config());
  for (std::size_t i = 1; i < r.rows.size(); ++i) CHECK_FALSE(r.rows[i].params < r.rows[i - 1].params);
}

TEST_CASE("JSON output mirrors the rows") {
  const Report r = run_constants();
  std::ostringstream out;
  write_json(r, out);
  const auto j = nlohmann::json::parse(out.str());
  REQUIRE(j.size() == r.rows.size());
  CHECK(j[0]["pass"] == "true");
  CHECK(j[0]["k"] == 2.5);
}

TEST_CASE("G scan threshold increases with k") {
  RunConfig cfg;
  cfg.command = "scan";
  cfg.which = "G";
  cfg.v = parse_real_list("-0.5:4:0.5");
  const Report r = run_scan(cfg);
  REQUIRE(r.rows.size() == 10u);
  for (std::size_t i = 1; i < r.rows.size(); ++i) CHECK(*r.rows[i].bound > *r.rows[i - 1].bound);
  CHECK(*r.rows[2].bound == doctest::Approx(1.8959).epsilon(1e-4));  // v = 1/2
}

TEST_CASE("H scan margin decreases linearly in |c|") {
  RunConfig cfg;
  cfg.command = "scan";
  cfg.which = "H";
  cfg.v = std::vector<double>{1.5};
  cfg.c = parse_complex_list("0:1:0.25");
  const Report r = run_scan(cfg);
  REQUIRE(r.rows.size() == 5u);
  for (std::size_t i = 1; i < r.rows.size(); ++i) {
    CHECK(*r.rows[i - 1].margin - *r.rows[i].margin == doctest::Approx(0.25).epsilon(1e-12));
  }
}

TEST_CASE("scan records n = 0 and n = 1 separately") {
  RunConfig cfg;
  cfg.command = "scan";
  cfg.which = "G";
  cfg.v = std::vector<double>{1.5};
  cfg.lambda = std::vector<double>{1.0};
  cfg.n = {0, 1};
  const Report r = run_scan(cfg);
  REQUIRE(r.rows.size() == 2u);
  CHECK(*r.rows[0].bound != *r.rows[1].bound);
}

TEST_CASE("criteria command") {
  RunConfig cfg;
  cfg.command = "criteria";
  cfg.which = "H";
  cfg.v = {1.5, 2.5};
  cfg.mu = {{1.0, 0.0}, {2.0, 0.0}};
  const Report r = run_command(cfg);
  REQUIRE(r.rows.size() == 1u);
  CHECK(*r.rows[0].attained == doctest::Approx(28.0 / 233.0 * 1.5).epsilon(1e-13));
  cfg.mu = {{1.0, 0.0}, {2.0, 0.0}, {3.0, 0.0}};
  CHECK_THROWS_AS(run_command(cfg), ConfigError);

  cfg.which = "direct";
  cfg.v = std::vector<double>{1.5};
  cfg.grid = DiskGrid{8, 16, 0.999};
  CHECK(run_command(cfg).rows.size() == 4u);
}

TEST_CASE("injectivity command") {
  RunConfig cfg;
  cfg.command = "injectivity";
  cfg.which = "G";
  cfg.v = std::vector<double>{0.5};
  cfg.grid = DiskGrid{6, 12, 0.99};
  const Report r = run_command(cfg);
  REQUIRE(r.rows.size() == 1u);
  CHECK(r.rows[0].status == RowStatus::Pass);
}

TEST_CASE("format_number is shortest round-trip") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(INFINITY) == "inf");
  CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
}
