#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "staircase/counting.hpp"
#include "staircase/experiments.hpp"
#include "staircase/ideal_ops.hpp"

using namespace staircase;

TEST_CASE("sampling is deterministic in (seed, index)") {
  FuzzConfig cfg;
  cfg.ring = polynomial_ring(3);
  cfg.box = 6;
  cfg.n_extra_gens = 5;
  cfg.depth_floor = 3;
  cfg.seed = 42;
  for (std::uint64_t i = 0; i < 10; ++i)
    CHECK(random_m_primary_ideal(cfg, i) == random_m_primary_ideal(cfg, i));
  CHECK(random_m_primary_ideal(cfg, 0) != random_m_primary_ideal(cfg, 1));
}

TEST_CASE("sampling respects its contract") {
  FuzzConfig cfg;
  cfg.ring = polynomial_ring(2);
  cfg.box = 4;
  cfg.n_extra_gens = 0;
  cfg.seed = 1;
  CHECK(random_m_primary_ideal(cfg, 0) == make_ideal(2, {{4, 0}, {0, 4}}));

  cfg.n_extra_gens = 6;
  cfg.depth_floor = 4;
  for (std::uint64_t i = 0; i < 20; ++i) {
    MonomialIdeal a = random_m_primary_ideal(cfg, i);
    CHECK(is_m_primary(cfg.ring, a));
    for (const auto& g : a.gens) CHECK(g.total_degree() >= 4);
  }

  cfg.depth_floor = 9;  // > d * box
  CHECK_THROWS_AS(random_m_primary_ideal(cfg, 0), precondition_error);
}

TEST_CASE("reports are byte-identical across runs") {
  std::map<std::string, std::string> params = {
      {"samples", "20"}, {"seed", "7"}, {"dim", "2"}};
  ExperimentReport a = run_experiment("fuzz", params);
  ExperimentReport b = run_experiment("fuzz", params);
  CHECK(to_csv(a) == to_csv(b));
  CHECK(a.max_dev == b.max_dev);
}

TEST_CASE("inequality fuzz passes on theorem-backed checks") {
  for (const std::string& ring : {"poly2", "poly3", "x2", "xyz"}) {
    ExperimentReport rep =
        run_experiment("fuzz", {{"ring", ring}, {"samples", "40"}, {"seed", "42"}});
    INFO("ring ", ring);
    CHECK(rep.pass);
    CHECK(rep.rows.size() == 40);
    CHECK(rep.max_dev <= 1);
  }
}

TEST_CASE("socle sweep monotonicity and trivial depth list") {
  ExperimentReport rep = run_experiment(
      "socle-sweep", {{"depths", "2,4"}, {"samples", "25"}, {"seed", "5"}});
  CHECK(rep.pass);
  ExperimentReport single = run_experiment(
      "socle-sweep", {{"depths", "3"}, {"samples", "10"}, {"seed", "5"}});
  CHECK(single.pass);  // one depth: monotonicity holds vacuously
}

TEST_CASE("window ratios are exactly 1 over a polynomial ring") {
  ExperimentReport rep = run_experiment(
      "window", {{"ring", "poly3"}, {"n", "3,5"}, {"samples", "8"}, {"seed", "9"}});
  CHECK(rep.pass);
  for (const auto& row : rep.rows) CHECK(row.ratio == 1);
  CHECK(rep.max_dev == 0);
}

TEST_CASE("window rejects non-equidimensional or non-reduced models") {
  RingSpec bad = make_ring(2, make_ideal(2, {{2, 0}}));  // not squarefree
  CHECK_THROWS_AS(run_colength_window(bad, Rational(1, 2), {4}, 2, 1),
                  precondition_error);
  // (xy, xz) is squarefree but has minimal primes of different dimensions.
  RingSpec mixed = make_ring(3, make_ideal(3, {{1, 1, 0}, {1, 0, 1}}));
  CHECK_THROWS_AS(run_colength_window(mixed, Rational(1, 2), {4}, 2, 1),
                  precondition_error);
}

TEST_CASE("cx family rows carry the exact counts") {
  ExperimentReport rep = run_named_family("cx-family", {{"N", "2..6"}});
  CHECK(rep.pass);
  REQUIRE(rep.rows.size() == 5);
  const ReportRow& n4 = rep.rows[2];
  CHECK(n4.param_n == 4);
  CHECK(n4.colength == 70);
  CHECK(n4.ratio == Rational(64, 70));
}

TEST_CASE("socle-colon family confirms the colon identity") {
  ExperimentReport rep =
      run_named_family("socle-colon", {{"N", "2..4"}, {"L", "10,50"}});
  CHECK(rep.pass);
  CHECK(rep.rows.size() == 6);
}

TEST_CASE("nonreduced family identities hold; the margin has a boundary case") {
  ExperimentReport rep = run_named_family("nonreduced", {{"n", "2..20"}});
  for (const auto& row : rep.rows) {
    CHECK(row.e == Rational(2 * row.param_n));
    CHECK(row.colength == row.param_n + (row.param_n + 1) / 2);
    // The strict margin e > (6/5) l holds except at n = 3, where
    // e = 6 = (6/5) * 5 exactly.
    CHECK(row.pass == (row.param_n != 3));
  }
  CHECK_FALSE(rep.pass);
  ExperimentReport eps_small =
      run_named_family("nonreduced", {{"n", "2..20"}, {"epsilon", "19/100"}});
  CHECK(eps_small.pass);
}

TEST_CASE("t-adic family") {
  ExperimentReport rep = run_named_family("t-adic", {{"L", "2,5,10"}, {"nmax", "3"}});
  CHECK(rep.pass);
  // First row: I = (x^2, xy, y^3), L = 2.
  const ReportRow& r0 = rep.rows[0];
  CHECK(r0.e == 10);
  CHECK(r0.colength == 8);
  // Dimension-one rows exist for L >= 4 and satisfy l = L + 3, e = 4L.
  bool found = false;
  for (const auto& row : rep.rows)
    if (row.param_n == 10 && row.e == 40 && row.colength == 13) found = true;
  CHECK(found);
}

TEST_CASE("dim-one-limit family") {
  ExperimentReport rep = run_named_family("dim-one-limit", {{"N", "1..12"}});
  CHECK(rep.pass);
  for (const auto& row : rep.rows)
    CHECK(row.ratio == Rational(2 * row.param_n + 1, row.param_n));
}

TEST_CASE("power-ratio deviations decrease") {
  ExperimentReport rep = run_named_family("power-ratio", {{"n", "1..5"}});
  CHECK(rep.pass);
  CHECK(rep.rows[0].colength == 4);
  CHECK(rep.rows[0].ehk == 9);
  CHECK(rep.max_dev == Rational(5, 4));
}

TEST_CASE("unknown family and bad parameters") {
  CHECK_THROWS_AS(run_named_family("no-such-family", {}), malformed_input);
  CHECK_THROWS_AS(run_experiment("fuzz", {{"seed", "banana"}}), malformed_input);
  CHECK_THROWS_AS(parse_count_list("5..2"), malformed_input);
  CHECK(parse_count_list("2..4") == std::vector<Count>{2, 3, 4});
  CHECK(parse_count_list("10,50,200") == std::vector<Count>{10, 50, 200});
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), malformed_input);
}

TEST_CASE("csv schema") {
  ExperimentReport rep = run_named_family("dim-one-limit", {{"N", "3"}});
  std::string csv = to_csv(rep);
  CHECK(csv.rfind("sample,param_n,colength,mu,ord,socle_len,e_num,e_den,ehk_num,"
                  "ehk_den,ratio_num,ratio_den,verdict\n", 0) == 0);
  CHECK(csv.find("0,3,3,2,1,1,7,1,7,1,7,3,PASS") != std::string::npos);
}
