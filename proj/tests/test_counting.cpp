#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "staircase/counting.hpp"
#include "staircase/experiments.hpp"
#include "staircase/ideal_ops.hpp"

using namespace staircase;

TEST_CASE("colength") {
  RingSpec kxy = polynomial_ring(2);
  MonomialIdeal a = make_ideal(2, {{2, 0}, {1, 1}, {0, 3}});
  CHECK(colength(kxy, a) == 4);  // standard monomials 1, x, y, y^2
  CHECK(colength(kxy, frobenius_power(a, 2)) == 16);

  RingSpec rx2 = make_ring(2, make_ideal(2, {{2, 0}}));
  MonomialIdeal m = maximal_ideal(2);
  MonomialIdeal i4 = sum(power(m, 4), product(make_ideal(2, {{1, 0}}), power(m, 2)));
  CHECK(colength(rx2, i4) == 6);

  CHECK_THROWS_AS(colength(kxy, make_ideal(2, {{1, 1}})), precondition_error);
}

TEST_CASE("colength matches the box oracle on random m-primary samples") {
  for (int dim = 1; dim <= 4; ++dim) {
    RingSpec ring = polynomial_ring(dim);
    FuzzConfig cfg;
    cfg.ring = ring;
    cfg.box = 5;
    cfg.n_extra_gens = 5;
    cfg.depth_floor = 0;
    cfg.seed = 21;
    for (int s = 0; s < 25; ++s) {
      MonomialIdeal a = random_m_primary_ideal(cfg, static_cast<std::uint64_t>(s));
      CHECK(colength(ring, a) == oracle::box_count_standard(a.gens, dim));
    }
  }
}

TEST_CASE("colength in quotient rings matches the box oracle") {
  RingSpec r = make_ring(3, make_ideal(3, {{1, 1, 1}}));
  FuzzConfig cfg;
  cfg.ring = r;
  cfg.box = 4;
  cfg.n_extra_gens = 4;
  cfg.seed = 22;
  for (int s = 0; s < 25; ++s) {
    MonomialIdeal a = random_m_primary_ideal(cfg, static_cast<std::uint64_t>(s));
    MonomialIdeal total = sum(a, r.defining);
    CHECK(colength(r, a) == oracle::box_count_standard(total.gens, 3));
  }
}

TEST_CASE("min_gens") {
  RingSpec kxy = polynomial_ring(2);
  CHECK(min_gens(kxy, make_ideal(2, {{2, 0}, {1, 1}, {0, 3}})) == 3);
  CHECK(min_gens(kxy, power(maximal_ideal(2), 7)) == 8);
  RingSpec rx2 = make_ring(2, make_ideal(2, {{2, 0}}));
  CHECK(min_gens(rx2, make_ideal(2, {{2, 0}, {1, 2}, {0, 4}})) == 2);
  CHECK_THROWS_AS(min_gens(kxy, unit_ideal(2)), precondition_error);
}

TEST_CASE("socle length") {
  RingSpec kxy = polynomial_ring(2);
  CHECK(socle_length(kxy, make_ideal(2, {{2, 0}, {1, 1}, {0, 3}})) == 2);
  for (Exponent n : {1, 2, 5, 9})
    CHECK(socle_length(kxy, power(maximal_ideal(2), n)) == n);
  RingSpec kx = polynomial_ring(1);
  for (Exponent k : {1, 3, 8})
    CHECK(socle_length(kx, make_ideal(1, {{k}})) == 1);
}

TEST_CASE("colon quotient length") {
  RingSpec kxyz = polynomial_ring(3);
  MonomialIdeal i25 = make_ideal(
      3, {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 5}});
  MonomialIdeal xy = make_ideal(3, {{1, 0, 0}, {0, 1, 0}});
  CHECK(colength(kxyz, i25) == 7);
  CHECK(colon_quotient_length(kxyz, i25, xy) == 6);

  RingSpec kxy = polynomial_ring(2);
  MonomialIdeal a = make_ideal(2, {{2, 0}, {1, 1}, {0, 3}});
  CHECK(colon_quotient_length(kxy, a, maximal_ideal(2)) == socle_length(kxy, a));

  MonomialIdeal m = maximal_ideal(2);
  for (Exponent n : {4, 7})
    for (Exponent k = 1; k < n; ++k)
      CHECK(colon_quotient_length(kxy, power(m, n), power(m, k)) ==
            colength(kxy, power(m, n)) - colength(kxy, power(m, n - k)));
}

TEST_CASE("colength additivity over a variable") {
  // l(R/I) = l(R/(I:x)) + l(R'/I) with R' = R/(x), for every variable x
  // outside I; holds in quotient rings as well.
  std::vector<RingSpec> rings = {polynomial_ring(2), polynomial_ring(3),
                                 make_ring(2, make_ideal(2, {{2, 0}})),
                                 make_ring(3, make_ideal(3, {{1, 1, 1}}))};
  for (const auto& ring : rings) {
    FuzzConfig cfg;
    cfg.ring = ring;
    cfg.box = 4;
    cfg.n_extra_gens = 4;
    cfg.seed = 23;
    for (int s = 0; s < 20; ++s) {
      MonomialIdeal a = random_m_primary_ideal(cfg, static_cast<std::uint64_t>(s));
      MonomialIdeal in_ring = sum(a, ring.defining);
      for (int v = 0; v < ring.nvars; ++v) {
        std::vector<Exponent> unit(ring.nvars, 0);
        unit[v] = 1;
        if (contains(in_ring, ExponentVector(unit))) continue;
        MonomialIdeal xv = make_ideal(ring.nvars, {ExponentVector(unit)});
        RingSpec mod = make_ring(ring.nvars, sum(ring.defining, xv));
        CHECK(colength(ring, a) ==
              colength(ring, colon(in_ring, xv)) + colength(mod, a));
      }
    }
  }
}

TEST_CASE("intersection bookkeeping with powers of the maximal ideal") {
  // l(R/I) = l(R/(I ∩ m^N)) - [l(R/m^N) - l(R/(I + m^N))]
  RingSpec ring = polynomial_ring(2);
  FuzzConfig cfg;
  cfg.ring = ring;
  cfg.box = 5;
  cfg.n_extra_gens = 4;
  cfg.seed = 24;
  MonomialIdeal m = maximal_ideal(2);
  for (int s = 0; s < 20; ++s) {
    MonomialIdeal a = random_m_primary_ideal(cfg, static_cast<std::uint64_t>(s));
    Exponent top = 2 * ord(ring, a);
    for (Exponent N = 1; N <= top; ++N) {
      MonomialIdeal mN = power(m, N);
      CHECK(colength(ring, a) ==
            colength(ring, intersect(a, mN)) -
                (colength(ring, mN) - colength(ring, sum(a, mN))));
    }
  }
}

TEST_CASE("colength is antitone in the ideal") {
  RingSpec ring = polynomial_ring(3);
  FuzzConfig cfg;
  cfg.ring = ring;
  cfg.box = 4;
  cfg.n_extra_gens = 3;
  cfg.seed = 25;
  for (int s = 0; s < 20; ++s) {
    MonomialIdeal a = random_m_primary_ideal(cfg, static_cast<std::uint64_t>(s));
    MonomialIdeal b = sum(a, random_m_primary_ideal(cfg, static_cast<std::uint64_t>(s) + 1000));
    CHECK(ideal_leq(a, b));
    CHECK(colength(ring, a) >= colength(ring, b));
  }
}
