#pragma once

#include <utility>
#include <vector>

#include "staircase/core.hpp"
#include "staircase/rational.hpp"

namespace staircase {

enum class MultiplicityMethod {
  exact_volume,            // d! * complement volume of the Newton polyhedron
  exact_associativity,     // sum over top-dimensional face primes
  exact_regular_colength,  // e_HK over a polynomial ring equals the colength
  sequence_estimate,       // finite difference of an exact length sequence
};

const char* method_name(MultiplicityMethod m);

struct MultiplicityResult {
  Rational value;
  MultiplicityMethod method = MultiplicityMethod::exact_volume;
  // (index, length) pairs backing a sequence estimate; empty for exact methods.
  std::vector<std::pair<Count, Count>> sequence;
};

// Hilbert-Samuel multiplicity e(a). Polynomial rings of dimension <= 3 use
// the exact Newton-polyhedron volume; monomial quotients decompose over
// top-dimensional face primes weighted by local length; higher-dimensional
// cases fall back to the finite-difference estimator.
MultiplicityResult hs_multiplicity(const RingSpec& ring, const MonomialIdeal& a);

// Exact lengths l(R/a^n) for n = 1..n_max.
std::vector<Count> hs_sequence(const RingSpec& ring, const MonomialIdeal& a, Count n_max);

// d-th forward finite difference of n -> l(R/a^n) at the largest admissible
// index; exact past the postulation region. Throws when n_max <= dim.
MultiplicityResult hs_estimate(const RingSpec& ring, const MonomialIdeal& a, Count n_max);

// Hilbert-Kunz multiplicity e_HK(a): the colength over a polynomial ring, and
// the face-prime decomposition with colengths over monomial quotients.
MultiplicityResult hk_multiplicity(const RingSpec& ring, const MonomialIdeal& a);

// Normalized bracket-power colengths l(R/a^[p^e]) / p^(e*dim) for e = 1..e_max.
std::vector<Rational> hk_sequence(const RingSpec& ring, const MonomialIdeal& a,
                                  Exponent p, Count e_max);

}  // namespace staircase
