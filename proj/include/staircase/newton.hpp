#pragma once

#include <vector>

#include "staircase/core.hpp"
#include "staircase/rational.hpp"

namespace staircase {

// The Newton polyhedron NP(a) = conv(generators) + nonnegative orthant,
// stored by its facet inequalities {x >= 0 : normal . x >= offset}. The
// orthant constraints x_i >= 0 are implicit and not listed; every stored
// facet has componentwise nonnegative normal and offset > 0.
struct NewtonPolyhedron {
  struct Facet {
    std::vector<Integer> normal;
    Integer offset;

    bool operator==(const Facet&) const = default;
  };

  int nvars = 0;
  std::vector<ExponentVector> generators;
  std::vector<Facet> facets;
};

// Exact H-representation of NP(a). Dimension 2 uses the lower convex chain of
// the generators; dimension >= 3 enumerates candidate support hyperplanes
// spanned by generators and coordinate rays. Requires a nonzero.
NewtonPolyhedron newton_polyhedron(const MonomialIdeal& a);

// Membership via the precomputed facet inequalities.
bool np_contains(const NewtonPolyhedron& np, const ExponentVector& m);

// All minimal lattice points of NP(a), i.e. the integral closure of a.
MonomialIdeal integral_closure(const MonomialIdeal& a);

bool is_integrally_closed(const MonomialIdeal& a);

// Exact volume of {x >= 0} \ NP. Supported for nvars <= 3; throws
// precondition_error("unsupported dimension ...") above that and
// precondition_error("infinite volume ...") when the complement is unbounded
// (source ideal not m-primary).
Rational complement_volume(const NewtonPolyhedron& np);

}  // namespace staircase
