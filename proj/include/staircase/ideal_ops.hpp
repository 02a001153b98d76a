#pragma once

#include <vector>

#include "staircase/core.hpp"

namespace staircase {

// Ideal sum: canonical form of the union of generators.
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);

// Ideal product: pairwise generator sums, then divisibility sieve.
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);

// a^n by iterated product; n = 0 gives the unit ideal.
MonomialIdeal power(const MonomialIdeal& a, Exponent n);

// Bracket power a^[q]: every generator scaled componentwise by q.
MonomialIdeal frobenius_power(const MonomialIdeal& a, Exponent q);

// (a : b) = intersection over generators g of b of ({max(h-g,0) : h in a}).
MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b);

// a ∩ b via componentwise-max of generator pairs.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

bool contains(const MonomialIdeal& a, const ExponentVector& m);
// a ⊆ b.
bool ideal_leq(const MonomialIdeal& a, const MonomialIdeal& b);

// Largest N with a ⊆ m^N in the given ring: the minimum total degree of a
// generator outside the defining ideal. Throws precondition_error when every
// generator lies in the defining ideal.
Exponent ord(const RingSpec& ring, const MonomialIdeal& a);

// Projection at x_v^i: delete coordinate v from the generators with
// v-exponent <= i. The results form an ascending chain in i.
MonomialIdeal project(const MonomialIdeal& a, int var, Exponent i);

// Zero out the given coordinates of every generator (i.e. invert those
// variables); the result is read in the complementary variables.
MonomialIdeal saturate_variables(const MonomialIdeal& a, const std::vector<int>& vars);

// Image of a in the polynomial ring on the face variables: generators
// supported inside `face` survive with their coordinates restricted to the
// face positions, all others map to zero.
MonomialIdeal restrict_to_face(const MonomialIdeal& a, const std::vector<int>& face);

}  // namespace staircase
