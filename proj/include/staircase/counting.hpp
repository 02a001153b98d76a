#pragma once

#include "staircase/core.hpp"

namespace staircase {

// l(R/a): the number of standard monomials of a + defining.
// Throws precondition_error("not m-primary...") otherwise.
Count colength(const RingSpec& ring, const MonomialIdeal& a);

// mu(a) = l(R/(m*a + defining)) - l(R/(a + defining)); the Nakayama count.
// In a polynomial ring this equals the size of the canonical generating set.
Count min_gens(const RingSpec& ring, const MonomialIdeal& a);

// l((a : m)/a) = l(R/a) - l(R/(a : m)).
Count socle_length(const RingSpec& ring, const MonomialIdeal& a);

// l((a : j)/a) = l(R/a) - l(R/(a : j)); j need not be m-primary, but the
// colon must have finite colength (it always does when a is m-primary).
Count colon_quotient_length(const RingSpec& ring, const MonomialIdeal& a,
                            const MonomialIdeal& j);

}  // namespace staircase
