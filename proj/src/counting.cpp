#include "staircase/counting.hpp"

#include "staircase/ideal_ops.hpp"
#include "staircase/lattice_count.hpp"

namespace staircase {

Count colength(const RingSpec& ring, const MonomialIdeal& a) {
  if (a.nvars != ring.nvars)
    throw malformed_input("colength: ideal over wrong variable count");
  if (!is_m_primary(ring, a))
    throw precondition_error("infinite length: not m-primary");
  return count_standard_monomials(sum(a, ring.defining).gens, ring.nvars);
}

Count min_gens(const RingSpec& ring, const MonomialIdeal& a) {
  if (a.is_zero()) throw precondition_error("min_gens: zero ideal");
  if (sum(a, ring.defining).is_unit())
    throw precondition_error("min_gens: unit ideal");
  if (ring.is_polynomial()) return static_cast<Count>(a.gens.size());
  MonomialIdeal in_ring = sum(a, ring.defining);
  MonomialIdeal m_times = sum(product(maximal_ideal(ring.nvars), a), ring.defining);
  // Both colengths are finite: m*a + defining contains a power of every
  // variable whenever a + defining does.
  return count_standard_monomials(m_times.gens, ring.nvars) -
         count_standard_monomials(in_ring.gens, ring.nvars);
}

Count socle_length(const RingSpec& ring, const MonomialIdeal& a) {
  Count l = colength(ring, a);
  MonomialIdeal soc = colon(sum(a, ring.defining), maximal_ideal(ring.nvars));
  return l - colength(ring, soc);
}

Count colon_quotient_length(const RingSpec& ring, const MonomialIdeal& a,
                            const MonomialIdeal& j) {
  if (j.is_zero()) throw precondition_error("colon_quotient_length: zero divisor ideal");
  Count l = colength(ring, a);
  MonomialIdeal q = colon(sum(a, ring.defining), j);
  return l - colength(ring, q);
}

}  // namespace staircase
