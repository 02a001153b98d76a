#include "staircase/multiplicity.hpp"

#include <string>

#include "staircase/counting.hpp"
#include "staircase/ideal_ops.hpp"
#include "staircase/newton.hpp"

namespace staircase {

const char* method_name(MultiplicityMethod m) {
  switch (m) {
    case MultiplicityMethod::exact_volume: return "exact-volume";
    case MultiplicityMethod::exact_associativity: return "exact-associativity";
    case MultiplicityMethod::exact_regular_colength: return "exact-regular-colength";
    case MultiplicityMethod::sequence_estimate: return "sequence-estimate";
  }
  return "unknown";
}

namespace {

void require_multiplicity_input(const RingSpec& ring, const MonomialIdeal& a) {
  if (ring.krull_dim < 1)
    throw precondition_error("multiplicity needs a ring of dimension >= 1");
  if (!is_m_primary(ring, a)) throw precondition_error("not m-primary");
}

// Exact e over a polynomial ring of dimension <= 3.
Rational e_by_volume(const MonomialIdeal& a) {
  return Rational(factorial(a.nvars)) * complement_volume(newton_polyhedron(a));
}

MonomialIdeal face_image(const RingSpec& ring, const MonomialIdeal& a, const FacePrime& f) {
  MonomialIdeal img = restrict_to_face(a, f.face);
  RingSpec face_ring = polynomial_ring(static_cast<int>(f.face.size()));
  if (!is_m_primary(face_ring, img))
    throw internal_error("face image of an m-primary ideal is not primary");
  return img;
}

Count default_estimate_window(const RingSpec& ring) { return ring.krull_dim + 8; }

}  // namespace

MultiplicityResult hs_multiplicity(const RingSpec& ring, const MonomialIdeal& a) {
  require_multiplicity_input(ring, a);
  if (ring.is_polynomial()) {
    if (ring.nvars <= 3)
      return {e_by_volume(a), MultiplicityMethod::exact_volume, {}};
    return hs_estimate(ring, a, default_estimate_window(ring));
  }
  if (ring.krull_dim <= 3) {
    Rational total = 0;
    for (const auto& f : ring.faces) {
      if (!f.top_dimensional) continue;
      total += Rational(f.local_length) * e_by_volume(face_image(ring, a, f));
    }
    return {total, MultiplicityMethod::exact_associativity, {}};
  }
  return hs_estimate(ring, a, default_estimate_window(ring));
}

std::vector<Count> hs_sequence(const RingSpec& ring, const MonomialIdeal& a, Count n_max) {
  require_multiplicity_input(ring, a);
  if (n_max < 1) throw precondition_error("hs_sequence: n_max must be >= 1");
  std::vector<Count> lengths;
  lengths.reserve(n_max);
  MonomialIdeal pow = a;
  for (Count n = 1; n <= n_max; ++n) {
    lengths.push_back(colength(ring, pow));
    if (n < n_max) pow = product(pow, a);
  }
  return lengths;
}

MultiplicityResult hs_estimate(const RingSpec& ring, const MonomialIdeal& a, Count n_max) {
  const Count d = ring.krull_dim;
  if (n_max <= d)
    throw precondition_error("insufficient data: need n_max > dim for the finite difference");
  std::vector<Count> lengths = hs_sequence(ring, a, n_max);
  // d-th forward difference of n -> l(R/a^n) at the largest admissible index,
  // with l(R/a^0) = 0.
  auto value_at = [&](Count n) { return n == 0 ? Count(0) : lengths[n - 1]; };
  const Count base = n_max - d;
  Integer diff = 0;
  Integer binom = 1;
  for (Count j = 0; j <= d; ++j) {
    Integer term = binom * value_at(base + j);
    diff += ((d - j) % 2 == 0) ? term : -term;
    binom = binom * (d - j) / (j + 1);
  }
  MultiplicityResult r;
  r.value = Rational(diff);
  r.method = MultiplicityMethod::sequence_estimate;
  for (Count n = 1; n <= n_max; ++n) r.sequence.emplace_back(n, lengths[n - 1]);
  return r;
}

MultiplicityResult hk_multiplicity(const RingSpec& ring, const MonomialIdeal& a) {
  require_multiplicity_input(ring, a);
  if (ring.is_polynomial())
    return {Rational(colength(ring, a)), MultiplicityMethod::exact_regular_colength, {}};
  Rational total = 0;
  for (const auto& f : ring.faces) {
    if (!f.top_dimensional) continue;
    MonomialIdeal img = face_image(ring, a, f);
    RingSpec face_ring = polynomial_ring(static_cast<int>(f.face.size()));
    total += Rational(f.local_length) * Rational(colength(face_ring, img));
  }
  return {total, MultiplicityMethod::exact_associativity, {}};
}

std::vector<Rational> hk_sequence(const RingSpec& ring, const MonomialIdeal& a,
                                  Exponent p, Count e_max) {
  require_multiplicity_input(ring, a);
  if (p < 2) throw precondition_error("hk_sequence: p must be >= 2");
  if (e_max < 1) throw precondition_error("hk_sequence: e_max must be >= 1");
  std::vector<Rational> out;
  Integer q = 1;
  for (Count e = 1; e <= e_max; ++e) {
    q *= p;
    Exponent qe = static_cast<Exponent>(q);  // desk scale
    Count len = colength(ring, frobenius_power(a, qe));
    Integer denom = 1;
    for (int k = 0; k < ring.krull_dim; ++k) denom *= q;
    out.emplace_back(Integer(len), denom);
  }
  return out;
}

}  // namespace staircase
