#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "staircase/errors.hpp"

namespace staircase {

using Exponent = std::int64_t;
using Count = std::int64_t;

// A monomial, given by its exponent vector. The length of `exps` equals the
// number of ambient variables; all entries are >= 0.
struct ExponentVector {
  std::vector<Exponent> exps;

  ExponentVector() = default;
  explicit ExponentVector(std::vector<Exponent> e) : exps(std::move(e)) {}
  ExponentVector(std::initializer_list<Exponent> e) : exps(e) {}

  Exponent total_degree() const;
  std::size_t size() const { return exps.size(); }
  Exponent operator[](std::size_t i) const { return exps[i]; }

  bool operator==(const ExponentVector&) const = default;
};

// g divides m, i.e. g <= m componentwise.
bool divides(const ExponentVector& g, const ExponentVector& m);
ExponentVector componentwise_max(const ExponentVector& a, const ExponentVector& b);
ExponentVector vec_add(const ExponentVector& a, const ExponentVector& b);
ExponentVector vec_scale(const ExponentVector& a, Exponent q);
// max(h - g, 0) componentwise; the single-generator colon shift.
ExponentVector colon_shift(const ExponentVector& h, const ExponentVector& g);
// Indices of nonzero entries.
std::vector<int> support(const ExponentVector& v);

// A monomial ideal in canonical minimal form: the generators form an antichain
// under componentwise <=, sorted lexicographically descending. Empty `gens` is
// the zero ideal, which is allowed only as a quotient's defining ideal.
struct MonomialIdeal {
  int nvars = 0;
  std::vector<ExponentVector> gens;

  bool is_zero() const { return gens.empty(); }
  bool is_unit() const;

  bool operator==(const MonomialIdeal&) const = default;
};

// Canonicalize: drop divisible generators and duplicates, sort.
// Throws malformed_input when a vector has the wrong length or a negative entry.
MonomialIdeal make_ideal(int nvars, std::vector<ExponentVector> raw_gens);

MonomialIdeal zero_ideal(int nvars);
MonomialIdeal unit_ideal(int nvars);
// The irrelevant ideal (x_0, ..., x_{nvars-1}).
MonomialIdeal maximal_ideal(int nvars);

// A minimal prime of a monomial quotient ring. It is generated by the
// variables in `cover`, a minimal hitting set of the defining generators'
// supports; `face` is the complementary variable set.
struct FacePrime {
  std::vector<int> cover;
  std::vector<int> face;
  Count local_length = 1;   // length of the localization at this prime
  bool top_dimensional = false;

  bool operator==(const FacePrime&) const = default;
};

// The ring K[x_0,...,x_{nvars-1}] / defining, with its derived invariants.
// A zero defining ideal gives the polynomial ring itself.
struct RingSpec {
  int nvars = 0;
  MonomialIdeal defining;
  int krull_dim = 0;
  std::vector<FacePrime> faces;

  bool is_polynomial() const { return defining.is_zero(); }
};

// Derives krull_dim and the face primes (exhaustive minimal-hitting-set
// search; intended for nvars at desk scale). Throws invalid_ring when the
// defining ideal is the unit ideal.
RingSpec make_ring(int nvars, MonomialIdeal defining);
RingSpec polynomial_ring(int nvars);

// True iff ideal + defining contains a pure power of every variable;
// equivalently, for monomial ideals, the quotient has finite length.
bool is_m_primary(const RingSpec& ring, const MonomialIdeal& ideal);

}  // namespace staircase
