#include "staircase/core.hpp"

#include <algorithm>
#include <string>

#include "staircase/lattice_count.hpp"

namespace staircase {

Exponent ExponentVector::total_degree() const {
  Exponent d = 0;
  for (Exponent e : exps) d += e;
  return d;
}

bool divides(const ExponentVector& g, const ExponentVector& m) {
  for (std::size_t i = 0; i < g.exps.size(); ++i)
    if (g.exps[i] > m.exps[i]) return false;
  return true;
}

ExponentVector componentwise_max(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r = a;
  for (std::size_t i = 0; i < r.exps.size(); ++i)
    r.exps[i] = std::max(r.exps[i], b.exps[i]);
  return r;
}

ExponentVector vec_add(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r = a;
  for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += b.exps[i];
  return r;
}

ExponentVector vec_scale(const ExponentVector& a, Exponent q) {
  ExponentVector r = a;
  for (auto& e : r.exps) e *= q;
  return r;
}

ExponentVector colon_shift(const ExponentVector& h, const ExponentVector& g) {
  ExponentVector r = h;
  for (std::size_t i = 0; i < r.exps.size(); ++i)
    r.exps[i] = std::max<Exponent>(r.exps[i] - g.exps[i], 0);
  return r;
}

std::vector<int> support(const ExponentVector& v) {
  std::vector<int> s;
  for (std::size_t i = 0; i < v.exps.size(); ++i)
    if (v.exps[i] > 0) s.push_back(static_cast<int>(i));
  return s;
}

bool MonomialIdeal::is_unit() const {
  for (const auto& g : gens)
    if (g.total_degree() == 0) return true;
  return false;
}

namespace {

// Canonical generator order: lexicographically descending exponent vectors.
bool canonical_less(const ExponentVector& a, const ExponentVector& b) {
  return a.exps > b.exps;
}

}  // namespace

MonomialIdeal make_ideal(int nvars, std::vector<ExponentVector> raw_gens) {
  if (nvars < 0) throw malformed_input("make_ideal: negative variable count");
  for (const auto& g : raw_gens) {
    if (static_cast<int>(g.size()) != nvars)
      throw malformed_input("make_ideal: generator has length " +
                            std::to_string(g.size()) + ", expected " +
                            std::to_string(nvars));
    for (Exponent e : g.exps)
      if (e < 0) throw malformed_input("make_ideal: negative exponent");
  }
  // Sieve in ascending total degree so divisors are seen before multiples.
  std::stable_sort(raw_gens.begin(), raw_gens.end(),
                   [](const ExponentVector& a, const ExponentVector& b) {
                     return a.total_degree() < b.total_degree();
                   });
  MonomialIdeal out;
  out.nvars = nvars;
  for (const auto& g : raw_gens) {
    bool dominated = false;
    for (const auto& kept : out.gens)
      if (divides(kept, g)) {
        dominated = true;
        break;
      }
    if (!dominated) out.gens.push_back(g);
  }
  std::sort(out.gens.begin(), out.gens.end(), canonical_less);
  return out;
}

MonomialIdeal zero_ideal(int nvars) {
  MonomialIdeal z;
  z.nvars = nvars;
  return z;
}

MonomialIdeal unit_ideal(int nvars) {
  MonomialIdeal u;
  u.nvars = nvars;
  u.gens.push_back(ExponentVector(std::vector<Exponent>(nvars, 0)));
  return u;
}

MonomialIdeal maximal_ideal(int nvars) {
  std::vector<ExponentVector> gens;
  for (int i = 0; i < nvars; ++i) {
    std::vector<Exponent> e(nvars, 0);
    e[i] = 1;
    gens.push_back(ExponentVector(std::move(e)));
  }
  return make_ideal(nvars, std::move(gens));
}

namespace {

bool hits_all(const std::vector<std::vector<int>>& supports, unsigned mask) {
  for (const auto& s : supports) {
    bool hit = false;
    for (int i : s)
      if (mask & (1u << i)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

FacePrime build_face(const RingSpec& ring, unsigned mask) {
  FacePrime f;
  for (int i = 0; i < ring.nvars; ++i)
    (mask & (1u << i) ? f.cover : f.face).push_back(i);
  // Localize the defining ideal at the face prime: zero out the face
  // coordinates, read the result in the cover variables.
  std::vector<ExponentVector> local;
  for (const auto& g : ring.defining.gens) {
    std::vector<Exponent> e;
    e.reserve(f.cover.size());
    for (int c : f.cover) e.push_back(g[c]);
    local.push_back(ExponentVector(std::move(e)));
  }
  MonomialIdeal local_ideal = make_ideal(static_cast<int>(f.cover.size()), std::move(local));
  for (std::size_t i = 0; i < f.cover.size(); ++i) {
    bool pure = false;
    for (const auto& g : local_ideal.gens) {
      auto s = support(g);
      if (s.size() == 1 && s[0] == static_cast<int>(i)) pure = true;
    }
    if (!pure)
      throw internal_error("face cover is not minimal: localized ideal not primary");
  }
  f.local_length = count_standard_monomials(local_ideal.gens,
                                            static_cast<int>(f.cover.size()));
  return f;
}

}  // namespace

RingSpec make_ring(int nvars, MonomialIdeal defining) {
  if (nvars <= 0) throw malformed_input("make_ring: nonpositive variable count");
  if (nvars > 16) throw malformed_input("make_ring: too many variables");
  if (defining.nvars != nvars)
    throw malformed_input("make_ring: defining ideal over wrong variable count");
  if (defining.is_unit()) throw invalid_ring("make_ring: defining ideal is the unit ideal");

  RingSpec ring;
  ring.nvars = nvars;
  ring.defining = make_ideal(nvars, defining.gens);

  std::vector<std::vector<int>> supports;
  for (const auto& g : ring.defining.gens) supports.push_back(support(g));

  // Exhaustive minimal-hitting-set enumeration over variable subsets.
  std::vector<unsigned> hitting;
  for (unsigned mask = 0; mask < (1u << nvars); ++mask)
    if (hits_all(supports, mask)) hitting.push_back(mask);
  int min_size = nvars;
  std::vector<unsigned> minimal;
  for (unsigned mask : hitting) {
    bool is_minimal = true;
    for (int i = 0; i < nvars && is_minimal; ++i)
      if (mask & (1u << i))
        if (hits_all(supports, mask & ~(1u << i))) is_minimal = false;
    if (is_minimal) {
      minimal.push_back(mask);
      min_size = std::min(min_size, __builtin_popcount(mask));
    }
  }
  ring.krull_dim = nvars - min_size;
  for (unsigned mask : minimal) {
    FacePrime f = build_face(ring, mask);
    f.top_dimensional =
        static_cast<int>(f.face.size()) == ring.krull_dim;
    ring.faces.push_back(std::move(f));
  }
  return ring;
}

RingSpec polynomial_ring(int nvars) { return make_ring(nvars, zero_ideal(nvars)); }

bool is_m_primary(const RingSpec& ring, const MonomialIdeal& ideal) {
  if (ideal.nvars != ring.nvars)
    throw malformed_input("is_m_primary: ideal over wrong variable count");
  for (int v = 0; v < ring.nvars; ++v) {
    bool pure = false;
    for (const auto& g : ideal.gens) {
      auto s = support(g);
      if (s.size() == 1 && s[0] == v) pure = true;
    }
    for (const auto& g : ring.defining.gens) {
      auto s = support(g);
      if (s.size() == 1 && s[0] == v) pure = true;
    }
    if (!pure) return false;
  }
  return true;
}

}  // namespace staircase
