#include "staircase/ideal_ops.hpp"

#include <algorithm>

namespace staircase {

namespace {

void require_same_nvars(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars != b.nvars)
    throw malformed_input("ideal operands live in different variable counts");
}

}  // namespace

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_nvars(a, b);
  std::vector<ExponentVector> gens = a.gens;
  gens.insert(gens.end(), b.gens.begin(), b.gens.end());
  return make_ideal(a.nvars, std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_nvars(a, b);
  if (a.is_zero() || b.is_zero()) return zero_ideal(a.nvars);
  std::vector<ExponentVector> gens;
  gens.reserve(a.gens.size() * b.gens.size());
  for (const auto& g : a.gens)
    for (const auto& h : b.gens) gens.push_back(vec_add(g, h));
  std::sort(gens.begin(), gens.end(),
            [](const ExponentVector& x, const ExponentVector& y) { return x.exps < y.exps; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return make_ideal(a.nvars, std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, Exponent n) {
  if (n < 0) throw malformed_input("power: negative exponent");
  if (n == 0) return unit_ideal(a.nvars);
  MonomialIdeal acc = a;
  for (Exponent k = 1; k < n; ++k) acc = product(acc, a);
  return acc;
}

MonomialIdeal frobenius_power(const MonomialIdeal& a, Exponent q) {
  if (q < 1) throw malformed_input("frobenius_power: exponent must be >= 1");
  MonomialIdeal out;
  out.nvars = a.nvars;
  out.gens.reserve(a.gens.size());
  for (const auto& g : a.gens) out.gens.push_back(vec_scale(g, q));
  return out;  // scaling preserves the antichain and its order
}

MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_nvars(a, b);
  if (b.is_zero()) throw precondition_error("colon: divisor ideal is zero");
  MonomialIdeal acc;
  bool first = true;
  for (const auto& g : b.gens) {
    std::vector<ExponentVector> shifted;
    shifted.reserve(a.gens.size());
    for (const auto& h : a.gens) shifted.push_back(colon_shift(h, g));
    MonomialIdeal part = make_ideal(a.nvars, std::move(shifted));
    acc = first ? part : intersect(acc, part);
    first = false;
  }
  return acc;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_nvars(a, b);
  std::vector<ExponentVector> gens;
  gens.reserve(a.gens.size() * b.gens.size());
  for (const auto& g : a.gens)
    for (const auto& h : b.gens) gens.push_back(componentwise_max(g, h));
  return make_ideal(a.nvars, std::move(gens));
}

bool contains(const MonomialIdeal& a, const ExponentVector& m) {
  if (static_cast<int>(m.size()) != a.nvars)
    throw malformed_input("contains: monomial over wrong variable count");
  for (const auto& g : a.gens)
    if (divides(g, m)) return true;
  return false;
}

bool ideal_leq(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_nvars(a, b);
  for (const auto& g : a.gens)
    if (!contains(b, g)) return false;
  return true;
}

Exponent ord(const RingSpec& ring, const MonomialIdeal& a) {
  if (a.nvars != ring.nvars)
    throw malformed_input("ord: ideal over wrong variable count");
  if (a.is_zero()) throw precondition_error("ord: zero ideal");
  bool seen = false;
  Exponent best = 0;
  for (const auto& g : a.gens) {
    if (contains(ring.defining, g)) continue;  // zero in the quotient
    Exponent d = g.total_degree();
    if (!seen || d < best) best = d;
    seen = true;
  }
  if (!seen) throw precondition_error("ord: every generator lies in the defining ideal");
  return best;
}

MonomialIdeal project(const MonomialIdeal& a, int var, Exponent i) {
  if (var < 0 || var >= a.nvars) throw malformed_input("project: variable out of range");
  if (a.nvars < 2) throw precondition_error("project: need at least two variables");
  if (a.is_zero()) throw precondition_error("project: zero ideal");
  std::vector<ExponentVector> gens;
  for (const auto& g : a.gens) {
    if (g[var] > i) continue;
    ExponentVector w = g;
    w.exps.erase(w.exps.begin() + var);
    gens.push_back(std::move(w));
  }
  return make_ideal(a.nvars - 1, std::move(gens));
}

MonomialIdeal saturate_variables(const MonomialIdeal& a, const std::vector<int>& vars) {
  std::vector<bool> kill(a.nvars, false);
  for (int v : vars) {
    if (v < 0 || v >= a.nvars) throw malformed_input("saturate_variables: index out of range");
    kill[v] = true;
  }
  std::vector<ExponentVector> gens;
  for (const auto& g : a.gens) {
    std::vector<Exponent> e;
    for (int i = 0; i < a.nvars; ++i)
      if (!kill[i]) e.push_back(g[i]);
    gens.push_back(ExponentVector(std::move(e)));
  }
  int remaining = a.nvars - static_cast<int>(vars.size());
  // vars may repeat; recount
  remaining = 0;
  for (int i = 0; i < a.nvars; ++i)
    if (!kill[i]) ++remaining;
  return make_ideal(remaining, std::move(gens));
}

MonomialIdeal restrict_to_face(const MonomialIdeal& a, const std::vector<int>& face) {
  std::vector<bool> in_face(a.nvars, false);
  for (int v : face) {
    if (v < 0 || v >= a.nvars) throw malformed_input("restrict_to_face: index out of range");
    in_face[v] = true;
  }
  std::vector<ExponentVector> gens;
  for (const auto& g : a.gens) {
    bool inside = true;
    for (int i = 0; i < a.nvars && inside; ++i)
      if (g[i] > 0 && !in_face[i]) inside = false;
    if (!inside) continue;
    std::vector<Exponent> e;
    e.reserve(face.size());
    for (int v : face) e.push_back(g[v]);
    gens.push_back(ExponentVector(std::move(e)));
  }
  return make_ideal(static_cast<int>(face.size()), std::move(gens));
}

}  // namespace staircase
