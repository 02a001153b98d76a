#include "staircase/newton.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "staircase/ideal_ops.hpp"

namespace staircase {

namespace {

using Facet = NewtonPolyhedron::Facet;

Integer dot(const std::vector<Integer>& n, const ExponentVector& p) {
  Integer s = 0;
  for (std::size_t i = 0; i < n.size(); ++i) s += n[i] * p[i];
  return s;
}

Integer gcd_all(const Facet& f) {
  Integer g = abs(f.offset);
  for (const auto& c : f.normal) g = gcd(g, abs(c));
  return g;
}

// det of a k x k integer matrix by fraction-free Gaussian elimination.
Integer det(std::vector<std::vector<Integer>> m) {
  const std::size_t k = m.size();
  Integer sign = 1, divisor = 1;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && m[piv][col] == 0) ++piv;
    if (piv == k) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      sign = -sign;
    }
    for (std::size_t r = col + 1; r < k; ++r) {
      for (std::size_t c = col + 1; c < k; ++c)
        m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) / divisor;
      m[r][col] = 0;
    }
    divisor = m[col][col];
  }
  return sign * m[k - 1][k - 1];
}

// Normal of the hyperplane spanned by d-1 row vectors in dimension d, by
// cofactor expansion; zero when the rows are dependent.
std::vector<Integer> null_normal(const std::vector<std::vector<Integer>>& rows, int d) {
  std::vector<Integer> n(d);
  for (int skip = 0; skip < d; ++skip) {
    std::vector<std::vector<Integer>> minor;
    for (const auto& r : rows) {
      std::vector<Integer> mr;
      for (int c = 0; c < d; ++c)
        if (c != skip) mr.push_back(r[c]);
      minor.push_back(std::move(mr));
    }
    Integer m = det(std::move(minor));
    n[skip] = (skip % 2 == 0) ? m : -m;
  }
  return n;
}

void push_facet(std::vector<Facet>& out, std::set<std::pair<std::vector<Integer>, Integer>>& seen,
                Facet f) {
  Integer g = gcd_all(f);
  if (g > 1) {
    for (auto& c : f.normal) c /= g;
    f.offset /= g;
  }
  if (seen.insert({f.normal, f.offset}).second) out.push_back(std::move(f));
}

// Orient the candidate so every generator lies on the >= side; returns false
// when the plane does not support the generator set or has a negative
// normal component after orientation.
bool orient_and_validate(Facet& f, const std::vector<ExponentVector>& gens) {
  bool any_above = false, any_below = false;
  for (const auto& g : gens) {
    Integer v = dot(f.normal, g) - f.offset;
    if (v > 0) any_above = true;
    if (v < 0) any_below = true;
  }
  if (any_above && any_below) return false;
  if (any_below) {
    for (auto& c : f.normal) c = -c;
    f.offset = -f.offset;
  }
  for (const auto& c : f.normal)
    if (c < 0) return false;
  return f.offset > 0;  // offset-0 planes are implied by the orthant
}

std::vector<Facet> facets_dim1(const std::vector<ExponentVector>& gens) {
  Exponent lo = gens.front()[0];
  for (const auto& g : gens) lo = std::min(lo, g[0]);
  if (lo == 0) return {};
  return {Facet{{Integer(1)}, Integer(lo)}};
}

std::vector<Facet> facets_dim2(const std::vector<ExponentVector>& gens) {
  std::vector<Facet> out;
  std::set<std::pair<std::vector<Integer>, Integer>> seen;
  // Axis-parallel facets when no generator touches a coordinate plane.
  for (int i = 0; i < 2; ++i) {
    Exponent lo = gens.front()[i];
    for (const auto& g : gens) lo = std::min(lo, g[i]);
    if (lo > 0) {
      Facet f;
      f.normal = {Integer(i == 0 ? 1 : 0), Integer(i == 1 ? 1 : 0)};
      f.offset = lo;
      push_facet(out, seen, std::move(f));
    }
  }
  // Lower convex chain: sort by first coordinate and keep the hull toward
  // the origin. Generators form an antichain, so ties cannot occur.
  std::vector<ExponentVector> pts = gens;
  std::sort(pts.begin(), pts.end(),
            [](const ExponentVector& a, const ExponentVector& b) { return a[0] < b[0]; });
  std::vector<ExponentVector> chain;
  for (const auto& p : pts) {
    while (chain.size() >= 2) {
      const auto& a = chain[chain.size() - 2];
      const auto& b = chain[chain.size() - 1];
      Integer cross = Integer(b[0] - a[0]) * (p[1] - a[1]) -
                      Integer(b[1] - a[1]) * (p[0] - a[0]);
      if (cross >= 0) break;  // b stays strictly below the segment a-p
      chain.pop_back();
    }
    chain.push_back(p);
  }
  for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
    const auto& p = chain[j];
    const auto& q = chain[j + 1];
    Facet f;
    f.normal = {Integer(p[1] - q[1]), Integer(q[0] - p[0])};
    f.offset = f.normal[0] * p[0] + f.normal[1] * p[1];
    if (f.offset > 0) push_facet(out, seen, std::move(f));
  }
  return out;
}

// General dimension: every facet's affine hull is spanned by generator
// differences and coordinate rays, so candidate hyperplanes through k
// generators and d-k axis directions exhaust the facets.
std::vector<Facet> facets_general(const std::vector<ExponentVector>& gens, int d) {
  std::vector<Facet> out;
  std::set<std::pair<std::vector<Integer>, Integer>> seen;
  const int ng = static_cast<int>(gens.size());

  std::vector<int> gen_pick, axis_pick;
  auto consider = [&]() {
    std::vector<std::vector<Integer>> rows;
    const ExponentVector& base = gens[gen_pick[0]];
    for (std::size_t t = 1; t < gen_pick.size(); ++t) {
      std::vector<Integer> r(d);
      for (int c = 0; c < d; ++c) r[c] = Integer(gens[gen_pick[t]][c] - base[c]);
      rows.push_back(std::move(r));
    }
    for (int a : axis_pick) {
      std::vector<Integer> r(d, Integer(0));
      r[a] = 1;
      rows.push_back(std::move(r));
    }
    Facet f;
    f.normal = null_normal(rows, d);
    bool zero = true;
    for (const auto& c : f.normal)
      if (c != 0) zero = false;
    if (zero) return;
    f.offset = dot(f.normal, base);
    if (orient_and_validate(f, gens)) push_facet(out, seen, std::move(f));
  };

  auto pick_axes = [&](auto&& self, int from, int need) -> void {
    if (need == 0) {
      consider();
      return;
    }
    for (int a = from; a <= d - need; ++a) {
      axis_pick.push_back(a);
      self(self, a + 1, need - 1);
      axis_pick.pop_back();
    }
  };
  auto pick_gens = [&](auto&& self, int from, int need) -> void {
    if (need == 0) {
      pick_axes(pick_axes, 0, d - static_cast<int>(gen_pick.size()));
      return;
    }
    for (int g = from; g <= ng - need; ++g) {
      gen_pick.push_back(g);
      self(self, g + 1, need - 1);
      gen_pick.pop_back();
    }
  };
  for (int k = 1; k <= std::min(d, ng); ++k) pick_gens(pick_gens, 0, k);
  return out;
}

bool pure_power_per_variable(const std::vector<ExponentVector>& gens, int d) {
  for (int v = 0; v < d; ++v) {
    bool found = false;
    for (const auto& g : gens) {
      auto s = support(g);
      if (s.size() == 1 && s[0] == v) found = true;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& a) {
  if (a.is_zero()) throw precondition_error("newton_polyhedron: zero ideal");
  NewtonPolyhedron np;
  np.nvars = a.nvars;
  np.generators = a.gens;
  if (a.is_unit()) return np;  // the whole orthant; no facets beyond it
  if (a.nvars == 1)
    np.facets = facets_dim1(a.gens);
  else if (a.nvars == 2)
    np.facets = facets_dim2(a.gens);
  else
    np.facets = facets_general(a.gens, a.nvars);
  return np;
}

bool np_contains(const NewtonPolyhedron& np, const ExponentVector& m) {
  if (static_cast<int>(m.size()) != np.nvars)
    throw malformed_input("np_contains: point over wrong variable count");
  for (const auto& f : np.facets)
    if (dot(f.normal, m) < f.offset) return false;
  return true;
}

MonomialIdeal integral_closure(const MonomialIdeal& a) {
  if (a.is_zero()) throw precondition_error("integral_closure: zero ideal");
  if (a.is_unit()) return unit_ideal(a.nvars);
  NewtonPolyhedron np = newton_polyhedron(a);
  // Minimal lattice points of NP lie in the box bounded by the generators'
  // coordinatewise maxima.
  std::vector<Exponent> box(a.nvars, 0);
  for (const auto& g : a.gens)
    for (int i = 0; i < a.nvars; ++i) box[i] = std::max(box[i], g[i]);
  std::vector<ExponentVector> found;
  ExponentVector p(std::vector<Exponent>(a.nvars, 0));
  auto scan = [&](auto&& self, int coord) -> void {
    if (coord == a.nvars) {
      if (!np_contains(np, p)) return;
      for (int j = 0; j < a.nvars; ++j) {
        if (p.exps[j] == 0) continue;
        --p.exps[j];
        bool inside = np_contains(np, p);
        ++p.exps[j];
        if (inside) return;  // not a minimal point
      }
      found.push_back(p);
      return;
    }
    for (Exponent v = 0; v <= box[coord]; ++v) {
      p.exps[coord] = v;
      self(self, coord + 1);
    }
    p.exps[coord] = 0;
  };
  scan(scan, 0);
  return make_ideal(a.nvars, std::move(found));
}

bool is_integrally_closed(const MonomialIdeal& a) { return integral_closure(a) == a; }

Rational complement_volume(const NewtonPolyhedron& np) {
  if (np.nvars > 3)
    throw precondition_error("unsupported dimension: exact volume needs nvars <= 3");
  if (!pure_power_per_variable(np.generators, np.nvars))
    throw precondition_error("infinite volume: complement is unbounded");
  for (const auto& g : np.generators)
    if (g.total_degree() == 0) return Rational(0);  // unit ideal

  // The complement is star-shaped from the origin and every positive-offset
  // facet is compact, so the volume is the sum of the cones over the facets.
  Integer scaled = 0;  // volume * nvars!
  for (const auto& f : np.facets) {
    std::vector<ExponentVector> on_plane;
    for (const auto& g : np.generators)
      if (dot(f.normal, g) == f.offset) on_plane.push_back(g);
    if (np.nvars == 1) {
      scaled += f.offset;
    } else if (np.nvars == 2) {
      auto [lo, hi] = std::minmax_element(
          on_plane.begin(), on_plane.end(),
          [](const ExponentVector& a, const ExponentVector& b) { return a[0] < b[0]; });
      scaled += abs(Integer((*lo)[0]) * (*hi)[1] - Integer((*lo)[1]) * (*hi)[0]);
    } else {
      // Order the facet polygon: project out a coordinate with nonzero
      // normal component and take the planar convex hull.
      int drop = 0;
      while (f.normal[drop] == 0) ++drop;
      int u = (drop == 0) ? 1 : 0;
      int v = (drop == 2) ? 1 : 2;
      std::sort(on_plane.begin(), on_plane.end(),
                [&](const ExponentVector& a, const ExponentVector& b) {
                  return a[u] != b[u] ? a[u] < b[u] : a[v] < b[v];
                });
      auto cross = [&](const ExponentVector& o, const ExponentVector& a,
                       const ExponentVector& b) {
        return Integer(a[u] - o[u]) * (b[v] - o[v]) -
               Integer(a[v] - o[v]) * (b[u] - o[u]);
      };
      std::vector<ExponentVector> hull;  // full hull, counterclockwise
      for (const auto& p : on_plane) {
        while (hull.size() >= 2 &&
               cross(hull[hull.size() - 2], hull[hull.size() - 1], p) <= 0)
          hull.pop_back();
        hull.push_back(p);
      }
      std::size_t lower = hull.size() + 1;
      for (auto it = on_plane.rbegin() + 1; it != on_plane.rend(); ++it) {
        while (hull.size() >= lower &&
               cross(hull[hull.size() - 2], hull[hull.size() - 1], *it) <= 0)
          hull.pop_back();
        hull.push_back(*it);
      }
      hull.pop_back();  // first point repeated
      for (std::size_t j = 1; j + 1 < hull.size(); ++j) {
        const auto &p0 = hull[0], &p1 = hull[j], &p2 = hull[j + 1];
        Integer d3 = Integer(p0[0]) * (Integer(p1[1]) * p2[2] - Integer(p1[2]) * p2[1]) -
                     Integer(p0[1]) * (Integer(p1[0]) * p2[2] - Integer(p1[2]) * p2[0]) +
                     Integer(p0[2]) * (Integer(p1[0]) * p2[1] - Integer(p1[1]) * p2[0]);
        scaled += abs(d3);
      }
    }
  }
  return Rational(scaled, factorial(np.nvars));
}

}  // namespace staircase
