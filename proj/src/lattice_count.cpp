#include "staircase/lattice_count.hpp"

#include <algorithm>

namespace staircase {

namespace {

[[noreturn]] void infinite() {
  throw precondition_error("infinite length: ideal is not m-primary");
}

Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw internal_error("lattice count overflow");
  return r;
}

Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw internal_error("lattice count overflow");
  return r;
}

// Antichain under componentwise <=, supporting insert-with-absorption.
struct AntiChain {
  std::vector<ExponentVector> elems;
  bool has_unit = false;

  void insert(ExponentVector w) {
    if (has_unit) return;
    if (w.total_degree() == 0) {
      has_unit = true;
      elems.clear();
      elems.push_back(std::move(w));
      return;
    }
    for (const auto& u : elems)
      if (divides(u, w)) return;
    std::erase_if(elems, [&](const ExponentVector& u) { return divides(w, u); });
    elems.push_back(std::move(w));
  }
};

Count count_rec(std::vector<ExponentVector> gens, int nvars);

// Columns of the plane staircase: generators sorted by first coordinate have
// strictly decreasing second coordinate.
Count count_dim2(std::vector<ExponentVector> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const ExponentVector& a, const ExponentVector& b) {
              return a[0] < b[0];
            });
  if (gens.empty() || gens.front()[0] != 0 || gens.back()[1] != 0) infinite();
  Count total = 0;
  for (std::size_t j = 0; j + 1 < gens.size(); ++j)
    total = checked_add(total, checked_mul(gens[j + 1][0] - gens[j][0], gens[j][1]));
  return total;
}

Count count_rec(std::vector<ExponentVector> gens, int nvars) {
  for (const auto& g : gens)
    if (g.total_degree() == 0) return 0;  // unit ideal
  if (nvars == 0) return gens.empty() ? 1 : 0;
  if (gens.empty()) infinite();
  if (nvars == 1) {
    Exponent lo = gens.front()[0];
    for (const auto& g : gens) lo = std::min(lo, g[0]);
    return lo;
  }
  // Minimalize before the base formula / slicing.
  {
    std::stable_sort(gens.begin(), gens.end(),
                     [](const ExponentVector& a, const ExponentVector& b) {
                       return a.total_degree() < b.total_degree();
                     });
    std::vector<ExponentVector> min;
    for (auto& g : gens) {
      bool dominated = false;
      for (const auto& kept : min)
        if (divides(kept, g)) {
          dominated = true;
          break;
        }
      if (!dominated) min.push_back(std::move(g));
    }
    gens = std::move(min);
  }
  if (nvars == 2) return count_dim2(std::move(gens));

  // Slice on the last coordinate. The slice ideal only changes at coordinate
  // values carried by a generator, so identical slices are counted in runs.
  const int last = nvars - 1;
  std::sort(gens.begin(), gens.end(),
            [&](const ExponentVector& a, const ExponentVector& b) {
              return a[last] < b[last];
            });
  AntiChain chain;
  Count total = 0;
  Exponent prev = 0;
  std::size_t idx = 0;
  while (idx < gens.size()) {
    Exponent v = gens[idx][last];
    if (v > prev) {
      Count slab = count_rec(chain.elems, nvars - 1);  // throws when empty
      total = checked_add(total, checked_mul(v - prev, slab));
      prev = v;
    }
    while (idx < gens.size() && gens[idx][last] == v) {
      ExponentVector w = gens[idx];
      w.exps.pop_back();
      chain.insert(std::move(w));
      ++idx;
    }
    if (chain.has_unit) return total;
  }
  infinite();  // no pure power of the last variable
}

}  // namespace

Count count_standard_monomials(const std::vector<ExponentVector>& gens, int nvars) {
  return count_rec(gens, nvars);
}

}  // namespace staircase
