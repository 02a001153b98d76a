// Brute-force oracles, independent of the engine's counting and hull paths.
#pragma once

#include <vector>

#include "staircase/core.hpp"

namespace staircase::oracle {

// Count lattice points in the box prod [0, max_i gens coordinate) that no
// generator divides. Agrees with the colength for m-primary inputs.
inline Count box_count_standard(const std::vector<ExponentVector>& gens, int nvars) {
  std::vector<Exponent> bound(nvars, 0);
  for (const auto& g : gens)
    for (int i = 0; i < nvars; ++i) bound[i] = std::max(bound[i], g[i]);
  Count total = 0;
  ExponentVector p(std::vector<Exponent>(nvars, 0));
  auto walk = [&](auto&& self, int coord) -> void {
    if (coord == nvars) {
      for (const auto& g : gens)
        if (divides(g, p)) return;
      ++total;
      return;
    }
    for (Exponent v = 0; v < bound[coord]; ++v) {
      p.exps[coord] = v;
      self(self, coord + 1);
    }
    p.exps[coord] = 0;
  };
  walk(walk, 0);
  return total;
}

// All lattice points of the box prod [0, limit_i], for membership sweeps.
inline std::vector<ExponentVector> box_points(const std::vector<Exponent>& limit) {
  std::vector<ExponentVector> out;
  ExponentVector p(std::vector<Exponent>(limit.size(), 0));
  auto walk = [&](auto&& self, std::size_t coord) -> void {
    if (coord == limit.size()) {
      out.push_back(p);
      return;
    }
    for (Exponent v = 0; v <= limit[coord]; ++v) {
      p.exps[coord] = v;
      self(self, coord + 1);
    }
    p.exps[coord] = 0;
  };
  walk(walk, 0);
  return out;
}

}  // namespace staircase::oracle
