#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "staircase/core.hpp"
#include "staircase/multiplicity.hpp"
#include "staircase/rational.hpp"

namespace staircase {

// splitmix64. The full transition function, so that any port reproduces the
// same streams: state += 0x9E3779B97F4A7C15; z = state; z ^= z >> 30;
// z *= 0xBF58476D1CE4E5B9; z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31.
struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next();
  // next() % n; n > 0.
  std::uint64_t below(std::uint64_t n);
};

// Stream for one sample: state = seed + (index + 1) * 0x9E3779B97F4A7C15.
SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t index);

struct FuzzConfig {
  RingSpec ring;
  Exponent box = 6;          // per-variable exponent bound B
  int n_extra_gens = 6;      // random generators beyond the pure powers x_i^B
  Exponent depth_floor = 0;  // minimum total degree of the extra generators
  int samples = 100;
  std::uint64_t seed = 0;
};

// Deterministic in (cfg.seed, sample_index): the pure powers x_i^B plus
// n_extra_gens vectors drawn uniformly from [0,B]^d, rejection-sampled to
// total degree >= depth_floor, then minimalized. Always m-primary.
MonomialIdeal random_m_primary_ideal(const FuzzConfig& cfg, std::uint64_t sample_index);

struct ReportRow {
  Count sample = 0;
  Count param_n = 0;
  std::string ideal;  // generator dump, for failure forensics
  Count colength = 0;
  Count mu = 0;
  Count ord = 0;
  Count socle_len = 0;
  Rational e;
  Rational ehk;
  Rational ratio;
  bool pass = true;
  std::string note;
};

struct ExperimentReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<ReportRow> rows;
  Rational max_dev;
  bool pass = true;
};

// Fixed CSV schema:
// sample,param_n,colength,mu,ord,socle_len,e_num,e_den,ehk_num,ehk_den,ratio_num,ratio_den,verdict
std::string to_csv(const ExperimentReport& report);

// Per sample: computes l, mu, ord, socle, e, e_HK and checks, exactly,
// Lech's inequality, the chain e/d! <= e_HK <= e, e_HK(I)/l <= e_HK(R), the
// Hanes bound (d >= 2), colon-quotient length additivity for every variable
// outside the ideal, and l(R/I^[q]) = q^d l(R/I) for q in {2,3,4} over
// polynomial rings. Violations become FAIL rows; they are data, not errors.
ExperimentReport run_inequality_fuzz(const FuzzConfig& cfg);

// For each depth N, samples ideals of order >= N and records the maxima of
// the socle ratio l((I:m)/I)/l(R/I) and of mu/l; the summary checks both
// maxima are non-increasing along the depth list, and every sample satisfies
// the projection generator bound mu(J) <= sum_i mu(J_i).
ExperimentReport run_socle_depth_sweep(const RingSpec& ring,
                                       const std::vector<Count>& depth_list,
                                       int samples, std::uint64_t seed);

// Sandwich sweep m^n <= I <= m^(ceil(delta*n)): records e_HK(I)/l(R/I) per
// sample and checks the maximal deviation |ratio - 1| is non-increasing in n.
// Requires a reduced equidimensional model: squarefree defining ideal with
// all faces top-dimensional.
ExperimentReport run_colength_window(const RingSpec& ring, const Rational& delta,
                                     const std::vector<Count>& n_list, int samples,
                                     std::uint64_t seed);

// Named closed-form families; see the registry in experiment_names().
// Unknown names throw malformed_input.
ExperimentReport run_named_family(const std::string& name,
                                  const std::map<std::string, std::string>& params);

std::vector<std::string> experiment_names();

// Dispatch by registry name ("fuzz", "socle-sweep", "window", or a named
// family), parsing the family parameters from the key/value map.
ExperimentReport run_experiment(const std::string& name,
                                const std::map<std::string, std::string>& params);

// Helpers shared with the CLI: inclusive "a..b" ranges and comma lists.
std::vector<Count> parse_count_list(const std::string& text);
Rational parse_rational(const std::string& text);

}  // namespace staircase
