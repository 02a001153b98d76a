#include "staircase/experiments.hpp"

#include <algorithm>
#include <sstream>

#include "staircase/counting.hpp"
#include "staircase/ideal_file.hpp"
#include "staircase/ideal_ops.hpp"
#include "staircase/newton.hpp"

namespace staircase {

std::uint64_t SplitMix64::next() {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) { return next() % n; }

SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 r;
  r.state = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  return r;
}

MonomialIdeal random_m_primary_ideal(const FuzzConfig& cfg, std::uint64_t sample_index) {
  const int d = cfg.ring.nvars;
  if (cfg.box < 1) throw malformed_input("fuzz: box bound must be >= 1");
  if (cfg.depth_floor > d * cfg.box)
    throw precondition_error("unsatisfiable config: depth_floor exceeds d * box");
  SplitMix64 rng = sample_stream(cfg.seed, sample_index);
  std::vector<ExponentVector> gens;
  for (int i = 0; i < d; ++i) {
    std::vector<Exponent> e(d, 0);
    e[i] = cfg.box;
    gens.push_back(ExponentVector(std::move(e)));
  }
  for (int k = 0; k < cfg.n_extra_gens; ++k) {
    ExponentVector v;
    do {
      std::vector<Exponent> e(d);
      for (int i = 0; i < d; ++i)
        e[i] = static_cast<Exponent>(rng.below(static_cast<std::uint64_t>(cfg.box) + 1));
      v = ExponentVector(std::move(e));
    } while (v.total_degree() < cfg.depth_floor);
    gens.push_back(std::move(v));
  }
  return make_ideal(d, std::move(gens));
}

std::string to_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "sample,param_n,colength,mu,ord,socle_len,e_num,e_den,ehk_num,ehk_den,"
         "ratio_num,ratio_den,verdict\n";
  for (const auto& r : report.rows) {
    out << r.sample << ',' << r.param_n << ',' << r.colength << ',' << r.mu << ','
        << r.ord << ',' << r.socle_len << ',' << numerator(r.e).str() << ','
        << denominator(r.e).str() << ',' << numerator(r.ehk).str() << ','
        << denominator(r.ehk).str() << ',' << numerator(r.ratio).str() << ','
        << denominator(r.ratio).str() << ',' << (r.pass ? "PASS" : "FAIL") << '\n';
  }
  return out.str();
}

namespace {

Rational rational_pow(Rational base, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

std::string dump(const MonomialIdeal& a) {
  return format_ideal(a, default_var_names(a.nvars));
}

void fail(ReportRow& row, const std::string& what) {
  row.pass = false;
  row.note += row.note.empty() ? what : "; " + what;
}

Count ceil_mul(const Rational& delta, Count n) {
  Integer num = numerator(delta) * n;
  Integer den = denominator(delta);
  Integer q = (num + den - 1) / den;
  return q.convert_to<Count>();
}

MonomialIdeal single_variable_ideal(int nvars, int v) {
  std::vector<Exponent> e(nvars, 0);
  e[v] = 1;
  return make_ideal(nvars, {ExponentVector(std::move(e))});
}

// Projection generator bound along the last variable: a minimal generator
// maps to a minimal generator of one of the slices, so
// mu(J) <= sum_i mu(J_i) with the sum running until the chain reaches the
// unit ideal.
bool projection_generator_bound(const MonomialIdeal& a) {
  const int last = a.nvars - 1;
  Count total = 0;
  Exponent i = 0;
  while (true) {
    MonomialIdeal pi = project(a, last, i);
    total += static_cast<Count>(pi.gens.size());
    if (pi.is_unit()) break;
    ++i;
  }
  return static_cast<Count>(a.gens.size()) <= total;
}

struct RingInvariants {
  Rational e_ring;
  Rational ehk_ring;
};

RingInvariants ring_invariants(const RingSpec& ring) {
  MonomialIdeal m = maximal_ideal(ring.nvars);
  return {hs_multiplicity(ring, m).value, hk_multiplicity(ring, m).value};
}

ExperimentReport finish(ExperimentReport report) {
  for (const auto& r : report.rows)
    if (!r.pass) report.pass = false;
  return report;
}

}  // namespace

ExperimentReport run_inequality_fuzz(const FuzzConfig& cfg) {
  ExperimentReport report;
  report.name = "fuzz";
  report.params = {{"box", std::to_string(cfg.box)},
                   {"extra", std::to_string(cfg.n_extra_gens)},
                   {"floor", std::to_string(cfg.depth_floor)},
                   {"samples", std::to_string(cfg.samples)},
                   {"seed", std::to_string(cfg.seed)}};
  const RingSpec& R = cfg.ring;
  const int d = R.krull_dim;
  if (d < 1 || d > 3)
    throw precondition_error("fuzz: exact multiplicities need dimension 1..3");
  const RingInvariants ri = ring_invariants(R);
  const Integer dfact = factorial(d);
  report.max_dev = 0;

  for (int s = 0; s < cfg.samples; ++s) {
    MonomialIdeal I = random_m_primary_ideal(cfg, static_cast<std::uint64_t>(s));
    ReportRow row;
    row.sample = s;
    row.param_n = d;
    row.ideal = dump(I);
    row.colength = colength(R, I);
    row.mu = min_gens(R, I);
    row.ord = ord(R, I);
    row.socle_len = socle_length(R, I);
    row.e = hs_multiplicity(R, I).value;
    row.ehk = hk_multiplicity(R, I).value;
    row.ratio = row.e / (Rational(dfact) * ri.e_ring * row.colength);

    if (!(row.e <= Rational(dfact) * ri.e_ring * row.colength)) fail(row, "lech");
    if (!(row.e <= Rational(dfact) * row.ehk && row.ehk <= row.e)) fail(row, "hk-chain");
    if (!(row.ehk <= ri.ehk_ring * row.colength)) fail(row, "hk-colength-bound");
    if (d >= 2) {
      // Root-free Hanes bound: e <= d! (1 - mu^(-1/(d-1)))^(d-1) e_HK is
      // equivalent to mu * (1 - e/(d! e_HK))^(d-1) >= 1.
      Rational t = 1 - row.e / (Rational(dfact) * row.ehk);
      if (!(Rational(row.mu) * rational_pow(t, d - 1) >= 1)) fail(row, "hanes");
    }
    MonomialIdeal in_ring = sum(I, R.defining);
    for (int v = 0; v < R.nvars; ++v) {
      std::vector<Exponent> unit(R.nvars, 0);
      unit[v] = 1;
      if (contains(in_ring, ExponentVector(unit))) continue;
      MonomialIdeal xv = single_variable_ideal(R.nvars, v);
      RingSpec Rmod = make_ring(R.nvars, sum(R.defining, xv));
      Count via_colon = colength(R, colon(in_ring, xv));
      Count via_quotient = colength(Rmod, I);
      if (row.colength != via_colon + via_quotient) fail(row, "colon-additivity");
    }
    if (R.is_polynomial()) {
      for (Exponent q = 2; q <= 4; ++q) {
        Count lq = colength(R, frobenius_power(I, q));
        Count expect = row.colength;
        for (int k = 0; k < d; ++k) expect *= q;
        if (lq != expect) fail(row, "frobenius-scaling");
      }
    }
    report.max_dev = std::max(report.max_dev, row.ratio);
    report.rows.push_back(std::move(row));
  }
  return finish(std::move(report));
}

ExperimentReport run_socle_depth_sweep(const RingSpec& ring,
                                       const std::vector<Count>& depth_list,
                                       int samples, std::uint64_t seed) {
  if (!ring.is_polynomial())
    throw precondition_error("socle sweep: polynomial ring required");
  ExperimentReport report;
  report.name = "socle-sweep";
  std::string depths;
  for (std::size_t i = 0; i < depth_list.size(); ++i)
    depths += (i ? "," : "") + std::to_string(depth_list[i]);
  report.params = {{"depths", depths},
                   {"samples", std::to_string(samples)},
                   {"seed", std::to_string(seed)}};
  report.max_dev = 0;

  std::vector<Rational> max_socle, max_mu;
  Count sample_id = 0;
  for (std::size_t k = 0; k < depth_list.size(); ++k) {
    const Count N = depth_list[k];
    FuzzConfig cfg;
    cfg.ring = ring;
    cfg.box = N;
    cfg.n_extra_gens = 8;
    cfg.depth_floor = N;
    cfg.samples = samples;
    cfg.seed = seed;
    Rational worst_socle = 0, worst_mu = 0;
    for (int s = 0; s < samples; ++s, ++sample_id) {
      MonomialIdeal J =
          random_m_primary_ideal(cfg, static_cast<std::uint64_t>(k) * samples + s);
      ReportRow row;
      row.sample = sample_id;
      row.param_n = N;
      row.ideal = dump(J);
      row.colength = colength(ring, J);
      row.mu = min_gens(ring, J);
      row.ord = ord(ring, J);
      row.socle_len = socle_length(ring, J);
      row.ratio = Rational(row.socle_len, row.colength);
      if (!projection_generator_bound(J)) fail(row, "projection-generator-bound");
      worst_socle = std::max(worst_socle, row.ratio);
      worst_mu = std::max(worst_mu, Rational(row.mu, row.colength));
      report.max_dev = std::max(report.max_dev, row.ratio);
      report.rows.push_back(std::move(row));
    }
    max_socle.push_back(worst_socle);
    max_mu.push_back(worst_mu);
  }
  report = finish(std::move(report));
  for (std::size_t k = 0; k + 1 < max_socle.size(); ++k)
    if (max_socle[k + 1] > max_socle[k] || max_mu[k + 1] > max_mu[k]) report.pass = false;
  return report;
}

ExperimentReport run_colength_window(const RingSpec& ring, const Rational& delta,
                                     const std::vector<Count>& n_list, int samples,
                                     std::uint64_t seed) {
  if (!(delta > 0 && delta < 1))
    throw precondition_error("window: delta must lie in (0,1)");
  for (const auto& g : ring.defining.gens)
    for (Exponent e : g.exps)
      if (e > 1)
        throw precondition_error("window: defining ideal must be squarefree");
  for (const auto& f : ring.faces)
    if (!f.top_dimensional)
      throw precondition_error("window: ring must be equidimensional");

  ExperimentReport report;
  report.name = "window";
  std::string ns;
  for (std::size_t i = 0; i < n_list.size(); ++i)
    ns += (i ? "," : "") + std::to_string(n_list[i]);
  report.params = {{"delta", to_string(delta)},
                   {"n", ns},
                   {"samples", std::to_string(samples)},
                   {"seed", std::to_string(seed)}};
  report.max_dev = 0;

  const MonomialIdeal m = maximal_ideal(ring.nvars);
  std::vector<Rational> max_dev_per_n;
  Count sample_id = 0;
  for (std::size_t k = 0; k < n_list.size(); ++k) {
    const Count n = n_list[k];
    const Count floor_deg = ceil_mul(delta, n);
    const MonomialIdeal mn = power(m, n);
    FuzzConfig cfg;
    cfg.ring = ring;
    cfg.box = n;
    cfg.n_extra_gens = 6;
    cfg.depth_floor = floor_deg;
    cfg.samples = samples;
    cfg.seed = seed;
    Rational worst = 0;
    for (int s = 0; s < samples; ++s, ++sample_id) {
      MonomialIdeal extras =
          random_m_primary_ideal(cfg, static_cast<std::uint64_t>(k) * samples + s);
      // The pure powers x_i^n from the sample are absorbed by m^n.
      MonomialIdeal I = sum(mn, extras);
      ReportRow row;
      row.sample = sample_id;
      row.param_n = n;
      row.ideal = dump(I);
      row.colength = colength(ring, I);
      row.mu = min_gens(ring, I);
      row.ord = ord(ring, I);
      row.socle_len = socle_length(ring, I);
      row.ehk = hk_multiplicity(ring, I).value;
      row.ratio = row.ehk / row.colength;
      Rational dev = rational_abs(row.ratio - 1);
      if (ring.is_polynomial() && row.ratio != 1) fail(row, "regular-ratio");
      worst = std::max(worst, dev);
      report.max_dev = std::max(report.max_dev, dev);
      report.rows.push_back(std::move(row));
    }
    max_dev_per_n.push_back(worst);
  }
  report = finish(std::move(report));
  for (std::size_t k = 0; k + 1 < max_dev_per_n.size(); ++k)
    if (max_dev_per_n[k + 1] > max_dev_per_n[k]) report.pass = false;
  return report;
}

namespace {

std::vector<Count> get_list(const std::map<std::string, std::string>& params,
                            const std::string& key, const std::string& fallback) {
  auto it = params.find(key);
  return parse_count_list(it == params.end() ? fallback : it->second);
}

Rational get_rational(const std::map<std::string, std::string>& params,
                      const std::string& key, const std::string& fallback) {
  auto it = params.find(key);
  return parse_rational(it == params.end() ? fallback : it->second);
}

Count get_count(const std::map<std::string, std::string>& params,
                const std::string& key, Count fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  auto list = parse_count_list(it->second);
  if (list.size() != 1) throw malformed_input("parameter '" + key + "' wants one value");
  return list[0];
}

std::uint64_t get_seed(const std::map<std::string, std::string>& params) {
  auto it = params.find("seed");
  if (it == params.end()) return 42;
  try {
    return std::stoull(it->second);
  } catch (const std::exception&) {
    throw malformed_input("bad seed: " + it->second);
  }
}

void echo_params(ExperimentReport& report,
                 const std::map<std::string, std::string>& params) {
  for (const auto& [k, v] : params) report.params.emplace_back(k, v);
}

MonomialIdeal squarefree_product_ideal(int nvars) {
  // (x_0 x_1 ... x_{n-1})
  return make_ideal(nvars, {ExponentVector(std::vector<Exponent>(nvars, 1))});
}

RingSpec named_ring(const std::string& key) {
  if (key == "poly1") return polynomial_ring(1);
  if (key == "poly2") return polynomial_ring(2);
  if (key == "poly3") return polynomial_ring(3);
  if (key == "x2")
    return make_ring(2, make_ideal(2, {ExponentVector({2, 0})}));
  if (key == "xyz") return make_ring(3, squarefree_product_ideal(3));
  if (key == "xy")
    return make_ring(3, make_ideal(3, {ExponentVector({1, 1, 0})}));
  throw malformed_input("unknown ring key: " + key +
                        " (expected poly1|poly2|poly3|x2|xy|xyz)");
}

ExperimentReport family_cx(const std::map<std::string, std::string>& params) {
  ExperimentReport report;
  report.name = "cx-family";
  echo_params(report, params);
  report.max_dev = 0;
  RingSpec R = polynomial_ring(2);
  MonomialIdeal x = single_variable_ideal(2, 0);
  Count sample = 0;
  for (Count N : get_list(params, "N", "2..12")) {
    if (N < 2) throw malformed_input("cx-family: N must be >= 2");
    std::vector<ExponentVector> gens;
    for (Count i = 1; i <= N; ++i) gens.push_back(ExponentVector({i, N - i}));
    gens.push_back(ExponentVector({0, N * N * N}));
    MonomialIdeal I = make_ideal(2, std::move(gens));
    ReportRow row;
    row.sample = sample++;
    row.param_n = N;
    row.ideal = dump(I);
    row.colength = colength(R, I);
    row.mu = min_gens(R, I);
    row.ord = ord(R, I);
    row.socle_len = socle_length(R, I);
    row.e = hs_multiplicity(R, I).value;
    row.ehk = hk_multiplicity(R, I).value;
    Count with_c = colength(R, sum(I, x));
    row.ratio = Rational(with_c, row.colength);
    if (with_c != N * N * N) fail(row, "l(R/(I,x)) != N^3");
    if (row.colength != N * N * N + N * (N - 1) / 2) fail(row, "l(R/I) != N^3 + N(N-1)/2");
    report.max_dev = std::max(report.max_dev, Rational(Rational(1) - row.ratio));
    report.rows.push_back(std::move(row));
  }
  return finish(std::move(report));
}

ExperimentReport family_socle_colon(const std::map<std::string, std::string>& params) {
  ExperimentReport report;
  report.name = "socle-colon";
  echo_params(report, params);
  report.max_dev = 0;
  RingSpec R = polynomial_ring(3);
  MonomialIdeal xy = make_ideal(3, {ExponentVector({1, 0, 0}), ExponentVector({0, 1, 0})});
  MonomialIdeal m = maximal_ideal(3);
  Count sample = 0;
  for (Count N : get_list(params, "N", "2..6")) {
    for (Count L : get_list(params, "L", "10,50,200")) {
      if (N < 2 || L < N) throw malformed_input("socle-colon: need N >= 2 and L >= N");
      std::vector<ExponentVector> gens;
      for (Count i = 1; i <= N; ++i)
        for (Count a = 0; a <= i; ++a) gens.push_back(ExponentVector({a, i - a, N - i}));
      gens.push_back(ExponentVector({0, 0, L}));
      MonomialIdeal I = make_ideal(3, std::move(gens));
      ReportRow row;
      row.sample = sample++;
      row.param_n = N;
      row.ideal = dump(I);
      row.colength = colength(R, I);
      row.mu = min_gens(R, I);
      row.ord = ord(R, I);
      row.socle_len = socle_length(R, I);
      row.e = hs_multiplicity(R, I).value;
      row.ehk = hk_multiplicity(R, I).value;
      if (colon(I, xy) != power(m, N - 1)) fail(row, "colon is not m^(N-1)");
      Count cq = colon_quotient_length(R, I, xy);
      row.ratio = Rational(cq, row.colength);
      report.max_dev = std::max(report.max_dev, Rational(Rational(1) - row.ratio));
      report.rows.push_back(std::move(row));
    }
  }
  return finish(std::move(report));
}

ExperimentReport family_nonreduced(const std::map<std::string, std::string>& params) {
  ExperimentReport report;
  report.name = "nonreduced";
  echo_params(report, params);
  report.max_dev = 0;
  const Rational delta = get_rational(params, "delta", "1/2");
  const Rational epsilon = get_rational(params, "epsilon", "1/5");
  if (!(delta > 0 && delta < 1)) throw malformed_input("nonreduced: delta must be in (0,1)");
  RingSpec R = named_ring("x2");
  MonomialIdeal m = maximal_ideal(2);
  MonomialIdeal x = single_variable_ideal(2, 0);
  Count sample = 0;
  for (Count n : get_list(params, "n", "2..20")) {
    if (n < 1) throw malformed_input("nonreduced: n must be >= 1");
    Count dn = ceil_mul(delta, n);
    MonomialIdeal I = sum(power(m, n), product(x, power(m, dn)));
    ReportRow row;
    row.sample = sample++;
    row.param_n = n;
    row.ideal = dump(I);
    row.colength = colength(R, I);
    row.mu = min_gens(R, I);
    row.ord = ord(R, I);
    row.socle_len = socle_length(R, I);
    row.e = hs_multiplicity(R, I).value;
    row.ehk = hk_multiplicity(R, I).value;
    row.ratio = row.e / row.colength;
    if (row.e != Rational(2 * n)) fail(row, "e != 2n");
    if (row.colength != n + dn) fail(row, "l != n + ceil(delta n)");
    if (!(row.e > (1 + epsilon) * row.colength)) fail(row, "e <= (1+eps) l");
    // closure of I_n + (x^2) agrees with closure of m^n + (x^2) in the
    // ambient ring: the x-part is nilpotent in the quotient.
    MonomialIdeal ambient = sum(I, R.defining);
    MonomialIdeal reference = sum(power(m, n), R.defining);
    if (integral_closure(ambient) != integral_closure(reference))
      fail(row, "ambient closure mismatch");
    report.max_dev = std::max(report.max_dev, Rational((1 + epsilon) * row.colength / row.e));
    report.rows.push_back(std::move(row));
  }
  return finish(std::move(report));
}

ExperimentReport family_t_adic(const std::map<std::string, std::string>& params) {
  ExperimentReport report;
  report.name = "t-adic";
  echo_params(report, params);
  report.max_dev = 0;
  const Count nmax = get_count(params, "nmax", 4);
  const auto Ls = get_list(params, "L", "2..10");
  RingSpec R2 = polynomial_ring(2);
  RingSpec S3 = polynomial_ring(3);
  Count sample = 0;

  const std::vector<MonomialIdeal> bases = {
      make_ideal(2, {ExponentVector({2, 0}), ExponentVector({1, 1}), ExponentVector({0, 3})}),
      make_ideal(2, {ExponentVector({3, 0}), ExponentVector({0, 2})})};
  for (const auto& I0 : bases) {
    const Rational e_base = hs_multiplicity(R2, I0).value;
    const std::vector<Count> base_seq = hs_sequence(R2, I0, nmax);
    for (Count L : Ls) {
      if (L < 1) throw malformed_input("t-adic: L must be >= 1");
      std::vector<ExponentVector> gens;
      for (const auto& g : I0.gens) gens.push_back(ExponentVector({g[0], g[1], 0}));
      gens.push_back(ExponentVector({0, 0, L}));
      MonomialIdeal J = make_ideal(3, std::move(gens));
      ReportRow row;
      row.sample = sample++;
      row.param_n = L;
      row.ideal = dump(J);
      row.colength = colength(S3, J);
      row.mu = min_gens(S3, J);
      row.ord = ord(S3, J);
      row.socle_len = socle_length(S3, J);
      row.e = hs_multiplicity(S3, J).value;
      row.ehk = hk_multiplicity(S3, J).value;
      row.ratio = row.e / (Rational(L) * e_base);
      if (row.e != Rational(L) * e_base) fail(row, "e(J) != L e(I)");
      std::vector<Count> seq = hs_sequence(S3, J, nmax);
      Count acc = 0;
      for (Count n = 1; n <= nmax; ++n) {
        acc += base_seq[n - 1];
        if (seq[n - 1] != L * acc) fail(row, "l(S/J^n) != L sum l(R/I^k)");
      }
      report.max_dev = std::max(report.max_dev, rational_abs(row.ratio - 1));
      report.rows.push_back(std::move(row));
    }
  }

  // Dimension-one base with e(R) = 4: S = K[u]/(u^4)[[T]], N = 3.
  RingSpec S4 = make_ring(2, make_ideal(2, {ExponentVector({4, 0})}));
  const Count N = 3;
  for (Count L : Ls) {
    if (L < N + 1) continue;
    std::vector<ExponentVector> gens;
    for (Count i = 0; i < N; ++i) gens.push_back(ExponentVector({N - i, i}));
    for (Count j = N; j < L; ++j) gens.push_back(ExponentVector({1, j}));
    gens.push_back(ExponentVector({0, L}));
    MonomialIdeal J = make_ideal(2, std::move(gens));
    ReportRow row;
    row.sample = sample++;
    row.param_n = L;
    row.ideal = dump(J);
    row.colength = colength(S4, J);
    row.mu = min_gens(S4, J);
    row.ord = ord(S4, J);
    row.socle_len = socle_length(S4, J);
    row.e = hs_multiplicity(S4, J).value;
    row.ehk = hk_multiplicity(S4, J).value;
    row.ratio = row.e / row.colength;
    if (row.colength != L + 3) fail(row, "l(S/J) != L + 3");
    if (row.e != Rational(4 * L)) fail(row, "e(J) != 4L");
    if (L >= 9 && !(row.e >= Rational(3) * row.colength)) fail(row, "e(J) < 3 l(S/J)");
    report.max_dev = std::max(report.max_dev, rational_abs(row.ratio - 4));
    report.rows.push_back(std::move(row));
  }
  return finish(std::move(report));
}

ExperimentReport family_dim_one_limit(const std::map<std::string, std::string>& params) {
  ExperimentReport report;
  report.name = "dim-one-limit";
  echo_params(report, params);
  report.max_dev = 0;
  RingSpec R = make_ring(2, make_ideal(2, {ExponentVector({2, 1})}));
  Count max_local = 0;
  for (const auto& f : R.faces) max_local = std::max(max_local, f.local_length);
  MonomialIdeal m = maximal_ideal(2);
  MonomialIdeal x = single_variable_ideal(2, 0);
  Count sample = 0;
  for (Count N : get_list(params, "N", "1..50")) {
    if (N < 1) throw malformed_input("dim-one-limit: N must be >= 1");
    MonomialIdeal I = sum(x, power(m, N));
    ReportRow row;
    row.sample = sample++;
    row.param_n = N;
    row.ideal = dump(I);
    row.colength = colength(R, I);
    row.mu = min_gens(R, I);
    row.ord = ord(R, I);
    row.socle_len = socle_length(R, I);
    row.e = hs_multiplicity(R, I).value;
    row.ehk = hk_multiplicity(R, I).value;
    row.ratio = row.e / row.colength;
    if (max_local != 2) fail(row, "max local length != 2");
    if (row.ratio != Rational(2 * N + 1, N)) fail(row, "ratio != (2N+1)/N");
    if (!(rational_abs(row.ratio - 2) <= Rational(1, N))) fail(row, "|ratio - 2| > 1/N");
    report.max_dev = std::max(report.max_dev, rational_abs(row.ratio - 2));
    report.rows.push_back(std::move(row));
  }
  return finish(std::move(report));
}

ExperimentReport family_power_ratio(const std::map<std::string, std::string>& params) {
  ExperimentReport report;
  report.name = "power-ratio";
  echo_params(report, params);
  report.max_dev = 0;
  RingSpec R = named_ring("xyz");
  MonomialIdeal J = power(maximal_ideal(3), 2);
  Count sample = 0;
  std::vector<Rational> devs;
  for (Count n : get_list(params, "n", "1..8")) {
    if (n < 1) throw malformed_input("power-ratio: n must be >= 1");
    MonomialIdeal Jn = power(J, n);
    ReportRow row;
    row.sample = sample++;
    row.param_n = n;
    row.ideal = dump(Jn);
    row.colength = colength(R, Jn);
    row.mu = min_gens(R, Jn);
    row.ord = ord(R, Jn);
    row.socle_len = socle_length(R, Jn);
    row.e = hs_multiplicity(R, Jn).value;
    row.ehk = hk_multiplicity(R, Jn).value;
    row.ratio = row.ehk / row.colength;
    devs.push_back(rational_abs(row.ratio - 1));
    report.max_dev = std::max(report.max_dev, devs.back());
    report.rows.push_back(std::move(row));
  }
  report = finish(std::move(report));
  for (std::size_t k = 0; k + 1 < devs.size(); ++k)
    if (devs[k + 1] > devs[k]) report.pass = false;
  return report;
}

}  // namespace

ExperimentReport run_named_family(const std::string& name,
                                  const std::map<std::string, std::string>& params) {
  if (name == "cx-family") return family_cx(params);
  if (name == "socle-colon") return family_socle_colon(params);
  if (name == "nonreduced") return family_nonreduced(params);
  if (name == "t-adic") return family_t_adic(params);
  if (name == "dim-one-limit") return family_dim_one_limit(params);
  if (name == "power-ratio") return family_power_ratio(params);
  throw malformed_input("unknown family: " + name);
}

std::vector<std::string> experiment_names() {
  return {"fuzz",       "socle-sweep", "window",        "cx-family",
          "socle-colon", "nonreduced",  "t-adic",        "dim-one-limit",
          "power-ratio"};
}

ExperimentReport run_experiment(const std::string& name,
                                const std::map<std::string, std::string>& params) {
  if (name == "fuzz") {
    FuzzConfig cfg;
    auto ring_it = params.find("ring");
    if (ring_it != params.end())
      cfg.ring = named_ring(ring_it->second);
    else
      cfg.ring = polynomial_ring(static_cast<int>(get_count(params, "dim", 2)));
    cfg.box = get_count(params, "box", 6);
    cfg.n_extra_gens = static_cast<int>(get_count(params, "extra", 6));
    cfg.depth_floor = get_count(params, "floor", 2);
    cfg.samples = static_cast<int>(get_count(params, "samples", 100));
    cfg.seed = get_seed(params);
    return run_inequality_fuzz(cfg);
  }
  if (name == "socle-sweep") {
    RingSpec ring = polynomial_ring(static_cast<int>(get_count(params, "dim", 3)));
    return run_socle_depth_sweep(ring, get_list(params, "depths", "2,4,8,16"),
                                 static_cast<int>(get_count(params, "samples", 100)),
                                 get_seed(params));
  }
  if (name == "window") {
    auto ring_it = params.find("ring");
    RingSpec ring = named_ring(ring_it == params.end() ? "xyz" : ring_it->second);
    return run_colength_window(ring, get_rational(params, "delta", "1/2"),
                               get_list(params, "n", "4,8,16"),
                               static_cast<int>(get_count(params, "samples", 50)),
                               get_seed(params));
  }
  return run_named_family(name, params);
}

std::vector<Count> parse_count_list(const std::string& text) {
  std::vector<Count> out;
  std::size_t pos = 0;
  if (text.empty()) throw malformed_input("empty integer list");
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    std::size_t dots = item.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stoll(item));
      } else {
        Count a = std::stoll(item.substr(0, dots));
        Count b = std::stoll(item.substr(dots + 2));
        if (b < a) throw malformed_input("descending range: " + item);
        for (Count v = a; v <= b; ++v) out.push_back(v);
      }
    } catch (const malformed_input&) {
      throw;
    } catch (const std::exception&) {
      throw malformed_input("bad integer list item: " + item);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Rational parse_rational(const std::string& text) {
  try {
    std::size_t slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw malformed_input("zero denominator: " + text);
    return Rational(num, den);
  } catch (const malformed_input&) {
    throw;
  } catch (const std::exception&) {
    throw malformed_input("bad rational: " + text);
  }
}

}  // namespace staircase
