#include "pnr/theorems.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "pnr/ellipse.hpp"
#include "pnr/errors.hpp"
#include "pnr/geometry.hpp"
#include "pnr/herm_eig.hpp"

namespace pnr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

using Params = std::vector<std::pair<std::string, std::string>>;

std::string num(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

std::string num(std::size_t x) { return std::to_string(x); }

Params spec_params(const PeriodSpec& spec) { return {{"spec", format_spec(spec)}}; }

Params cfg_params(const SweepConfig& cfg) {
  return {{"num_theta", std::to_string(cfg.num_theta)},
          {"num_phi", std::to_string(cfg.num_phi)},
          {"refine_tol", num(cfg.refine_tol)}};
}

Params join(Params a, const Params& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Eigen::MatrixXcd to_eigen(const CMatrix& m) {
  Eigen::MatrixXcd out(m.dim(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = m(i, j);
  return out;
}

// Largest distance between greedily paired entries of two equal-size multisets.
double greedy_multiset_distance(std::vector<double> x, std::vector<double> y) {
  if (x.size() != y.size()) return kInf;
  double worst = 0.0;
  std::vector<bool> used(y.size(), false);
  for (double v : x) {
    std::size_t best = y.size();
    double best_d = kInf;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (!used[j] && std::abs(v - y[j]) < best_d) {
        best_d = std::abs(v - y[j]);
        best = j;
      }
    }
    used[best] = true;
    worst = std::max(worst, best_d);
  }
  return worst;
}

RangePolygon negated(const RangePolygon& p) {
  std::vector<Complex> pts;
  pts.reserve(p.size());
  for (const auto& z : p.points) pts.push_back(-z);
  return convex_hull(pts);
}

RangePolygon hull_of_union(const RangePolygon& p, const RangePolygon& q) {
  std::vector<Complex> pts = p.points;
  pts.insert(pts.end(), q.points.begin(), q.points.end());
  return convex_hull(pts);
}

SweepConfig profile_config(Profile profile) {
  SweepConfig cfg;
  if (profile == Profile::quick) {
    cfg.num_theta = 360;
    cfg.num_phi = 360;
  }
  return cfg;
}

}  // namespace

bool CheckReport::as_expected() const {
  switch (expect) {
    case Expect::pass: return passed;
    case Expect::fail: return !passed;
    case Expect::none: return true;
  }
  return false;
}

CheckReport make_report(std::string name, Params parameters, double metric, double tolerance, Expect expect) {
  CheckReport r;
  r.name = std::move(name);
  r.parameters = std::move(parameters);
  r.metric = metric;
  r.tolerance = tolerance;
  r.passed = metric <= tolerance;
  r.expect = expect;
  return r;
}

CheckReport check_block_diagonalization(const PeriodSpec& spec, std::size_t s) {
  return check_block_diagonalization(spec, s, build_circulant(spec, s));
}

CheckReport check_block_diagonalization(const PeriodSpec& spec, std::size_t s, const CMatrix& circulant) {
  const CMatrix u = build_block_unitary(spec.period(), s);
  const CMatrix conjugated = mat_mul(adjoint(u), mat_mul(circulant, u));
  const double defect = frobenius_distance(conjugated, build_symbol_direct_sum(spec, s));
  const double tol = 1e-10 * (1.0 + frobenius_norm(circulant));
  return make_report("block_diagonalization", join(spec_params(spec), {{"s", num(s)}}), defect, tol);
}

CheckReport check_spectrum_lifting(const PeriodSpec& spec, std::size_t s) {
  const CMatrix circulant = build_circulant(spec, s);
  double residual = 0.0;
  std::vector<double> block_values;
  for (std::size_t k = 0; k < s; ++k) {
    const double phi = grid_angle(k, s);
    const CMatrix symbol = build_symbol(spec, phi);
    const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(to_eigen(symbol));
    if (solver.info() != Eigen::Success) throw NoConvergence("check_spectrum_lifting: symbol eigensolver failed");
    for (Eigen::Index j = 0; j < solver.eigenvalues().size(); ++j) {
      const Complex lambda = solver.eigenvalues()(j);
      CVector v(symbol.dim());
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = solver.eigenvectors()(static_cast<Eigen::Index>(i), j);
      const CVector lifted = lift_eigenvector(v, phi, s);
      CVector r = mat_vec(circulant, lifted);
      for (std::size_t i = 0; i < r.size(); ++i) r[i] -= lambda * lifted[i];
      residual = std::max(residual, norm(r) / ((1.0 + std::abs(lambda)) * norm(lifted)));
    }
    if (spec.is_self_adjoint()) {
      const HermEigen e = eig_hermitian(hermitian_part(symbol, 0.0));
      block_values.insert(block_values.end(), e.values.begin(), e.values.end());
    }
  }
  Params params = join(spec_params(spec), {{"s", num(s)}, {"lift_residual", num(residual)}});
  double metric = residual;
  if (spec.is_self_adjoint()) {
    const HermEigen full = eig_hermitian(hermitian_part(circulant, 0.0));
    const double gap = greedy_multiset_distance(full.values, block_values);
    params.emplace_back("spectrum_gap", num(gap));
    if (gap > 1e-8) metric = kInf;
  }
  return make_report("spectrum_lifting", std::move(params), metric, 1e-10);
}

CheckReport check_main_theorem(const PeriodSpec& spec, std::size_t k_max, const SweepConfig& cfg,
                               double tolerance) {
  if (k_max < 2 * spec.period()) throw DomainError("check_main_theorem: k_max must be at least 2p");
  const RangePolygon trunc = truncation_range(spec, k_max, cfg);
  const RangePolygon hull = symbol_union_hull(spec, cfg);
  double excess = 0.0;
  for (const auto& z : trunc.points) excess = std::max(excess, distance_to_region(hull, z));
  const double h = hausdorff(trunc, hull);
  Params params = join(join(spec_params(spec), {{"k_max", num(k_max)}, {"containment_excess", num(excess)},
                                                {"hausdorff", num(h)}}),
                       cfg_params(cfg));
  return make_report("main_theorem", std::move(params), excess <= 1e-6 ? h : kInf, tolerance);
}

CheckReport check_selfadjoint_theorem(const PeriodSpec& spec, std::size_t k_max, const SweepConfig& cfg,
                                      double tolerance) {
  const Interval iv = selfadjoint_interval(spec, cfg);
  const ExtremePair trunc = extreme_pair(hermitian_part(build_truncation(spec, k_max), 0.0));
  const double metric = std::max(std::abs(iv.lower - trunc.lower), std::abs(iv.upper - trunc.upper));
  Params params = join(spec_params(spec), {{"k_max", num(k_max)},
                                           {"a", num(iv.lower)},
                                           {"b", num(iv.upper)},
                                           {"trunc_min", num(trunc.lower)},
                                           {"trunc_max", num(trunc.upper)}});
  return make_report("selfadjoint_theorem", join(std::move(params), cfg_params(cfg)), metric, tolerance);
}

SpcaseSets spcase_sets(const PeriodSpec& spec, const SweepConfig& cfg) {
  const ConjecturePair cd = conjecture_matrices(1);
  return SpcaseSets{symbol_union_hull(spec, cfg), stadium_region(cfg.num_theta),
                    hull_of_union(range_boundary(cd.plus, cfg), range_boundary(cd.minus, cfg))};
}

CheckReport check_spcase(const SweepConfig& cfg, const PeriodSpec& spec, Expect expect) {
  const SpcaseSets sets = spcase_sets(spec, cfg);
  const double to_stadium = hausdorff(sets.symbol_hull, sets.stadium);
  const double two_matrix = hausdorff(sets.stadium, sets.two_matrix_hull);
  Params params = join(spec_params(spec), {{"hull_vs_stadium", num(to_stadium)},
                                           {"stadium_vs_two_matrix", num(two_matrix)},
                                           {"support_0", num(support_width(sets.symbol_hull, 0.0))},
                                           {"support_pi_2", num(support_width(sets.symbol_hull, kPi / 2))}});
  const std::string name = expect == Expect::fail ? "spcase_negative_control" : "spcase";
  return make_report(name, join(std::move(params), cfg_params(cfg)), std::max(to_stadium, two_matrix), 2e-3,
                     expect);
}

PeriodSpec conjecture_spec(std::size_t n) {
  if (n < 1) throw DomainError("conjecture_spec: n must be positive");
  std::string word(n, '0');
  word.push_back('1');
  return PeriodSpec::from_word(word);
}

CheckReport check_conjecture(std::size_t n, std::size_t k_max, const SweepConfig& cfg) {
  if (n < 1 || n > 4) throw DomainError("check_conjecture: n must be in 1..4");
  const PeriodSpec spec = conjecture_spec(n);
  const ConjecturePair bj = conjecture_matrices(n);
  const RangePolygon plus = range_boundary(bj.plus, cfg);
  const RangePolygon minus = range_boundary(bj.minus, cfg);
  const double mirror = hausdorff(plus, negated(minus));
  const RangePolygon target = hull_of_union(plus, minus);
  const RangePolygon hull = symbol_union_hull(spec, cfg);
  const double h = hausdorff(hull, target);
  const double trunc_gap = hausdorff(truncation_range(spec, k_max, cfg), target);
  Params params = join(spec_params(spec), {{"n", num(n)},
                                           {"k_max", num(k_max)},
                                           {"hausdorff", num(h)},
                                           {"mirror_defect", num(mirror)},
                                           {"truncation_gap", num(trunc_gap)},
                                           {"plus_support_0", num(support_width(plus, 0.0))},
                                           {"plus_support_pi_2", num(support_width(plus, kPi / 2))}});
  return make_report("conjecture", join(std::move(params), cfg_params(cfg)), mirror <= 1e-8 ? h : kInf, 0.02,
                     n <= 3 ? Expect::pass : Expect::none);
}

CheckReport check_origin_symmetry(const PeriodSpec& spec, std::size_t k_max, const SweepConfig& cfg) {
  for (const auto& b : spec.b)
    if (b != Complex{}) throw DomainError("check_origin_symmetry: diagonal must vanish");
  double worst = 0.0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const RangePolygon p = truncation_range(spec, k, cfg);
    worst = std::max(worst, hausdorff(p, negated(p)));
  }
  return make_report("origin_symmetry", join(join(spec_params(spec), {{"k_max", num(k_max)}}), cfg_params(cfg)),
                     worst, 1e-8);
}

CheckReport check_ellipse_symbols(std::size_t count, const SweepConfig& cfg) {
  const PeriodSpec spec = PeriodSpec::from_word("01");
  double worst = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double phi = grid_angle(i, count);
    const RangePolygon swept = range_boundary(build_symbol(spec, phi), cfg);
    worst = std::max(worst, hausdorff(swept, gamma_polygon(phi, 8192)));
  }
  return make_report("ellipse_symbols", join({{"count", num(count)}}, cfg_params(cfg)), worst, 1e-5);
}

Profile parse_profile(std::string_view name) {
  if (name == "quick") return Profile::quick;
  if (name == "full") return Profile::full;
  throw DomainError("unknown profile '" + std::string(name) + "' (expected quick or full)");
}

PeriodSpec random_spec(std::span<const Complex> alphabet, std::size_t p, std::mt19937_64& rng) {
  auto draw = [&] { return alphabet[rng() % alphabet.size()]; };
  std::vector<Complex> a(p), b(p), c(p);
  for (std::size_t j = 0; j < p; ++j) {
    a[j] = draw();
    b[j] = draw();
    c[j] = draw();
  }
  return PeriodSpec::make(std::move(a), std::move(b), std::move(c));
}

PeriodSpec random_selfadjoint_spec(std::span<const Complex> alphabet, std::size_t p, std::mt19937_64& rng) {
  auto draw = [&] { return alphabet[rng() % alphabet.size()]; };
  std::vector<Complex> a(p), b(p), c(p);
  for (std::size_t j = 0; j < p; ++j) {
    a[j] = draw().real();
    b[j] = draw().real();
  }
  for (std::size_t j = 0; j < p; ++j) c[j] = std::conj(a[(j + 1) % p]);
  return PeriodSpec::make(std::move(a), std::move(b), std::move(c));
}

std::vector<PlannedCheck> plan_checks(Profile profile, std::uint64_t seed) {
  const SweepConfig cfg = profile_config(profile);
  const bool full = profile == Profile::full;
  std::vector<PlannedCheck> plan;
  auto add = [&](std::string name, Params tags, std::function<CheckReport()> run) {
    plan.push_back({std::move(name), std::move(tags), std::move(run)});
  };
  auto label = [](const std::string& base, std::size_t i) {
    std::ostringstream os;
    os << base << '/' << (i < 10 ? "0" : "") << i;
    return os.str();
  };

  const std::vector<Complex> binary{0.0, 1.0};
  const std::vector<Complex> signs{-1.0, 1.0};
  std::mt19937_64 rng(seed);
  const std::size_t random_count = full ? 50 : 10;
  for (std::size_t i = 0; i < random_count; ++i) {
    const auto& alphabet = i % 2 == 0 ? binary : signs;
    const std::size_t p = 2 + rng() % 3;
    const std::size_t s = 2 + rng() % 7;
    const PeriodSpec spec = random_spec(alphabet, p, rng);
    add(label("block_diagonalization/random", i), {}, [spec, s] { return check_block_diagonalization(spec, s); });
    add(label("spectrum_lifting/random", i), {}, [spec, s] { return check_spectrum_lifting(spec, s); });
    const PeriodSpec sa = random_selfadjoint_spec(alphabet, p, rng);
    add(label("spectrum_lifting/selfadjoint", i), {}, [sa, s] { return check_spectrum_lifting(sa, s); });
  }
  add("block_diagonalization/word=01", {}, [] { return check_block_diagonalization(PeriodSpec::from_word("01"), 4); });
  add("block_diagonalization/negative_control", {}, [] {
    const PeriodSpec spec = PeriodSpec::from_word("01");
    CMatrix corrupted = build_circulant(spec, 4);
    corrupted(0, corrupted.dim() - 1) += 0.5;
    CheckReport r = check_block_diagonalization(spec, 4, corrupted);
    r.expect = Expect::fail;
    return r;
  });

  add("main_theorem/word=01", {}, [cfg] { return check_main_theorem(PeriodSpec::from_word("01"), 200, cfg); });
  add("main_theorem/word=001", {}, [cfg] { return check_main_theorem(PeriodSpec::from_word("001"), 201, cfg); });
  add("main_theorem/diagonal", {}, [cfg] {
    return check_main_theorem(PeriodSpec::make({0.0, 0.0}, {1.0, Complex(0.0, 1.0)}, {0.0, 0.0}), 4, cfg, 1e-9);
  });

  add("selfadjoint_theorem/laplacian", {}, [cfg] {
    return check_selfadjoint_theorem(PeriodSpec::make({1.0, 1.0}, {0.0, 0.0}, {1.0, 1.0}), 400, cfg);
  });
  add("selfadjoint_theorem/dimer", {}, [cfg] {
    return check_selfadjoint_theorem(PeriodSpec::make({0.0, 1.0}, {0.0, 0.0}, {1.0, 0.0}), 400, cfg);
  });
  {
    const PeriodSpec sa = random_selfadjoint_spec(signs, 3, rng);
    add("selfadjoint_theorem/random_p3", {}, [cfg, sa] { return check_selfadjoint_theorem(sa, 400, cfg); });
  }

  add("spcase", {}, [cfg] { return check_spcase(cfg); });
  add("spcase/negative_control", {}, [cfg] { return check_spcase(cfg, PeriodSpec::from_word("11"), Expect::fail); });

  const std::size_t max_n = full ? 4 : 3;
  for (std::size_t n = 1; n <= max_n; ++n) {
    add("conjecture/n=" + std::to_string(n), {{"n", std::to_string(n)}},
        [cfg, n] { return check_conjecture(n, 200, cfg); });
  }

  add("origin_symmetry/word=01", {}, [cfg] { return check_origin_symmetry(PeriodSpec::from_word("01"), 30, cfg); });
  add("origin_symmetry/word=-1,1,1", {},
      [cfg] { return check_origin_symmetry(PeriodSpec::from_word("-1,1,1"), 30, cfg); });
  add("ellipse_symbols", {}, [full] {
    SweepConfig fine;
    fine.refine_tol = 1e-7;
    return check_ellipse_symbols(full ? 360 : 36, fine);
  });

  std::stable_sort(plan.begin(), plan.end(), [](const auto& x, const auto& y) { return x.name < y.name; });
  return plan;
}

std::vector<CheckReport> run_all(std::string_view profile, std::uint64_t seed) {
  std::vector<CheckReport> reports;
  for (const auto& check : plan_checks(parse_profile(profile), seed)) {
    reports.push_back(check.run());
    reports.back().name = check.name;
  }
  return reports;
}

}  // namespace pnr
