#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pnr/numrange.hpp"
#include "pnr/operators.hpp"

namespace pnr {

// What a suite run expects from a check. Negative controls are expected to
// fail; informational checks (open cases) only record their metric.
enum class Expect { pass, fail, none };

struct CheckReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;
  double metric = 0.0;
  double tolerance = 0.0;
  bool passed = false;  // metric <= tolerance
  Expect expect = Expect::pass;

  // Whether the outcome matches the expectation.
  bool as_expected() const;
};

CheckReport make_report(std::string name, std::vector<std::pair<std::string, std::string>> parameters,
                        double metric, double tolerance, Expect expect = Expect::pass);

// ||U* C U - (+)_k T_{phi_k}||_F against 1e-10 (1 + ||C||_F). The overload
// takes the circulant explicitly so a corrupted one can be checked.
CheckReport check_block_diagonalization(const PeriodSpec& spec, std::size_t s);
CheckReport check_block_diagonalization(const PeriodSpec& spec, std::size_t s, const CMatrix& circulant);

// Lifts every eigenpair of every T_{phi_k} to C^{sp} and measures the
// relative residual max ||C x - lambda x|| / ((1 + |lambda|) ||x||); for
// self-adjoint specs also compares spec(C_m) with the union of the block
// spectra by greedy nearest pairing (tolerance 1e-8). Metric tolerance 1e-10.
CheckReport check_spectrum_lifting(const PeriodSpec& spec, std::size_t s);

// Hausdorff(W(T_{k_max}), symbol hull). The truncation range must also sit
// inside the hull within 1e-6; otherwise the metric is +inf.
CheckReport check_main_theorem(const PeriodSpec& spec, std::size_t k_max, const SweepConfig& cfg = {},
                               double tolerance = 0.05);

// max(|a - min eig T_k|, |b - max eig T_k|) for [a, b] from the symbols.
CheckReport check_selfadjoint_theorem(const PeriodSpec& spec, std::size_t k_max, const SweepConfig& cfg = {},
                                      double tolerance = 0.05);

struct SpcaseSets {
  RangePolygon symbol_hull;
  RangePolygon stadium;
  RangePolygon two_matrix_hull;  // co(W(C) u W(D))
};

SpcaseSets spcase_sets(const PeriodSpec& spec, const SweepConfig& cfg = {});

// max of Hausdorff(symbol hull, stadium) and Hausdorff(stadium, co(W(C) u W(D))),
// tolerance 2e-3. The spec defaults to word 01; other words serve as negative
// controls.
CheckReport check_spcase(const SweepConfig& cfg = {}, const PeriodSpec& spec = PeriodSpec::from_word("01"),
                         Expect expect = Expect::pass);

// Word 0^n 1 of period n+1 with a-sequence as the word.
PeriodSpec conjecture_spec(std::size_t n);

// Hausdorff(symbol hull of 0^n 1, co(W(B_n + J_n) u W(B_n - J_n))), tolerance
// 0.02. W(B_n + J_n) = -W(B_n - J_n) must hold within 1e-8 or the metric is
// +inf. n = 4 is reported as informational.
CheckReport check_conjecture(std::size_t n, std::size_t k_max, const SweepConfig& cfg = {});

// For b = 0 truncations: Hausdorff(P, -P) <= 1e-8 over k = 1..k_max.
CheckReport check_origin_symmetry(const PeriodSpec& spec, std::size_t k_max, const SweepConfig& cfg = {});

// Swept W(T_phi) for word 01 against the parametrized ellipse, worst
// Hausdorff over `count` values of phi, tolerance 1e-5.
CheckReport check_ellipse_symbols(std::size_t count, const SweepConfig& cfg);

enum class Profile { quick, full };

// Throws DomainError for anything other than "quick" or "full".
Profile parse_profile(std::string_view name);

struct PlannedCheck {
  std::string name;
  std::vector<std::pair<std::string, std::string>> tags;
  std::function<CheckReport()> run;
};

// Checks of a suite run in name order. Random specs are drawn from seed.
std::vector<PlannedCheck> plan_checks(Profile profile, std::uint64_t seed = 2024);

std::vector<CheckReport> run_all(std::string_view profile, std::uint64_t seed = 2024);

// Random spec over an alphabet: a, b, c drawn uniformly from the letters.
PeriodSpec random_spec(std::span<const Complex> alphabet, std::size_t p, std::mt19937_64& rng);

// Real self-adjoint spec: a drawn from the alphabet, c_j = a_{j+1}, b drawn
// from the alphabet.
PeriodSpec random_selfadjoint_spec(std::span<const Complex> alphabet, std::size_t p, std::mt19937_64& rng);

}  // namespace pnr
