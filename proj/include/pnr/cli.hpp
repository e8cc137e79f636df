#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "pnr/numrange.hpp"

namespace pnr::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kNumericError = 3;

struct RangeOptions {
  std::string spec;  // "p=2;a=...;b=...;c=..." or "word=01"
  std::string word;  // shorthand for spec "word=<word>"
  std::string mode = "symbol-hull";  // or "truncation"
  std::size_t k = 200;
  SweepConfig cfg;
  std::string out;  // empty: write to the given stream
};

struct VerifyOptions {
  std::string profile = "quick";
  std::string filter;
  std::optional<std::size_t> n;
  std::string out;
  std::uint64_t seed = 2024;
};

struct FigureOptions {
  int n = 1;
  std::string out;
  std::size_t k = 120;
  SweepConfig cfg{180, 180, 0.0};
};

int cmd_range(const RangeOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_figure(const FigureOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace pnr::cli
