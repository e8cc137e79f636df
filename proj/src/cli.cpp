#include "pnr/cli.hpp"

#include <fstream>
#include <iostream>

#include "pnr/errors.hpp"
#include "pnr/output.hpp"
#include "pnr/theorems.hpp"

namespace pnr::cli {

namespace {

// Writes via `write` to the file at path, or to `fallback` when path is empty.
template <typename Fn>
bool emit(const std::string& path, std::ostream& fallback, std::ostream& err, Fn&& write) {
  if (path.empty()) {
    write(fallback);
    return true;
  }
  std::ofstream file(path);
  if (!file) {
    err << "error: cannot open '" << path << "' for writing\n";
    return false;
  }
  write(file);
  return static_cast<bool>(file);
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "numeric error: " << e.what() << '\n';
    return kNumericError;
  }
}

}  // namespace

int cmd_range(const RangeOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.spec.empty() == opts.word.empty()) throw ParseError("give exactly one of --spec or --word");
    const PeriodSpec spec = opts.word.empty() ? parse_spec(opts.spec) : PeriodSpec::from_word(opts.word);
    opts.cfg.validate();
    RangePolygon poly;
    if (opts.mode == "symbol-hull") {
      poly = symbol_union_hull(spec, opts.cfg);
    } else if (opts.mode == "truncation") {
      if (opts.k < 1) throw ParseError("--k must be positive");
      poly = truncation_range(spec, opts.k, opts.cfg);
    } else {
      throw ParseError("unknown mode '" + opts.mode + "' (expected symbol-hull or truncation)");
    }
    if (!emit(opts.out, out, err, [&](std::ostream& os) { write_polygon_csv(os, poly); })) return kUsageError;
    return kOk;
  });
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Profile profile = parse_profile(opts.profile);
    std::vector<PlannedCheck> selected;
    for (auto& check : plan_checks(profile, opts.seed)) {
      if (!opts.filter.empty() && check.name.find(opts.filter) == std::string::npos) continue;
      if (opts.n) {
        bool match = false;
        for (const auto& [key, value] : check.tags) match = match || (key == "n" && value == std::to_string(*opts.n));
        if (!match) continue;
      }
      selected.push_back(std::move(check));
    }
    if (selected.empty()) {
      err << "error: no checks match the selection\n";
      return kUsageError;
    }
    std::vector<CheckReport> reports;
    bool all_ok = true;
    for (const auto& check : selected) {
      CheckReport r = check.run();
      r.name = check.name;
      all_ok = all_ok && r.as_expected();
      err << (r.as_expected() ? "ok    " : "FAIL  ") << r.name << "  metric=" << r.metric
          << " tol=" << r.tolerance << '\n';
      reports.push_back(std::move(r));
    }
    const bool written = emit(opts.out, out, err, [&](std::ostream& os) {
      for (const auto& r : reports) os << report_record(r) << '\n';
    });
    if (!written) return kUsageError;
    return all_ok ? kOk : kCheckFailed;
  });
}

int cmd_figure(const FigureOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.n < 1 || opts.n > 3) throw ParseError("--n must be 1, 2 or 3");
    const PlotSpec plot = conjecture_figure(static_cast<std::size_t>(opts.n), opts.k, opts.cfg);
    if (!emit(opts.out, out, err, [&](std::ostream& os) { os << render_svg(plot); })) return kUsageError;
    return kOk;
  });
}

}  // namespace pnr::cli
