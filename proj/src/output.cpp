#include "pnr/output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "pnr/errors.hpp"
#include "pnr/numrange.hpp"
#include "pnr/operators.hpp"

namespace pnr {

namespace {

std::string fmt17(double x) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string fmt4(double x) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, 4);
  return std::string(buf, res.ptr);
}

double parse_field(std::string_view s, std::size_t line_no) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("csv line " + std::to_string(line_no) + ": invalid number");
  }
  return v;
}

const char* expect_name(Expect e) {
  switch (e) {
    case Expect::pass: return "pass";
    case Expect::fail: return "fail";
    case Expect::none: return "none";
  }
  return "none";
}

}  // namespace

void write_polygon_csv(std::ostream& os, const RangePolygon& p) {
  os << "re,im\n";
  for (const auto& z : p.points) os << fmt17(z.real()) << ',' << fmt17(z.imag()) << '\n';
}

RangePolygon read_polygon_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("csv: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "re,im") throw ParseError("csv: expected header 're,im'");
  RangePolygon p;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError("csv line " + std::to_string(line_no) + ": expected re,im");
    const std::string_view view(line);
    p.points.emplace_back(parse_field(view.substr(0, comma), line_no), parse_field(view.substr(comma + 1), line_no));
  }
  return p;
}

std::string report_record(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  j["metric"] = std::isfinite(r.metric) ? nlohmann::ordered_json(r.metric) : nlohmann::ordered_json(nullptr);
  j["tolerance"] = r.tolerance;
  j["passed"] = r.passed;
  j["expect"] = expect_name(r.expect);
  return j.dump();
}

std::string render_svg(const PlotSpec& plot) {
  if (plot.layers.empty()) throw DomainError("render_svg: plot needs at least one layer");
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& layer : plot.layers) {
    for (const auto& z : layer.points) {
      xmin = std::min(xmin, z.real());
      xmax = std::max(xmax, z.real());
      ymin = std::min(ymin, z.imag());
      ymax = std::max(ymax, z.imag());
    }
  }
  if (!std::isfinite(xmin)) xmin = xmax = ymin = ymax = 0.0;
  double w = std::max(xmax - xmin, 1e-9);
  double h = std::max(ymax - ymin, 1e-9);
  xmin -= 0.05 * w;
  ymin -= 0.05 * h;
  w *= 1.1;
  h *= 1.1;
  // SVG y grows downwards; plot -im.
  const double top = -(ymin + h);
  const double radius = 2.0 * w / plot.width;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << plot.width << "\" height=\"" << plot.height
     << "\" viewBox=\"" << fmt17(xmin) << ' ' << fmt17(top) << ' ' << fmt17(w) << ' ' << fmt17(h)
     << "\" preserveAspectRatio=\"xMidYMid meet\">\n";
  for (const auto& layer : plot.layers) {
    os << "<g id=\"" << layer.label << "\">\n";
    if (layer.style == LayerStyle::polygon && !layer.points.empty()) {
      os << "<path d=\"";
      for (std::size_t i = 0; i < layer.points.size(); ++i) {
        os << (i == 0 ? 'M' : 'L') << fmt17(layer.points[i].real()) << ' ' << fmt17(-layer.points[i].imag()) << ' ';
      }
      os << "Z\" fill=\"none\" stroke=\"" << layer.color << "\" stroke-width=\"" << fmt17(radius) << "\"/>\n";
    } else {
      for (const auto& z : layer.points) {
        os << "<circle cx=\"" << fmt17(z.real()) << "\" cy=\"" << fmt17(-z.imag()) << "\" r=\"" << fmt17(radius)
           << "\" fill=\"" << layer.color << "\"/>\n";
      }
    }
    os << "</g>\n";
  }
  os << "<!-- x: " << fmt4(xmin) << " .. " << fmt4(xmin + w) << ", y: " << fmt4(ymin) << " .. " << fmt4(ymin + h)
     << " -->\n</svg>\n";
  return os.str();
}

PlotSpec conjecture_figure(std::size_t n, std::size_t k, const SweepConfig& cfg) {
  if (n < 1) throw DomainError("conjecture_figure: n must be positive");
  const PeriodSpec spec = conjecture_spec(n);
  const ConjecturePair bj = conjecture_matrices(n);
  PlotSpec plot;
  plot.layers.push_back({"truncation", truncation_range(spec, k, cfg).points, LayerStyle::points, "blue"});
  plot.layers.push_back({"B_plus_J", range_boundary(bj.plus, cfg).points, LayerStyle::polygon, "red"});
  plot.layers.push_back({"B_minus_J", range_boundary(bj.minus, cfg).points, LayerStyle::polygon, "green"});
  return plot;
}

}  // namespace pnr
