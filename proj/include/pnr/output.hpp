#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pnr/geometry.hpp"
#include "pnr/theorems.hpp"

namespace pnr {

// CSV with header "re,im" and one vertex per line, 17 significant digits.
void write_polygon_csv(std::ostream& os, const RangePolygon& p);
// Throws ParseError on malformed input.
RangePolygon read_polygon_csv(std::istream& is);

// One JSON object per line: name, parameters, metric, tolerance, passed,
// expect. A non-finite metric is written as null.
std::string report_record(const CheckReport& r);

enum class LayerStyle { polygon, points };

struct PlotLayer {
  std::string label;
  std::vector<Complex> points;
  LayerStyle style = LayerStyle::polygon;
  std::string color = "black";
};

struct PlotSpec {
  std::vector<PlotLayer> layers;
  int width = 640;
  int height = 480;
};

// Autoscaled viewBox with a 5% margin; polygons as paths, points as r=2 circles.
std::string render_svg(const PlotSpec& plot);

// Figure layers for the conjecture setting with period word 0^n 1: blue
// truncation-range boundary points, red W(B_n + J_n), green W(B_n - J_n).
PlotSpec conjecture_figure(std::size_t n, std::size_t k = 120, const SweepConfig& cfg = {});

}  // namespace pnr
