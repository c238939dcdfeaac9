#include "equinorm/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace equinorm {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", x);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_ball_overlay(const std::vector<SvgLayer>& layers,
                                const PointSet* points,
                                const SvgOptions& options) {
  require(!layers.empty() || (points && !points->points.empty()),
          "nothing to render");
  for (const SvgLayer& layer : layers) {
    require(layer.ball && layer.ball->dim() == 2,
            "svg rendering requires 2-D norms");
  }
  if (points) {
    require(points->dim() == 2, "svg rendering requires 2-D points");
  }

  // Trace boundaries first to learn the extent of the drawing.
  std::vector<std::vector<std::pair<double, double>>> boundaries;
  double extent = 0.0;
  for (const SvgLayer& layer : layers) {
    std::vector<std::pair<double, double>> path;
    path.reserve(static_cast<std::size_t>(options.n_boundary));
    for (int k = 0; k < options.n_boundary; ++k) {
      double angle = 2.0 * M_PI * k / options.n_boundary;
      Vector u(2);
      u << std::cos(angle), std::sin(angle);
      double norm = norm_eval(layer.ball, u);
      require(norm > 1e-12, "degenerate ball boundary");
      double r = 1.0 / norm;  // boundary point of the unit ball
      path.emplace_back(r * u[0], r * u[1]);
      extent = std::max(extent, r);
    }
    boundaries.push_back(std::move(path));
  }
  if (points) {
    for (const Vector& p : points->points)
      extent = std::max({extent, std::abs(p[0]), std::abs(p[1])});
  }
  if (extent <= 0.0) extent = 1.0;

  const double view = extent * (1.0 + options.padding);
  const double scale = options.size_px / (2.0 * view);
  auto to_px_x = [&](double x) { return (x + view) * scale; };
  auto to_px_y = [&](double y) { return (view - y) * scale; };  // y up

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(options.size_px) + "\" height=\"" +
         std::to_string(options.size_px) + "\" viewBox=\"0 0 " +
         std::to_string(options.size_px) + " " + std::to_string(options.size_px) +
         "\">\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Axes through the origin.
  svg += "  <line x1=\"0\" y1=\"" + fmt(to_px_y(0)) + "\" x2=\"" +
         std::to_string(options.size_px) + "\" y2=\"" + fmt(to_px_y(0)) +
         "\" stroke=\"#dddddd\"/>\n";
  svg += "  <line x1=\"" + fmt(to_px_x(0)) + "\" y1=\"0\" x2=\"" +
         fmt(to_px_x(0)) + "\" y2=\"" + std::to_string(options.size_px) +
         "\" stroke=\"#dddddd\"/>\n";

  for (std::size_t i = 0; i < boundaries.size(); ++i) {
    svg += "  <polygon points=\"";
    for (const auto& [x, y] : boundaries[i]) {
      svg += fmt(to_px_x(x)) + "," + fmt(to_px_y(y)) + " ";
    }
    svg += "\" fill=\"none\" stroke=\"" + escape_xml(layers[i].color) +
           "\" stroke-width=\"1.5\"/>\n";
    if (!layers[i].label.empty()) {
      svg += "  <text x=\"8\" y=\"" + std::to_string(18 * (i + 1)) +
             "\" fill=\"" + escape_xml(layers[i].color) +
             "\" font-size=\"13\" font-family=\"sans-serif\">" +
             escape_xml(layers[i].label) + "</text>\n";
    }
  }

  if (points) {
    for (int k = 0; k < points->size(); ++k) {
      const Vector& p = points->points[static_cast<std::size_t>(k)];
      svg += "  <circle cx=\"" + fmt(to_px_x(p[0])) + "\" cy=\"" +
             fmt(to_px_y(p[1])) + "\" r=\"3.5\" fill=\"#202020\"/>\n";
      std::string label =
          k < static_cast<int>(points->labels.size()) ? points->labels[static_cast<std::size_t>(k)] : "";
      if (!label.empty()) {
        svg += "  <text x=\"" + fmt(to_px_x(p[0]) + 6) + "\" y=\"" +
               fmt(to_px_y(p[1]) - 6) +
               "\" fill=\"#202020\" font-size=\"12\" "
               "font-family=\"sans-serif\">" +
               escape_xml(label) + "</text>\n";
      }
    }
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace equinorm
