#pragma once

// Minimal SVG rendering of 2-D unit balls and point configurations: each
// ball boundary is traced by a dense angular scan, so any norm variant that
// evaluates can be drawn.

#include "equinorm/common.hpp"
#include "equinorm/norm.hpp"
#include "equinorm/pointset.hpp"

#include <string>
#include <vector>

namespace equinorm {

struct SvgLayer {
  NormPtr ball;        // unit ball boundary to trace
  std::string color;   // CSS color for the stroke
  std::string label;
};

struct SvgOptions {
  int size_px = 640;
  int n_boundary = 720;  // angular samples per ball
  double padding = 0.12; // fraction of the view box left as margin
};

/// Renders the unit balls of the layers plus an optional point set (labeled
/// dots) into a standalone SVG document.  All layers must be 2-D.
std::string render_ball_overlay(const std::vector<SvgLayer>& layers,
                                const PointSet* points,
                                const SvgOptions& options = {});

}  // namespace equinorm
