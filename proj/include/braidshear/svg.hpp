#pragma once

#include <map>
#include <string>

#include "braidshear/triangulation.hpp"

namespace braidshear {

struct SvgOptions {
  int width = 800;
  int height = 600;
  bool show_vertex_ids = true;
};

/// SVG drawing of the finite edges of `tri` with optional per-edge labels.
/// Coordinates are converted to floating point only here.
std::string render_svg(const Triangulation& tri, const std::map<Edge, std::string>& labels = {},
                       const SvgOptions& options = {});

}  // namespace braidshear
