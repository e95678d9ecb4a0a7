#include "braidshear/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace braidshear {

namespace {

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Triangulation& tri, const std::map<Edge, std::string>& labels,
                       const SvgOptions& options) {
  const auto& pts = tri.points();
  double min_x = std::numeric_limits<double>::max();
  double min_y = min_x;
  double max_x = std::numeric_limits<double>::lowest();
  double max_y = max_x;
  for (const auto& [id, p] : pts) {
    min_x = std::min(min_x, p.x.to_double());
    max_x = std::max(max_x, p.x.to_double());
    min_y = std::min(min_y, p.y.to_double());
    max_y = std::max(max_y, p.y.to_double());
  }
  if (pts.empty()) min_x = min_y = 0, max_x = max_y = 1;
  const double margin = 40.0;
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  const double s = std::min(options.width - 2 * margin, options.height - 2 * margin) / span;
  auto sx = [&](const Rational& x) { return margin + (x.to_double() - min_x) * s; };
  auto sy = [&](const Rational& y) { return options.height - margin - (y.to_double() - min_y) * s; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\""
     << options.height << "\" viewBox=\"0 0 " << options.width << " " << options.height << "\">\n";
  os << "<g stroke=\"black\" stroke-width=\"1.5\">\n";
  for (const auto& e : tri.edges()) {
    if (e.touches_infinity() || !pts.count(e.a) || !pts.count(e.b)) continue;
    const auto& p = pts.at(e.a);
    const auto& q = pts.at(e.b);
    os << "<line class=\"edge\" data-edge=\"" << e.a << "," << e.b << "\" x1=\"" << fmt(sx(p.x)) << "\" y1=\""
       << fmt(sy(p.y)) << "\" x2=\"" << fmt(sx(q.x)) << "\" y2=\"" << fmt(sy(q.y)) << "\"/>\n";
  }
  os << "</g>\n<g font-family=\"monospace\" font-size=\"10\" fill=\"#204080\">\n";
  for (const auto& [e, text] : labels) {
    if (e.touches_infinity() || !pts.count(e.a) || !pts.count(e.b)) continue;
    const auto& p = pts.at(e.a);
    const auto& q = pts.at(e.b);
    os << "<text x=\"" << fmt((sx(p.x) + sx(q.x)) / 2) << "\" y=\"" << fmt((sy(p.y) + sy(q.y)) / 2) << "\">"
       << escape(text) << "</text>\n";
  }
  os << "</g>\n<g fill=\"red\">\n";
  for (const auto& [id, p] : pts) {
    os << "<circle cx=\"" << fmt(sx(p.x)) << "\" cy=\"" << fmt(sy(p.y)) << "\" r=\"4\"/>\n";
    if (options.show_vertex_ids) {
      os << "<text x=\"" << fmt(sx(p.x) + 6) << "\" y=\"" << fmt(sy(p.y) - 6) << "\">" << id << "</text>\n";
    }
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace braidshear
