#include "qcw/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qcw {

namespace {

std::string num(double x) {
  if (x == 0) x = 0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const std::vector<LabeledConstellation>& items, const SvgLayout& layout) {
  if (items.empty()) throw std::invalid_argument("render_svg needs at least one constellation");
  const int cols = std::max(1, std::min(layout.columns, static_cast<int>(items.size())));
  const int rows = (static_cast<int>(items.size()) + cols - 1) / cols;
  const double r = layout.radius;
  const double cell_w = 2 * r + 2 * layout.margin;
  const double cell_h = 2 * r + 3 * layout.margin;
  const double width = cols * cell_w;
  const double height = rows * cell_h;
  const double dot = std::max(2.0, r / 15);

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
         "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < items.size(); ++i) {
    const int col = static_cast<int>(i) % cols;
    const int row = static_cast<int>(i) / cols;
    const double cx = col * cell_w + cell_w / 2;
    const double cy = row * cell_h + layout.margin + r;
    svg += "<g class=\"constellation\">\n";
    svg += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(r) +
           "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + num(cx - r) + "\" y1=\"" + num(cy) + "\" x2=\"" + num(cx + r) + "\" y2=\"" + num(cy) +
           "\" stroke=\"#bbb\" stroke-dasharray=\"3,3\"/>\n";

    std::vector<SpherePoint> stars = items[i].stars.points;
    if (items[i].stars.south_pole_count > 0)
      stars.push_back({std::acos(-1.0), 0.0, items[i].stars.south_pole_count});
    for (const auto& s : stars) {
      const Eigen::Vector3d p = s.cartesian();
      const double px = cx + r * p.x();
      const double py = cy - r * p.z();
      const bool front = p.y() >= -1e-12;
      svg += "<circle cx=\"" + num(px) + "\" cy=\"" + num(py) + "\" r=\"" + num(dot) + "\" fill=\"" +
             (front ? "black" : "white") + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
      if (s.mult > 1)
        svg += "<text x=\"" + num(px + 1.5 * dot) + "\" y=\"" + num(py - 1.5 * dot) +
               "\" font-family=\"sans-serif\" font-size=\"" + num(r / 5) + "\">×" + std::to_string(s.mult) +
               "</text>\n";
    }
    svg += "<text x=\"" + num(cx) + "\" y=\"" + num(cy + r + 1.5 * layout.margin) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"" + num(r / 4) + "\">" +
           escape(items[i].label) + "</text>\n";
    svg += "</g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace qcw
