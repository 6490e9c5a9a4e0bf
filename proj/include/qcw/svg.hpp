#pragma once

#include <string>
#include <vector>

#include "qcw/majorana.hpp"

namespace qcw {

struct LabeledConstellation {
  std::string label;
  Constellation stars;
};

struct SvgLayout {
  int columns = 4;
  double radius = 60;
  double margin = 24;
};

/// One disc per constellation on a grid, viewed from +Y: a star at
/// (x, y, z) is drawn at (x, z); stars with y >= 0 are filled, the others
/// hollow. Merged stars carry a "×m" annotation. Output is byte-stable.
std::string render_svg(const std::vector<LabeledConstellation>& items, const SvgLayout& layout = {});

}  // namespace qcw
