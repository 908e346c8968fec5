#pragma once

#include <string>

#include "evotopo/types.hpp"

namespace evotopo {

enum class PlotStyle { kDiagram, kBarcode };

// Static SVG rendering. kDiagram scatters finite points above the diagonal
// (multiplicity > 1 annotated as "xN") and puts essential classes on an
// overflow row marked with an up arrow. kBarcode draws one horizontal bar
// per class; essential bars end in an arrow head.
std::string plot_svg(const PersistenceDiagram& d, PlotStyle style);

}  // namespace evotopo
