#include "evotopo/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace evotopo {
namespace {

constexpr double kSize = 400.0;
constexpr double kMargin = 40.0;
constexpr double kPlot = kSize - 2 * kMargin;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

// Data range covering every finite coordinate and essential birth.
std::pair<double, double> value_range(const PersistenceDiagram& d) {
  double lo = kInfinity;
  double hi = -kInfinity;
  for (const auto& p : d.finite_points()) {
    lo = std::min(lo, p.birth);
    hi = std::max(hi, p.death);
  }
  for (const auto& p : d.essential_points()) {
    lo = std::min(lo, p.birth);
    hi = std::max(hi, p.birth);
  }
  if (lo > hi) return {0.0, 1.0};
  lo = std::min(lo, 0.0);
  if (hi <= lo) hi = lo + 1.0;
  return {lo, hi + 0.1 * (hi - lo)};
}

void header(std::ostringstream& out, const PersistenceDiagram& d, const char* title) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kSize / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" << title
      << " (dimension " << d.dimension() << ")</text>\n";
}

void axes(std::ostringstream& out, double lo, double hi) {
  const double x0 = kMargin;
  const double y0 = kSize - kMargin;
  out << "<line class=\"axis\" x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << kSize - kMargin << "\" y2=\"" << y0
      << "\" stroke=\"black\"/>\n"
      << "<line class=\"axis\" x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\"" << kMargin
      << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << x0 << "\" y=\"" << y0 + 15 << "\" font-size=\"10\">" << num(lo) << "</text>\n"
      << "<text x=\"" << kSize - kMargin << "\" y=\"" << y0 + 15 << "\" font-size=\"10\" text-anchor=\"end\">"
      << num(hi) << "</text>\n";
}

std::string plot_diagram(const PersistenceDiagram& d) {
  const auto [lo, hi] = value_range(d);
  auto sx = [&](double v) { return kMargin + (v - lo) / (hi - lo) * kPlot; };
  auto sy = [&](double v) { return kSize - kMargin - (v - lo) / (hi - lo) * kPlot; };

  std::ostringstream out;
  header(out, d, "Persistence diagram");
  axes(out, lo, hi);
  out << "<line class=\"diagonal\" x1=\"" << num(sx(lo)) << "\" y1=\"" << num(sy(lo)) << "\" x2=\"" << num(sx(hi))
      << "\" y2=\"" << num(sy(hi)) << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
  for (const auto& p : d.finite_points()) {
    out << "<circle class=\"point\" cx=\"" << num(sx(p.birth)) << "\" cy=\"" << num(sy(p.death))
        << "\" r=\"4\" fill=\"steelblue\"/>\n";
    if (p.multiplicity > 1) {
      out << "<text class=\"multiplicity\" x=\"" << num(sx(p.birth) + 6) << "\" y=\"" << num(sy(p.death) - 6)
          << "\" font-size=\"10\">x" << p.multiplicity << "</text>\n";
    }
  }
  // Essential classes sit on an overflow row above the plot area.
  const double top = kMargin - 8;
  for (const auto& p : d.essential_points()) {
    const double x = sx(p.birth);
    out << "<polygon class=\"essential\" points=\"" << num(x - 5) << ',' << num(top + 6) << ' ' << num(x + 5) << ','
        << num(top + 6) << ' ' << num(x) << ',' << num(top - 4) << "\" fill=\"firebrick\"/>\n";
    if (p.multiplicity > 1) {
      out << "<text class=\"multiplicity\" x=\"" << num(x + 7) << "\" y=\"" << num(top + 4)
          << "\" font-size=\"10\">x" << p.multiplicity << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string plot_barcode(const PersistenceDiagram& d) {
  const auto [lo, hi] = value_range(d);
  auto sx = [&](double v) { return kMargin + (v - lo) / (hi - lo) * kPlot; };

  std::vector<DiagramPoint> bars = d.expanded_finite();
  for (const auto& p : d.essential_points()) bars.insert(bars.end(), p.multiplicity, {p.birth, kInfinity, 1});
  std::stable_sort(bars.begin(), bars.end(), [](const DiagramPoint& a, const DiagramPoint& b) {
    return a.birth != b.birth ? a.birth < b.birth : a.death < b.death;
  });

  std::ostringstream out;
  header(out, d, "Barcode");
  axes(out, lo, hi);
  const double step = bars.empty() ? 0.0 : std::min(12.0, (kPlot - 10) / static_cast<double>(bars.size()));
  for (std::size_t i = 0; i < bars.size(); ++i) {
    const auto& b = bars[i];
    const double y = kSize - kMargin - 10 - step * static_cast<double>(i);
    const double x1 = sx(b.birth);
    const double x2 = b.essential() ? kSize - kMargin : sx(b.death);
    out << "<line class=\"" << (b.essential() ? "essential" : "bar") << "\" x1=\"" << num(x1) << "\" y1=\"" << num(y)
        << "\" x2=\"" << num(x2) << "\" y2=\"" << num(y) << "\" stroke=\"steelblue\" stroke-width=\"3\"/>\n";
    if (b.essential()) {
      out << "<polygon class=\"arrow\" points=\"" << num(x2) << ',' << num(y - 4) << ' ' << num(x2 + 8) << ','
          << num(y) << ' ' << num(x2) << ',' << num(y + 4) << "\" fill=\"steelblue\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string plot_svg(const PersistenceDiagram& d, PlotStyle style) {
  return style == PlotStyle::kDiagram ? plot_diagram(d) : plot_barcode(d);
}

}  // namespace evotopo
