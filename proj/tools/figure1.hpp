#pragma once

// SVG plot of the finiteness hyperbola (black), its asymptote parallel to the
// Nagata line (blue) and the Nagata line d = sqrt(n) m (green) in the (m, d)
// quarter plane. Scale: 40 px per lattice unit, origin at the bottom-left
// corner of the plot area; both are recorded in the file's <metadata>.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "canonical_bounds/blowup.hpp"
#include "canonical_bounds/exactmath.hpp"

namespace cbounds::cli {

struct Figure1Layout {
  static constexpr int px_per_unit = 40;
  static constexpr int margin_left = 60;
  static constexpr int margin_right = 180;
  static constexpr int margin_top = 30;
  static constexpr int margin_bottom = 50;
  std::int64_t m_max = 0;
  std::int64_t d_top = 0;

  double x(long double m) const { return static_cast<double>(margin_left + px_per_unit * m); }
  double y(long double d) const { return static_cast<double>(margin_top + px_per_unit * (d_top - d)); }
  int width() const { return margin_left + px_per_unit * static_cast<int>(m_max) + margin_right; }
  int height() const { return margin_top + px_per_unit * static_cast<int>(d_top) + margin_bottom; }
};

inline std::string svg_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Figure1Curves {
  std::vector<std::pair<long double, long double>> hyperbola, asymptote, nagata;
};

inline constexpr int figure1_samples = 400;

/// Sampled curves. Hyperbola points at integer m come from the exact root.
inline Figure1Curves figure1_curves(const Integer& n, const Rational& beta0, std::int64_t m_max) {
  const long double b = static_cast<long double>(to_decimal(beta0));
  const long double nn = static_cast<long double>(to_decimal(n));
  const long double rn = std::sqrt(nn);
  const long double c = asymptote_offset(n, beta0).to_long_double();
  auto d_of = [&](long double m) {
    const long double disc = (b - 2) * (b - 2) + 4 * b * (nn * b * m * m - (b - 2) * nn * m);
    return (-(b - 2) + std::sqrt(std::max(disc, 0.0L))) / (2 * b);
  };

  Figure1Curves out;
  // Upper branch enters the quarter plane at d = 0, m = (beta0 - 2)/beta0.
  const long double m_start = (b - 2) / b;
  std::vector<long double> ms;
  for (int i = 0; i <= figure1_samples; ++i)
    ms.push_back(m_start + (static_cast<long double>(m_max) - m_start) * i / figure1_samples);
  for (std::int64_t m = 1; m <= m_max; ++m) ms.push_back(static_cast<long double>(m));
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  for (long double m : ms) {
    const long double rounded = std::round(m);
    const bool integral = m == rounded && rounded >= 1;
    const long double d = integral ? hyperbola_d_of_m(Integer(static_cast<long long>(rounded)), n, beta0).to_long_double()
                                   : d_of(m);
    out.hyperbola.emplace_back(m, std::max(d, 0.0L));
  }

  const long double m_cross = std::max(0.0L, -c / rn);  // asymptote meets d = 0
  for (int i = 0; i <= figure1_samples; ++i) {
    const long double m = m_cross + (static_cast<long double>(m_max) - m_cross) * i / figure1_samples;
    out.asymptote.emplace_back(m, rn * m + c);
    const long double mn = static_cast<long double>(m_max) * i / figure1_samples;
    out.nagata.emplace_back(mn, rn * mn);
  }
  return out;
}

inline std::string figure1_svg(const Integer& n, const Rational& beta0, std::int64_t m_max) {
  detail::require(m_max >= 1, errc::domain, "m_max must be at least 1");
  const long double rn = std::sqrt(static_cast<long double>(to_decimal(n)));
  Figure1Layout lay;
  lay.m_max = m_max;
  lay.d_top = static_cast<std::int64_t>(std::ceil(rn * m_max)) + 1;
  const auto curves = figure1_curves(n, beta0, m_max);
  const QuadSurd offset = asymptote_offset(n, beta0);
  const std::string slope = approx_string(QuadSurd::sqrt_of(Rational(n)).to_decimal());
  const std::string slope_exact = QuadSurd::sqrt_of(Rational(n)).to_string();

  auto points = [&](const std::vector<std::pair<long double, long double>>& pts) {
    std::string s;
    for (const auto& [m, d] : pts) {
      if (!s.empty()) s += ' ';
      s += svg_number(lay.x(m)) + "," + svg_number(lay.y(d));
    }
    return s;
  };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << lay.width() << "\" height=\"" << lay.height()
     << "\" viewBox=\"0 0 " << lay.width() << ' ' << lay.height() << "\">\n";
  os << "  <metadata>{\"scale_px_per_unit\": " << Figure1Layout::px_per_unit
     << ", \"origin\": \"bottom-left\", \"origin_px\": [" << lay.x(0) << ", " << lay.y(0) << "], \"n\": \""
     << n.str() << "\", \"beta0\": \"" << to_string(beta0) << "\", \"m_max\": " << m_max
     << ", \"asymptote_offset\": \"" << offset.to_string() << "\", \"slope\": \"" << slope_exact
     << "\"}</metadata>\n";
  os << "  <title>Finiteness hyperbola, its asymptote and the Nagata line (n = " << n.str()
     << ", beta0 = " << to_string(beta0) << ")</title>\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << lay.width() << "\" height=\"" << lay.height() << "\" fill=\"white\"/>\n";

  // axes
  os << "  <g id=\"axes\" stroke=\"#444\" stroke-width=\"1\">\n";
  os << "    <line x1=\"" << lay.x(0) << "\" y1=\"" << lay.y(0) << "\" x2=\"" << lay.x(m_max) << "\" y2=\"" << lay.y(0)
     << "\"/>\n";
  os << "    <line x1=\"" << lay.x(0) << "\" y1=\"" << lay.y(0) << "\" x2=\"" << lay.x(0) << "\" y2=\""
     << lay.y(lay.d_top) << "\"/>\n";
  os << "  </g>\n";
  os << "  <text x=\"" << lay.x(m_max) << "\" y=\"" << lay.y(0) + 30 << "\" font-size=\"14\">m</text>\n";
  os << "  <text x=\"" << lay.x(0) - 30 << "\" y=\"" << lay.y(lay.d_top) << "\" font-size=\"14\">d</text>\n";

  os << "  <polyline id=\"hyperbola\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\""
     << points(curves.hyperbola) << "\"/>\n";
  os << "  <polyline id=\"asymptote\" fill=\"none\" stroke=\"blue\" stroke-width=\"1.5\" data-slope=\"" << slope
     << "\" data-offset=\"" << approx_string(offset.to_decimal()) << "\" points=\"" << points(curves.asymptote)
     << "\"/>\n";
  os << "  <polyline id=\"nagata-line\" fill=\"none\" stroke=\"green\" stroke-width=\"1.5\" data-slope=\"" << slope
     << "\" data-offset=\"0\" points=\"" << points(curves.nagata) << "\"/>\n";

  const double lx = lay.x(m_max) + 20;
  const double ly = lay.margin_top + 10;
  os << "  <g id=\"legend\" font-size=\"13\">\n";
  const char* entries[][2] = {{"black", "hyperbola"}, {"blue", "asymptote"}, {"green", "Nagata line"}};
  for (int i = 0; i < 3; ++i) {
    const double yy = ly + 22 * i;
    os << "    <line x1=\"" << lx << "\" y1=\"" << yy << "\" x2=\"" << lx + 24 << "\" y2=\"" << yy << "\" stroke=\""
       << entries[i][0] << "\" stroke-width=\"2\"/>\n";
    os << "    <text x=\"" << lx + 30 << "\" y=\"" << yy + 4 << "\">" << entries[i][1] << "</text>\n";
  }
  os << "  </g>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace cbounds::cli
