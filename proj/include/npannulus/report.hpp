#ifndef NPANNULUS_REPORT_HPP
#define NPANNULUS_REPORT_HPP

// Text emitters shared by the command-line tool: CSV cells, the plain matrix
// dump, and standalone SVG scatter plots.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "npannulus/geometry.hpp"
#include "npannulus/grunsky.hpp"

namespace npannulus {

/// 17 significant digits; round-trips every double.
inline std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// Complex cell such as "0.3+0.5j" or "1-2j".
inline std::string format_complex(Complex z) {
  std::string s = format_number(z.real());
  const double im = z.imag();
  if (std::signbit(im)) {
    s += "-" + format_number(-im);
  } else {
    s += "+" + format_number(im);
  }
  return s + "j";
}

/// Grunsky table as CSV: header "m,1,..,N", then one row per m.
inline void write_grunsky_csv(std::ostream& os, const GrunskyTable& table) {
  const int N = table.order();
  os << "m";
  for (int n = 1; n <= N; ++n) os << ',' << n;
  os << '\n';
  for (int m = 1; m <= N; ++m) {
    os << m;
    for (int n = 1; n <= N; ++n) os << ',' << format_complex(table(m, n));
    os << '\n';
  }
}

/// "rows cols" header, then one "re im" pair per line in row-major order.
inline void write_matrix_text(std::ostream& os, const ComplexMatrix& a) {
  os << a.rows() << ' ' << a.cols() << '\n';
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      os << format_number(a(i, j).real()) << ' ' << format_number(a(i, j).imag()) << '\n';
    }
  }
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void write(std::ostream& os) const {
    auto line = [&os](const std::vector<std::string>& cells) {
      for (std::size_t k = 0; k < cells.size(); ++k) os << (k ? "," : "") << cells[k];
      os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
  }
};

struct ScatterSeries {
  std::string label;
  std::string color;
  std::vector<double> x;
  std::vector<double> y;
};

/// Self-contained SVG scatter plot with axes and a legend.
inline std::string svg_scatter(const std::string& title, const std::string& x_label, const std::string& y_label,
                               const std::vector<ScatterSeries>& series) {
  constexpr double W = 800, H = 500, left = 80, right = 20, top = 40, bottom = 60;
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
  for (const auto& s : series) {
    for (std::size_t k = 0; k < std::min(s.x.size(), s.y.size()); ++k) {
      if (!std::isfinite(s.x[k]) || !std::isfinite(s.y[k])) continue;
      xmin = std::min(xmin, s.x[k]);
      xmax = std::max(xmax, s.x[k]);
      ymin = std::min(ymin, s.y[k]);
      ymax = std::max(ymax, s.y[k]);
    }
  }
  if (!(xmin <= xmax)) xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;
  const double pad = 0.05 * (ymax - ymin);
  ymin -= pad;
  ymax += pad;
  auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * (W - left - right); };
  auto py = [&](double y) { return H - bottom - (y - ymin) / (ymax - ymin) * (H - top - bottom); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 "
     << W << ' ' << H << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
     << title << "</text>\n";
  os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << W - left - right << "\" height=\""
     << H - top - bottom << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double xv = xmin + (xmax - xmin) * t / 4.0;
    const double yv = ymin + (ymax - ymin) * t / 4.0;
    char xs[32], ys[32];
    std::snprintf(xs, sizeof xs, "%.4g", xv);
    std::snprintf(ys, sizeof ys, "%.4g", yv);
    os << "<text x=\"" << px(xv) << "\" y=\"" << H - bottom + 18
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << xs << "</text>\n";
    os << "<text x=\"" << left - 6 << "\" y=\"" << py(yv) + 4
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << ys << "</text>\n";
  }
  os << "<text x=\"" << W / 2 << "\" y=\"" << H - 15
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << x_label << "</text>\n";
  os << "<text x=\"18\" y=\"" << H / 2 << "\" transform=\"rotate(-90 18 " << H / 2
     << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << y_label << "</text>\n";
  for (std::size_t s = 0; s < series.size(); ++s) {
    const auto& ser = series[s];
    os << "<g fill=\"" << ser.color << "\">\n";
    for (std::size_t k = 0; k < std::min(ser.x.size(), ser.y.size()); ++k) {
      if (!std::isfinite(ser.x[k]) || !std::isfinite(ser.y[k])) continue;
      char buf[96];
      std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"1.6\"/>\n", px(ser.x[k]), py(ser.y[k]));
      os << buf;
    }
    os << "</g>\n";
    const double ly = top + 16 + 18 * static_cast<double>(s);
    os << "<circle cx=\"" << W - right - 150 << "\" cy=\"" << ly - 4 << "\" r=\"4\" fill=\"" << ser.color
       << "\"/>\n";
    os << "<text x=\"" << W - right - 140 << "\" y=\"" << ly
       << "\" font-family=\"sans-serif\" font-size=\"12\">" << ser.label << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace npannulus

#endif  // NPANNULUS_REPORT_HPP
