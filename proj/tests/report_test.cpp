#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "npannulus/report.hpp"
#include "test_maps.hpp"

namespace npannulus {
namespace {

TEST(FormatNumber, RoundTrips) {
  for (double x : {0.1, -1.0 / 3.0, 1e-300, 6.02214076e23, 0.0}) {
    EXPECT_EQ(std::strtod(format_number(x).c_str(), nullptr), x);
  }
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(format_number(std::numeric_limits<double>::quiet_NaN()), "nan");
  EXPECT_EQ(format_number(-std::numeric_limits<double>::infinity()), "-inf");
}

TEST(FormatComplex, Signs) {
  EXPECT_EQ(format_complex({0.3, 0.5}), "0.29999999999999999+0.5j");
  EXPECT_EQ(format_complex({1.0, -2.0}), "1-2j");
  EXPECT_EQ(format_complex({0.0, -0.0}), "0-0j");
}

TEST(WriteGrunskyCsv, Layout) {
  std::ostringstream os;
  write_grunsky_csv(os, compute_table(testing::joukowski(0.5), 2));
  EXPECT_EQ(os.str(), "m,1,2\n1,0.5+0j,0+0j\n2,0+0j,0.25+0j\n");
}

TEST(WriteMatrixText, Layout) {
  ComplexMatrix a(2, 1);
  a << Complex(1, 2), Complex(-0.5, 0);
  std::ostringstream os;
  write_matrix_text(os, a);
  EXPECT_EQ(os.str(), "2 1\n1 2\n-0.5 0\n");
}

TEST(CsvTable, Deterministic) {
  CsvTable t{{"index", "lambda"}, {{"1", format_number(0.5)}, {"2", format_number(-0.5)}}};
  std::ostringstream a, b;
  t.write(a);
  t.write(b);
  EXPECT_EQ(a.str(), "index,lambda\n1,0.5\n2,-0.5\n");
  EXPECT_EQ(a.str(), b.str());
}

TEST(SvgScatter, WellFormedAndSkipsNonFinite) {
  const std::string svg = svg_scatter("t", "x", "y",
                                      {{"a", "#1f77b4", {0, 1, 2}, {0, 1, std::numeric_limits<double>::infinity()}},
                                       {"b", "#d62728", {0.5}, {0.5}}});
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  std::size_t circles = 0;
  for (std::size_t p = svg.find("<circle cx"); p != std::string::npos; p = svg.find("<circle cx", p + 1)) ++circles;
  EXPECT_EQ(circles, 2u + 1u + 2u);  // data points plus one legend marker per series
  EXPECT_EQ(svg_scatter("t", "x", "y", {}), svg_scatter("t", "x", "y", {}));
}

}  // namespace
}  // namespace npannulus
