#include <gtest/gtest.h>

#include "fdomain/domain_f.hpp"
#include "fdomain/io.hpp"

using namespace fdomain;

TEST(ParseComplex, Forms) {
  EXPECT_EQ(io::parse_complex("1.5"), Complex(1.5, 0.0));
  EXPECT_EQ(io::parse_complex("-2i"), Complex(0.0, -2.0));
  EXPECT_EQ(io::parse_complex("i"), Complex(0.0, 1.0));
  EXPECT_EQ(io::parse_complex("-i"), Complex(0.0, -1.0));
  EXPECT_EQ(io::parse_complex("0.5-0.25i"), Complex(0.5, -0.25));
  EXPECT_EQ(io::parse_complex(" 1e-3 + 2E-2i "), Complex(1e-3, 2e-2));
  EXPECT_EQ(io::parse_complex("1-i"), Complex(1.0, -1.0));
  EXPECT_EQ(io::parse_complex("3j"), Complex(0.0, 3.0));
}

TEST(ParseComplex, Errors) {
  EXPECT_THROW(io::parse_complex(""), ParseError);
  EXPECT_THROW(io::parse_complex("abc"), ParseError);
  EXPECT_THROW(io::parse_complex("1+2"), ParseError);
  EXPECT_THROW(io::parse_complex("1..2i"), ParseError);
  EXPECT_THROW(io::parse_complex("inf"), ParseError);
}

TEST(ParseTuple, Forms) {
  const auto t = io::parse_tuple("(0, 0.5, 0, 1)");
  ASSERT_EQ(t.size(), 4u);
  EXPECT_EQ(t[1], Complex(0.5));
  EXPECT_EQ(io::parse_tuple("i,1,i,1-i").size(), 4u);
  EXPECT_THROW(io::parse_tuple("(1, 2"), ParseError);
}

TEST(ParseMatrix, Forms) {
  EXPECT_EQ(io::parse_matrix("[[0,1],[0,0]]"), Matrix2::e12());
  EXPECT_EQ(io::parse_matrix("[[1+i, 2], [3, -4i]]"), (Matrix2{Complex(1, 1), 2.0, 3.0, Complex(0, -4)}));
  EXPECT_THROW(io::parse_matrix("[[0,1]]"), ParseError);
  EXPECT_THROW(io::parse_matrix("[[0,1,2],[0,0,0]]"), ParseError);
}

TEST(PointDocument, Parse) {
  const auto d = io::parse_point_document(
      R"({"domain": "f", "coords": [{"re": 0, "im": 0}, {"re": 0.5, "im": 0}, 0, "1+0i"]})");
  EXPECT_EQ(d.domain, "f");
  ASSERT_EQ(d.coords.size(), 4u);
  EXPECT_EQ(d.coords[1], Complex(0.5));
  EXPECT_EQ(d.coords[3], Complex(1.0));
  EXPECT_THROW(io::parse_point_document(R"({"domain": "g2", "coords": [0, 0, 0]})"), ParseError);
  EXPECT_THROW(io::parse_point_document(R"({"domain": "q", "coords": [0, 0]})"), ParseError);
  EXPECT_THROW(io::parse_point_document("{not json"), ParseError);
}

TEST(Format, RoundTripIsExact) {
  Rng rng(71);
  for (int i = 0; i < 1000; ++i) {
    const PointF pt{complex_gaussian(rng), complex_gaussian(rng), complex_gaussian(rng), complex_gaussian(rng)};
    const auto back = io::parse_tuple(io::format_tuple({pt.x, pt.a, pt.p, pt.s}));
    ASSERT_EQ(back.size(), 4u);
    const PointF again{back[0], back[1], back[2], back[3]};
    EXPECT_EQ(again, pt);
    EXPECT_EQ(f_classify(again).region, f_classify(pt).region);
  }
  const Matrix2 A{Complex(0.1, -0.2), 1e-300, Complex(0, 3), -7.0};
  EXPECT_EQ(io::parse_matrix(io::format_matrix(A)), A);
}

TEST(Format, Json) {
  const auto j = io::to_json(Complex(1.0, -2.0));
  EXPECT_EQ(j.at("re").get<double>(), 1.0);
  EXPECT_EQ(j.at("im").get<double>(), -2.0);
  EXPECT_EQ(io::complex_from_json(j), Complex(1.0, -2.0));
  EXPECT_EQ(io::to_json(Matrix2::identity()).size(), 2u);
}
