#include "ogw/amodel.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace ogw;

namespace {

// The six targets whose disk amplitudes are tabulated against localization.
std::vector<GeometryData> localization_targets() {
  return {hypersurface(6, 5), hypersurface(7, 5), hypersurface(8, 7), hypersurface(9, 7), hypersurface(8, 9), hypersurface(5, 3)};
}

Rat fact(int n) { return Rat(factorial(static_cast<unsigned long>(n))); }

}  // namespace

TEST(Partitions, Counts) {
  EXPECT_EQ(ordered_partitions(4).size(), 8u);
  EXPECT_EQ(partitions(4).size(), 5u);
  EXPECT_EQ(partitions(6).size(), 11u);
  for (const auto& p : partitions(6)) {
    EXPECT_TRUE(std::is_sorted(p.begin(), p.end()));
    EXPECT_EQ(std::accumulate(p.begin(), p.end(), 0), 6);
  }
  for (const auto& p : ordered_partitions(5)) EXPECT_EQ(std::accumulate(p.begin(), p.end(), 0), 5);
}

TEST(Partitions, SymmetryFactor) {
  EXPECT_EQ(symmetry_factor({1, 1, 2}), make_rat(1, 2));
  EXPECT_EQ(symmetry_factor({1, 1, 1}), make_rat(1, 6));
  EXPECT_EQ(symmetry_factor({1, 2, 3}), 1);
  EXPECT_EQ(symmetry_factor({1, 1, 2, 2}), make_rat(1, 4));
}

TEST(Localization, GeneralTypeValues) {
  const auto g = hypersurface(8, 9);
  EXPECT_EQ(open_gw_local(g, {2}, 1), 1890);
  EXPECT_EQ(open_gw_local(g, {1, 2}, 1), 945);
  EXPECT_EQ(open_gw_local(g, {0, 3}, 1), 945);
  EXPECT_EQ(open_gw_local(g, {0, 2, 2}, 1), make_rat(945, 2));
  EXPECT_EQ(open_gw_local(g, {0, 2}, 3), parse_rat("33973546005"));
  EXPECT_EQ(open_gw_local(g, {1}, 3), parse_rat("58381461390"));
  EXPECT_EQ(open_gw_local(g, {0}, 5), parse_rat("41731576876146796884/25"));
}

TEST(Localization, FanoMultiPointValues) {
  const auto g = hypersurface(8, 7);
  EXPECT_EQ(open_gw_local(g, {6, 0, 0, 0}, 1), make_rat(105, 4));
  EXPECT_EQ(open_gw_local(g, {6, 0, 0}, 3), -44100);
  EXPECT_EQ(open_gw_local(g, {6, 0}, 5), parse_rat("27605188800"));
}

TEST(Localization, UnsupportedDegree) {
  EXPECT_THROW(open_gw_local(hypersurface(8, 7), {6}, 7), UnsupportedDegree);
  EXPECT_THROW(open_gw_local(hypersurface(8, 7), {6}, 2), std::invalid_argument);
  EXPECT_THROW(open_gw_local(hypersurface(8, 7), {-1}, 1), std::invalid_argument);
}

TEST(Localization, KahlerEquation) {
  EXPECT_TRUE(kahler_check(hypersurface(5, 5), 1, 0, 3));
  EXPECT_TRUE(kahler_check(hypersurface(5, 5), 1, 1, 1));
  EXPECT_EQ(open_gw_local(hypersurface(5, 5), {1, 1}, 1), make_rat(1, 2) * open_gw_local(hypersurface(5, 5), {1}, 1));
  EXPECT_TRUE(kahler_check(hypersurface(5, 5), 1, 2, 5));
  EXPECT_TRUE(kahler_check(hypersurface(7, 7), 2, 2, 3));
  EXPECT_TRUE(kahler_check(hypersurface(7, 7), 2, 1, 5));
  EXPECT_THROW(kahler_check(hypersurface(6, 5), 3, 1, 1), InvalidGeometry);
}

TEST(MirrorTransformation, OpenEqualsTransformedLocalizationAllTargets) {
  for (const auto& g : localization_targets())
    for (int d_odd : {1, 3, 5})
      for (int a = 0; a <= g.dimension(); ++a)
        EXPECT_EQ(open_vsc(g, a, d_odd), gmt_rhs(g, a, d_odd)) << g.label() << " a=" << a << " d=" << d_odd;
}

TEST(MirrorTransformation, DegreeOneHasNoCorrection) {
  for (const auto& g : localization_targets()) EXPECT_EQ(gmt_correction(g, open_dimension(g, 1).value(), 1), 0);
}

TEST(MirrorTransformation, GeneralTypeDisplayedEqualities) {
  const auto g = hypersurface(8, 9);
  const Rat w04 = parse_rat("34138908");
  EXPECT_EQ(closed_w(g, 0, 4, 1) / 9, w04);
  EXPECT_EQ(open_vsc(g, 1, 3), parse_rat("58381461390") + 945 * w04);
  EXPECT_EQ(gmt_correction(g, 1, 3), 945 * w04);
  const Rat w03 = parse_rat("8404934443598718");
  const Rat rhs5 = parse_rat("41731576876146796884/25") + parse_rat("33973546005") * w04 + 945 * w03 + make_rat(945, 2) * w04 * w04 / 2;
  EXPECT_EQ(open_vsc(g, 0, 5), rhs5);
}

TEST(MirrorTransformation, IndexOneFanoWeights) {
  // N = k + 1: the closed factor is k! and the sum collapses to (k!)^j / j!.
  for (int k : {3, 5, 7}) EXPECT_EQ(closed_w(hypersurface(k + 1, k), k - 1, 0, 1) / Rat(k), fact(k)) << "k=" << k;
  for (int k : {5, 7}) {
    const auto g = hypersurface(k + 1, k);
    for (int d_odd : {3, 5}) {
      const int a = open_dimension(g, d_odd).value();
      Rat sum = 0;
      for (int j = 0; 2 * j < d_odd; ++j) {
        InsertionList ins{a};
        ins.insert(ins.end(), static_cast<std::size_t>(j), 0);
        sum += open_gw_local(g, ins, d_odd - 2 * j) * ogw::pow(fact(k), j) / fact(j);
      }
      EXPECT_EQ(sum, open_vsc(g, a, d_odd)) << "k=" << k << " d=" << d_odd;
    }
  }
  const Rat f7 = fact(7);
  const Rat expected = parse_rat("20924080987824000") + parse_rat("27605188800") * f7 + Rat(-44100) * f7 * f7 / 2 +
                       make_rat(105, 4) * f7 * f7 * f7 / 6;
  EXPECT_EQ(expected, parse_rat("21063211139376000"));
  EXPECT_EQ(open_gw_from_gmt(hypersurface(8, 7), 6, 7), parse_rat("20924080987824000"));
  EXPECT_EQ(open_gw(hypersurface(8, 7), 6, 7), parse_rat("20924080987824000"));
}

TEST(MirrorTransformation, HigherIndexFanoNeedsNoCorrection) {
  for (const auto& g : {hypersurface(7, 5), hypersurface(9, 7), hypersurface(5, 3)})
    for (int d_odd : {1, 3, 5}) {
      const int a = open_dimension(g, d_odd).value();
      EXPECT_EQ(gmt_correction(g, a, d_odd), 0) << g.label();
      EXPECT_EQ(open_gw_local(g, {a}, d_odd), open_vsc(g, a, d_odd)) << g.label();
    }
  EXPECT_EQ(open_gw_local(hypersurface(7, 5), {open_dimension(hypersurface(7, 5), 3).value()}, 3), 1200);
  EXPECT_EQ(open_gw_local(hypersurface(9, 7), {open_dimension(hypersurface(9, 7), 3).value()}, 3), 4051320);
}

TEST(Covering, SingleTermInverts) {
  GradedSeries amp(Grading::Half, 1);
  amp.set(1, Rat(7));
  for (auto sign : {CoveringSign::Tables, CoveringSign::Literal, CoveringSign::None}) {
    const auto n = covering_invert(amp, {2, sign});
    ASSERT_EQ(n.size(), 1u);
    EXPECT_EQ(n[0], 7);
  }
}

TEST(Covering, LiteralForwardExample) {
  const auto s = covering_forward({Rat(1), Rat(0), Rat(0), Rat(0)}, {1, CoveringSign::Literal}, 4);
  for (int l = 1; l <= 4; ++l) EXPECT_EQ(s[2 * l - 1], make_rat(l % 2 ? -1 : 1, 2 * l - 1));
  for (int e = 0; e <= s.trunc(); e += 2) EXPECT_EQ(s[e], 0);
}

TEST(Covering, TablesSignDiffersByOverallSign) {
  const std::vector<Rat> n{Rat(3), Rat(-5), Rat(11), make_rat(1, 7)};
  for (int D : {1, 2, 3}) {
    const auto t = covering_forward(n, {D, CoveringSign::Tables}, 4);
    const auto l = covering_forward(n, {D, CoveringSign::Literal}, 4);
    EXPECT_EQ(l, D % 2 ? Rat(-1) * t : t);
  }
}

TEST(Covering, ThreeFoldWeights) {
  const auto s = covering_forward({Rat(1), Rat(1)}, {0, CoveringSign::Tables}, 5);
  EXPECT_EQ(s[1], 1);
  EXPECT_EQ(s[3], make_rat(1, 3) + 3);
  EXPECT_EQ(s[5], make_rat(1, 5));
  EXPECT_EQ(s[9], Rat(1) + make_rat(1, 9));
}

TEST(Covering, RoundTrip) {
  const std::vector<Rat> n{Rat(210), Rat(-20238540), make_rat(5, 3), Rat(0), Rat(17), Rat(-1)};
  for (int D : {0, 1, 2})
    for (auto sign : {CoveringSign::Tables, CoveringSign::Literal, CoveringSign::None}) {
      const CoveringParams p{D, sign};
      const auto amp = covering_forward(n, p, 6);
      EXPECT_EQ(covering_invert(amp, p), n);
      EXPECT_EQ(covering_forward(covering_invert(amp, p), p, 6), amp);
    }
}

TEST(Covering, EmptyInputIsZeroSeries) {
  const auto s = covering_forward({}, {1, CoveringSign::Tables}, 3);
  EXPECT_TRUE(s.is_zero());
  EXPECT_TRUE(covering_invert(GradedSeries(Grading::Half, 0), {1}).empty());
}

TEST(Covering, RejectsIntegerPowers) {
  GradedSeries amp(Grading::Half, 3);
  amp.set(2, Rat(1));
  EXPECT_THROW(covering_invert(amp, {1}), std::invalid_argument);
}

TEST(Covering, ParamsFromGeometry) {
  EXPECT_EQ(covering_for(hypersurface(5, 5)).D, 0);
  EXPECT_EQ(covering_for(hypersurface(7, 7)).D, 1);
  EXPECT_EQ(covering_for(hypersurface(9, 9)).D, 2);
  EXPECT_EQ(covering_for(make_geometry(9, {3, 3, 3})).D, 1);
  EXPECT_THROW(covering_for(hypersurface(6, 5)), InvalidGeometry);
}

TEST(Covering, IntegralityReport) {
  const auto r = integrality({Rat(1), make_rat(1, 2), Rat(3), make_rat(-4, 3)});
  EXPECT_FALSE(r.all_integral);
  EXPECT_EQ(r.non_integral_degrees, (std::vector<int>{3, 7}));
  EXPECT_TRUE(integrality({Rat(2), Rat(-5)}).all_integral);
}
