#include <gtest/gtest.h>

#include <random>
#include <set>

#include "osculant/projspace.hpp"

using namespace osculant;

namespace {

template <class K>
Line<Elem<K>> line(const K& f, std::array<std::int64_t, 4> p, std::array<std::int64_t, 4> q) {
  return Line<Elem<K>>::through(make_point(f, p[0], p[1], p[2], p[3]), make_point(f, q[0], q[1], q[2], q[3]));
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST(Plucker, SpecExamples) {
  RationalField q;
  EXPECT_EQ(plucker(make_point(q, 1, 0, 0, 0), make_point(q, 0, 1, 0, 0)), make_klein(q, {1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(plucker(make_point(q, 0, 0, 1, 0), make_point(q, 0, 0, 0, 1)), make_klein(q, {0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(plucker(make_point(q, 1, 1, 1, 0), make_point(q, 0, 0, 1, 1)), make_klein(q, {0, 1, 1, 1, 1, 1}));
}

TEST(Plucker, CoincidentPointsRejected) {
  PrimeField f(5);
  try {
    plucker(make_point(f, 1, 2, 3, 4), make_point(f, 2, 4, 6, 8));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CoincidentPoints);
  }
}

TEST(Skew, SpecExamples) {
  RationalField q;
  // osculating tangents at P(0,0) and P(1,1)
  const auto t00 = line(q, {1, 0, 0, 0}, {0, 1, 0, 0});
  const auto t11 = line(q, {1, 1, 1, 0}, {0, 1, 3, 1});
  EXPECT_TRUE(lines_skew_det(q, t00, t11));
  EXPECT_TRUE(lines_skew_polar(t00, t11));
  EXPECT_EQ(det4(q, {t00.first().coords(), t00.second().coords(), t11.first().coords(), t11.second().coords()}),
            q.one());
  EXPECT_FALSE(lines_skew(t00, t00));
  EXPECT_FALSE(lines_skew_det(q, t11, t11));

  PrimeField f(7);
  // P(1,4) = (1,1,4,4-1) and direction (0,1,3,4)
  const auto a = line(f, {1, 0, 0, 0}, {0, 1, 0, 0});
  const auto b = line(f, {1, 1, 4, 3}, {0, 1, 3, 4});
  EXPECT_FALSE(lines_skew_det(f, a, b));
  EXPECT_FALSE(lines_skew_polar(a, b));
}

TEST(Incidence, SpecExamples) {
  RationalField q;
  EXPECT_TRUE(point_in_plane(make_point(q, 0, 0, 0, 1), make_plane(q, 1, 0, 0, 0)));
  EXPECT_TRUE(incidence(make_point(q, 1, 0, 0, 0), line(q, {1, 0, 0, 0}, {0, 1, 0, 0})));
  EXPECT_FALSE(incidence(make_point(q, 0, 0, 1, 0), line(q, {1, 0, 0, 0}, {0, 1, 0, 0})));
  const auto g_inf = line(q, {0, 0, 1, 0}, {0, 0, 0, 1});
  EXPECT_FALSE(line_in_plane(g_inf, make_plane(q, 0, 0, 0, 1)));
  EXPECT_TRUE(line_in_plane(g_inf, make_plane(q, 1, 0, 0, 0)));
  EXPECT_TRUE(incidence(make_point(q, 0, 0, 3, -7), g_inf));
}

TEST(Enumeration, CountsMatchFormulas) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    PrimeField f(p);
    const std::uint64_t n = p;
    const auto pts = enumerate_points(f);
    const auto planes = enumerate_planes(f);
    const auto lines = enumerate_lines(f);
    EXPECT_EQ(pts.size(), ipow(n, 3) + ipow(n, 2) + n + 1);
    EXPECT_EQ(planes.size(), pts.size());
    EXPECT_EQ(lines.size(), (n * n + 1) * (n * n + n + 1));
    EXPECT_EQ(std::set(pts.begin(), pts.end()).size(), pts.size());
    EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
    EXPECT_TRUE(std::is_sorted(lines.begin(), lines.end()));
    EXPECT_EQ(std::adjacent_find(lines.begin(), lines.end()), lines.end());
  }
  PrimeField gf2(2);
  EXPECT_EQ(enumerate_points(gf2).size(), 15u);
  EXPECT_EQ(enumerate_lines(gf2).size(), 35u);
  EXPECT_EQ(enumerate_points(PrimeField(3)).size(), 40u);
  EXPECT_EQ(enumerate_lines(PrimeField(3)).size(), 130u);
  EXPECT_EQ(enumerate_points(PrimeField(5)).size(), 156u);
  EXPECT_EQ(enumerate_lines(PrimeField(5)).size(), 806u);
}

TEST(Enumeration, InfiniteFieldRejected) {
  try {
    enumerate_points(RationalField{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InfiniteField);
  }
  EXPECT_THROW(enumerate_lines(RationalField{}), Error);
  EXPECT_THROW(enumerate_planes(RationalField{}), Error);
}

TEST(Enumeration, FirstPointsAreLexicographic) {
  PrimeField f(3);
  const auto pts = enumerate_points(f);
  EXPECT_EQ(pts[0], make_point(f, 0, 0, 0, 1));
  EXPECT_EQ(pts[1], make_point(f, 0, 0, 1, 0));
  EXPECT_EQ(pts[4], make_point(f, 0, 1, 0, 0));
  EXPECT_EQ(pts.back(), make_point(f, 1, 2, 2, 2));
}

TEST(Invariants, PluckerIndependentOfSpanningPair) {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    PrimeField f(p);
    for (const auto& l : enumerate_lines(f)) {
      const auto& a = l.first().coords();
      const auto& b = l.second().coords();
      // random invertible 2x2 change of basis
      for (int t = 0; t < 3; ++t) {
        Fp m00 = f.from_int(rng() % p), m01 = f.from_int(rng() % p), m10 = f.from_int(rng() % p),
           m11 = f.from_int(rng() % p);
        if ((m00 * m11 - m01 * m10).is_zero()) continue;
        Vec4<Fp> c, d;
        for (int i = 0; i < 4; ++i) {
          c[i] = m00 * a[i] + m01 * b[i];
          d[i] = m10 * a[i] + m11 * b[i];
        }
        EXPECT_EQ(plucker(ProjPoint<Fp>(c), ProjPoint<Fp>(d)), l.plucker());
      }
      EXPECT_TRUE(klein_form(l.plucker().coords()).is_zero());
    }
  }
}

TEST(Invariants, SkewDeterminantAgreesWithPolarExhaustively) {
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField f(p);
    const auto lines = enumerate_lines(f);
    std::size_t skew_pairs = 0;
    for (const auto& a : lines) {
      for (const auto& b : lines) {
        const bool det = lines_skew_det(f, a, b);
        ASSERT_EQ(det, lines_skew_polar(a, b)) << to_string(a) << " " << to_string(b);
        skew_pairs += det;
      }
    }
    // each line is skew to q^4 others
    EXPECT_EQ(skew_pairs, lines.size() * ipow(p, 4));
  }
}

TEST(Invariants, EveryLineHasQPlusOnePointsAndPlanes) {
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField f(p);
    const auto pts = enumerate_points(f);
    const auto planes = enumerate_planes(f);
    for (const auto& l : enumerate_lines(f)) {
      std::size_t on = 0, in = 0;
      for (const auto& x : pts) on += incidence(x, l);
      for (const auto& e : planes) in += line_in_plane(l, e);
      EXPECT_EQ(on, p + 1u);
      EXPECT_EQ(in, p + 1u);
      EXPECT_EQ(points_on_line(f, l).size(), p + 1u);
    }
  }
}

TEST(Geometry, MeetAndLineOfPlanes) {
  PrimeField f(5);
  const auto l = line_of_planes(f, make_plane(f, 1, 0, 0, 0), make_plane(f, 0, 1, 0, 0));
  EXPECT_EQ(l, line(f, {0, 0, 1, 0}, {0, 0, 0, 1}));
  const auto x = meet_line_plane(line(f, {1, 0, 0, 0}, {0, 0, 0, 1}), make_plane(f, 1, 0, 0, 1));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, make_point(f, 1, 0, 0, 4));
  EXPECT_FALSE(meet_line_plane(l, make_plane(f, 1, 0, 0, 0)).has_value());
}
