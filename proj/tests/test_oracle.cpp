#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "hood/oracle.hpp"
#include "support/generators.hpp"

using namespace hood;
using oracle::brute_common_tangent;
using oracle::brute_tangent_to_right;
using oracle::upper_hull;

// Four points whose chord slopes decrease strictly, so all of them are upper
// hull corners; the common tangent of the halves is supported at B and C.
static const Point2 A{0.1, 0.5}, B{0.2, 0.6}, C{0.6, 0.9}, D{0.7, 0.2};

TEST_CASE("upper hull keeps a concave chain") {
  const std::vector<Point2> pts{A, B, C, D};
  CHECK(upper_hull(pts) == pts);
}

TEST_CASE("upper hull of a cup keeps only the endpoints") {
  const std::vector<Point2> pts{{0.1, 0.9}, {0.3, 0.3}, {0.6, 0.25}, {0.9, 0.8}};
  CHECK(upper_hull(pts) == std::vector<Point2>{{0.1, 0.9}, {0.9, 0.8}});
}

TEST_CASE("upper hull of two points keeps both") {
  const std::vector<Point2> pts{{0.2, 0.4}, {0.8, 0.1}};
  CHECK(upper_hull(pts) == pts);
}

TEST_CASE("tangent to the right by exhaustion") {
  const std::vector<Point2> q{C, D};
  CHECK(brute_tangent_to_right(A, q) == 0);
  CHECK(brute_tangent_to_right(B, q) == 0);
  CHECK(brute_tangent_to_right(A, std::vector<Point2>{C}) == 0);
}

TEST_CASE("tangent is not unique over a collinear pair") {
  // Both corners lie on the line y = x through p.
  const std::vector<Point2> q{{0.4, 0.4}, {0.6, 0.6}};
  CHECK_THROWS_AS(brute_tangent_to_right({0.1, 0.1}, q),
                  oracle::NoUniqueTangent);
}

TEST_CASE("common tangent by exhaustion") {
  const std::vector<Point2> p{A, B};
  CHECK(brute_common_tangent(p, std::vector<Point2>{C, D}) ==
        std::pair<std::size_t, std::size_t>{1, 0});
  CHECK(brute_common_tangent(std::vector<Point2>{A}, std::vector<Point2>{C}) ==
        std::pair<std::size_t, std::size_t>{0, 0});

  // A lower right half: the tangent skips C' and lands on D'.
  const std::vector<Point2> q{{0.6, 0.1}, {0.7, 0.2}};
  CHECK(brute_common_tangent(p, q) == std::pair<std::size_t, std::size_t>{1, 1});
}

TEST_CASE("hull of a union is the tangent splice of the halves") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto pair = testsupport::make_random_hood_pair(16, 1000 + seed);
    const auto [pi, qi] = brute_common_tangent(pair.p_corners, pair.q_corners);

    std::vector<Point2> expected(pair.p_corners.begin(),
                                 pair.p_corners.begin() + static_cast<long>(pi) + 1);
    expected.insert(expected.end(), pair.q_corners.begin() + static_cast<long>(qi),
                    pair.q_corners.end());

    std::vector<Point2> all = pair.p_corners;
    all.insert(all.end(), pair.q_corners.begin(), pair.q_corners.end());
    CHECK(upper_hull(all) == expected);
  }
}
