#include "hood/oracle.hpp"

#include <string>

namespace hood::oracle {

std::vector<Point2> upper_hull(std::span<const Point2> points) {
  std::vector<Point2> hull;
  hull.reserve(points.size());
  for (const Point2& p : points) {
    // Pop the last corner while it is not strictly above the chord of its
    // neighbours.
    while (hull.size() >= 2 &&
           !left_of(hull[hull.size() - 1], hull[hull.size() - 2], p)) {
      hull.pop_back();
    }
    hull.push_back(p);
  }
  return hull;
}

std::size_t brute_tangent_to_right(Point2 p, std::span<const Point2> hull) {
  std::size_t found = hull.size();
  int candidates = 0;
  for (std::size_t t = 0; t < hull.size(); ++t) {
    bool others_below = true;
    for (std::size_t o = 0; o < hull.size(); ++o) {
      if (o != t && orient(hull[o], p, hull[t]) >= 0.0) {
        others_below = false;
        break;
      }
    }
    if (others_below) {
      found = t;
      ++candidates;
    }
  }
  if (candidates != 1) {
    throw NoUniqueTangent("tangent from point is not unique: " +
                          std::to_string(candidates) + " candidate corners");
  }
  return found;
}

std::pair<std::size_t, std::size_t> brute_common_tangent(
    std::span<const Point2> p_corners, std::span<const Point2> q_corners) {
  std::pair<std::size_t, std::size_t> found{p_corners.size(), q_corners.size()};
  int candidates = 0;
  for (std::size_t a = 0; a < p_corners.size(); ++a) {
    for (std::size_t b = 0; b < q_corners.size(); ++b) {
      bool others_below = true;
      for (std::size_t o = 0; o < p_corners.size() && others_below; ++o) {
        if (o != a && orient(p_corners[o], p_corners[a], q_corners[b]) >= 0.0)
          others_below = false;
      }
      for (std::size_t o = 0; o < q_corners.size() && others_below; ++o) {
        if (o != b && orient(q_corners[o], p_corners[a], q_corners[b]) >= 0.0)
          others_below = false;
      }
      if (others_below) {
        found = {a, b};
        ++candidates;
      }
    }
  }
  if (candidates != 1) {
    throw NoUniqueTangent("common tangent is not unique: " +
                          std::to_string(candidates) + " candidate pairs");
  }
  return found;
}

}  // namespace hood::oracle
