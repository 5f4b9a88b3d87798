#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hood/geom.hpp"

// Serial reference implementations used as ground truth for the parallel
// engine. Deliberately exhaustive and separate from the kernel logic.
namespace hood::oracle {

struct NoUniqueTangent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Monotone-chain upper hull of x-sorted points with no collinear triples.
/// First and last points are always kept.
std::vector<Point2> upper_hull(std::span<const Point2> points);

/// Index of the corner of `hull` supporting the tangent from p, found by
/// checking every candidate against every other corner. p must lie strictly
/// left of the hull.
std::size_t brute_tangent_to_right(Point2 p, std::span<const Point2> hull);

/// Corner indices (into P and Q) of the common upper tangent, by exhaustive
/// pair scan. Every corner of P must lie strictly left of every corner of Q.
std::pair<std::size_t, std::size_t> brute_common_tangent(
    std::span<const Point2> p_corners, std::span<const Point2> q_corners);

}  // namespace hood::oracle
