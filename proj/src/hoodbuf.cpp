#include "hood/hoodbuf.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <random>

namespace hood {

namespace {

bool pos_power_of_two(std::size_t n) {
  return n >= 2 && std::has_single_bit(n);
}

void check_triple(std::span<const Point2> pts, std::size_t i, std::size_t j,
                  std::size_t k) {
  const double det = orient(pts[k], pts[i], pts[j]);
  if (std::abs(det) < kCollinearMargin) {
    throw ValidationError(ValidationError::Code::degenerate_triple,
                          "points " + std::to_string(i) + ", " +
                              std::to_string(j) + ", " + std::to_string(k) +
                              " are collinear within margin",
                          i, j, k);
  }
}

}  // namespace

PointSet validate_points(std::vector<Point2> points) {
  const std::size_t n = points.size();
  if (!pos_power_of_two(n)) {
    throw ValidationError(ValidationError::Code::not_power_of_two,
                          "point count " + std::to_string(n) +
                              " is not a power of 2 (or is < 2)",
                          n);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(points[i].x > 0.0 && points[i].x < 1.0)) {
      throw ValidationError(ValidationError::Code::x_out_of_range,
                            "point " + std::to_string(i) +
                                " has x outside (0, 1)",
                            i);
    }
    if (i > 0 && !(points[i].x > points[i - 1].x)) {
      throw ValidationError(ValidationError::Code::x_not_increasing,
                            "point " + std::to_string(i) +
                                " does not increase in x over its predecessor",
                            i);
    }
  }

  if (n <= 64) {
    for (std::size_t i = 0; i + 2 < n; ++i)
      for (std::size_t j = i + 1; j + 1 < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) check_triple(points, i, j, k);
  } else {
    // Full O(n^3) checking would dominate the run; the kernels mostly probe
    // local triples, so check those plus a deterministic random sample.
    for (std::size_t i = 0; i + 2 < n; ++i) check_triple(points, i, i + 1, i + 2);
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < 10 * n; ++s) {
      std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
      if (a == b || b == c || a == c) continue;
      check_triple(points, a, b, c);
    }
  }
  return PointSet(std::move(points));
}

HoodBuffer::HoodBuffer(std::vector<Point2> slots, int block_size)
    : slots_(std::move(slots)), block_size_(block_size) {
  if (!pos_power_of_two(slots_.size()))
    throw std::invalid_argument("slot count must be a power of 2 and >= 2");
  if (block_size_ < 2 || !std::has_single_bit(static_cast<unsigned>(block_size_)) ||
      size() % block_size_ != 0)
    throw std::invalid_argument("block size must be a power of 2 dividing the slot count");
}

std::vector<Point2> HoodBuffer::block_corners(int b) const {
  std::vector<Point2> corners;
  for (const Point2& p : block(b)) {
    if (is_remote(p)) break;
    corners.push_back(p);
  }
  return corners;
}

HoodBuffer init_hood(const PointSet& ps) {
  return HoodBuffer(std::vector<Point2>(ps.points().begin(), ps.points().end()), 2);
}

ConformanceReport validate_hood(const HoodBuffer& h, bool require_nonempty) {
  ConformanceReport report;
  for (int b = 0; b < h.block_count(); ++b) {
    const auto blk = h.block(b);
    const int d = h.block_size();

    int prefix = 0;
    while (prefix < d && !is_remote(blk[static_cast<std::size_t>(prefix)])) ++prefix;
    for (int s = prefix; s < d; ++s) {
      if (!is_remote(blk[static_cast<std::size_t>(s)]))
        report.violations.push_back({HoodViolation::Kind::remote_before_corner, b, s});
    }
    if (prefix == 0 && require_nonempty)
      report.violations.push_back({HoodViolation::Kind::empty_block, b, 0});

    for (int s = 1; s < prefix; ++s) {
      if (!(blk[static_cast<std::size_t>(s)].x > blk[static_cast<std::size_t>(s - 1)].x))
        report.violations.push_back({HoodViolation::Kind::x_not_increasing, b, s});
    }
    for (int s = 1; s + 1 < prefix; ++s) {
      if (!left_of(blk[static_cast<std::size_t>(s)], blk[static_cast<std::size_t>(s - 1)],
                   blk[static_cast<std::size_t>(s + 1)]))
        report.violations.push_back({HoodViolation::Kind::concavity, b, s});
    }
  }
  return report;
}

}  // namespace hood
