#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hood/geom.hpp"

namespace hood {

/// Orientation determinants with absolute value below this margin are treated
/// as degenerate and rejected at input validation, so every sign test the
/// kernels perform is reliable.
inline constexpr double kCollinearMargin = 1e-9;

struct ValidationError : std::runtime_error {
  enum class Code {
    not_power_of_two,
    x_out_of_range,
    x_not_increasing,
    degenerate_triple,
  };

  ValidationError(Code code, std::string message, std::size_t i = 0,
                  std::size_t j = 0, std::size_t k = 0)
      : std::runtime_error(std::move(message)), code(code), i(i), j(j), k(k) {}

  Code code;
  std::size_t i, j, k;
};

/// Validated input: a power-of-two count of points with strictly increasing
/// x in (0, 1) and no (near-)collinear triple. Construct via validate_points.
class PointSet {
 public:
  int size() const { return static_cast<int>(points_.size()); }
  std::span<const Point2> points() const { return points_; }
  const Point2& operator[](int i) const { return points_[static_cast<std::size_t>(i)]; }

 private:
  friend PointSet validate_points(std::vector<Point2> points);
  explicit PointSet(std::vector<Point2> points) : points_(std::move(points)) {}

  std::vector<Point2> points_;
};

/// Checks every PointSet invariant and throws ValidationError on the first
/// violation. Collinearity is checked over all triples for n <= 64; above
/// that, consecutive triples plus 10*n deterministically sampled triples.
PointSet validate_points(std::vector<Point2> points);

/// n slots split into n/d blocks of d. Each block holds the corners of one
/// upper hull in its leading slots, in left-to-right order, and copies of the
/// remote sentinel in the rest.
class HoodBuffer {
 public:
  HoodBuffer(std::vector<Point2> slots, int block_size);

  int size() const { return static_cast<int>(slots_.size()); }
  int block_size() const { return block_size_; }
  int block_count() const { return size() / block_size_; }
  std::span<const Point2> slots() const { return slots_; }
  std::span<const Point2> block(int b) const {
    return std::span<const Point2>(slots_).subspan(
        static_cast<std::size_t>(b) * static_cast<std::size_t>(block_size_),
        static_cast<std::size_t>(block_size_));
  }

  /// The non-remote prefix of block b, in slot order.
  std::vector<Point2> block_corners(int b) const;

  std::vector<Point2> take_slots() && { return std::move(slots_); }

 private:
  std::vector<Point2> slots_;
  int block_size_;
};

/// The starting buffer: block size 2, slots identical to the input sequence
/// (any two points are their own upper hull, so no padding is needed).
HoodBuffer init_hood(const PointSet& ps);

struct HoodViolation {
  enum class Kind {
    empty_block,         // no corner before the padding
    remote_before_corner,
    x_not_increasing,
    concavity,           // interior corner not strictly above its neighbours' chord
  };
  Kind kind;
  int block;
  int slot;
};

struct ConformanceReport {
  std::vector<HoodViolation> violations;
  bool clean() const { return violations.empty(); }
};

/// Checks every block of the buffer against the HoodBuffer invariants.
/// Violations are data, not errors; an empty report means well-formed.
/// Buffers produced from real input always have at least one corner per
/// block; pass require_nonempty = false to accept hand-built empty blocks.
ConformanceReport validate_hood(const HoodBuffer& h, bool require_nonempty = true);

}  // namespace hood
