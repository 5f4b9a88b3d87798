#pragma once

namespace hood {

/// Planar point. Data points keep x in (0, 1); the padding sentinel sits at
/// x = 10, so any slot with x > 1 is treated as unused.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(const Point2&, const Point2&) = default;
};

inline constexpr Point2 kRemote{10.0, 0.0};

constexpr Point2 make_remote() { return kRemote; }

constexpr bool is_remote(Point2 p) { return p.x > 1.0; }

/// det(q - p, r - p): positive when r lies strictly left of the directed
/// segment p -> q, zero when the triple is collinear.
constexpr double orient(Point2 r, Point2 p, Point2 q) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

constexpr bool left_of(Point2 r, Point2 p, Point2 q) {
  return orient(r, p, q) > 0.0;
}

}  // namespace hood
