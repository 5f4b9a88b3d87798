#pragma once

#include <concepts>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hood/geom.hpp"
#include "hood/psim.hpp"

// The match-and-merge kernel. One thread block of d1 x d2 threads merges the
// adjacent hoods P (slots [start, start+d)) and Q (slots [start+d, start+2d))
// into the hood of their union, by locating the corners pindex and qindex
// supporting the common upper tangent and splicing the two corner lists.
namespace hood {

/// Verdict on a candidate corner relative to the corner supporting the
/// tangent: before it, at it, or past it. Codes are fixed at -1 / 0 / +1.
enum class Classification : int { low = -1, equal = 0, high = 1 };

constexpr bool operator<=(Classification a, Classification b) {
  return static_cast<int>(a) <= static_cast<int>(b);
}

/// Classifies Q-slot j against the corner of H(Q) supporting the tangent
/// from hood[i] (a corner of P, left of Q): LOW left of it, EQUAL at it,
/// HIGH right of it or remote. A corner with no right (left) neighbour is
/// tested against a fictitious neighbour one unit below itself, which can
/// never be strictly left of the probe segment.
template <class Reader>
  requires std::invocable<Reader&, int>
Classification classify_g(Reader&& hood, int i, int j, int start, int d) {
  if (is_remote(hood(j))) return Classification::high;
  const Point2 p = hood(i);
  const Point2 q = hood(j);

  const bool atend = (j == start + 2 * d - 1) || is_remote(hood(j + 1));
  Point2 q_next = atend ? q : hood(j + 1);
  if (atend) q_next.y -= 1.0;
  if (left_of(q_next, p, q)) return Classification::low;

  const bool atstart = (j == start + d);
  Point2 q_prev = atstart ? q : hood(j - 1);
  if (atstart) q_prev.y -= 1.0;
  return left_of(q_prev, p, q) ? Classification::high : Classification::equal;
}

/// Mirror of classify_g on the P half: classifies P-slot i against the
/// corner of H(P) supporting the tangent from hood[j] (a corner of Q).
template <class Reader>
  requires std::invocable<Reader&, int>
Classification classify_f(Reader&& hood, int i, int j, int start, int d) {
  if (is_remote(hood(i))) return Classification::high;
  const Point2 p = hood(i);
  const Point2 q = hood(j);

  const bool atend = (i == start + d - 1) || is_remote(hood(i + 1));
  Point2 p_next = atend ? p : hood(i + 1);
  if (atend) p_next.y -= 1.0;
  if (left_of(p_next, p, q)) return Classification::low;

  const bool atstart = (i == start);
  Point2 p_prev = atstart ? p : hood(i - 1);
  if (atstart) p_prev.y -= 1.0;
  return left_of(p_prev, p, q) ? Classification::high : Classification::equal;
}

inline Classification classify_g(std::span<const Point2> hood, int i, int j,
                                 int start, int d) {
  return classify_g([&](int k) { return hood[static_cast<std::size_t>(k)]; }, i,
                    j, start, d);
}

inline Classification classify_f(std::span<const Point2> hood, int i, int j,
                                 int start, int d) {
  return classify_f([&](int k) { return hood[static_cast<std::size_t>(k)]; }, i,
                    j, start, d);
}

/// Phase count of the merge kernel: seven logical steps, with the splice
/// split into three barrier-separated sub-phases so every phase keeps a
/// disjoint write set.
inline constexpr int kMergePhaseCount = 9;

/// Index of the phase that pins (pindex, qindex); it must write exactly two
/// scratch cells per block.
inline constexpr int kPinpointPhase = 5;

/// The nine phases of the merge kernel, in order.
std::vector<Phase> match_and_merge_phases();

/// Kernel over n/(2d) blocks of dims.d1 x dims.d2 threads.
PhaseKernel match_and_merge_kernel(int n, BlockDims dims);

/// The searched window held no pair with both classifiers EQUAL, which
/// falsifies common-tangent uniqueness (degenerate input).
struct DegenerateTangent : std::runtime_error {
  DegenerateTangent(int round, int block);
  int round;
  int block;
};

/// Throws DegenerateTangent when some block's pinpoint phase wrote nothing.
/// (Two or more writers surface as write-write conflicts instead.)
void require_tangents(const LaunchReport& report, int round);

/// Merges the two halves of block `block` in place; newhood receives the
/// merged window. Audits and tangent checks apply as in a full launch.
LaunchReport match_and_merge_block(MergeArrays& arrays, int block,
                                   BlockDims dims,
                                   const LaunchOptions& options = {});

}  // namespace hood
