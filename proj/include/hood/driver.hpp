#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hood/hoodbuf.hpp"
#include "hood/kernel.hpp"
#include "hood/psim.hpp"

// Host-side round loop: starting from blocks of 2, each round launches the
// merge kernel to fuse adjacent hoods, doubling the interval length, until
// one hood spans the whole array.
namespace hood {

struct Round {
  int r;   // round number; interval length entering the round is d = 2^r
  int d1;  // 2^ceil(r/2)
  int d2;  // 2^floor(r/2)
  int d;   // d1 * d2
};

/// The log2(n) - 1 rounds for n points: (1, 2, 1, 2), then alternately
/// doubling d2 and d1.
std::vector<Round> round_schedule(int n);

struct BuildOptions {
  bool parallel_blocks = true;
  bool strict = false;
  std::optional<std::uint64_t> shuffle_seed;
  /// Called with the buffer about to be merged (block size d).
  std::function<void(const Round&, const HoodBuffer&)> on_round_begin;
  /// Called with the merged buffer (block size 2d) and the launch report.
  std::function<void(const Round&, const HoodBuffer&, const LaunchReport&)> on_round_end;
};

struct BuildReport {
  std::vector<Point2> hull;
  StepMetrics metrics;
  std::size_t conflicts = 0;
};

/// Computes the upper hull of the point set through the round loop. The
/// corners come back left to right, bit-identical to the input coordinates.
BuildReport build_hood(const PointSet& ps, const BuildOptions& options = {});

/// Aggregated step accounting for a full run on ps.
StepMetrics round_metrics(const PointSet& ps);

}  // namespace hood
