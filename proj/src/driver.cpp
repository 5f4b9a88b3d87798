#include "hood/driver.hpp"

namespace hood {

std::vector<Round> round_schedule(int n) {
  std::vector<Round> rounds;
  int d1 = 2, d2 = 1, r = 1;
  for (int d = d1 * d2; d < n; d = d1 * d2) {
    rounds.push_back({r, d1, d2, d});
    if (d1 > d2)
      d2 *= 2;
    else
      d1 *= 2;
    ++r;
  }
  return rounds;
}

BuildReport build_hood(const PointSet& ps, const BuildOptions& options) {
  HoodBuffer buf = init_hood(ps);
  BuildReport out;

  for (const Round& round : round_schedule(ps.size())) {
    if (options.on_round_begin) options.on_round_begin(round, buf);

    MergeArrays arrays = MergeArrays::for_round(std::move(buf).take_slots());
    const PhaseKernel kernel =
        match_and_merge_kernel(static_cast<int>(arrays.hood.size()),
                               {round.d1, round.d2});
    const LaunchOptions launch_opts{options.strict, options.shuffle_seed};
    const LaunchReport rep = options.parallel_blocks
                                 ? run_blocks_parallel(kernel, arrays, launch_opts)
                                 : launch(kernel, arrays, launch_opts);
    require_tangents(rep, round.r);

    out.metrics += rep.metrics;
    out.conflicts += rep.conflicts.total();

    buf = HoodBuffer(std::move(arrays.newhood), 2 * round.d);
    if (options.on_round_end) options.on_round_end(round, buf, rep);
  }

  out.hull = buf.block_corners(0);
  return out;
}

StepMetrics round_metrics(const PointSet& ps) { return build_hood(ps).metrics; }

}  // namespace hood
