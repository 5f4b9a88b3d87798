// Times the audited engine with sequential and parallel block dispatch
// against the serial reference hull on growing random inputs.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "hood/driver.hpp"
#include "hood/oracle.hpp"
#include "support/generators.hpp"

using namespace hood;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int max_exp = 16;
  if (argc > 1) max_exp = std::atoi(argv[1]);
  if (max_exp < 2 || max_exp > 22) {
    std::fprintf(stderr, "usage: %s [max_log2_n (2..22)]\n", argv[0]);
    return 2;
  }

  std::printf("n\tseq_ms\tpar_ms\tspeedup\toracle_ms\tequal\n");
  for (int e = 10; e <= max_exp; ++e) {
    const int n = 1 << e;
    const PointSet ps = testsupport::make_random_point_set(n, 0xBE7C4ull + static_cast<std::uint64_t>(e));

    BuildOptions seq;
    seq.parallel_blocks = false;
    auto t0 = Clock::now();
    const BuildReport a = build_hood(ps, seq);
    const double seq_ms = ms_since(t0);

    BuildOptions par;
    par.parallel_blocks = true;
    t0 = Clock::now();
    const BuildReport b = build_hood(ps, par);
    const double par_ms = ms_since(t0);

    t0 = Clock::now();
    const std::vector<Point2> reference = oracle::upper_hull(ps.points());
    const double oracle_ms = ms_since(t0);

    const bool equal = a.hull == b.hull && a.hull == reference;
    std::printf("%d\t%.2f\t%.2f\t%.2fx\t%.3f\t%s\n", n, seq_ms, par_ms,
                par_ms > 0 ? seq_ms / par_ms : 0.0, oracle_ms,
                equal ? "yes" : "NO");
    if (!equal) return 1;
  }
  return 0;
}
