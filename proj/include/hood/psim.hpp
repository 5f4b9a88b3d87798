#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hood/geom.hpp"

// Deterministic barrier-synchronous execution engine for thread-block
// kernels, with conflict auditing and step accounting.
//
// A kernel is an ordered list of phases separated by barriers. During a
// phase every thread reads the snapshot taken at the previous barrier;
// writes are collected, audited, and applied at the barrier. The result is
// therefore independent of thread evaluation order.
//
// Each block of threads owns the window [start, start + 2d) of all three
// shared arrays, where start = block * 2d. Accesses outside this window are
// reported: out-of-window reads return a poison value (the remote point, or
// -1 for scratch) and out-of-window writes are dropped, so blocks cannot
// observe each other and block-level parallel dispatch is exact.
namespace hood {

enum class ArrayId { hood, newhood, scratch };

const char* to_string(ArrayId a);

struct BlockDims {
  int d1 = 2;  // threads along x
  int d2 = 1;  // threads along y

  int d() const { return d1 * d2; }                       // hood interval length
  int round() const { return std::countr_zero(static_cast<unsigned>(d())); }
};

struct ThreadId {
  int block = 0;
  int x = 0;
  int y = 0;
};

/// Per-thread registers that survive phase barriers within one launch.
struct ThreadLocals {
  int i = -1;  // slot index into the left (P) half
  int j = -1;  // slot index into the right (Q) half
};

/// The triple of shared arrays handed to a kernel launch. `hood` is
/// read-only input; phases write `newhood` and `scratch`.
struct MergeArrays {
  std::vector<Point2> hood;
  std::vector<Point2> newhood;
  std::vector<std::int32_t> scratch;

  /// newhood filled with the remote sentinel, scratch with -1.
  static MergeArrays for_round(std::vector<Point2> hood_slots);
};

namespace detail {
struct BlockState;
}

/// Handle through which a phase function touches the world. Reads come from
/// the snapshot at the previous barrier and are logged for the audit; writes
/// land at the next barrier.
class PhaseCtx {
 public:
  int block() const;
  int x() const;
  int y() const;
  int d1() const;
  int d2() const;
  int d() const;
  int indx() const { return x() + d1() * y(); }
  int start() const;  // block() * 2 * d()

  ThreadLocals& locals();

  Point2 hood(int idx);
  Point2 newhood(int idx);
  std::int32_t scratch(int idx);

  void write_newhood(int idx, Point2 v);
  void write_scratch(int idx, std::int32_t v);

 private:
  friend struct detail::BlockState;
  PhaseCtx(detail::BlockState* state, int thread) : state_(state), thread_(thread) {}

  detail::BlockState* state_;
  int thread_;  // == indx
};

struct Phase {
  std::string name;
  std::function<void(PhaseCtx&)> run;
};

struct PhaseKernel {
  std::vector<Phase> phases;
  int grid = 0;  // number of blocks; grid * 2d must equal the array length
  BlockDims dims;
};

struct WriteWriteConflict {
  int phase;
  ArrayId array;
  int cell;
  ThreadId first;
  ThreadId second;
  std::string first_value;
  std::string second_value;
};

struct ReadWriteOverlap {
  int phase;
  ArrayId array;
  int cell;
  ThreadId reader;
  ThreadId writer;
};

struct OutOfWindowAccess {
  int phase;
  ArrayId array;
  int cell;
  ThreadId thread;
  bool write;
};

/// Audit of one launch. Empty means every phase satisfied exclusive-write,
/// snapshot-read and block-locality. Same-value double writes still count:
/// the kernels under test claim exclusive writes, so any hit is signal.
struct ConflictReport {
  std::vector<WriteWriteConflict> write_write;
  std::vector<ReadWriteOverlap> read_write;
  std::vector<OutOfWindowAccess> out_of_window;

  bool clean() const {
    return write_write.empty() && read_write.empty() && out_of_window.empty();
  }
  std::size_t total() const {
    return write_write.size() + read_write.size() + out_of_window.size();
  }
  std::string summary() const;
};

struct StepMetrics {
  long launches = 0;
  long barriers = 0;      // one per phase per launch
  long thread_steps = 0;  // threads x phases

  StepMetrics& operator+=(const StepMetrics& o) {
    launches += o.launches;
    barriers += o.barriers;
    thread_steps += o.thread_steps;
    return *this;
  }
};

struct LaunchOptions {
  /// Escalate a non-empty ConflictReport to a ConflictError after the launch.
  bool strict = false;
  /// Evaluate threads within each phase in a seeded random order instead of
  /// index order. Snapshot semantics make the outcome identical either way;
  /// exposed so tests can verify that.
  std::optional<std::uint64_t> shuffle_seed;
};

struct ConflictError : std::runtime_error {
  explicit ConflictError(ConflictReport r);
  ConflictReport report;
};

struct LaunchReport {
  ConflictReport conflicts;
  StepMetrics metrics;
  /// Raw write operations issued per phase, per block. Lets callers check
  /// phases that must produce a fixed number of writes.
  std::vector<std::vector<long>> writes_by_phase_block;
};

/// Runs the kernel over all blocks, dispatching blocks one after another.
LaunchReport launch(const PhaseKernel& kernel, MergeArrays& arrays,
                    const LaunchOptions& options = {});

/// Same contract as launch, but blocks are dispatched to parallel workers.
/// Block windows are disjoint (audited), so the output is bit-identical to
/// the sequential launch.
LaunchReport run_blocks_parallel(const PhaseKernel& kernel, MergeArrays& arrays,
                                 const LaunchOptions& options = {});

/// Runs the kernel for a single block of a larger array.
LaunchReport launch_block(const PhaseKernel& kernel, MergeArrays& arrays,
                          int block, const LaunchOptions& options = {});

}  // namespace hood
