#include "hood/psim.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <random>
#include <tuple>

namespace hood {

namespace {

std::string format_value(Point2 p) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "(%.17g, %.17g)", p.x, p.y);
  return buf;
}

std::string format_value(std::int32_t v) { return std::to_string(v); }

std::uint64_t mix(std::uint64_t seed, std::uint64_t block, std::uint64_t phase) {
  std::uint64_t h = seed ^ (block * 0x9e3779b97f4a7c15ull) ^ (phase << 32);
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdull;
  h ^= h >> 33;
  return h;
}

}  // namespace

const char* to_string(ArrayId a) {
  switch (a) {
    case ArrayId::hood: return "hood";
    case ArrayId::newhood: return "newhood";
    case ArrayId::scratch: return "scratch";
  }
  return "?";
}

MergeArrays MergeArrays::for_round(std::vector<Point2> hood_slots) {
  MergeArrays m;
  const std::size_t n = hood_slots.size();
  m.hood = std::move(hood_slots);
  m.newhood.assign(n, kRemote);
  m.scratch.assign(n, -1);
  return m;
}

std::string ConflictReport::summary() const {
  std::string s = std::to_string(write_write.size()) + " write-write, " +
                  std::to_string(read_write.size()) + " read-write, " +
                  std::to_string(out_of_window.size()) + " out-of-window";
  if (!write_write.empty()) {
    const auto& c = write_write.front();
    s += "; first: phase " + std::to_string(c.phase) + " " +
         to_string(c.array) + "[" + std::to_string(c.cell) + "] = " +
         c.first_value + " vs " + c.second_value;
  } else if (!out_of_window.empty()) {
    const auto& c = out_of_window.front();
    s += "; first: phase " + std::to_string(c.phase) + " " +
         (c.write ? "write " : "read ") + to_string(c.array) + "[" +
         std::to_string(c.cell) + "]";
  }
  return s;
}

ConflictError::ConflictError(ConflictReport r)
    : std::runtime_error("conflict audit failed: " + r.summary()),
      report(std::move(r)) {}

namespace detail {

struct PendingWrite {
  ArrayId array;
  int cell;
  Point2 point;
  std::int32_t word;
};

struct ReadAccess {
  ArrayId array;
  int cell;
};

struct BlockState {
  int block = 0;
  int d1 = 0, d2 = 0, d = 0, start = 0, window = 0;
  int phase = 0;
  long write_ops = 0;

  std::vector<Point2> snap_hood, snap_newhood;
  std::vector<std::int32_t> snap_scratch;

  std::vector<ThreadLocals> locals;
  std::vector<std::vector<PendingWrite>> writes;  // by thread
  std::vector<std::vector<ReadAccess>> reads;     // by thread

  ConflictReport* report = nullptr;

  ThreadId tid(int thread) const { return {block, thread % d1, thread / d1}; }

  bool in_window(int cell) const { return cell >= start && cell < start + window; }

  void note_out_of_window(ArrayId a, int cell, int thread, bool write) {
    report->out_of_window.push_back({phase, a, cell, tid(thread), write});
  }

  Point2 read_point(ArrayId a, int cell, int thread) {
    if (!in_window(cell)) {
      note_out_of_window(a, cell, thread, false);
      return kRemote;
    }
    reads[static_cast<std::size_t>(thread)].push_back({a, cell});
    const auto& snap = (a == ArrayId::hood) ? snap_hood : snap_newhood;
    return snap[static_cast<std::size_t>(cell - start)];
  }

  std::int32_t read_word(int cell, int thread) {
    if (!in_window(cell)) {
      note_out_of_window(ArrayId::scratch, cell, thread, false);
      return -1;
    }
    reads[static_cast<std::size_t>(thread)].push_back({ArrayId::scratch, cell});
    return snap_scratch[static_cast<std::size_t>(cell - start)];
  }

  void write_point(int cell, Point2 v, int thread) {
    ++write_ops;
    if (!in_window(cell)) {
      note_out_of_window(ArrayId::newhood, cell, thread, true);
      return;
    }
    writes[static_cast<std::size_t>(thread)].push_back({ArrayId::newhood, cell, v, 0});
  }

  void write_word(int cell, std::int32_t v, int thread) {
    ++write_ops;
    if (!in_window(cell)) {
      note_out_of_window(ArrayId::scratch, cell, thread, true);
      return;
    }
    writes[static_cast<std::size_t>(thread)].push_back({ArrayId::scratch, cell, {}, v});
  }

  void run_thread(const Phase& phase, int thread) {
    PhaseCtx ctx(this, thread);
    phase.run(ctx);
  }
};

}  // namespace detail

int PhaseCtx::block() const { return state_->block; }
int PhaseCtx::x() const { return thread_ % state_->d1; }
int PhaseCtx::y() const { return thread_ / state_->d1; }
int PhaseCtx::d1() const { return state_->d1; }
int PhaseCtx::d2() const { return state_->d2; }
int PhaseCtx::d() const { return state_->d; }
int PhaseCtx::start() const { return state_->start; }

ThreadLocals& PhaseCtx::locals() {
  return state_->locals[static_cast<std::size_t>(thread_)];
}

Point2 PhaseCtx::hood(int idx) { return state_->read_point(ArrayId::hood, idx, thread_); }
Point2 PhaseCtx::newhood(int idx) { return state_->read_point(ArrayId::newhood, idx, thread_); }
std::int32_t PhaseCtx::scratch(int idx) { return state_->read_word(idx, thread_); }
void PhaseCtx::write_newhood(int idx, Point2 v) { state_->write_point(idx, v, thread_); }
void PhaseCtx::write_scratch(int idx, std::int32_t v) { state_->write_word(idx, v, thread_); }

namespace {

using detail::BlockState;
using detail::PendingWrite;

std::string pending_value(const PendingWrite& w) {
  return w.array == ArrayId::scratch ? format_value(w.word) : format_value(w.point);
}

// Executes every phase of the kernel for one block. Blocks cannot observe
// each other (out-of-window reads are poisoned), so running a block to
// completion is equivalent to global phase-by-phase execution.
void run_block(const PhaseKernel& kernel, MergeArrays& arrays, int block,
               const LaunchOptions& options, ConflictReport& report,
               std::vector<long>& phase_writes) {
  BlockState st;
  st.block = block;
  st.d1 = kernel.dims.d1;
  st.d2 = kernel.dims.d2;
  st.d = kernel.dims.d();
  st.start = block * 2 * st.d;
  st.window = 2 * st.d;
  st.report = &report;

  const int threads = st.d;
  st.locals.assign(static_cast<std::size_t>(threads), ThreadLocals{});
  st.writes.assign(static_cast<std::size_t>(threads), {});
  st.reads.assign(static_cast<std::size_t>(threads), {});

  std::vector<int> order(static_cast<std::size_t>(threads));
  std::iota(order.begin(), order.end(), 0);

  const std::size_t w = static_cast<std::size_t>(st.window);
  const std::size_t base = static_cast<std::size_t>(st.start);
  std::vector<int> writer_newhood(w), writer_scratch(w);
  std::vector<std::tuple<ArrayId, int, int, int>> overlaps;  // array, cell, reader, writer

  for (std::size_t pi = 0; pi < kernel.phases.size(); ++pi) {
    st.phase = static_cast<int>(pi);
    st.write_ops = 0;

    // Snapshot at the barrier entering this phase.
    st.snap_hood.assign(arrays.hood.begin() + static_cast<long>(base),
                        arrays.hood.begin() + static_cast<long>(base + w));
    st.snap_newhood.assign(arrays.newhood.begin() + static_cast<long>(base),
                           arrays.newhood.begin() + static_cast<long>(base + w));
    st.snap_scratch.assign(arrays.scratch.begin() + static_cast<long>(base),
                           arrays.scratch.begin() + static_cast<long>(base + w));
    for (int t = 0; t < threads; ++t) {
      st.writes[static_cast<std::size_t>(t)].clear();
      st.reads[static_cast<std::size_t>(t)].clear();
    }

    if (options.shuffle_seed) {
      std::mt19937_64 rng(mix(*options.shuffle_seed,
                              static_cast<std::uint64_t>(block), pi));
      std::shuffle(order.begin(), order.end(), rng);
    }
    for (int t : order) st.run_thread(kernel.phases[pi], t);

    // Audit in canonical thread order so reports are schedule-independent.
    std::fill(writer_newhood.begin(), writer_newhood.end(), -1);
    std::fill(writer_scratch.begin(), writer_scratch.end(), -1);
    for (int t = 0; t < threads; ++t) {
      for (const PendingWrite& pw : st.writes[static_cast<std::size_t>(t)]) {
        auto& writer_of = (pw.array == ArrayId::newhood) ? writer_newhood : writer_scratch;
        int& slot = writer_of[static_cast<std::size_t>(pw.cell - st.start)];
        if (slot < 0) {
          slot = t;
          continue;
        }
        const auto& first_writes = st.writes[static_cast<std::size_t>(slot)];
        std::string first_value;
        for (const PendingWrite& fw : first_writes) {
          if (fw.array == pw.array && fw.cell == pw.cell) {
            first_value = pending_value(fw);
            break;
          }
        }
        report.write_write.push_back({st.phase, pw.array, pw.cell, st.tid(slot),
                                      st.tid(t), first_value, pending_value(pw)});
      }
    }

    overlaps.clear();
    for (int t = 0; t < threads; ++t) {
      for (const auto& acc : st.reads[static_cast<std::size_t>(t)]) {
        if (acc.array == ArrayId::hood) continue;  // hood is never written
        const auto& writer_of =
            (acc.array == ArrayId::newhood) ? writer_newhood : writer_scratch;
        const int writer = writer_of[static_cast<std::size_t>(acc.cell - st.start)];
        if (writer >= 0 && writer != t)
          overlaps.emplace_back(acc.array, acc.cell, t, writer);
      }
    }
    std::sort(overlaps.begin(), overlaps.end());
    overlaps.erase(std::unique(overlaps.begin(), overlaps.end()), overlaps.end());
    for (const auto& [array, cell, reader, writer] : overlaps)
      report.read_write.push_back({st.phase, array, cell, st.tid(reader), st.tid(writer)});

    // Apply writes at the barrier, in thread order.
    for (int t = 0; t < threads; ++t) {
      for (const PendingWrite& pw : st.writes[static_cast<std::size_t>(t)]) {
        if (pw.array == ArrayId::newhood)
          arrays.newhood[static_cast<std::size_t>(pw.cell)] = pw.point;
        else
          arrays.scratch[static_cast<std::size_t>(pw.cell)] = pw.word;
      }
    }

    phase_writes[pi] = st.write_ops;
  }
}

void check_arrays(const PhaseKernel& kernel, const MergeArrays& arrays) {
  const std::size_t n = arrays.hood.size();
  if (arrays.newhood.size() != n || arrays.scratch.size() != n)
    throw std::invalid_argument("merge arrays must have equal lengths");
  if (kernel.dims.d1 < 1 || kernel.dims.d2 < 1)
    throw std::invalid_argument("block dims must be positive");
}

LaunchReport run_launch(const PhaseKernel& kernel, MergeArrays& arrays,
                        const LaunchOptions& options, bool parallel) {
  check_arrays(kernel, arrays);
  const long need = static_cast<long>(kernel.grid) * 2 * kernel.dims.d();
  if (kernel.grid < 1 || need != static_cast<long>(arrays.hood.size()))
    throw std::invalid_argument("grid * 2d must equal the array length");

  const std::size_t phases = kernel.phases.size();
  std::vector<ConflictReport> block_reports(static_cast<std::size_t>(kernel.grid));
  std::vector<std::vector<long>> block_writes(
      static_cast<std::size_t>(kernel.grid), std::vector<long>(phases, 0));

#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (int b = 0; b < kernel.grid; ++b) {
    run_block(kernel, arrays, b, options, block_reports[static_cast<std::size_t>(b)],
              block_writes[static_cast<std::size_t>(b)]);
  }
  (void)parallel;

  LaunchReport rep;
  rep.writes_by_phase_block.assign(phases, std::vector<long>(
                                               static_cast<std::size_t>(kernel.grid), 0));
  for (int b = 0; b < kernel.grid; ++b) {
    auto& c = block_reports[static_cast<std::size_t>(b)];
    rep.conflicts.write_write.insert(rep.conflicts.write_write.end(),
                                     c.write_write.begin(), c.write_write.end());
    rep.conflicts.read_write.insert(rep.conflicts.read_write.end(),
                                    c.read_write.begin(), c.read_write.end());
    rep.conflicts.out_of_window.insert(rep.conflicts.out_of_window.end(),
                                       c.out_of_window.begin(), c.out_of_window.end());
    for (std::size_t pi = 0; pi < phases; ++pi)
      rep.writes_by_phase_block[pi][static_cast<std::size_t>(b)] =
          block_writes[static_cast<std::size_t>(b)][pi];
  }

  rep.metrics.launches = 1;
  rep.metrics.barriers = static_cast<long>(phases);
  rep.metrics.thread_steps =
      static_cast<long>(kernel.grid) * kernel.dims.d() * static_cast<long>(phases);

  if (options.strict && !rep.conflicts.clean()) throw ConflictError(rep.conflicts);
  return rep;
}

}  // namespace

LaunchReport launch(const PhaseKernel& kernel, MergeArrays& arrays,
                    const LaunchOptions& options) {
  return run_launch(kernel, arrays, options, false);
}

LaunchReport run_blocks_parallel(const PhaseKernel& kernel, MergeArrays& arrays,
                                 const LaunchOptions& options) {
  return run_launch(kernel, arrays, options, true);
}

LaunchReport launch_block(const PhaseKernel& kernel, MergeArrays& arrays,
                          int block, const LaunchOptions& options) {
  check_arrays(kernel, arrays);
  const long end = static_cast<long>(block + 1) * 2 * kernel.dims.d();
  if (block < 0 || end > static_cast<long>(arrays.hood.size()))
    throw std::invalid_argument("block window exceeds the arrays");

  const std::size_t phases = kernel.phases.size();
  LaunchReport rep;
  std::vector<long> writes(phases, 0);
  run_block(kernel, arrays, block, options, rep.conflicts, writes);
  rep.writes_by_phase_block.assign(phases, std::vector<long>(1, 0));
  for (std::size_t pi = 0; pi < phases; ++pi)
    rep.writes_by_phase_block[pi][0] = writes[pi];

  rep.metrics.launches = 1;
  rep.metrics.barriers = static_cast<long>(phases);
  rep.metrics.thread_steps = kernel.dims.d() * static_cast<long>(phases);

  if (options.strict && !rep.conflicts.clean()) throw ConflictError(rep.conflicts);
  return rep;
}

}  // namespace hood
