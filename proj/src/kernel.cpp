#include "hood/kernel.hpp"

namespace hood {

namespace {

// All phases probe the hood array through the context so every read lands in
// the audit log.
auto reader(PhaseCtx& c) {
  return [&c](int k) { return c.hood(k); };
}

// Scratch protocol within one block window [start, start+2d):
//   after bracket-q:    scratch[start+x]     = max Q sample j_y with g(i_x, j_y) <= EQUAL
//   after refine-q:     scratch[start+d+x]   = j1(x), the corner with g(i_x, .) = EQUAL
//   after bracket-p:    scratch[start]       = k0,   the max P sample with f <= EQUAL
//   after rebracket-q:  scratch[start+d+y]   = l_y,  Q bracket for candidate k0+y
//   after pinpoint:     scratch[start]       = pindex, scratch[start+1] = qindex

void phase_init(PhaseCtx& c) {
  c.write_scratch(c.start() + c.indx(), -1);
  c.write_scratch(c.start() + c.indx() + c.d(), -1);
  c.locals().i = c.start() + c.d2() * c.x();
}

// d1 samples i_x = start + d2*x along P, d2 samples j_y = start + d + d1*y
// along Q. For each live sample corner the thread holding the greatest Q
// sample that does not overshoot the tangent records it. The first Q corner
// never classifies HIGH (its fictitious left neighbour sits straight below
// it), so a bracket always exists.
void phase_bracket_q(PhaseCtx& c) {
  const int start = c.start(), d = c.d(), d1 = c.d1(), d2 = c.d2();
  const int i = c.locals().i;
  if (!is_remote(c.hood(i))) {
    const int j = start + d + d1 * c.y();
    c.locals().j = j;
    if (classify_g(reader(c), i, j, start, d) <= Classification::equal &&
        (c.y() == d2 - 1 || is_remote(c.hood(j + d1)) ||
         classify_g(reader(c), i, j + d1, start, d) == Classification::high)) {
      c.write_scratch(start + c.x(), j);
    }
  }
}

// The tangent corner for sample i_x lies within d1 slots of its bracket.
// The d2 threads sharing x probe one slot each, and a second slot d2 further
// when d1 = 2*d2, covering the whole bracket; exactly one probe hits EQUAL.
void phase_refine_q(PhaseCtx& c) {
  const int start = c.start(), d = c.d(), d1 = c.d1(), d2 = c.d2();
  const int i = c.locals().i;
  if (!is_remote(c.hood(i))) {
    const int j = c.scratch(start + c.x()) + c.y();
    c.locals().j = j;
    if (classify_g(reader(c), i, j, start, d) == Classification::equal) {
      c.write_scratch(start + d + c.x(), j);
    } else if (d2 < d1 &&
               classify_g(reader(c), i, j + d2, start, d) == Classification::equal) {
      c.write_scratch(start + d + c.x(), j + d2);
    }
  }
}

// k0 = the greatest P sample whose own tangent corner does not lie past the
// common tangent; pindex lands in [k0, k0+d2). The verdict is identical for
// every thread sharing x, so only the y = 0 row writes.
void phase_bracket_p(PhaseCtx& c) {
  const int start = c.start(), d = c.d(), d1 = c.d1(), d2 = c.d2();
  const int i = c.locals().i;
  const int j = c.scratch(start + d + c.x());
  c.locals().j = j;
  if (c.y() == 0 && !is_remote(c.hood(i)) &&
      classify_f(reader(c), i, j, start, d) <= Classification::equal &&
      (c.x() == d1 - 1 || is_remote(c.hood(i + d2)) ||
       classify_f(reader(c), i + d2, c.scratch(start + d + c.x() + 1), start, d) ==
           Classification::high)) {
    c.write_scratch(start, i);
  }
}

// Same bracketing again for the d2 candidate corners k0+y, now with d1
// samples spaced d2 apart covering the whole Q half, narrowing the tangent
// corner of each live candidate to d2 slots.
void phase_rebracket_q(PhaseCtx& c) {
  const int start = c.start(), d = c.d(), d1 = c.d1(), d2 = c.d2();
  const int i = c.scratch(start) + c.y();
  c.locals().i = i;
  if (!is_remote(c.hood(i))) {
    const int j = start + d + c.x() * d2;
    c.locals().j = j;
    if (classify_g(reader(c), i, j, start, d) <= Classification::equal &&
        (c.x() == d1 - 1 || is_remote(c.hood(j + d2)) ||
         classify_g(reader(c), i, j + d2, start, d) == Classification::high)) {
      c.write_scratch(start + d + c.y(), j);
    }
  }
}

// The unique pair with both classifiers EQUAL is the common tangent.
// Candidates whose slot is remote never took part in the rebracket, so their
// scratch cell may hold a stale value; the remote test keeps them out.
void phase_pinpoint(PhaseCtx& c) {
  const int start = c.start(), d = c.d(), d2 = c.d2();
  const int i = c.locals().i;
  const int j = c.scratch(start + d + c.y()) + c.x();
  c.locals().j = j;
  if (c.x() < d2 && !is_remote(c.hood(i)) &&
      classify_g(reader(c), i, j, start, d) == Classification::equal &&
      classify_f(reader(c), i, j, start, d) == Classification::equal) {
    c.write_scratch(start, i);
    c.write_scratch(start + 1, j);
  }
}

// Splice, step 1: pad the whole output window. Filling first (rather than
// only the second half) keeps corners of P past pindex from surviving when
// the shifted tail of Q is too short to overwrite them.
void phase_splice_fill(PhaseCtx& c) {
  c.write_newhood(c.start() + c.indx(), make_remote());
  c.write_newhood(c.start() + c.d() + c.indx(), make_remote());
}

// Splice, step 2: keep P's corners up to pindex.
void phase_splice_left(PhaseCtx& c) {
  const int pindex = c.scratch(c.start());
  const int slot = c.start() + c.indx();
  if (slot <= pindex) c.write_newhood(slot, c.hood(slot));
}

// Splice, step 3: copy Q from qindex on, shifted left so qindex lands right
// after pindex.
void phase_splice_right(PhaseCtx& c) {
  const int pindex = c.scratch(c.start());
  const int qindex = c.scratch(c.start() + 1);
  const int shift = qindex - pindex - 1;
  const int slot = c.start() + c.d() + c.indx();
  if (slot >= qindex) c.write_newhood(slot - shift, c.hood(slot));
}

}  // namespace

std::vector<Phase> match_and_merge_phases() {
  return {
      {"init", phase_init},
      {"bracket-q", phase_bracket_q},
      {"refine-q", phase_refine_q},
      {"bracket-p", phase_bracket_p},
      {"rebracket-q", phase_rebracket_q},
      {"pinpoint", phase_pinpoint},
      {"splice-fill", phase_splice_fill},
      {"splice-left", phase_splice_left},
      {"splice-right", phase_splice_right},
  };
}

PhaseKernel match_and_merge_kernel(int n, BlockDims dims) {
  PhaseKernel k;
  k.phases = match_and_merge_phases();
  k.dims = dims;
  k.grid = n / (2 * dims.d());
  return k;
}

DegenerateTangent::DegenerateTangent(int round, int block)
    : std::runtime_error("no common tangent found in round " +
                         std::to_string(round) + ", block " +
                         std::to_string(block)),
      round(round),
      block(block) {}

void require_tangents(const LaunchReport& report, int round) {
  const auto& pinpoint = report.writes_by_phase_block.at(kPinpointPhase);
  for (std::size_t b = 0; b < pinpoint.size(); ++b) {
    if (pinpoint[b] == 0) throw DegenerateTangent(round, static_cast<int>(b));
  }
}

LaunchReport match_and_merge_block(MergeArrays& arrays, int block,
                                   BlockDims dims, const LaunchOptions& options) {
  PhaseKernel k;
  k.phases = match_and_merge_phases();
  k.dims = dims;
  k.grid = 1;
  LaunchReport rep = launch_block(k, arrays, block, options);
  if (rep.writes_by_phase_block.at(kPinpointPhase).at(0) == 0)
    throw DegenerateTangent(dims.round(), block);
  return rep;
}

}  // namespace hood
