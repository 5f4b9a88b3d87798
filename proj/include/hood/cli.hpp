#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>

#include "hood/hoodbuf.hpp"

// File formats and the command entry points behind the `hull` binary.
//
// Input:  whitespace-separated ASCII: the point count, then one "x y" pair
//         per point. Anything from '#' to end of line is a comment.
// Output: a `points <n>` section and a `hood <k>` section, each followed by
//         one coordinate line per point; '#' comment lines may appear
//         anywhere. Coordinates are printed with 17 significant digits so a
//         read back yields bit-identical doubles.
// Trace:  per round a `d <d>` line, then per block the corner count on its
//         own line followed by the corner coordinates; a final `0` line
//         terminates the file.
namespace hood::cli {

struct ParseError : std::runtime_error {
  ParseError(const std::string& where, int line, const std::string& message)
      : std::runtime_error(where + ":" + std::to_string(line) + ": " + message),
        line(line) {}
  int line;
};

PointSet read_points(const std::string& path);
PointSet parse_points(std::istream& in, const std::string& name = "<stream>");

std::string format_coord(double v);
void write_point_set(std::ostream& out, std::span<const Point2> points);

void write_trace_round(std::ostream& out, const HoodBuffer& h);
void write_trace_end(std::ostream& out);

/// Unit-square viewport, one dot per point, the hull as a polyline.
void emit_svg(std::span<const Point2> points, std::span<const Point2> hull,
              const std::string& path);

enum class Mode { parallel, serial, both };

struct RunOptions {
  std::string input;
  std::string trace_path;  // empty: no trace
  std::string svg_path;    // empty: no SVG
  Mode mode = Mode::parallel;
  bool strict = false;
};

/// Reads the input, computes the hull in the requested mode, writes the
/// output grammar to `out`. In `both` mode the simulated and serial hulls
/// must agree exactly. Returns the process exit status.
int run(const RunOptions& options, std::ostream& out, std::ostream& err);

/// Prints rounds, barriers, thread-steps and conflict counts for one input
/// as a tab-separated table.
int bench(const std::string& input, std::ostream& out, std::ostream& err);

}  // namespace hood::cli
