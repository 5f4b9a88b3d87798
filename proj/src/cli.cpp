#include "hood/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "hood/driver.hpp"
#include "hood/oracle.hpp"

namespace hood::cli {

namespace {

constexpr std::size_t kMaxPointCount = std::size_t{1} << 26;

struct Token {
  std::string text;
  int line;
};

std::vector<Token> tokenize(std::istream& in) {
  std::vector<Token> tokens;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    std::istringstream words(line);
    std::string tok;
    while (words >> tok) tokens.push_back({tok, lineno});
  }
  return tokens;
}

double parse_double(const Token& t, const std::string& name) {
  char* end = nullptr;
  const double v = std::strtod(t.text.c_str(), &end);
  if (end == t.text.c_str() || *end != '\0')
    throw ParseError(name, t.line, "expected a number, got '" + t.text + "'");
  return v;
}

void write_section(std::ostream& out, const char* label,
                   std::span<const Point2> pts) {
  out << label << ' ' << pts.size() << '\n';
  for (const Point2& p : pts)
    out << format_coord(p.x) << ' ' << format_coord(p.y) << '\n';
}

}  // namespace

PointSet read_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("can't open " + path);
  return parse_points(in, path);
}

PointSet parse_points(std::istream& in, const std::string& name) {
  const std::vector<Token> tokens = tokenize(in);
  std::size_t pos = 0;
  const auto next = [&](const char* what) -> const Token& {
    if (pos >= tokens.size()) {
      const int line = tokens.empty() ? 1 : tokens.back().line;
      throw ParseError(name, line, std::string("unexpected end of input, expected ") + what);
    }
    return tokens[pos++];
  };

  const Token& count_tok = next("the point count");
  char* end = nullptr;
  const long long count = std::strtoll(count_tok.text.c_str(), &end, 10);
  if (end == count_tok.text.c_str() || *end != '\0' || count < 0)
    throw ParseError(name, count_tok.line,
                     "expected the point count, got '" + count_tok.text + "'");
  if (static_cast<std::size_t>(count) > kMaxPointCount)
    throw ParseError(name, count_tok.line, "point count out of range");

  std::vector<Point2> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (long long k = 0; k < count; ++k) {
    const Token& tx = next("an x coordinate");
    const double x = parse_double(tx, name);
    const double y = parse_double(next("a y coordinate"), name);
    pts.push_back({x, y});
  }
  if (pos != tokens.size())
    throw ParseError(name, tokens[pos].line,
                     "trailing input after the last point: '" + tokens[pos].text + "'");
  return validate_points(std::move(pts));
}

std::string format_coord(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_point_set(std::ostream& out, std::span<const Point2> points) {
  out << points.size() << '\n';
  for (const Point2& p : points)
    out << format_coord(p.x) << ' ' << format_coord(p.y) << '\n';
}

void write_trace_round(std::ostream& out, const HoodBuffer& h) {
  out << "d " << h.block_size() << '\n';
  for (int b = 0; b < h.block_count(); ++b) {
    const auto corners = h.block_corners(b);
    out << corners.size() << '\n';
    for (const Point2& p : corners)
      out << format_coord(p.x) << ' ' << format_coord(p.y) << '\n';
  }
}

void write_trace_end(std::ostream& out) { out << "0\n"; }

void emit_svg(std::span<const Point2> points, std::span<const Point2> hull,
              const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("can't write to " + path);
  f << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
       "viewBox=\"0 0 1 1\">\n"
       "  <g transform=\"translate(0,1) scale(1,-1)\">\n"
       "    <rect x=\"0\" y=\"0\" width=\"1\" height=\"1\" fill=\"white\"/>\n";
  for (const Point2& p : points) {
    f << "    <circle cx=\"" << format_coord(p.x) << "\" cy=\"" << format_coord(p.y)
      << "\" r=\"0.004\" fill=\"black\"/>\n";
  }
  if (!hull.empty()) {
    f << "    <polyline fill=\"none\" stroke=\"red\" stroke-width=\"0.002\" points=\"";
    for (std::size_t k = 0; k < hull.size(); ++k) {
      if (k) f << ' ';
      f << format_coord(hull[k].x) << ',' << format_coord(hull[k].y);
    }
    f << "\"/>\n";
  }
  f << "  </g>\n</svg>\n";
}

int run(const RunOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const PointSet ps = read_points(options.input);
    write_section(out, "points", ps.points());

    std::ofstream trace;
    if (!options.trace_path.empty()) {
      trace.open(options.trace_path);
      if (!trace) err << "can't write to " << options.trace_path << '\n';
    }

    std::vector<Point2> hull;
    std::size_t conflicts = 0;
    if (options.mode == Mode::serial) {
      hull = oracle::upper_hull(ps.points());
      if (trace.is_open()) write_trace_end(trace);
    } else {
      BuildOptions build;
      build.strict = options.strict;
      if (trace.is_open()) {
        build.on_round_begin = [&trace](const Round&, const HoodBuffer& h) {
          write_trace_round(trace, h);
        };
      }
      BuildReport report = build_hood(ps, build);
      if (trace.is_open()) write_trace_end(trace);
      conflicts = report.conflicts;
      hull = std::move(report.hull);

      if (options.mode == Mode::both) {
        const std::vector<Point2> reference = oracle::upper_hull(ps.points());
        if (reference != hull) {
          err << "hull mismatch: simulated kernel found " << hull.size()
              << " corners, serial reference found " << reference.size() << '\n';
          return 1;
        }
      }
    }

    if (conflicts) out << "# conflicts " << conflicts << '\n';
    write_section(out, "hood", hull);

    if (!options.svg_path.empty()) emit_svg(ps.points(), hull, options.svg_path);
    return 0;
  } catch (const std::exception& e) {
    err << "hull: " << e.what() << '\n';
    return 1;
  }
}

int bench(const std::string& input, std::ostream& out, std::ostream& err) {
  try {
    const PointSet ps = read_points(input);
    const BuildReport report = build_hood(ps);
    out << "n\trounds\tbarriers\tthread_steps\tconflicts\n";
    out << ps.size() << '\t' << report.metrics.launches << '\t'
        << report.metrics.barriers << '\t' << report.metrics.thread_steps << '\t'
        << report.conflicts << '\n';
    return 0;
  } catch (const std::exception& e) {
    err << "hull: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace hood::cli
