#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hood/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"upper convex hull via simulated bulk-synchronous hood merging"};
  app.require_subcommand(1);

  hood::cli::RunOptions run_options;
  std::string mode = "parallel";
  CLI::App* run = app.add_subcommand("run", "compute the hull of an input file");
  run->add_option("input", run_options.input, "input point file")->required();
  run->add_option("--trace", run_options.trace_path,
                  "write the intermediate hoods of each round to this file");
  run->add_option("--mode", mode, "parallel, serial, or both (compare)")
      ->check(CLI::IsMember({"parallel", "serial", "both"}));
  run->add_option("--svg", run_options.svg_path,
                  "render the points and hull to an SVG file");
  run->add_flag("--strict", run_options.strict,
                "treat any audited memory conflict as an error");

  std::string bench_input;
  CLI::App* bench = app.add_subcommand("bench", "print round and work accounting");
  bench->add_option("input", bench_input, "input point file")->required();

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    run_options.mode = mode == "serial"  ? hood::cli::Mode::serial
                       : mode == "both" ? hood::cli::Mode::both
                                        : hood::cli::Mode::parallel;
    return hood::cli::run(run_options, std::cout, std::cerr);
  }
  return hood::cli::bench(bench_input, std::cout, std::cerr);
}
