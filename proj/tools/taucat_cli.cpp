#include <iostream>

#include "CLI11.hpp"
#include "taucat/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"taucat: tau-tilting computations over bound quiver algebras"};

  taucat::JobSpec job;
  bool dot = false;

  app.add_option("command", job.command, "command to run, e.g. `tau list` or `verify bijections`")
      ->required()
      ->expected(-1);
  app.add_option("-a,--algebra", job.algebra, "algebra spec file or fixture name");
  app.add_option("-f,--format", job.format, "output format")
      ->check(CLI::IsMember({"table", "json", "dot"}));
  app.add_flag("--signed", job.signed_entries, "enumerate signed sequences");
  app.add_option("--length", job.length, "sequence length (default: number of vertices)");
  app.add_option("--seed", job.seed, "decomposition seed");
  app.add_option("--pd-cap", job.pd_cap, "cap for projective dimension search");
  app.add_flag("--dot", dot, "shorthand for --format dot");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 2;
  }
  if (dot) job.format = "dot";

  return taucat::run_job(job, std::cout, std::cerr);
}
