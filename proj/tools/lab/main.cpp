#include <cstdio>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "lab/commands.hpp"

int main(int argc, char** argv) {
  using namespace repeller::lab;
  CLI::App app{"repeller-lab: dimension and bound experiments for expanding maps with holes"};
  app.require_subcommand(1);

  std::string config_path, out = ".", cache = "on";
  long long seed = -1;
  unsigned jobs = 1;
  const std::map<std::string, std::string> about{
      {"dim", "Box dimension of the survivor set over a parameter grid"},
      {"bounds", "Exact verification of the combinatorial and volume bounds"},
      {"a2", "Bad-cylinder volume against delta(n, mu_f)"},
      {"induced", "Build the induced expander and check its expansion and hole"},
      {"sweep-all", "Run every applicable command into <out>/<command>"}};
  for (const std::string& name : command_names()) {
    auto* sub = app.add_subcommand(name, about.at(name));
    sub->add_option("--config", config_path, "Config file (key = value)");
    sub->add_option("--seed", seed, "Override the config seed");
    sub->add_option("--out", out, "Output directory");
    sub->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--cache", cache, "Result cache")->check(CLI::IsMember({"on", "off"}));
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  Config cfg;
  try {
    if (!config_path.empty()) cfg = Config::load(config_path);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  }
  RunOptions opts;
  opts.out = out;
  opts.jobs = jobs;
  opts.cache = cache == "on";
  if (seed >= 0) opts.seed = static_cast<std::uint64_t>(seed);
  return run_command(app.get_subcommands().front()->get_name(), cfg, opts);
}
