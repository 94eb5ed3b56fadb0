#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "univalence/verifier.hpp"

namespace {

using univalence::ConfigError;
using univalence::RunConfig;

struct OptionHelp {
  const char* key;
  const char* help;
};

const OptionHelp kSweepOptions[] = {
    {"v", "Bessel order(s): list or start:stop:step"},
    {"b", "Parameter b"},
    {"d", "Parameter d (complex, e.g. 1 or -0.5+0.5i)"},
    {"lambda", "Operator lambda >= 0"},
    {"gamma", "Fractional order gamma"},
    {"n", "Operator power n >= 0"},
    {"m-index", "Majorization index m (default 1)"},
    {"order", "Series truncation order"},
    {"radii", "Disk grid: number of radii"},
    {"angles", "Disk grid: number of angles"},
    {"max-radius", "Disk grid: outermost radius"},
};

const OptionHelp kCriteriaOptions[] = {
    {"which", "H, F, G or direct"},
    {"mu", "Operator parameter mu (per function for H)"},
    {"eta", "Operator parameter eta (H)"},
    {"c", "Operator parameter c (H)"},
    {"zeta", "Operator parameter zeta (G)"},
};

const OptionHelp kIntegralOptions[] = {
    {"nodes", "Gauss-Legendre nodes per panel"},
    {"tolerance", "Relative quadrature tolerance"},
    {"max-depth", "Maximum panel subdivision depth"},
    {"seed", "Pair sampling seed"},
    {"pairs", "Pair budget for large grids"},
};

struct Subcommand {
  CLI::App* app;
  std::map<std::string, std::vector<std::string>> values;
  std::string config_path;
};

template <std::size_t N>
void add_options(Subcommand& sub, const OptionHelp (&options)[N]) {
  for (const auto& o : options) {
    sub.app->add_option("--" + std::string(o.key), sub.values[o.key], o.help)
        ->allow_extra_args(false);
  }
}

RunConfig build_config(const std::string& command, Subcommand& sub) {
  RunConfig cfg;
  cfg.command = command;
  std::multimap<std::string, std::string> file;
  if (!sub.config_path.empty()) {
    std::ifstream in(sub.config_path);
    if (!in) throw ConfigError("cannot read config file '" + sub.config_path + "'");
    std::stringstream text;
    text << in.rdbuf();
    file = univalence::parse_config_text(text.str());
    for (const auto& [key, value] : file) {
      if (!sub.values.count(key)) {
        throw ConfigError("config key '" + key + "' does not apply to " + command);
      }
    }
  }
  for (auto& [key, given] : sub.values) {
    if (sub.app->count("--" + key) > 0) {
      univalence::set_option(cfg, key, given);
      continue;
    }
    const auto [first, last] = file.equal_range(key);
    if (first == last) continue;
    std::vector<std::string> from_file;
    for (auto it = first; it != last; ++it) from_file.push_back(it->second);
    univalence::set_option(cfg, key, from_file);
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Univalence verifier for operator-transformed Bessel functions"};
  app.require_subcommand(1);

  std::map<std::string, Subcommand> subs;
  auto make = [&](const std::string& name, const std::string& description) -> Subcommand& {
    Subcommand& sub = subs[name];
    sub.app = app.add_subcommand(name, description);
    sub.app->add_option("--config", sub.config_path, "Flat key = value configuration file");
    sub.app->add_option("--format", sub.values["format"], "csv or json")->allow_extra_args(false);
    sub.app->add_option("--out", sub.values["out"], "Output file (default stdout)")
        ->allow_extra_args(false);
    return sub;
  };

  make("constants", "Recompute the closed-form constants");
  Subcommand& bounds = make("bounds-verify", "Compare closed-form bounds with grid sup/inf");
  add_options(bounds, kSweepOptions);
  for (const char* name : {"criteria", "scan", "injectivity"}) {
    Subcommand& sub = make(name, std::string(name) == "criteria"
                                     ? "Evaluate one univalence criterion"
                                 : std::string(name) == "scan"
                                     ? "Sweep criterion thresholds over parameter ranges"
                                     : "Sampled injectivity test of an integral operator");
    add_options(sub, kSweepOptions);
    add_options(sub, kCriteriaOptions);
    if (std::string(name) == "injectivity") add_options(sub, kIntegralOptions);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : univalence::kExitUsage;
  }

  try {
    std::string command;
    for (auto& [name, sub] : subs) {
      if (sub.app->parsed()) command = name;
    }
    const RunConfig cfg = build_config(command, subs.at(command));
    const univalence::Report report = univalence::run_command(cfg);

    std::ofstream file;
    if (!cfg.out_path.empty()) {
      file.open(cfg.out_path, std::ios::binary);
      if (!file) throw ConfigError("cannot write '" + cfg.out_path + "'");
    }
    std::ostream& out = cfg.out_path.empty() ? std::cout : file;
    if (cfg.format == "json") {
      univalence::write_json(report, out);
    } else {
      univalence::write_csv(report, out);
    }
    return report.all_passed() ? univalence::kExitPass : univalence::kExitVerificationFailure;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return univalence::kExitUsage;
  } catch (const univalence::UnsupportedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return univalence::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return univalence::kExitNumerical;
  }
}
