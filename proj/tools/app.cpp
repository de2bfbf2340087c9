#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "commands.hpp"
#include "lpball/error.hpp"
#include "lpball/tail_estimator.hpp"
#include "output.hpp"

namespace lpball::cli {

namespace {

std::string flag_name(std::string key) {
  for (char& c : key) {
    if (c == '_') c = '-';
  }
  return "--" + key;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Sampling and concentration experiments on L_p^n balls and spheres", "lpball"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "lpball 0.1.0");

  struct Bound {
    const Command* command;
    CLI::App* sub;
    std::string config_path;
    bool dump = false;
    std::map<std::string, std::string> flags;
  };
  std::vector<std::unique_ptr<Bound>> bound;
  for (const auto& command : commands()) {
    auto b = std::make_unique<Bound>();
    b->command = &command;
    b->sub = app.add_subcommand(command.name, command.description);
    b->sub->add_option("--config", b->config_path, "key = value config file");
    b->sub->add_flag("--dump-config", b->dump, "print the resolved config and exit");
    for (const auto& key : command.keys) {
      auto* target = &b->flags[key.name];
      b->sub->add_option(flag_name(key.name), *target,
                         fmt::format("{} (default {})", key.help, key.default_value));
    }
    bound.push_back(std::move(b));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  for (const auto& b : bound) {
    if (!b->sub->parsed()) continue;
    try {
      Config config(b->command->keys);
      if (!b->config_path.empty()) config.merge_file(b->config_path);
      for (const auto& [key, value] : b->flags) {
        if (b->sub->count(flag_name(key)) > 0) config.set(key, value);
      }
      if (b->dump) {
        std::cout << config.serialize();
        return kExitOk;
      }
      return b->command->run(config);
    } catch (const ConfigError& e) {
      std::cerr << "lpball: config error: " << e.what() << '\n';
      return kExitConfig;
    } catch (const DomainError& e) {
      std::cerr << "lpball: invalid parameter: " << e.what() << '\n';
      return kExitConfig;
    } catch (const UnsupportedError& e) {
      std::cerr << "lpball: unsupported: " << e.what() << '\n';
      return kExitConfig;
    } catch (const IoError& e) {
      std::cerr << "lpball: I/O error: " << e.what() << '\n';
      return kExitIo;
    } catch (const InsufficientDataError& e) {
      std::cerr << "lpball: insufficient data: " << e.what() << '\n';
      return kExitInsufficientData;
    }
  }
  return kExitConfig;
}

}  // namespace lpball::cli
