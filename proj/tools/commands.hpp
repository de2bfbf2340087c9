#pragma once

#include <functional>
#include <string>
#include <vector>

#include "config.hpp"

namespace lpball::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitInsufficientData = 4;

struct Command {
  std::string name;
  std::string description;
  std::vector<KeySpec> keys;
  std::function<int(const Config&)> run;
};

const std::vector<Command>& commands();

/// Entry point shared by the executable and the tests. Returns the exit code.
int run_cli(int argc, const char* const* argv);

}  // namespace lpball::cli
