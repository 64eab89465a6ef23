#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cgv::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kConfigError = 2 };

struct RunConfig {
  std::string command;
  std::string graph;
  std::vector<std::string> identities;
  std::vector<std::string> bounds;
  int samples = -1;  // -1: command default
  std::uint64_t seed = 1;
  std::string seed_source = "default";
  std::int64_t range = 1000;
  std::string sampler = "rectilinear";
  bool moment = false;
  std::string embedding_path;
  std::string family_seed;
  bool delta_only = false;
  std::string weight_seed = "k3311";
  int member = -1;
  bool all_members = false;
  int index = 0;
  int jobs = 1;
  std::string format = "json";
  std::string out;
};

/// Parses argv and runs one subcommand. Reports go to --out or `out`;
/// diagnostics go to `err`. `env_seed` is the value of CGV_SEED, if set.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const char* env_seed);

}  // namespace cgv::cli
