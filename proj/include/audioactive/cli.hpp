#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "audioactive/cosmology.hpp"

namespace audioactive::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 2,
  kExitNotProven = 3,  // also longevity cap breaches
  kExitInternal = 4,
};

enum class Format { Json, Csv, Text };

struct RunConfig {
  int depth = kDefaultScreenDepth;  // --L
  int cap_days = kDefaultCapDays;
  int generation_cap = kDefaultGenerationCap;
  std::string seed = "1";
  std::optional<Format> format;  // unset: the command's own default
  std::string out;               // empty: write to the output stream
  unsigned threads = 1;
};

// Each command writes its artifact to cfg.out or `out` and returns an exit
// code. Library errors propagate to run().
int cmd_say(const std::string& literal, std::size_t days, const RunConfig& cfg,
            std::ostream& out);
int cmd_split(const std::string& literal, const RunConfig& cfg, std::ostream& out);
int cmd_table(const RunConfig& cfg, std::ostream& out);
int cmd_lambda(const RunConfig& cfg, bool charpoly, std::ostream& out);
int cmd_abundance(const RunConfig& cfg, std::ostream& out);
int cmd_longevity(const std::string& literal, const RunConfig& cfg,
                  std::ostream& out);
int cmd_cosmo(const RunConfig& cfg, std::ostream& out, std::ostream* progress);

// Parses argv, dispatches, and maps exceptions to exit codes with a JSON
// diagnostic on `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace audioactive::cli
