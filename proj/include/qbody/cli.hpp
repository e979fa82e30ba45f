// Copyright 2026 The qbody Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "qbody/numerics.hpp"
#include "qbody/serialize.hpp"

namespace qbody::cli {

enum class Command { xo, witness, seesaw, certify, realize, cone };
enum class Format { json, csv };

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 2,
  kNumericalError = 3,
  kIoError = 4,
};

struct RunConfig {
  Command command = Command::xo;
  std::size_t m = 4;
  std::size_t d = 2;
  std::uint64_t seed = 1;
  std::size_t trials = 50;
  std::size_t grid_density = 64;
  std::size_t max_iter = 10000;
  ToleranceConfig tolerances;
  std::optional<std::filesystem::path> output_path;
  std::optional<Format> format;
  std::size_t parallel = 1;
};

Json cmd_xo(std::size_t m);
Json cmd_witness(std::size_t m, std::size_t d, const ToleranceConfig& tol = {});
Json cmd_seesaw(std::size_t m, std::size_t trials, std::uint64_t seed,
                const ToleranceConfig& tol = {}, std::size_t max_iter = 10000,
                std::size_t threads = 1);
Json cmd_certify(std::size_t m, const ToleranceConfig& tol = {});
Json cmd_realize(std::size_t m, const ToleranceConfig& tol = {});

/// Writes both scans to out (CSV, or a JSON array of rows) and returns the summary.
Json cmd_cone(std::size_t grid_density, const std::filesystem::path& out, Format format = Format::csv,
              std::size_t threads = 1);

/// Runs a fully parsed configuration, printing JSON to out.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and executes it.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qbody::cli
