#ifndef HIGGS_CLI_HPP
#define HIGGS_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "higgs/error.hpp"
#include "higgs/geometry.hpp"
#include "higgs/serialize.hpp"

namespace higgs::cli {

enum class Command {
  Factor,
  BaseCheck,
  Cover,
  Tower,
  Correspondence,
  BxTable,
  Chern,
  Stability,
  HitchinSection,
  Sl2rEnum,
  MilnorWood,
  Rigidity,
  HigherRank,
  Selftest,
};

std::string_view to_string(Command c);
std::optional<Command> command_from_string(std::string_view name);

struct ChartModel {
  std::size_t nvars = 0;
};

using Model = std::variant<std::monostate, ChartModel, SurfaceModel, ProductOfCurves>;

struct JobConfig {
  Command command = Command::Selftest;
  Model model;
  Json payload = Json::object();
  std::optional<std::uint64_t> seed;
};

// Parses and validates the config document. Throws ParseError for malformed
// JSON or wrongly typed values and SchemaError for missing or unknown keys;
// messages name the offending path.
JobConfig parse_config(std::string_view text);

struct Report {
  std::string human;
  Json machine;
  bool ok = true;  // false when a selftest suite failed
};

// Dispatches to the library. Domain failures propagate as higgs::Error.
Report run(const JobConfig& job);

// 0 success, 1 domain or precondition failure, 2 parse or schema failure.
int exit_code(const Error& e);

}  // namespace higgs::cli

#endif
