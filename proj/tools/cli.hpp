#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace meyerap::cli {

enum ExitCode : int { kSuccess = 0, kFailure = 1, kInputError = 2 };

/// One parsed invocation. Flags that do not apply to `name` must stay empty;
/// `run` rejects them before doing any work.
struct Command {
  std::string name;
  std::vector<std::string> positional{};
  std::optional<std::string> cps{};
  std::optional<std::string> window{};
  std::optional<std::string> region{};
  std::optional<std::string> center{};
  std::optional<std::string> expr{};
  std::optional<std::string> colors{};
  std::optional<std::string> points_out{};
  std::optional<std::size_t> length{};
  std::optional<std::size_t> rank_target{};
  std::optional<std::size_t> budget{};
  bool oracle = false;
};

struct RunReport {
  int exit_code = kSuccess;
  nlohmann::json document;

  /// Sorted keys, two-space indent, trailing newline.
  std::string text() const;
};

RunReport run(const Command& command);

const std::vector<std::string>& command_names();

}  // namespace meyerap::cli
