#pragma once

// Command implementations behind the ratfib executable. Each returns an
// ordered key/value report and the process exit code.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ratfib/git.hpp"

namespace ratfib {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitParse = 2;

class Report {
 public:
  void add(std::string key, std::string value) { entries_.emplace_back(std::move(key), std::move(value)); }
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  /// First value stored under `key`, or empty.
  std::string get(std::string_view key) const;

  /// "key: value" lines.
  std::string text() const;
  std::string json() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

struct CommandResult {
  Report report;
  int exit_code = kExitOk;
};

CommandResult cmd_validate(std::string_view file_text);

enum class Phi5Mode { ClosedForm, Blowup, Both };
CommandResult cmd_phi5(std::string_view file_text, Phi5Mode mode);

struct GitOptions {
  Linearization lin;
  std::optional<std::array<long, 5>> lambda;
  bool normalize = false;
  bool classify = false;
  bool flat_limit = false;
  bool rescale = false;
};
CommandResult cmd_git(std::string_view file_text, const GitOptions& opts);

/// args[0] is one of pencil, classes, numerology, pullback, relation.
CommandResult cmd_divisors(const std::vector<std::string>& args);

/// sub is one of phi6, d6, curves.
CommandResult cmd_g6(std::string_view file_text, std::string_view sub);

}  // namespace ratfib
