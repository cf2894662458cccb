#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "assocloc/matrix.hpp"

namespace assocloc {

enum class CheckStatus { Pass, Fail, Skipped };

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;
};

// Deterministic text report with sections command / inputs / result / checks.
class Report {
 public:
  explicit Report(std::string command = {}) : command_(std::move(command)) {}

  void input(const std::string& key, const std::string& value);
  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, std::size_t value);
  void set(const std::string& key, bool value);
  // Throws Error(InvalidArgument) if `name` was already recorded.
  void check(const std::string& name, bool pass, const std::string& witness = {});
  void skip(const std::string& name, const std::string& reason);
  void set_error(const std::string& error) { error_ = error; }

  const std::string& command() const { return command_; }
  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<std::pair<std::string, std::string>>& results() const { return result_; }
  std::optional<std::string> result(const std::string& key) const;
  std::optional<CheckStatus> status(const std::string& name) const;
  const std::optional<std::string>& error() const { return error_; }

  // 2 on input error, 1 if any check failed, else 0.
  int exit_code() const;
  std::string text() const;

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> inputs_;
  std::vector<std::pair<std::string, std::string>> result_;
  std::vector<Check> checks_;
  std::optional<std::string> error_;
};

std::string_view status_name(CheckStatus s);

std::string format_list(const std::vector<std::size_t>& v);
std::string format_vec(std::span<const Elem> v);
std::string format_mat(const Mat& m);

}  // namespace assocloc
