#include "assocloc/report.hpp"

#include <sstream>

#include "assocloc/error.hpp"

namespace assocloc {

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

void Report::input(const std::string& key, const std::string& value) {
  inputs_.emplace_back(key, value);
}

void Report::set(const std::string& key, const std::string& value) {
  for (auto& [k, v] : result_)
    if (k == key) {
      v = value;
      return;
    }
  result_.emplace_back(key, value);
}

void Report::set(const std::string& key, std::size_t value) { set(key, std::to_string(value)); }

void Report::set(const std::string& key, bool value) {
  set(key, std::string(value ? "true" : "false"));
}

void Report::check(const std::string& name, bool pass, const std::string& witness) {
  if (status(name)) throw Error(ErrorCode::InvalidArgument, "duplicate check " + name);
  checks_.push_back({name, pass ? CheckStatus::Pass : CheckStatus::Fail, witness});
}

void Report::skip(const std::string& name, const std::string& reason) {
  if (status(name)) throw Error(ErrorCode::InvalidArgument, "duplicate check " + name);
  checks_.push_back({name, CheckStatus::Skipped, reason});
}

std::optional<std::string> Report::result(const std::string& key) const {
  for (const auto& [k, v] : result_)
    if (k == key) return v;
  return std::nullopt;
}

std::optional<CheckStatus> Report::status(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return c.status;
  return std::nullopt;
}

int Report::exit_code() const {
  if (error_) return 2;
  for (const auto& c : checks_)
    if (c.status == CheckStatus::Fail) return 1;
  return 0;
}

std::string Report::text() const {
  std::ostringstream out;
  out << "command: " << command_ << "\n";
  out << "inputs:\n";
  for (const auto& [k, v] : inputs_) out << "  " << k << ": " << v << "\n";
  out << "result:\n";
  for (const auto& [k, v] : result_) out << "  " << k << ": " << v << "\n";
  out << "checks:\n";
  for (const auto& c : checks_) {
    out << "  " << c.name << ": " << status_name(c.status) << "\n";
    if (!c.witness.empty()) out << "    witness: " << c.witness << "\n";
  }
  if (error_) out << "error: " << *error_ << "\n";
  out << "exit: " << exit_code() << "\n";
  return out.str();
}

std::string format_list(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string format_vec(std::span<const Elem> v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string format_mat(const Mat& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) s += (r ? "," : "") + format_vec(m.row_span(r));
  return s + "]";
}

}  // namespace assocloc
