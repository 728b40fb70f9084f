#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace fullerene::cli {

/// Line-oriented key=value run report.
///
///   # fullerene-report 1
///   command=...
///   <stable key=value lines, in insertion order>
///   [timing]
///   <key=seconds lines>
///
/// Everything above `[timing]` is a pure function of the arguments and the
/// input files.
class RunReport {
 public:
  explicit RunReport(std::string command) : command_(std::move(command)) {}

  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, long long value) { set(key, std::to_string(value)); }
  void set(const std::string& key, int value) { set(key, std::to_string(value)); }
  void set(const std::string& key, bool value) { set(key, std::string(value ? "true" : "false")); }
  void set(const std::string& key, const char* value) { set(key, std::string(value)); }

  void timing(const std::string& key, double seconds);
  void output(const std::string& path);

  const std::string& get(const std::string& key) const;
  std::string stable() const;
  std::string str() const;

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> entries_;
  std::vector<std::pair<std::string, double>> timings_;
  std::vector<std::string> outputs_;
};

}  // namespace fullerene::cli
