#include "report.hpp"

#include <cstdio>
#include <sstream>

namespace fullerene::cli {

void RunReport::set(const std::string& key, const std::string& value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = value;
      return;
    }
  }
  entries_.emplace_back(key, value);
}

void RunReport::timing(const std::string& key, double seconds) { timings_.emplace_back(key, seconds); }

void RunReport::output(const std::string& path) { outputs_.push_back(path); }

const std::string& RunReport::get(const std::string& key) const {
  static const std::string empty;
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  return empty;
}

std::string RunReport::stable() const {
  std::ostringstream out;
  out << "# fullerene-report 1\n";
  out << "command=" << command_ << '\n';
  for (const auto& [k, v] : entries_) out << k << '=' << v << '\n';
  for (std::size_t i = 0; i < outputs_.size(); ++i) out << "output." << i + 1 << '=' << outputs_[i] << '\n';
  return out.str();
}

std::string RunReport::str() const {
  std::ostringstream out;
  out << stable();
  out << "[timing]\n";
  for (const auto& [k, seconds] : timings_) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", seconds);
    out << k << '=' << buf << '\n';
  }
  return out.str();
}

}  // namespace fullerene::cli
