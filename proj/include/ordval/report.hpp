#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ordval/rational.hpp"

namespace ordval {

enum class ReportFormat { Text, JsonLines };

/// Buffered key=value report; text mode prints `key=value`, json-lines mode
/// prints one single-pair JSON object per line with identical keys.  Rationals
/// travel as strings in both modes so no precision is lost.
class Report {
 public:
  using Value = std::variant<std::string, bool, long>;

  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, const char* value) { add(key, std::string(value)); }
  void add(const std::string& key, const Rational& value) { add(key, value.str()); }
  void add(const std::string& key, bool value);
  void add(const std::string& key, long value);
  void add(const std::string& key, const Int& value);

  void print(std::ostream& out, ReportFormat format) const;
  const std::vector<std::pair<std::string, Value>>& lines() const { return lines_; }

 private:
  std::vector<std::pair<std::string, Value>> lines_;
};

}  // namespace ordval
