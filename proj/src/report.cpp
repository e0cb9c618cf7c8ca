#include "ordval/report.hpp"

#include <json.hpp>
#include <ostream>

namespace ordval {

void Report::add(const std::string& key, const std::string& value) {
  lines_.emplace_back(key, Value(value));
}

void Report::add(const std::string& key, bool value) { lines_.emplace_back(key, Value(value)); }

void Report::add(const std::string& key, long value) { lines_.emplace_back(key, Value(value)); }

void Report::add(const std::string& key, const Int& value) { add(key, value.str()); }

void Report::print(std::ostream& out, ReportFormat format) const {
  for (const auto& [k, v] : lines_) {
    if (format == ReportFormat::Text) {
      out << k << '=';
      if (const auto* s = std::get_if<std::string>(&v))
        out << *s;
      else if (const auto* b = std::get_if<bool>(&v))
        out << (*b ? "true" : "false");
      else
        out << std::get<long>(v);
      out << '\n';
    } else {
      nlohmann::json obj;
      std::visit([&](const auto& val) { obj[k] = val; }, v);
      out << obj.dump() << '\n';
    }
  }
}

}  // namespace ordval
