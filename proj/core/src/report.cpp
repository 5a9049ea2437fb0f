#include "corrpriv/report.hpp"

#include <sstream>

#include <json.hpp>

#include "corrpriv/io.hpp"

namespace corrpriv {

std::string bound_report_csv_header() {
  return "bound,lhs,rhs,slack,holds,context";
}

std::string to_csv_row(const BoundReport& r) {
  std::ostringstream out;
  out << r.bound_name << "," << format_double(r.lhs) << "," << format_double(r.rhs)
      << "," << format_double(r.slack) << "," << (r.holds ? "true" : "false") << ","
      << r.context;
  return out.str();
}

std::string to_json(const std::vector<BoundReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    arr.push_back({{"bound", r.bound_name},
                   {"lhs", r.lhs},
                   {"rhs", r.rhs},
                   {"slack", r.slack},
                   {"holds", r.holds},
                   {"context", r.context}});
  }
  return arr.dump(2);
}

}  // namespace corrpriv
