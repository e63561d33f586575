#include "relosc/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace relosc {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  while (begin < end && *begin == ' ') ++begin;
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc{}) {
    throw InvalidRequestError("not a number: '" + text + "'");
  }
  return value;
}

void write_csv(std::ostream& out, const Table& table) {
  for (const auto& [key, value] : table.meta) {
    out << "# " << key << " = " << value << "\n";
  }
  for (size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << "\n";
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << row[i];
    }
    out << "\n";
  }
}

void write_json(std::ostream& out, const Table& table) {
  nlohmann::json j;
  for (const auto& [key, value] : table.meta) j["meta"][key] = value;
  j["columns"] = table.columns;
  auto rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    auto jr = nlohmann::json::array();
    for (const auto& cell : row) {
      // Numeric cells stay numbers in the JSON mirror.
      try {
        jr.push_back(parse_double(cell));
      } catch (const InvalidRequestError&) {
        jr.push_back(cell);
      }
    }
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  out << j.dump(2) << "\n";
}

TrajectoryFile read_trajectory_csv(std::istream& in) {
  TrajectoryFile file;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto eq = line.find('=');
      if (eq != std::string::npos) {
        auto trim = [](std::string s) {
          const auto a = s.find_first_not_of(" #");
          const auto b = s.find_last_not_of(' ');
          return a == std::string::npos ? std::string{}
                                        : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "beta") file.beta = parse_double(value);
        if (key == "method") file.method = value;
      }
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!header_seen) {
      if (cells.size() < 3 || cells[0] != "t" || cells[1] != "x" ||
          cells[2] != "xdot") {
        throw InvalidRequestError(
            "trajectory file must start with a t,x,xdot column row");
      }
      header_seen = true;
      continue;
    }
    if (cells.size() < 3) {
      throw InvalidRequestError("trajectory row with fewer than 3 columns");
    }
    file.samples.push_back(
        {parse_double(cells[0]), parse_double(cells[1]), parse_double(cells[2])});
  }
  if (!header_seen) {
    throw InvalidRequestError("trajectory file has no column header");
  }
  return file;
}

}  // namespace relosc
