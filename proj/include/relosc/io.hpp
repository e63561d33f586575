#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relosc/core.hpp"

namespace relosc {

/// Locale-independent formatting with 17 significant digits; round-trips
/// every double exactly.
std::string format_double(double value);

double parse_double(const std::string& text);

/// One delimited-text payload: '#'-prefixed metadata lines, a column-name
/// row, then data rows. Cells are preformatted so numeric and text columns
/// mix freely.
struct Table {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(std::ostream& out, const Table& table);

/// JSON mirror of the same payload: {version-independent} meta object plus
/// columns and row arrays.
void write_json(std::ostream& out, const Table& table);

struct TrajectoryFile {
  std::vector<OscState> samples;
  std::optional<double> beta;
  std::string method;
};

/// Reads a trajectory written by the simulate command (t,x,xdot columns with
/// optional metadata). Throws InvalidRequestError on malformed input.
TrajectoryFile read_trajectory_csv(std::istream& in);

}  // namespace relosc
