#include "shgsq/table.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "shgsq/errors.hpp"

namespace shgsq {

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string header_cell(const Column& c) {
  return c.unit.empty() ? c.name : c.name + " [" + c.unit + "]";
}

Column parse_header_cell(std::string_view cell) {
  const auto open = cell.rfind(" [");
  if (open != std::string_view::npos && cell.ends_with(']')) {
    return Column{std::string(cell.substr(0, open)),
                  std::string(cell.substr(open + 2, cell.size() - open - 3))};
  }
  return Column{std::string(cell), {}};
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(std::string_view cell) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc{} || ptr != cell.data() + cell.size())
    throw ParameterError("malformed number in table: '" + std::string(cell) + "'");
  return v;
}

}  // namespace

SweepTable::SweepTable(std::vector<Column> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) throw ParameterError("table needs at least one column");
}

void SweepTable::add_row(std::vector<double> row) {
  if (row.size() != columns_.size())
    throw ParameterError("row has " + std::to_string(row.size()) + " values, expected " +
                         std::to_string(columns_.size()));
  for (double v : row)
    if (!std::isfinite(v)) throw ParameterError("table values must be finite");
  if (!rows_.empty() && !(row.front() > rows_.back().front()))
    throw ParameterError("sweep column must be strictly increasing");
  rows_.push_back(std::move(row));
}

void SweepTable::set_metadata(std::string key, std::string value) {
  for (auto& [k, v] : metadata_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  metadata_.emplace_back(std::move(key), std::move(value));
}

std::size_t SweepTable::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i)
    if (columns_[i].name == name) return i;
  throw std::out_of_range("no column named '" + std::string(name) + "'");
}

double SweepTable::at(std::size_t row, std::string_view column) const {
  return rows_.at(row).at(column_index(column));
}

std::string to_csv(const SweepTable& table) {
  std::ostringstream os;
  for (const auto& [k, v] : table.metadata()) os << "# " << k << '=' << v << '\n';
  for (std::size_t i = 0; i < table.columns().size(); ++i)
    os << (i ? "," : "") << header_cell(table.columns()[i]);
  os << '\n';
  for (const auto& row : table.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
    os << '\n';
  }
  return os.str();
}

std::string to_json(const SweepTable& table) {
  nlohmann::ordered_json j;
  j["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : table.metadata()) j["metadata"][k] = v;
  j["columns"] = nlohmann::ordered_json::array();
  for (const auto& c : table.columns()) j["columns"].push_back({{"name", c.name}, {"unit", c.unit}});
  j["rows"] = table.rows();
  return j.dump(2) + "\n";
}

SweepTable parse_csv(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::optional<SweepTable> table;
  for (std::string_view line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.starts_with("# ")) {
      const auto body = line.substr(2);
      const auto eq = body.find('=');
      if (eq == std::string_view::npos) throw ParameterError("malformed metadata line");
      metadata.emplace_back(std::string(body.substr(0, eq)), std::string(body.substr(eq + 1)));
      continue;
    }
    if (!table) {
      std::vector<Column> cols;
      for (auto cell : split(line, ',')) cols.push_back(parse_header_cell(cell));
      table.emplace(std::move(cols));
      continue;
    }
    std::vector<double> row;
    for (auto cell : split(line, ',')) row.push_back(parse_double(cell));
    table->add_row(std::move(row));
  }
  if (!table) throw ParameterError("CSV has no header row");
  for (auto& [k, v] : metadata) table->set_metadata(k, v);
  return *table;
}

SweepTable parse_json(std::string_view text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
    std::vector<Column> cols;
    for (const auto& c : j.at("columns"))
      cols.push_back(Column{c.at("name").get<std::string>(), c.value("unit", std::string{})});
    SweepTable table(std::move(cols));
    for (const auto& row : j.at("rows")) table.add_row(row.get<std::vector<double>>());
    if (j.contains("metadata"))
      for (const auto& [k, v] : j.at("metadata").items()) table.set_metadata(k, v.get<std::string>());
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("malformed JSON table: ") + e.what());
  }
}

}  // namespace shgsq
