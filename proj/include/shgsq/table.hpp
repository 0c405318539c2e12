#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace shgsq {

struct Column {
  std::string name;
  std::string unit;  // empty when dimensionless

  bool operator==(const Column&) const = default;
};

/// Plot-ready table: ordered columns, one finite value per column per row,
/// rows ordered strictly increasing in the first (sweep) column.
class SweepTable {
 public:
  SweepTable() = default;
  explicit SweepTable(std::vector<Column> columns);

  const std::vector<Column>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<double>>& rows() const noexcept { return rows_; }
  const std::vector<std::pair<std::string, std::string>>& metadata() const noexcept {
    return metadata_;
  }

  /// Throws ParameterError for a wrong arity, a non-finite value or a sweep
  /// value that does not increase.
  void add_row(std::vector<double> row);
  void set_metadata(std::string key, std::string value);

  /// Index of the named column; throws std::out_of_range if absent.
  std::size_t column_index(std::string_view name) const;
  double at(std::size_t row, std::string_view column) const;

 private:
  std::vector<Column> columns_;
  std::vector<std::vector<double>> rows_;
  std::vector<std::pair<std::string, std::string>> metadata_;
};

/// `# key=value` metadata lines, a header row of `name` or `name [unit]`
/// cells, then comma-separated rows printed with 17 significant digits.
std::string to_csv(const SweepTable& table);

/// {"metadata": {...}, "columns": [{"name", "unit"}...], "rows": [[...], ...]}
std::string to_json(const SweepTable& table);

SweepTable parse_csv(std::string_view text);
SweepTable parse_json(std::string_view text);

}  // namespace shgsq
