#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace knotvol {

struct KnotRecord {
  std::string name;
  int crossings = 0;
  std::string pd;
  std::optional<double> reference_volume;
  std::string provenance;

  bool operator==(const KnotRecord&) const = default;
};

struct RowError {
  int line = 0;  // 1-based line in the file
  std::string name;
  std::string message;
};

struct TableLoad {
  std::vector<KnotRecord> records;
  std::vector<RowError> errors;
};

inline constexpr std::string_view kTableHeader = "name,crossings,pd,volume,provenance";

/// Rows whose PD code does not parse, or whose crossing count disagrees with
/// the code, end up in `errors`. Throws TableError for a missing file, a wrong
/// header or duplicate names.
TableLoad load_table(const std::filesystem::path& path);
TableLoad parse_table(std::string_view text);
std::string format_table(std::span<const KnotRecord> records);
void save_table(const std::filesystem::path& path, std::span<const KnotRecord> records);

/// Immutable name index over loaded records.
class KnotTable {
 public:
  KnotTable() = default;
  explicit KnotTable(std::vector<KnotRecord> records);

  const std::vector<KnotRecord>& records() const noexcept { return records_; }
  const KnotRecord* find(std::string_view name) const;
  std::optional<double> reference_volume(std::string_view name) const;

 private:
  std::vector<KnotRecord> records_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace knotvol
