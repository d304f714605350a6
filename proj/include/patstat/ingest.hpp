#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "patstat/errors.hpp"
#include "patstat/model.hpp"

namespace patstat {

enum class ColumnType { integer, text, code, code2, date, boolean };

struct ColumnDesc {
  std::string name;
  ColumnType type = ColumnType::text;
  bool nullable = false;
};

struct TableSchema {
  std::string table_name;
  std::vector<ColumnDesc> columns;

  std::string file_name() const { return table_name + ".csv"; }
};

// The eight Patstat tables this engine understands, in canonical order.
const std::vector<TableSchema>& supported_schemas();
const TableSchema& schema_for_table(std::string_view table_name);

struct IngestConfig {
  enum class RejectPolicy { skip_and_log, abort };

  char delimiter = ',';
  char quote = '"';
  bool header_required = true;
  RejectPolicy reject_policy = RejectPolicy::skip_and_log;
};

struct RejectedRow {
  std::string table;
  std::uint64_t line = 0;  // 1-based physical line where the record starts
  std::string reason;
};

struct IngestLog {
  std::vector<RejectedRow> rejects;
  std::vector<std::string> warnings;  // tolerated oddities (bad dates, ...)
  std::vector<std::string> notices;   // absent tables and the like
};

// Empty text and the literal NULL (any case) are MISSING; so is any date in
// year 9999. Unparseable non-empty text is MISSING plus a warning.
std::optional<Date> parse_date(std::string_view text, IngestLog* log = nullptr);

template <typename Row>
struct ParsedTable {
  std::vector<Row> rows;
  std::uint64_t data_rows = 0;  // records after the header
  std::uint64_t rejected = 0;

  std::uint64_t accepted() const { return static_cast<std::uint64_t>(rows.size()); }
};

// Reads one delimited table file. Columns are matched by header name in any
// order; extra columns are ignored. Rows that violate the target type's
// field contracts are rejected with their line number (or abort the parse,
// per config). Throws MissingColumnError when a schema column is absent.
template <typename Row>
ParsedTable<Row> parse_table_file(std::istream& in, const IngestConfig& config,
                                  IngestLog& log);

extern template ParsedTable<Application> parse_table_file<Application>(std::istream&,
                                                                       const IngestConfig&,
                                                                       IngestLog&);
extern template ParsedTable<Publication> parse_table_file<Publication>(std::istream&,
                                                                       const IngestConfig&,
                                                                       IngestLog&);
extern template ParsedTable<Person> parse_table_file<Person>(std::istream&,
                                                             const IngestConfig&,
                                                             IngestLog&);
extern template ParsedTable<PersonApplnLink> parse_table_file<PersonApplnLink>(
    std::istream&, const IngestConfig&, IngestLog&);
extern template ParsedTable<IpcAssignment> parse_table_file<IpcAssignment>(
    std::istream&, const IngestConfig&, IngestLog&);
extern template ParsedTable<PriorityClaim> parse_table_file<PriorityClaim>(
    std::istream&, const IngestConfig&, IngestLog&);
extern template ParsedTable<FamilyMembership> parse_table_file<FamilyMembership>(
    std::istream&, const IngestConfig&, IngestLog&);
extern template ParsedTable<Citation> parse_table_file<Citation>(std::istream&,
                                                                 const IngestConfig&,
                                                                 IngestLog&);

// Loads every <table>.csv present in the directory; absent tables come back
// empty with a notice. Per-file parsing runs in parallel; the assembled
// dataset is immutable from here on.
PatstatDataset load_dataset(const std::filesystem::path& directory,
                            const IngestConfig& config = {}, IngestLog* log = nullptr);

// Writes all eight tables in canonical form (RFC 4180, header row, dates as
// YYYY-MM-DD, missing values empty). Deterministic: same dataset, same bytes.
void write_dataset(const PatstatDataset& dataset, const std::filesystem::path& directory);

}  // namespace patstat
