#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace patstat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A required column is absent from a table file header.
struct MissingColumnError : Error {
  MissingColumnError(const std::string& table, const std::string& column)
      : Error("table " + table + ": missing required column '" + column + "'"),
        table(table),
        column(column) {}
  std::string table;
  std::string column;
};

// Raised under IngestConfig reject policy 'abort' at the first bad row.
struct IngestAbortError : Error {
  IngestAbortError(const std::string& table, std::uint64_t line, const std::string& reason)
      : Error("table " + table + " line " + std::to_string(line) + ": " + reason),
        table(table),
        line(line),
        reason(reason) {}
  std::string table;
  std::uint64_t line;
  std::string reason;
};

struct DirectoryUnreadableError : Error {
  explicit DirectoryUnreadableError(const std::string& path)
      : Error("directory unreadable: " + path) {}
};

// Model invariant violated while indexing: appln_id, pat_publn_id or
// person_id seen twice.
struct DuplicateKeyError : Error {
  DuplicateKeyError(const std::string& key_kind, long long key)
      : Error("duplicate " + key_kind + ": " + std::to_string(key)),
        key_kind(key_kind),
        key(key) {}
  std::string key_kind;
  long long key;
};

struct UnknownOfficeFormatterError : Error {
  explicit UnknownOfficeFormatterError(const std::string& office)
      : Error("no publication-number formatter registered for office '" + office + "'"),
        office(office) {}
  std::string office;
};

struct InvalidParamsError : Error {
  using Error::Error;
};

struct InvalidRoleError : Error {
  explicit InvalidRoleError(const std::string& role)
      : Error("unknown person role '" + role + "' (expected inventor or applicant)") {}
};

}  // namespace patstat
