#include "patstat/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstring>
#include <deque>
#include <fstream>
#include <future>
#include <sstream>
#include <unordered_map>

namespace patstat {

namespace {

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool is_null_token(std::string_view s) {
  if (s.empty()) return true;
  if (s.size() != 4) return false;
  return (s[0] == 'N' || s[0] == 'n') && (s[1] == 'U' || s[1] == 'u') &&
         (s[2] == 'L' || s[2] == 'l') && (s[3] == 'L' || s[3] == 'l');
}

std::optional<std::int64_t> to_int64(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::int64_t value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

// Record-oriented RFC 4180 reader over an owned buffer. Quoted fields may
// contain delimiters, doubled quotes and newlines; field views stay valid
// until the next call to next().
class CsvReader {
 public:
  CsvReader(std::string content, char delimiter, char quote)
      : buffer_(std::move(content)), delimiter_(delimiter), quote_(quote) {
    // strip a UTF-8 BOM
    if (buffer_.size() >= 3 && buffer_[0] == '\xef' && buffer_[1] == '\xbb' &&
        buffer_[2] == '\xbf') {
      pos_ = 3;
    }
  }

  bool next(std::vector<std::string_view>& fields) {
    if (pos_ >= buffer_.size()) return false;
    fields.clear();
    scratch_.clear();
    record_line_ = line_;

    while (true) {
      fields.push_back(read_field());
      if (pos_ < buffer_.size() && buffer_[pos_] == delimiter_) {
        ++pos_;
        continue;
      }
      consume_eol();
      return true;
    }
  }

  std::uint64_t record_line() const { return record_line_; }

 private:
  std::string_view read_field() {
    if (pos_ < buffer_.size() && buffer_[pos_] == quote_) return read_quoted();
    const std::size_t start = pos_;
    while (pos_ < buffer_.size()) {
      const char c = buffer_[pos_];
      if (c == delimiter_ || c == '\n' || c == '\r') break;
      ++pos_;
    }
    return std::string_view(buffer_).substr(start, pos_ - start);
  }

  std::string_view read_quoted() {
    ++pos_;  // opening quote
    const std::size_t start = pos_;
    bool escaped = false;
    std::string out;
    while (pos_ < buffer_.size()) {
      const char c = buffer_[pos_];
      if (c == quote_) {
        if (pos_ + 1 < buffer_.size() && buffer_[pos_ + 1] == quote_) {
          if (!escaped) {
            out.assign(buffer_, start, pos_ - start);
            escaped = true;
          }
          out += quote_;
          pos_ += 2;
          continue;
        }
        ++pos_;  // closing quote
        if (!escaped) return std::string_view(buffer_).substr(start, pos_ - 1 - start);
        scratch_.push_back(std::move(out));
        return scratch_.back();
      }
      if (c == '\n') ++line_;
      if (escaped) out += c;
      ++pos_;
    }
    // unterminated quote: take what we have, the row will fail typing anyway
    if (!escaped) return std::string_view(buffer_).substr(start);
    scratch_.push_back(std::move(out));
    return scratch_.back();
  }

  void consume_eol() {
    if (pos_ < buffer_.size() && buffer_[pos_] == '\r') ++pos_;
    if (pos_ < buffer_.size() && buffer_[pos_] == '\n') {
      ++pos_;
      ++line_;
    }
  }

  std::string buffer_;
  std::deque<std::string> scratch_;
  char delimiter_;
  char quote_;
  std::size_t pos_ = 0;
  std::uint64_t line_ = 1;
  std::uint64_t record_line_ = 1;
};

}  // namespace

const std::vector<TableSchema>& supported_schemas() {
  static const std::vector<TableSchema> schemas = {
      {"tls201_appln",
       {{"appln_id", ColumnType::integer, false},
        {"appln_auth", ColumnType::code2, false},
        {"appln_nr", ColumnType::text, true},
        {"appln_kind", ColumnType::code, true},
        {"appln_filing_date", ColumnType::date, true},
        {"internat_appln_id", ColumnType::integer, true}}},
      {"tls211_pat_publn",
       {{"pat_publn_id", ColumnType::integer, false},
        {"appln_id", ColumnType::integer, false},
        {"publn_auth", ColumnType::code2, false},
        {"publn_nr", ColumnType::text, true},
        {"publn_kind", ColumnType::code, true},
        {"publn_date", ColumnType::date, true},
        {"publn_first_grant", ColumnType::boolean, true}}},
      {"tls206_person",
       {{"person_id", ColumnType::integer, false},
        {"person_ctry_code", ColumnType::code2, true}}},
      {"tls207_pers_appln",
       {{"person_id", ColumnType::integer, false},
        {"appln_id", ColumnType::integer, false},
        {"invt_seq_nr", ColumnType::integer, false},
        {"applt_seq_nr", ColumnType::integer, false}}},
      {"tls209_appln_ipc",
       {{"appln_id", ColumnType::integer, false},
        {"ipc_class_symbol", ColumnType::text, false}}},
      {"tls204_appln_prior",
       {{"appln_id", ColumnType::integer, false},
        {"prior_appln_id", ColumnType::integer, false},
        {"prior_appln_seq_nr", ColumnType::integer, true}}},
      {"tls219_inpadoc_fam",
       {{"appln_id", ColumnType::integer, false},
        {"inpadoc_family_id", ColumnType::integer, false}}},
      {"tls212_citation",
       {{"pat_publn_id", ColumnType::integer, false},
        {"cited_pat_publn_id", ColumnType::integer, false}}},
  };
  return schemas;
}

const TableSchema& schema_for_table(std::string_view table_name) {
  for (const auto& schema : supported_schemas()) {
    if (schema.table_name == table_name) return schema;
  }
  throw Error("unsupported table: " + std::string(table_name));
}

std::optional<Date> parse_date(std::string_view text, IngestLog* log) {
  const auto parsed = parse_date_text(text);
  if (parsed.status == DateParseStatus::invalid && log) {
    log->warnings.push_back("unparseable date '" + std::string(trim_view(text)) +
                            "' treated as missing");
  }
  return parsed.value;
}

namespace {

// Per-record view of the fields a schema maps, in schema column order.
class FieldCursor {
 public:
  FieldCursor(const TableSchema& schema, const std::vector<std::string_view>& fields,
              const std::vector<std::size_t>& positions, std::uint64_t line)
      : schema_(schema), fields_(fields), positions_(positions), line_(line) {}

  bool arity_ok() const {
    for (std::size_t pos : positions_) {
      if (pos >= fields_.size()) return false;
    }
    return true;
  }

  std::size_t needed_fields() const {
    std::size_t m = 0;
    for (std::size_t pos : positions_) m = std::max(m, pos + 1);
    return m;
  }

  std::string_view raw(std::size_t col) const { return trim_view(fields_[positions_[col]]); }
  const std::string& col_name(std::size_t col) const { return schema_.columns[col].name; }
  std::uint64_t line() const { return line_; }
  std::size_t field_count() const { return fields_.size(); }

  // Integer with a lower bound; nullable columns fall back to fallback.
  std::optional<std::int64_t> get_int(std::size_t col, std::int64_t min_value,
                                      std::int64_t fallback, std::string& err) const {
    const auto text = raw(col);
    if (is_null_token(text)) {
      if (schema_.columns[col].nullable) return fallback;
      err = col_name(col) + " is empty";
      return std::nullopt;
    }
    const auto value = to_int64(text);
    if (!value) {
      err = col_name(col) + " '" + std::string(text) + "' is not an integer";
      return std::nullopt;
    }
    if (*value < min_value) {
      err = col_name(col) + " " + std::to_string(*value) + " is out of range";
      return std::nullopt;
    }
    return value;
  }

  std::optional<std::string> get_code2(std::size_t col, std::string& err) const {
    std::string code = normalize_code(raw(col));
    if (code.size() != 2) {
      err = col_name(col) + " '" + std::string(raw(col)) + "' is not a 2-character code";
      return std::nullopt;
    }
    return code;
  }

  std::string get_text(std::size_t col) const { return std::string(raw(col)); }

  // Trim + uppercase, empty allowed (kind codes are an open set).
  std::string get_code(std::size_t col) const { return normalize_code(raw(col)); }

  std::optional<bool> get_bool(std::size_t col, std::string& err) const {
    const auto text = raw(col);
    if (is_null_token(text)) return false;
    if (text == "0") return false;
    if (text == "1") return true;
    err = col_name(col) + " '" + std::string(text) + "' is not 0/1";
    return std::nullopt;
  }

  std::optional<Date> get_date(std::size_t col, const std::string& table,
                               IngestLog& log) const {
    const auto parsed = parse_date_text(raw(col));
    if (parsed.status == DateParseStatus::invalid) {
      log.warnings.push_back("table " + table + " line " + std::to_string(line_) +
                             ": unparseable date '" + std::string(raw(col)) +
                             "' treated as missing");
    }
    return parsed.value;
  }

 private:
  const TableSchema& schema_;
  const std::vector<std::string_view>& fields_;
  const std::vector<std::size_t>& positions_;
  std::uint64_t line_;
};

template <typename Row>
struct TableTraits;

template <>
struct TableTraits<Application> {
  static constexpr const char* table = "tls201_appln";
  static std::optional<Application> build(const FieldCursor& f, IngestLog& log,
                                          std::string& err) {
    Application row;
    auto id = f.get_int(0, 1, 0, err);
    if (!id) return std::nullopt;
    row.appln_id = *id;
    auto auth = f.get_code2(1, err);
    if (!auth) return std::nullopt;
    row.appln_auth = std::move(*auth);
    row.appln_nr = f.get_text(2);
    row.appln_kind = f.get_code(3);
    row.appln_filing_date = f.get_date(4, table, log);
    auto internat = f.get_int(5, 0, 0, err);
    if (!internat) return std::nullopt;
    row.internat_appln_id = *internat;
    return row;
  }
};

template <>
struct TableTraits<Publication> {
  static constexpr const char* table = "tls211_pat_publn";
  static std::optional<Publication> build(const FieldCursor& f, IngestLog& log,
                                          std::string& err) {
    Publication row;
    auto id = f.get_int(0, 1, 0, err);
    if (!id) return std::nullopt;
    row.pat_publn_id = *id;
    auto appln = f.get_int(1, 1, 0, err);
    if (!appln) return std::nullopt;
    row.appln_id = *appln;
    auto auth = f.get_code2(2, err);
    if (!auth) return std::nullopt;
    row.publn_auth = std::move(*auth);
    row.publn_nr = f.get_text(3);
    row.publn_kind = f.get_code(4);
    row.publn_date = f.get_date(5, table, log);
    auto grant = f.get_bool(6, err);
    if (!grant) return std::nullopt;
    row.publn_first_grant = *grant;
    return row;
  }
};

template <>
struct TableTraits<Person> {
  static constexpr const char* table = "tls206_person";
  static std::optional<Person> build(const FieldCursor& f, IngestLog&, std::string& err) {
    Person row;
    auto id = f.get_int(0, 1, 0, err);
    if (!id) return std::nullopt;
    row.person_id = *id;
    if (is_null_token(f.raw(1))) {
      row.person_ctry_code = std::nullopt;  // empty country normalizes to MISSING
    } else {
      auto code = f.get_code2(1, err);
      if (!code) return std::nullopt;
      row.person_ctry_code = std::move(*code);
    }
    return row;
  }
};

template <>
struct TableTraits<PersonApplnLink> {
  static constexpr const char* table = "tls207_pers_appln";
  static std::optional<PersonApplnLink> build(const FieldCursor& f, IngestLog&,
                                              std::string& err) {
    PersonApplnLink row;
    auto person = f.get_int(0, 1, 0, err);
    if (!person) return std::nullopt;
    row.person_id = *person;
    auto appln = f.get_int(1, 1, 0, err);
    if (!appln) return std::nullopt;
    row.appln_id = *appln;
    auto invt = f.get_int(2, 0, 0, err);
    if (!invt) return std::nullopt;
    row.invt_seq_nr = static_cast<int>(*invt);
    auto applt = f.get_int(3, 0, 0, err);
    if (!applt) return std::nullopt;
    row.applt_seq_nr = static_cast<int>(*applt);
    return row;
  }
};

template <>
struct TableTraits<IpcAssignment> {
  static constexpr const char* table = "tls209_appln_ipc";
  static std::optional<IpcAssignment> build(const FieldCursor& f, IngestLog&,
                                            std::string& err) {
    IpcAssignment row;
    auto appln = f.get_int(0, 1, 0, err);
    if (!appln) return std::nullopt;
    row.appln_id = *appln;
    row.ipc_class_symbol = f.get_text(1);  // verbatim, internal padding kept
    if (row.ipc_class_symbol.empty()) {
      err = "ipc_class_symbol is empty";
      return std::nullopt;
    }
    return row;
  }
};

template <>
struct TableTraits<PriorityClaim> {
  static constexpr const char* table = "tls204_appln_prior";
  static std::optional<PriorityClaim> build(const FieldCursor& f, IngestLog&,
                                            std::string& err) {
    PriorityClaim row;
    auto appln = f.get_int(0, 1, 0, err);
    if (!appln) return std::nullopt;
    row.appln_id = *appln;
    auto prior = f.get_int(1, 1, 0, err);
    if (!prior) return std::nullopt;
    row.prior_appln_id = *prior;
    if (is_null_token(f.raw(2))) {
      row.prior_appln_seq_nr = std::nullopt;
    } else {
      auto seq = f.get_int(2, 0, 0, err);
      if (!seq) return std::nullopt;
      row.prior_appln_seq_nr = static_cast<int>(*seq);
    }
    return row;
  }
};

template <>
struct TableTraits<FamilyMembership> {
  static constexpr const char* table = "tls219_inpadoc_fam";
  static std::optional<FamilyMembership> build(const FieldCursor& f, IngestLog&,
                                               std::string& err) {
    FamilyMembership row;
    auto appln = f.get_int(0, 1, 0, err);
    if (!appln) return std::nullopt;
    row.appln_id = *appln;
    auto family = f.get_int(1, 1, 0, err);
    if (!family) return std::nullopt;
    row.inpadoc_family_id = *family;
    return row;
  }
};

template <>
struct TableTraits<Citation> {
  static constexpr const char* table = "tls212_citation";
  static std::optional<Citation> build(const FieldCursor& f, IngestLog&, std::string& err) {
    Citation row;
    auto citing = f.get_int(0, 1, 0, err);
    if (!citing) return std::nullopt;
    row.pat_publn_id = *citing;
    auto cited = f.get_int(1, 0, 0, err);
    if (!cited) return std::nullopt;
    row.cited_pat_publn_id = *cited;
    return row;
  }
};

template <typename Row>
ParsedTable<Row> parse_table_content(std::string content, const IngestConfig& config,
                                     IngestLog& log) {
  if (config.delimiter == config.quote) {
    throw InvalidParamsError("ingest: delimiter and quote character must differ");
  }
  const TableSchema& schema = schema_for_table(TableTraits<Row>::table);
  const std::size_t approx_rows =
      static_cast<std::size_t>(std::count(content.begin(), content.end(), '\n'));

  CsvReader reader(std::move(content), config.delimiter, config.quote);
  std::vector<std::string_view> fields;

  // column position per schema column, resolved from the header
  std::vector<std::size_t> positions;
  if (config.header_required) {
    if (!reader.next(fields)) {
      throw MissingColumnError(schema.table_name, schema.columns.front().name);
    }
    std::unordered_map<std::string, std::size_t> by_name;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      by_name.emplace(lower(trim_view(fields[i])), i);
    }
    for (const auto& col : schema.columns) {
      auto it = by_name.find(col.name);
      if (it == by_name.end()) throw MissingColumnError(schema.table_name, col.name);
      positions.push_back(it->second);
    }
  } else {
    for (std::size_t i = 0; i < schema.columns.size(); ++i) positions.push_back(i);
  }

  ParsedTable<Row> out;
  out.rows.reserve(approx_rows);

  while (reader.next(fields)) {
    ++out.data_rows;
    FieldCursor cursor(schema, fields, positions, reader.record_line());
    std::string err;
    std::optional<Row> row;
    if (!cursor.arity_ok()) {
      err = "wrong number of fields (got " + std::to_string(cursor.field_count()) +
            ", need " + std::to_string(cursor.needed_fields()) + ")";
    } else {
      row = TableTraits<Row>::build(cursor, log, err);
    }
    if (row) {
      out.rows.push_back(std::move(*row));
      continue;
    }
    ++out.rejected;
    if (config.reject_policy == IngestConfig::RejectPolicy::abort) {
      throw IngestAbortError(schema.table_name, reader.record_line(), err);
    }
    log.rejects.push_back({schema.table_name, reader.record_line(), err});
  }
  return out;
}

std::string read_stream(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::move(ss).str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path.string());
  in.seekg(0, std::ios::end);
  const auto size = in.tellg();
  in.seekg(0, std::ios::beg);
  std::string content(static_cast<std::size_t>(size), '\0');
  in.read(content.data(), size);
  return content;
}

}  // namespace

template <typename Row>
ParsedTable<Row> parse_table_file(std::istream& in, const IngestConfig& config,
                                  IngestLog& log) {
  return parse_table_content<Row>(read_stream(in), config, log);
}

template ParsedTable<Application> parse_table_file<Application>(std::istream&,
                                                                const IngestConfig&,
                                                                IngestLog&);
template ParsedTable<Publication> parse_table_file<Publication>(std::istream&,
                                                                const IngestConfig&,
                                                                IngestLog&);
template ParsedTable<Person> parse_table_file<Person>(std::istream&, const IngestConfig&,
                                                      IngestLog&);
template ParsedTable<PersonApplnLink> parse_table_file<PersonApplnLink>(std::istream&,
                                                                        const IngestConfig&,
                                                                        IngestLog&);
template ParsedTable<IpcAssignment> parse_table_file<IpcAssignment>(std::istream&,
                                                                    const IngestConfig&,
                                                                    IngestLog&);
template ParsedTable<PriorityClaim> parse_table_file<PriorityClaim>(std::istream&,
                                                                    const IngestConfig&,
                                                                    IngestLog&);
template ParsedTable<FamilyMembership> parse_table_file<FamilyMembership>(
    std::istream&, const IngestConfig&, IngestLog&);
template ParsedTable<Citation> parse_table_file<Citation>(std::istream&,
                                                          const IngestConfig&, IngestLog&);

namespace {

template <typename Row>
struct TableLoad {
  std::future<std::pair<ParsedTable<Row>, IngestLog>> future;
  bool present = false;
};

template <typename Row>
TableLoad<Row> launch_load(const std::filesystem::path& dir, const IngestConfig& config) {
  TableLoad<Row> load;
  const auto path = dir / schema_for_table(TableTraits<Row>::table).file_name();
  if (!std::filesystem::exists(path)) {
    load.present = false;
    return load;
  }
  load.present = true;
  load.future = std::async(std::launch::async, [path, config] {
    IngestLog task_log;
    auto parsed = parse_table_content<Row>(read_file(path), config, task_log);
    return std::make_pair(std::move(parsed), std::move(task_log));
  });
  return load;
}

template <typename Row>
void collect(TableLoad<Row>& load, std::vector<Row>& rows, PatstatDataset& ds,
             IngestLog* log) {
  const char* table = TableTraits<Row>::table;
  auto& stats = ds.stats.by_table[table];
  if (!load.present) {
    if (log) {
      log->notices.push_back(std::string("table ") + table +
                             ": no file present, collection left empty");
    }
    return;
  }
  auto [parsed, task_log] = load.future.get();
  stats.accepted = parsed.accepted();
  stats.rejected = parsed.rejected;
  rows = std::move(parsed.rows);
  if (log) {
    for (auto& r : task_log.rejects) log->rejects.push_back(std::move(r));
    for (auto& w : task_log.warnings) log->warnings.push_back(std::move(w));
    for (auto& n : task_log.notices) log->notices.push_back(std::move(n));
  }
}

}  // namespace

PatstatDataset load_dataset(const std::filesystem::path& directory,
                            const IngestConfig& config, IngestLog* log) {
  std::error_code ec;
  if (!std::filesystem::is_directory(directory, ec) || ec) {
    throw DirectoryUnreadableError(directory.string());
  }

  auto applications = launch_load<Application>(directory, config);
  auto publications = launch_load<Publication>(directory, config);
  auto persons = launch_load<Person>(directory, config);
  auto links = launch_load<PersonApplnLink>(directory, config);
  auto ipc = launch_load<IpcAssignment>(directory, config);
  auto priorities = launch_load<PriorityClaim>(directory, config);
  auto families = launch_load<FamilyMembership>(directory, config);
  auto citations = launch_load<Citation>(directory, config);

  PatstatDataset ds;
  collect(applications, ds.applications, ds, log);
  collect(publications, ds.publications, ds, log);
  collect(persons, ds.persons, ds, log);
  collect(links, ds.person_appln_links, ds, log);
  collect(ipc, ds.ipc_assignments, ds, log);
  collect(priorities, ds.priority_claims, ds, log);
  collect(families, ds.family_memberships, ds, log);
  collect(citations, ds.citations, ds, log);
  return ds;
}

namespace {

bool needs_quoting(std::string_view field) {
  return field.find_first_of(",\"\r\n") != std::string_view::npos;
}

void append_field(std::string& out, std::string_view field) {
  if (!needs_quoting(field)) {
    out += field;
    return;
  }
  out += '"';
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

void append_date(std::string& out, const std::optional<Date>& date) {
  if (date) out += date->to_string();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream outf(path, std::ios::binary | std::ios::trunc);
  if (!outf) throw Error("cannot write file: " + path.string());
  outf.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!outf) throw Error("write failed: " + path.string());
}

std::string header_line(const char* table) {
  std::string out;
  const auto& schema = schema_for_table(table);
  for (std::size_t i = 0; i < schema.columns.size(); ++i) {
    if (i) out += ',';
    out += schema.columns[i].name;
  }
  out += '\n';
  return out;
}

}  // namespace

void write_dataset(const PatstatDataset& ds, const std::filesystem::path& directory) {
  std::filesystem::create_directories(directory);

  {
    std::string out = header_line("tls201_appln");
    for (const auto& a : ds.applications) {
      out += std::to_string(a.appln_id);
      out += ',';
      append_field(out, a.appln_auth);
      out += ',';
      append_field(out, a.appln_nr);
      out += ',';
      append_field(out, a.appln_kind);
      out += ',';
      append_date(out, a.appln_filing_date);
      out += ',';
      out += std::to_string(a.internat_appln_id);
      out += '\n';
    }
    write_file(directory / "tls201_appln.csv", out);
  }
  {
    std::string out = header_line("tls211_pat_publn");
    for (const auto& p : ds.publications) {
      out += std::to_string(p.pat_publn_id);
      out += ',';
      out += std::to_string(p.appln_id);
      out += ',';
      append_field(out, p.publn_auth);
      out += ',';
      append_field(out, p.publn_nr);
      out += ',';
      append_field(out, p.publn_kind);
      out += ',';
      append_date(out, p.publn_date);
      out += ',';
      out += p.publn_first_grant ? '1' : '0';
      out += '\n';
    }
    write_file(directory / "tls211_pat_publn.csv", out);
  }
  {
    std::string out = header_line("tls206_person");
    for (const auto& p : ds.persons) {
      out += std::to_string(p.person_id);
      out += ',';
      if (p.person_ctry_code) append_field(out, *p.person_ctry_code);
      out += '\n';
    }
    write_file(directory / "tls206_person.csv", out);
  }
  {
    std::string out = header_line("tls207_pers_appln");
    for (const auto& l : ds.person_appln_links) {
      out += std::to_string(l.person_id);
      out += ',';
      out += std::to_string(l.appln_id);
      out += ',';
      out += std::to_string(l.invt_seq_nr);
      out += ',';
      out += std::to_string(l.applt_seq_nr);
      out += '\n';
    }
    write_file(directory / "tls207_pers_appln.csv", out);
  }
  {
    std::string out = header_line("tls209_appln_ipc");
    for (const auto& row : ds.ipc_assignments) {
      out += std::to_string(row.appln_id);
      out += ',';
      append_field(out, row.ipc_class_symbol);
      out += '\n';
    }
    write_file(directory / "tls209_appln_ipc.csv", out);
  }
  {
    std::string out = header_line("tls204_appln_prior");
    for (const auto& c : ds.priority_claims) {
      out += std::to_string(c.appln_id);
      out += ',';
      out += std::to_string(c.prior_appln_id);
      out += ',';
      if (c.prior_appln_seq_nr) out += std::to_string(*c.prior_appln_seq_nr);
      out += '\n';
    }
    write_file(directory / "tls204_appln_prior.csv", out);
  }
  {
    std::string out = header_line("tls219_inpadoc_fam");
    for (const auto& f : ds.family_memberships) {
      out += std::to_string(f.appln_id);
      out += ',';
      out += std::to_string(f.inpadoc_family_id);
      out += '\n';
    }
    write_file(directory / "tls219_inpadoc_fam.csv", out);
  }
  {
    std::string out = header_line("tls212_citation");
    for (const auto& c : ds.citations) {
      out += std::to_string(c.pat_publn_id);
      out += ',';
      out += std::to_string(c.cited_pat_publn_id);
      out += '\n';
    }
    write_file(directory / "tls212_citation.csv", out);
  }
}

}  // namespace patstat
