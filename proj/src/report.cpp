#include "patstat/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "patstat/errors.hpp"
#include "patstat/ingest.hpp"

namespace patstat {

namespace {

Cell text(std::string value) { return Cell(std::move(value)); }
Cell number(long long value) { return Cell(value); }

std::string cell_to_string(const Cell& cell) {
  if (std::holds_alternative<std::monostate>(cell)) return "";
  if (const auto* n = std::get_if<long long>(&cell)) return std::to_string(*n);
  return std::get<std::string>(cell);
}

}  // namespace

ResultSet make_result(const IndexedStore& store, const Cohort& cohort) {
  ResultSet out;
  out.columns = {"appln_id", "appln_auth", "appln_nr", "appln_kind"};
  for (ApplnId member : cohort.members) {
    const Application* app = store.application(member);
    if (app) {
      out.rows.push_back(
          {number(member), text(app->appln_auth), text(app->appln_nr), text(app->appln_kind)});
    } else {
      out.rows.push_back({number(member), Cell{}, Cell{}, Cell{}});
    }
  }
  return out;
}

ResultSet make_result(const IndicatorTable& table) {
  ResultSet out;
  out.columns = {"appln_id", table.value_column};
  for (const auto& row : table.rows) {
    out.rows.push_back({number(row.appln_id), number(row.value)});
  }
  return out;
}

ResultSet make_result(const std::vector<NationalPhaseRow>& rows) {
  ResultSet out;
  out.columns = {"pct_appln_id", "pct_appln_auth", "pct_appln_nr",
                 "appln_kind",   "appln_id_sf",    "appln_auth_sf"};
  for (const auto& row : rows) {
    out.rows.push_back({number(row.pct_appln_id), text(row.pct_appln_auth),
                        text(row.pct_appln_nr), text(row.pct_appln_kind),
                        number(row.entry_appln_id), text(row.entry_appln_auth)});
  }
  return out;
}

ResultSet make_result(const std::vector<FractionalCountRow>& rows,
                      const RenderOptions& options) {
  if (options.decimal_places < 0 || options.decimal_places > 12) {
    throw InvalidParamsError("decimal places must be in [0, 12]");
  }
  ResultSet out;
  out.columns = {"person_ctry_code", "fractional_count"};
  for (const auto& row : rows) {
    out.rows.push_back({row.country ? text(*row.country) : Cell{},
                        text(row.count.to_decimal(options.decimal_places))});
  }
  return out;
}

ResultSet make_result(const std::vector<ExternalNumberRow>& rows) {
  ResultSet out;
  out.columns = {"appln_id", "publn_nr_patstat", "publn_nr_external"};
  for (const auto& row : rows) {
    out.rows.push_back(
        {number(row.appln_id), text(row.publn_nr_patstat), text(row.publn_nr_external)});
  }
  return out;
}

namespace {

void append_csv_field(std::string& out, const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) {
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

}  // namespace

std::string to_csv(const ResultSet& result) {
  std::string out;
  for (std::size_t i = 0; i < result.columns.size(); ++i) {
    if (i) out += ',';
    append_csv_field(out, result.columns[i]);
  }
  out += '\n';
  for (const auto& row : result.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      append_csv_field(out, cell_to_string(row[i]));
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const ResultSet& result, const std::string& indicator,
                    const std::map<std::string, std::string>& params) {
  nlohmann::ordered_json doc;
  doc["indicator"] = indicator;
  doc["params"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : params) doc["params"][key] = value;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : result.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const auto& cell = row[i];
      if (std::holds_alternative<std::monostate>(cell)) {
        obj[result.columns[i]] = nullptr;
      } else if (const auto* n = std::get_if<long long>(&cell)) {
        obj[result.columns[i]] = *n;
      } else {
        obj[result.columns[i]] = std::get<std::string>(cell);
      }
    }
    doc["rows"].push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

std::string to_table(const ResultSet& result) {
  std::vector<std::size_t> widths(result.columns.size());
  for (std::size_t i = 0; i < result.columns.size(); ++i) {
    widths[i] = result.columns[i].size();
  }
  for (const auto& row : result.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], cell_to_string(row[i]).size());
    }
  }
  std::ostringstream os;
  auto emit_row = [&](auto&& get) {
    for (std::size_t i = 0; i < result.columns.size(); ++i) {
      if (i) os << "  ";
      const std::string value = get(i);
      os << value << std::string(widths[i] - value.size(), ' ');
    }
    os << '\n';
  };
  emit_row([&](std::size_t i) { return result.columns[i]; });
  for (std::size_t i = 0; i < result.columns.size(); ++i) {
    if (i) os << "  ";
    os << std::string(widths[i], '-');
  }
  os << '\n';
  for (const auto& row : result.rows) {
    emit_row([&](std::size_t i) { return cell_to_string(row[i]); });
  }
  return os.str();
}

void save_cohort(const Cohort& cohort, const std::filesystem::path& path) {
  std::string out;
  out += "# cohort of " + std::to_string(cohort.members.size()) + " applications\n";
  out += "# provenance: " + cohort.provenance.describe() + "\n";
  out += "appln_id\n";
  for (ApplnId member : cohort.members) out += std::to_string(member) + "\n";
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error("cannot write cohort file: " + path.string());
  file.write(out.data(), static_cast<std::streamsize>(out.size()));
}

Cohort load_cohort(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) throw Error("cannot read cohort file: " + path.string());
  std::vector<ApplnId> ids;
  std::string line;
  bool header_seen = false;
  std::uint64_t line_no = 0;
  while (std::getline(file, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != "appln_id") {
        throw Error("cohort file " + path.string() + ": expected 'appln_id' header");
      }
      header_seen = true;
      continue;
    }
    try {
      ids.push_back(std::stoll(line));
    } catch (const std::exception&) {
      throw Error("cohort file " + path.string() + " line " + std::to_string(line_no) +
                  ": '" + line + "' is not an appln_id");
    }
  }
  return Cohort::from_ids(ids);
}

}  // namespace patstat
