#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "patstat/indicators.hpp"
#include "patstat/model.hpp"
#include "patstat/store.hpp"

namespace patstat {

// Missing values render as empty CSV cells / JSON nulls.
using Cell = std::variant<std::monostate, long long, std::string>;

struct ResultSet {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct RenderOptions {
  int decimal_places = 1;  // fractional counts; [0, 12]
};

// Query-1 output shape: appln_id, appln_auth, appln_nr, appln_kind.
ResultSet make_result(const IndexedStore& store, const Cohort& cohort);
ResultSet make_result(const IndicatorTable& table);
ResultSet make_result(const std::vector<NationalPhaseRow>& rows);
ResultSet make_result(const std::vector<FractionalCountRow>& rows,
                      const RenderOptions& options);
ResultSet make_result(const std::vector<ExternalNumberRow>& rows);

// RFC 4180, UTF-8, header row, \n line endings.
std::string to_csv(const ResultSet& result);

// {"indicator": ..., "params": {...}, "rows": [{col: value, ...}, ...]}
std::string to_json(const ResultSet& result, const std::string& indicator,
                    const std::map<std::string, std::string>& params);

// Fixed-width layout for eyeballing results.
std::string to_table(const ResultSet& result);

// One appln_id per line with a comment header recording provenance, so a
// saved cohort is diff-able and hand-editable.
void save_cohort(const Cohort& cohort, const std::filesystem::path& path);
Cohort load_cohort(const std::filesystem::path& path);

}  // namespace patstat
