#include "patstat/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "patstat/errors.hpp"
#include "patstat/fixtures.hpp"

using namespace patstat;

namespace {

const IndexedStore& golden_store() {
  static const IndexedStore store = IndexedStore::build(golden_fixture());
  return store;
}

}  // namespace

TEST_CASE("csv and json exports carry identical values in identical order") {
  const Cohort cohort = select_cohort(golden_store(), {"F03D", 2005, {"A", "W"}});
  const auto table = grant_status(golden_store(), cohort, "GB");
  const ResultSet result = make_result(table);

  const std::string csv = to_csv(result);
  const auto doc = nlohmann::json::parse(to_json(result, "grant-status", {{"office", "GB"}}));

  std::vector<std::string> csv_lines;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) csv_lines.push_back(line);
  REQUIRE(csv_lines.size() == doc["rows"].size() + 1);
  CHECK(csv_lines[0] == "appln_id,granted");
  for (std::size_t i = 0; i < doc["rows"].size(); ++i) {
    const auto& row = doc["rows"][i];
    const std::string expect = std::to_string(row["appln_id"].get<long long>()) + "," +
                               std::to_string(row["granted"].get<long long>());
    CHECK(csv_lines[i + 1] == expect);
  }
  CHECK(doc["indicator"] == "grant-status");
  CHECK(doc["params"]["office"] == "GB");
}

TEST_CASE("fractional rows render with configurable precision") {
  const Cohort one = Cohort::from_ids({273390});
  const auto rows = fractional_count_by_country(golden_store(), one, PersonRole::inventor);
  const ResultSet r1 = make_result(rows, {.decimal_places = 1});
  CHECK(to_csv(r1) ==
        "person_ctry_code,fractional_count\n"
        "DE,0.8\n"
        "CH,0.3\n");
  const ResultSet r3 = make_result(rows, {.decimal_places = 3});
  CHECK(to_csv(r3).find("0.750") != std::string::npos);
  CHECK(to_csv(r3).find("0.250") != std::string::npos);
  CHECK_THROWS_AS(make_result(rows, {.decimal_places = 13}), InvalidParamsError);
  CHECK_THROWS_AS(make_result(rows, {.decimal_places = -1}), InvalidParamsError);
}

TEST_CASE("unknown residence is an empty csv cell and a json null") {
  const Cohort one = Cohort::from_ids({21466952});  // no inventors recorded
  const auto rows = fractional_count_by_country(golden_store(), one, PersonRole::inventor);
  const ResultSet result = make_result(rows, {});
  CHECK(to_csv(result) ==
        "person_ctry_code,fractional_count\n"
        ",1.0\n");
  const auto doc = nlohmann::json::parse(to_json(result, "fractional-count", {}));
  CHECK(doc["rows"][0]["person_ctry_code"].is_null());
}

TEST_CASE("table rendering aligns columns") {
  const Cohort cohort = select_cohort(golden_store(), {"F03D", 2005, {"A", "W"}});
  const auto rows = national_phase_entries(golden_store(), cohort, "DK", {"CN", "JP"});
  const std::string table = to_table(make_result(rows));
  CHECK(table.find("pct_appln_id") != std::string::npos);
  CHECK(table.find("15563101") != std::string::npos);
  CHECK(table.find("8300709") != std::string::npos);
}

TEST_CASE("csv fields with commas or quotes are quoted") {
  ResultSet result;
  result.columns = {"a", "b"};
  result.rows.push_back({Cell(std::string("x,y")), Cell(std::string("he said \"hi\""))});
  CHECK(to_csv(result) == "a,b\n\"x,y\",\"he said \"\"hi\"\"\"\n");
}

TEST_CASE("cohorts survive the save/load cycle") {
  const Cohort cohort = select_cohort(golden_store(), {"F03D", 2005, {"A", "W"}});
  const auto path = std::filesystem::temp_directory_path() / "patstat_cohort_test.csv";
  save_cohort(cohort, path);
  const Cohort loaded = load_cohort(path);
  CHECK(loaded.members == cohort.members);
  CHECK(loaded.provenance.kind == CohortProvenance::Kind::explicit_list);
  std::filesystem::remove(path);
}

TEST_CASE("cohort files reject garbage") {
  const auto path = std::filesystem::temp_directory_path() / "patstat_cohort_bad.csv";
  {
    std::ofstream out(path);
    out << "# comment\nappln_id\n12\nnot_an_id\n";
  }
  CHECK_THROWS_AS(load_cohort(path), Error);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_cohort("/no/such/file.csv"), Error);
}
