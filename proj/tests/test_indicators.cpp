#include "patstat/indicators.hpp"

#include <map>
#include <set>

#include "dataset_builder.hpp"
#include "doctest.h"
#include "patstat/errors.hpp"
#include "patstat/fixtures.hpp"

using namespace patstat;
using patstat::testing::DatasetBuilder;

namespace {

const IndexedStore& golden_store() {
  static const IndexedStore store = IndexedStore::build(golden_fixture());
  return store;
}

const Cohort& golden_cohort() {
  static const Cohort cohort = select_cohort(golden_store(), {"F03D", 2005, {"A", "W"}});
  return cohort;
}

std::map<ApplnId, long long> as_map(const IndicatorTable& table) {
  std::map<ApplnId, long long> out;
  for (const auto& row : table.rows) out[row.appln_id] = row.value;
  return out;
}

}  // namespace

TEST_CASE("select_cohort matches the published head rows") {
  const Cohort& cohort = golden_cohort();
  REQUIRE(cohort.members.size() >= 5);
  const IndexedStore& store = golden_store();

  const Application* first = store.application(cohort.members[0]);
  CHECK(first->appln_id == 55286477);
  CHECK(first->appln_auth == "AP");
  CHECK(first->appln_nr == "200603687");
  CHECK(first->appln_kind == "A");

  CHECK(cohort.members[1] == 55286499);
  CHECK(cohort.members[2] == 532990);
  CHECK(cohort.members[3] == 533082);
  CHECK(cohort.members[4] == 533175);

  // (auth, id) ordering holds across the whole cohort
  for (std::size_t i = 1; i < cohort.members.size(); ++i) {
    const Application* a = store.application(cohort.members[i - 1]);
    const Application* b = store.application(cohort.members[i]);
    CHECK((a->appln_auth < b->appln_auth ||
           (a->appln_auth == b->appln_auth && a->appln_id < b->appln_id)));
  }
  CHECK(cohort.provenance.kind == CohortProvenance::Kind::filter);
}

TEST_CASE("select_cohort soundness") {
  const IndexedStore& store = golden_store();
  const Cohort& cohort = golden_cohort();
  for (ApplnId member : cohort.members) {
    const Application* app = store.application(member);
    REQUIRE(app != nullptr);
    CHECK(app->appln_filing_date->year() == 2005);
    CHECK((app->appln_kind == "A" || app->appln_kind == "W"));
  }
  // the filter-edge probes stay out
  for (ApplnId decoy : {800001LL, 800002LL, 800003LL, 800004LL}) {
    for (ApplnId member : cohort.members) CHECK(member != decoy);
  }
}

TEST_CASE("select_cohort with an unmatched prefix is empty") {
  CHECK(select_cohort(golden_store(), {"ZZZZ", 2005, {"A", "W"}}).members.empty());
}

TEST_CASE("select_cohort rejects bad filters") {
  CHECK_THROWS_AS(select_cohort(golden_store(), {"", 2005, {"A"}}), InvalidParamsError);
  CHECK_THROWS_AS(select_cohort(golden_store(), {"F03D", 1500, {"A"}}), InvalidParamsError);
  CHECK_THROWS_AS(select_cohort(golden_store(), {"F03D", 2300, {"A"}}), InvalidParamsError);
}

TEST_CASE("national phase entries reproduce the DK rows") {
  const auto rows =
      national_phase_entries(golden_store(), golden_cohort(), "DK", {"CN", "JP"});
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == NationalPhaseRow{15563101, "DK", "2005000031", "W", 8300709, "CN"});
  CHECK(rows[1] == NationalPhaseRow{15563116, "DK", "2005000046", "W", 8300768, "CN"});
  CHECK(rows[2] == NationalPhaseRow{15563118, "DK", "2005000048", "W", 8300756, "CN"});
  CHECK(rows[3] == NationalPhaseRow{15563246, "DK", "2005000181", "W", 8306357, "CN"});
  CHECK(rows[4] == NationalPhaseRow{15563258, "DK", "2005000193", "W", 39635652, "JP"});
}

TEST_CASE("national phase respects the target set") {
  const auto all = national_phase_entries(golden_store(), golden_cohort(), "DK", {});
  CHECK(all.size() == 6);  // the US entry joins when no target filter is set
  const auto us = national_phase_entries(golden_store(), golden_cohort(), "DK", {"US"});
  REQUIRE(us.size() == 1);
  CHECK(us[0].entry_appln_id == 8300800);
}

TEST_CASE("national phase is empty when nothing links back") {
  DatasetBuilder b;
  b.app(1, "DK", "W").ipc(1);
  b.app(2, "CN");  // internat_appln_id stays 0
  const IndexedStore store = IndexedStore::build(std::move(b.ds));
  const Cohort cohort = Cohort::from_ids({1});
  CHECK(national_phase_entries(store, cohort, "DK", {}).empty());
}

TEST_CASE("priority status distinguishes first filings") {
  const auto table = priority_status(golden_store(), golden_cohort());
  const auto values = as_map(table);
  CHECK(values.at(65303) == 0);
  CHECK(values.at(133780) == 0);
  CHECK(values.at(149552) == 1);
  CHECK(values.at(151084) == 0);  // two claims, still one row
  CHECK(values.at(151176) == 0);
  CHECK(table.rows.size() == golden_cohort().size());

  // first five rows in appln_id order are the smallest member ids
  CHECK(table.rows[0].appln_id == 65303);
  CHECK(table.rows[1].appln_id == 133780);
  CHECK(table.rows[2].appln_id == 149552);
  CHECK(table.rows[3].appln_id == 151084);
  CHECK(table.rows[4].appln_id == 151176);
}

TEST_CASE("family size over the golden families") {
  const auto values = as_map(family_size(golden_store(), golden_cohort()));
  CHECK(values.at(65303) == 9);
  CHECK(values.at(133780) == 4);
  CHECK(values.at(149552) == 14);
  CHECK(values.at(151084) == 13);
  CHECK(values.at(151176) == 9);
  // members without a family row are absent under inner-join fidelity
  CHECK_FALSE(values.contains(263066));
}

TEST_CASE("family size emit-defaults fills singletons") {
  const auto values = as_map(family_size(golden_store(), golden_cohort(), true));
  CHECK(values.at(263066) == 1);
  CHECK(values.at(65303) == 9);
  CHECK(values.size() == golden_cohort().size());
}

TEST_CASE("singleton family counts itself") {
  DatasetBuilder b;
  b.app(1).ipc(1).fam(1, 10);
  const IndexedStore store = IndexedStore::build(std::move(b.ds));
  const auto values = as_map(family_size(store, Cohort::from_ids({1})));
  CHECK(values.at(1) == 1);
}

TEST_CASE("geographic family size excludes WO") {
  const auto values = as_map(geographic_family_size(golden_store(), golden_cohort()));
  CHECK(values.at(65303) == 4);   // DE, EP, US, CN despite nine members
  CHECK(values.at(133780) == 4);
  CHECK(values.at(149552) == 12);
  CHECK(values.at(151084) == 11);
  CHECK(values.at(151176) == 8);
}

TEST_CASE("family publishing only through WO counts zero offices") {
  DatasetBuilder b;
  b.app(1, "DK", "W").ipc(1).fam(1, 10);
  b.pub(100, 1, "WO");
  b.app(2).ipc(2).fam(2, 20);  // family without any publication
  const IndexedStore store = IndexedStore::build(std::move(b.ds));
  const Cohort cohort = Cohort::from_ids({1, 2});

  const auto strict = as_map(geographic_family_size(store, cohort));
  CHECK(strict.at(1) == 0);
  CHECK_FALSE(strict.contains(2));  // no publications: outside the join

  const auto filled = as_map(geographic_family_size(store, cohort, true));
  CHECK(filled.at(1) == 0);
  CHECK(filled.at(2) == 0);
}

TEST_CASE("fractional count splits by inventor residence") {
  const Cohort one = Cohort::from_ids({273390});
  const auto rows =
      fractional_count_by_country(golden_store(), one, PersonRole::inventor);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].country == "DE");
  CHECK(rows[0].count == Fraction(3, 4));
  CHECK(rows[1].country == "CH");
  CHECK(rows[1].count == Fraction(1, 4));
}

TEST_CASE("fractional count trivia") {
  // a single inventor from one country carries the whole patent
  const auto rows = fractional_count_by_country(golden_store(), Cohort::from_ids({273768}),
                                                PersonRole::inventor);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].country == "JP");
  CHECK(rows[0].count == Fraction(1));

  // no inventor rows at all: the unknown group receives exactly one
  const auto fallback = fractional_count_by_country(
      golden_store(), Cohort::from_ids({21466952}), PersonRole::inventor);
  REQUIRE(fallback.size() == 1);
  CHECK_FALSE(fallback[0].country.has_value());
  CHECK(fallback[0].count == Fraction(1));
}

TEST_CASE("sequence gaps keep the max-sequence denominator") {
  const Cohort gap = Cohort::from_ids({16000001});
  const auto max_mode =
      fractional_count_by_country(golden_store(), gap, PersonRole::inventor);
  REQUIRE(max_mode.size() == 1);
  CHECK(max_mode[0].country == "IT");
  CHECK(max_mode[0].count == Fraction(2, 3));  // two rows, max seq 3

  const auto row_mode = fractional_count_by_country(
      golden_store(), gap, PersonRole::inventor, FractionalDenominator::row_count);
  REQUIRE(row_mode.size() == 1);
  CHECK(row_mode[0].count == Fraction(1));
}

TEST_CASE("applicant role uses applt_seq_nr") {
  const auto rows = fractional_count_by_country(
      golden_store(), Cohort::from_ids({273390}), PersonRole::applicant);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].country == "CH");
  CHECK(rows[0].count == Fraction(1));
}

TEST_CASE("unknown residences form one group") {
  const auto rows = fractional_count_by_country(
      golden_store(), Cohort::from_ids({5804835}), PersonRole::inventor);
  REQUIRE(rows.size() == 3);
  // ties resolve with the unknown group first
  CHECK_FALSE(rows[0].country.has_value());
  CHECK(rows[0].count == Fraction(1, 3));
  CHECK(rows[1].country == "JP");
  CHECK(rows[2].country == "KR");
}

TEST_CASE("person role parsing") {
  CHECK(parse_person_role("inventor") == PersonRole::inventor);
  CHECK(parse_person_role("APPLICANT") == PersonRole::applicant);
  CHECK_THROWS_AS(parse_person_role("owner"), InvalidRoleError);
}

TEST_CASE("inventor country count ranks international collaborations") {
  const auto table = inventor_country_count(golden_store(), golden_cohort());
  REQUIRE(table.rows.size() >= 5);
  CHECK(table.rows[0] == IndicatorRow{48145305, 3});
  CHECK(table.rows[1] == IndicatorRow{273390, 2});
  CHECK(table.rows[2] == IndicatorRow{4975233, 2});
  CHECK(table.rows[3] == IndicatorRow{4979189, 2});
  CHECK(table.rows[4] == IndicatorRow{5804835, 2});

  const auto values = as_map(table);
  CHECK(values.at(263066) == 1);
  // 55286477's only inventor has an unknown residence: absent
  CHECK_FALSE(values.contains(55286477));
  CHECK(as_map(inventor_country_count(golden_store(), golden_cohort(), true)).at(55286477) ==
        0);
}

TEST_CASE("forward citations in a three-year window") {
  const auto table =
      forward_citations_window(golden_store(), golden_cohort(), "DE", "EP", 3);
  REQUIRE(table.rows.size() == 5);
  CHECK(table.rows[0] == IndicatorRow{14995919, 5});
  CHECK(table.rows[1] == IndicatorRow{14997816, 2});
  CHECK(table.rows[2] == IndicatorRow{14971868, 1});
  CHECK(table.rows[3] == IndicatorRow{14974947, 1});
  CHECK(table.rows[4] == IndicatorRow{14975309, 1});
}

TEST_CASE("window boundary: the anniversary counts, one day later does not") {
  DatasetBuilder b;
  b.app(1).ipc(1);
  b.pub(100, 1, "DE", Date::make(2005, 9, 14));
  b.app(90).pub(900, 90, "EP", Date::make(2008, 9, 14));   // exactly +3 years
  b.app(91).pub(901, 91, "EP", Date::make(2008, 9, 15));   // one day past
  b.app(92).pub(902, 92, "EP", std::nullopt);              // unknown date
  b.cite(900, 100).cite(901, 100).cite(902, 100);
  const IndexedStore store = IndexedStore::build(std::move(b.ds));
  const Cohort cohort = Cohort::from_ids({1});

  const auto values = as_map(forward_citations_window(store, cohort, "DE", "EP", 3));
  CHECK(values.at(1) == 1);
}

TEST_CASE("a member with no dated publication is outside the window query") {
  DatasetBuilder b;
  b.app(1).ipc(1);
  b.pub(100, 1, "DE", std::nullopt);
  b.app(90).pub(900, 90, "EP", Date::make(2008, 1, 1));
  b.cite(900, 100);
  const IndexedStore store = IndexedStore::build(std::move(b.ds));
  const Cohort cohort = Cohort::from_ids({1});
  CHECK(forward_citations_window(store, cohort, "DE", "EP", 3).rows.empty());
  const auto filled = forward_citations_window(store, cohort, "DE", "EP", 3, true);
  REQUIRE(filled.rows.size() == 1);
  CHECK(filled.rows[0].value == 0);
}

TEST_CASE("window widening never loses citations") {
  for (int w1 = 0; w1 <= 4; ++w1) {
    const auto narrow =
        as_map(forward_citations_window(golden_store(), golden_cohort(), "DE", "EP", w1));
    const auto wide = as_map(
        forward_citations_window(golden_store(), golden_cohort(), "DE", "EP", w1 + 1));
    for (const auto& [id, count] : narrow) {
      REQUIRE(wide.contains(id));
      CHECK(count <= wide.at(id));
    }
  }
  CHECK_THROWS_AS(forward_citations_window(golden_store(), golden_cohort(), "DE", "EP", -1),
                  InvalidParamsError);
}

TEST_CASE("grant status at the UKIPO") {
  const auto table = grant_status(golden_store(), golden_cohort(), "GB", "A");
  REQUIRE(table.rows.size() == 6);
  CHECK(table.rows[0] == IndicatorRow{21465239, 1});
  CHECK(table.rows[1] == IndicatorRow{21466952, 0});
  CHECK(table.rows[2] == IndicatorRow{21467768, 0});
  CHECK(table.rows[3] == IndicatorRow{21470294, 0});
  CHECK(table.rows[4] == IndicatorRow{21471154, 0});
  CHECK(table.rows[5] == IndicatorRow{21471862, 0});
}

TEST_CASE("unpublished applications drop from grant status") {
  DatasetBuilder b;
  b.app(1, "GB").ipc(1);
  b.app(2, "GB").ipc(2);
  b.pub(100, 2, "GB", Date::make(2006, 1, 1), true);
  const IndexedStore store = IndexedStore::build(std::move(b.ds));
  const Cohort cohort = Cohort::from_ids({1, 2});

  const auto strict = as_map(grant_status(store, cohort, "GB"));
  CHECK_FALSE(strict.contains(1));
  CHECK(strict.at(2) == 1);
  CHECK(as_map(grant_status(store, cohort, "GB", "A", true)).at(1) == 0);
}

TEST_CASE("external publication numbers for the UKIPO") {
  std::vector<std::string> warnings;
  const auto rows =
      external_publication_numbers(golden_store(), golden_cohort(), "GB", &warnings);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == ExternalNumberRow{21465239, "2410379", "GB2410379"});
  CHECK(rows[1] == ExternalNumberRow{21467768, "2423650", "GB2423650"});
  CHECK(rows[2] == ExternalNumberRow{21470294, "2441770", "GB2441770"});
  CHECK(rows[3] == ExternalNumberRow{21471154, "2424926", "GB2424926"});
  CHECK(rows[4] == ExternalNumberRow{21471862, "2425334", "GB2425334"});
  CHECK(warnings.empty());
  // 21466952 only has the D0 application document: no row at all
  for (const auto& row : rows) CHECK(row.appln_id != 21466952);
}

TEST_CASE("long and short numbers under the last-7 rule") {
  DatasetBuilder b;
  b.app(1, "GB").ipc(1);
  b.pub(100, 1, "GB", Date::make(2006, 1, 1), false, "A", "123456789");
  b.pub(101, 1, "GB", Date::make(2006, 2, 1), false, "A", "12345");
  const IndexedStore store = IndexedStore::build(std::move(b.ds));
  std::vector<std::string> warnings;
  const auto rows =
      external_publication_numbers(store, Cohort::from_ids({1}), "GB", &warnings);
  REQUIRE(rows.size() == 2);
  // within an application, rows order by publn_nr lexicographically
  CHECK(rows[0] == ExternalNumberRow{1, "12345", "GB12345"});
  CHECK(rows[1] == ExternalNumberRow{1, "123456789", "GB3456789"});
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("12345") != std::string::npos);
}

TEST_CASE("only registered offices format numbers") {
  CHECK_THROWS_AS(external_publication_numbers(golden_store(), golden_cohort(), "FR"),
                  UnknownOfficeFormatterError);
}

TEST_CASE("identical duplicate publications collapse to one row") {
  DatasetBuilder b;
  b.app(1, "GB").ipc(1);
  b.pub(100, 1, "GB", Date::make(2006, 1, 1), false, "A", "2410379");
  b.pub(101, 1, "GB", Date::make(2007, 1, 1), false, "B", "2410379");
  const IndexedStore store = IndexedStore::build(std::move(b.ds));
  const auto rows = external_publication_numbers(store, Cohort::from_ids({1}));
  CHECK(rows.size() == 1);
}

TEST_CASE("per-application tables never repeat an appln_id") {
  auto check_unique = [](const IndicatorTable& table) {
    std::set<ApplnId> seen;
    for (const auto& row : table.rows) CHECK(seen.insert(row.appln_id).second);
  };
  for (bool defaults : {false, true}) {
    check_unique(priority_status(golden_store(), golden_cohort()));
    check_unique(family_size(golden_store(), golden_cohort(), defaults));
    check_unique(geographic_family_size(golden_store(), golden_cohort(), defaults));
    check_unique(inventor_country_count(golden_store(), golden_cohort(), defaults));
    check_unique(forward_citations_window(golden_store(), golden_cohort(), "DE", "EP", 3,
                                          defaults));
    check_unique(grant_status(golden_store(), golden_cohort(), "GB", "A", defaults));
  }
}

TEST_CASE("indicator runs are deterministic") {
  const auto a = forward_citations_window(golden_store(), golden_cohort(), "DE", "EP", 3);
  const auto b = forward_citations_window(golden_store(), golden_cohort(), "DE", "EP", 3);
  CHECK(a == b);
  const auto f1 =
      fractional_count_by_country(golden_store(), golden_cohort(), PersonRole::inventor);
  const auto f2 =
      fractional_count_by_country(golden_store(), golden_cohort(), PersonRole::inventor);
  CHECK(f1 == f2);
}
