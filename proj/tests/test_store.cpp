#include "patstat/store.hpp"

#include <set>

#include "dataset_builder.hpp"
#include "doctest.h"
#include "patstat/errors.hpp"
#include "patstat/fixtures.hpp"

using namespace patstat;
using patstat::testing::DatasetBuilder;

TEST_CASE("golden lookups") {
  const IndexedStore store = IndexedStore::build(golden_fixture());

  const Application* app = store.application(65303);
  REQUIRE(app != nullptr);
  CHECK(app->appln_auth == "DE");

  // family of 65303 has nine member rows
  const auto family = store.family_of(65303);
  REQUIRE(family.has_value());
  CHECK(store.family_members(*family).size() == 9);

  CHECK(store.application(424242) == nullptr);
  CHECK(store.person(501) != nullptr);
  CHECK(store.publication(101001) != nullptr);
  CHECK(store.has_priority_claim(65303));
  CHECK_FALSE(store.has_priority_claim(149552));
}

TEST_CASE("empty dataset gives empty answers") {
  const IndexedStore store = IndexedStore::build({});
  CHECK(store.application(1) == nullptr);
  CHECK(store.publications_of(1).empty());
  CHECK(store.national_phase_children(1).empty());
  CHECK_FALSE(store.family_of(1).has_value());
  CHECK(store.citations_of(1).empty());
  CHECK(store.ipc_rows_with_prefix("F03D").empty());
  CHECK_FALSE(store.earliest_publication_date(1).has_value());
}

TEST_CASE("duplicate keys are rejected at build") {
  {
    DatasetBuilder b;
    b.app(1).app(1);
    CHECK_THROWS_AS(IndexedStore::build(std::move(b.ds)), DuplicateKeyError);
  }
  {
    DatasetBuilder b;
    b.app(1).pub(100, 1).pub(100, 1);
    CHECK_THROWS_AS(IndexedStore::build(std::move(b.ds)), DuplicateKeyError);
  }
  {
    DatasetBuilder b;
    b.person(5).person(5);
    CHECK_THROWS_AS(IndexedStore::build(std::move(b.ds)), DuplicateKeyError);
  }
}

TEST_CASE("non-patent citations never enter the citation index") {
  DatasetBuilder b;
  b.app(1).pub(100, 1);
  b.cite(100, 0).cite(100, 0);
  const IndexedStore store = IndexedStore::build(std::move(b.ds));
  CHECK(store.citations_of(0).empty());
  CHECK(store.citations_of(100).empty());
}

TEST_CASE("earliest publication date") {
  DatasetBuilder b;
  b.app(1).app(2).app(3);
  b.pub(100, 1, "DE", Date::make(2005, 6, 1));
  b.pub(101, 1, "US", Date::make(2006, 1, 1));
  b.pub(102, 2, "DE", std::nullopt);  // arrived as year-9999 in the dump
  const IndexedStore store = IndexedStore::build(std::move(b.ds));

  CHECK(store.earliest_publication_date(1)->to_string() == "2005-06-01");
  CHECK_FALSE(store.earliest_publication_date(2).has_value());
  CHECK_FALSE(store.earliest_publication_date(3).has_value());
}

TEST_CASE("ipc prefix matching is case-insensitive with padded symbols") {
  DatasetBuilder b;
  b.app(1).app(2).app(3);
  b.ipc(1, "F03D   1/00");
  b.ipc(2, "f03d  11/04");
  b.ipc(3, "F03B  13/00");
  const IndexedStore store = IndexedStore::build(std::move(b.ds));

  auto rows = store.ipc_rows_with_prefix("F03D");
  CHECK(rows.size() == 2);
  CHECK(store.ipc_rows_with_prefix("f03d ").size() == 2);  // right-trimmed prefix
  CHECK(store.ipc_rows_with_prefix("F03").size() == 3);    // F03B and F03D
  CHECK(store.ipc_rows_with_prefix("F03D   1").size() == 1);
  CHECK(store.ipc_rows_with_prefix("X").empty());
}

TEST_CASE("every index answers like a scan over random datasets") {
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    GeneratorParams params;
    params.seed = seed;
    params.n_applications = seed == 11 ? 1000 : 400;
    params.n_persons = 250;
    PatstatDataset ds = generate_random_dataset(params);
    const PatstatDataset reference = ds;  // keep a copy to scan
    const IndexedStore store = IndexedStore::build(std::move(ds));

    for (const auto& app : reference.applications) {
      // publications_of
      std::multiset<PublnId> scan;
      for (const auto& p : reference.publications) {
        if (p.appln_id == app.appln_id) scan.insert(p.pat_publn_id);
      }
      std::multiset<PublnId> indexed;
      for (const auto& [key, row] : store.publications_of(app.appln_id)) {
        indexed.insert(store.dataset().publications[row].pat_publn_id);
      }
      REQUIRE(scan == indexed);

      // national_phase_children
      std::multiset<ApplnId> scan_children;
      for (const auto& other : reference.applications) {
        if (other.internat_appln_id == app.appln_id) scan_children.insert(other.appln_id);
      }
      std::multiset<ApplnId> indexed_children;
      for (const auto& [key, row] : store.national_phase_children(app.appln_id)) {
        indexed_children.insert(store.dataset().applications[row].appln_id);
      }
      REQUIRE(scan_children == indexed_children);

      // priority existence
      bool scan_claims = false;
      for (const auto& c : reference.priority_claims) {
        if (c.appln_id == app.appln_id) scan_claims = true;
      }
      REQUIRE(scan_claims == store.has_priority_claim(app.appln_id));

      // family id
      std::optional<FamilyId> scan_family;
      for (const auto& f : reference.family_memberships) {
        if (f.appln_id == app.appln_id) {
          scan_family = f.inpadoc_family_id;
          break;
        }
      }
      REQUIRE(scan_family == store.family_of(app.appln_id));

      // person links
      std::size_t scan_links = 0;
      for (const auto& l : reference.person_appln_links) {
        if (l.appln_id == app.appln_id) ++scan_links;
      }
      REQUIRE(scan_links == store.person_links_of(app.appln_id).size());
    }

    for (const auto& p : reference.publications) {
      std::size_t scan_cites = 0;
      for (const auto& c : reference.citations) {
        if (c.cited_pat_publn_id == p.pat_publn_id) ++scan_cites;
      }
      REQUIRE(scan_cites == store.citations_of(p.pat_publn_id).size());
    }

    // prefix queries equal a scan over the compare keys
    for (const std::string prefix : {"F03D", "F03", "F03D   1", "H02J", "Z"}) {
      std::multiset<ApplnId> scan_rows;
      const std::string key = ipc_prefix_key(prefix);
      for (const auto& row : reference.ipc_assignments) {
        if (ipc_compare_key(row.ipc_class_symbol).starts_with(key)) {
          scan_rows.insert(row.appln_id);
        }
      }
      std::multiset<ApplnId> indexed_rows;
      for (std::uint32_t row : store.ipc_rows_with_prefix(prefix)) {
        indexed_rows.insert(store.dataset().ipc_assignments[row].appln_id);
      }
      REQUIRE(scan_rows == indexed_rows);
    }
  }
}
