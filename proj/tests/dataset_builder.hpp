#pragma once

#include <optional>
#include <string>

#include "patstat/model.hpp"

namespace patstat::testing {

// Terse dataset construction for unit tests.
struct DatasetBuilder {
  PatstatDataset ds;

  DatasetBuilder& app(ApplnId id, std::string auth = "DE", std::string kind = "A",
                      std::optional<Date> filed = Date::make(2005, 6, 15),
                      ApplnId internat = 0, std::string nr = "") {
    ds.applications.push_back({id, std::move(auth), nr.empty() ? std::to_string(id) : nr,
                               std::move(kind), filed, internat});
    return *this;
  }
  DatasetBuilder& pub(PublnId id, ApplnId appln, std::string auth = "DE",
                      std::optional<Date> date = Date::make(2006, 6, 15),
                      bool grant = false, std::string kind = "A1", std::string nr = "") {
    ds.publications.push_back({id, appln, std::move(auth),
                               nr.empty() ? std::to_string(id) : nr, std::move(kind), date,
                               grant});
    return *this;
  }
  DatasetBuilder& person(PersonId id, std::optional<std::string> ctry = "DE") {
    ds.persons.push_back({id, std::move(ctry)});
    return *this;
  }
  DatasetBuilder& link(PersonId person, ApplnId appln, int invt, int applt = 0) {
    ds.person_appln_links.push_back({person, appln, invt, applt});
    return *this;
  }
  DatasetBuilder& ipc(ApplnId appln, std::string symbol = "F03D   1/00") {
    ds.ipc_assignments.push_back({appln, std::move(symbol)});
    return *this;
  }
  DatasetBuilder& prior(ApplnId appln, ApplnId claimed, std::optional<int> seq = 1) {
    ds.priority_claims.push_back({appln, claimed, seq});
    return *this;
  }
  DatasetBuilder& fam(ApplnId appln, FamilyId family) {
    ds.family_memberships.push_back({appln, family});
    return *this;
  }
  DatasetBuilder& cite(PublnId citing, PublnId cited) {
    ds.citations.push_back({citing, cited});
    return *this;
  }
};

}  // namespace patstat::testing
