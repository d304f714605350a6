#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "patstat/date.hpp"

namespace patstat {

using ApplnId = std::int64_t;
using PublnId = std::int64_t;
using PersonId = std::int64_t;
using FamilyId = std::int64_t;

// tls201_appln. One row per patent application; appln_id is the primary key
// used to link every other table.
struct Application {
  ApplnId appln_id = 0;
  std::string appln_auth;  // 2-char ST.3 office code, uppercase
  std::string appln_nr;
  std::string appln_kind;  // open code set; 'A' direct filing, 'W' PCT
  std::optional<Date> appln_filing_date;
  ApplnId internat_appln_id = 0;  // appln_id of the originating PCT filing, 0 if none

  friend bool operator==(const Application&, const Application&) = default;
};

// tls211_pat_publn. A published instance of an application; the unit that
// citations attach to.
struct Publication {
  PublnId pat_publn_id = 0;
  ApplnId appln_id = 0;
  std::string publn_auth;
  std::string publn_nr;
  std::string publn_kind;
  std::optional<Date> publn_date;
  bool publn_first_grant = false;

  friend bool operator==(const Publication&, const Publication&) = default;
};

// tls206_person.
struct Person {
  PersonId person_id = 0;
  std::optional<std::string> person_ctry_code;  // nullopt = unknown residence

  friend bool operator==(const Person&, const Person&) = default;
};

// tls207_pers_appln. Role link between persons and applications; a sequence
// number > 0 marks the role as active (inventor resp. applicant).
struct PersonApplnLink {
  PersonId person_id = 0;
  ApplnId appln_id = 0;
  int invt_seq_nr = 0;
  int applt_seq_nr = 0;

  friend bool operator==(const PersonApplnLink&, const PersonApplnLink&) = default;
};

// tls209_appln_ipc. Symbols keep Patstat's internal padding verbatim
// ("F03D   1/00"); comparisons run on an uppercased key.
struct IpcAssignment {
  ApplnId appln_id = 0;
  std::string ipc_class_symbol;

  friend bool operator==(const IpcAssignment&, const IpcAssignment&) = default;
};

// tls204_appln_prior. appln_id is the second filing making the claim.
struct PriorityClaim {
  ApplnId appln_id = 0;
  ApplnId prior_appln_id = 0;
  std::optional<int> prior_appln_seq_nr;  // stored but unused by the indicators

  friend bool operator==(const PriorityClaim&, const PriorityClaim&) = default;
};

// tls219_inpadoc_fam. An application belongs to at most one INPADOC family.
struct FamilyMembership {
  ApplnId appln_id = 0;
  FamilyId inpadoc_family_id = 0;

  friend bool operator==(const FamilyMembership&, const FamilyMembership&) = default;
};

// tls212_citation. cited_pat_publn_id == 0 marks a citation of something
// that is not a patent publication (e.g. NPL); indicators ignore such rows.
struct Citation {
  PublnId pat_publn_id = 0;  // the citing publication
  PublnId cited_pat_publn_id = 0;

  friend bool operator==(const Citation&, const Citation&) = default;
};

struct IngestStats {
  struct Table {
    std::uint64_t accepted = 0;
    std::uint64_t rejected = 0;
  };
  std::map<std::string, Table> by_table;
};

// The eight row collections plus ingest statistics. Immutable after
// construction by convention: every operation takes it by const reference.
struct PatstatDataset {
  std::vector<Application> applications;
  std::vector<Publication> publications;
  std::vector<Person> persons;
  std::vector<PersonApplnLink> person_appln_links;
  std::vector<IpcAssignment> ipc_assignments;
  std::vector<PriorityClaim> priority_claims;
  std::vector<FamilyMembership> family_memberships;
  std::vector<Citation> citations;
  IngestStats stats;  // not part of row equality

  std::uint64_t total_rows() const;

  // Field-by-field equality of all eight collections, stats excluded.
  bool same_rows(const PatstatDataset& other) const;
};

// How a cohort was produced; kept alongside the members so saved cohorts
// are self-describing.
struct CohortProvenance {
  enum class Kind { filter, explicit_list };
  Kind kind = Kind::explicit_list;
  std::string ipc_prefix;
  int filing_year = 0;
  std::vector<std::string> kinds;

  std::string describe() const;
};

// Ordered, de-duplicated application ids. Filter-built cohorts are ordered
// by (appln_auth, appln_id); explicit lists keep their given order.
struct Cohort {
  std::vector<ApplnId> members;
  CohortProvenance provenance;

  static Cohort from_ids(const std::vector<ApplnId>& ids);

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
};

struct ValidationIssue {
  std::string table;
  std::string check;
  bool violation = true;  // false for informational counts (missing dates)
  std::uint64_t count = 0;
  std::vector<long long> sample_keys;  // at most kMaxSampleKeys offenders
};

struct ValidationReport {
  static constexpr std::size_t kMaxSampleKeys = 5;

  std::vector<ValidationIssue> issues;  // only non-zero counts are listed

  std::uint64_t violation_count() const;
  bool clean() const { return violation_count() == 0; }
  std::string to_string() const;
};

// Scans every table for duplicate keys, dangling references and missing
// (sentinel) dates. Never fails; it reports.
ValidationReport validate_dataset(const PatstatDataset& dataset);

// Trim + uppercase; authority / country code normal form.
std::string normalize_code(std::string_view raw);

// Uppercase copy with internal whitespace preserved: the IPC compare key.
std::string ipc_compare_key(std::string_view symbol);

// Uppercase + right-trim, for prefix queries ("f03d " matches "F03D   1/00").
std::string ipc_prefix_key(std::string_view prefix);

}  // namespace patstat
