#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "patstat/fraction.hpp"
#include "patstat/model.hpp"
#include "patstat/store.hpp"

namespace patstat {

// Cohort definition: applications filed in one year, carrying at least one
// IPC code under the prefix, with an application kind from the set.
struct CohortFilter {
  std::string ipc_prefix;
  int filing_year = 0;
  std::vector<std::string> kinds = {"A", "W"};
};

struct IndicatorRow {
  ApplnId appln_id = 0;
  long long value = 0;

  friend bool operator==(const IndicatorRow&, const IndicatorRow&) = default;
};

// Per-application result table. The ordering rule is part of the result so
// exports can state it; rows are unique per appln_id.
struct IndicatorTable {
  std::string indicator;
  std::string value_column;
  std::string order_rule;
  std::vector<IndicatorRow> rows;

  friend bool operator==(const IndicatorTable&, const IndicatorTable&) = default;
};

struct NationalPhaseRow {
  ApplnId pct_appln_id = 0;
  std::string pct_appln_auth;
  std::string pct_appln_nr;
  std::string pct_appln_kind;
  ApplnId entry_appln_id = 0;
  std::string entry_appln_auth;

  friend bool operator==(const NationalPhaseRow&, const NationalPhaseRow&) = default;
};

enum class PersonRole { inventor, applicant };

PersonRole parse_person_role(const std::string& text);  // throws InvalidRoleError
std::string to_string(PersonRole role);

// Denominator for fractional shares. max_sequence is the classic
// definition; row_count is an alternate mode that differs only when the
// sequence numbering has gaps.
enum class FractionalDenominator { max_sequence, row_count };

struct FractionalCountRow {
  std::optional<std::string> country;  // nullopt groups unknown residences
  Fraction count;

  friend bool operator==(const FractionalCountRow&, const FractionalCountRow&) = default;
};

struct ExternalNumberRow {
  ApplnId appln_id = 0;
  std::string publn_nr_patstat;
  std::string publn_nr_external;

  friend bool operator==(const ExternalNumberRow&, const ExternalNumberRow&) = default;
};

// Distinct applications with filing year, kind and IPC prefix as per the
// filter, ordered by (appln_auth, appln_id). Missing filing dates never
// match a year.
Cohort select_cohort(const IndexedStore& store, const CohortFilter& filter);

// National phase entries at the target offices of cohort PCT applications
// received at receiving_office. An empty target set means any office.
// Ordered by (pct_appln_id, entry_appln_id).
std::vector<NationalPhaseRow> national_phase_entries(
    const IndexedStore& store, const Cohort& cohort, const std::string& receiving_office,
    const std::set<std::string>& target_offices);

// is_a_pf = 1 iff the application claims no priority. One row per member,
// ordered by appln_id.
IndicatorTable priority_status(const IndexedStore& store, const Cohort& cohort);

// Count of applications sharing the member's INPADOC family (self included).
// Members without a family row are absent, or size 1 with emit_defaults.
IndicatorTable family_size(const IndexedStore& store, const Cohort& cohort,
                           bool emit_defaults = false);

// Distinct publication authorities over all family members' publications,
// WO excluded. Members with no family row or whose family has no
// publications are absent (0 with emit_defaults).
IndicatorTable geographic_family_size(const IndexedStore& store, const Cohort& cohort,
                                      bool emit_defaults = false);

// Fractional count of member applications by country of the role's persons.
// Every member contributes a total of rows/denominator, or exactly 1 to the
// unknown-country group when it has no rows for the role. Ordered by count
// descending, then country (unknown group first).
std::vector<FractionalCountRow> fractional_count_by_country(
    const IndexedStore& store, const Cohort& cohort, PersonRole role,
    FractionalDenominator denominator = FractionalDenominator::max_sequence);

// Distinct known inventor countries per member; members with none are
// absent (0 with emit_defaults). Ordered by (count desc, appln_id asc).
IndicatorTable inventor_country_count(const IndexedStore& store, const Cohort& cohort,
                                      bool emit_defaults = false);

// Distinct citing publications at citing_office whose date falls within
// window_years of the member's earliest publication date, counting only
// citations of the member's publications at cited_office. Members with a
// missing reference date or zero qualifying citations are absent (0 with
// emit_defaults). Ordered by (count desc, appln_id asc).
IndicatorTable forward_citations_window(const IndexedStore& store, const Cohort& cohort,
                                        const std::string& cited_office,
                                        const std::string& citing_office,
                                        int window_years = 3, bool emit_defaults = false);

// granted = 1 iff any publication of the member carries the first-grant
// flag, over members filed at the office with the given kind. Members with
// no publications are absent (0 with emit_defaults). Ordered by appln_id.
IndicatorTable grant_status(const IndexedStore& store, const Cohort& cohort,
                            const std::string& office, const std::string& kind = "A",
                            bool emit_defaults = false);

// Office-native publication numbers for members filed at the office with
// kind 'A'. Ships with the UKIPO ('GB') formatter: 'GB' + last 7 characters
// of publn_nr, excluding publn_kind 'D0'. Distinct rows ordered by
// (appln_id, publn_nr).
std::vector<ExternalNumberRow> external_publication_numbers(
    const IndexedStore& store, const Cohort& cohort, const std::string& office = "GB",
    std::vector<std::string>* warnings = nullptr);

}  // namespace patstat
