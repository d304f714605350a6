#pragma once

#include <set>
#include <string>
#include <vector>

#include "patstat/indicators.hpp"
#include "patstat/model.hpp"

namespace patstat::oracle {

// Reference implementations of the ten indicator operations, written as
// naive scans and nested loops over the raw row collections. No indexes, no
// shared computation with the indexed versions; output contracts identical.
// Slow on purpose: these are the ground truth for the property suites and
// for the CLI's --oracle audit mode.

Cohort select_cohort(const PatstatDataset& ds, const CohortFilter& filter);

std::vector<NationalPhaseRow> national_phase_entries(const PatstatDataset& ds,
                                                     const Cohort& cohort,
                                                     const std::string& receiving_office,
                                                     const std::set<std::string>& target_offices);

IndicatorTable priority_status(const PatstatDataset& ds, const Cohort& cohort);

IndicatorTable family_size(const PatstatDataset& ds, const Cohort& cohort,
                           bool emit_defaults = false);

IndicatorTable geographic_family_size(const PatstatDataset& ds, const Cohort& cohort,
                                      bool emit_defaults = false);

std::vector<FractionalCountRow> fractional_count_by_country(
    const PatstatDataset& ds, const Cohort& cohort, PersonRole role,
    FractionalDenominator denominator = FractionalDenominator::max_sequence);

IndicatorTable inventor_country_count(const PatstatDataset& ds, const Cohort& cohort,
                                      bool emit_defaults = false);

IndicatorTable forward_citations_window(const PatstatDataset& ds, const Cohort& cohort,
                                        const std::string& cited_office,
                                        const std::string& citing_office,
                                        int window_years = 3, bool emit_defaults = false);

IndicatorTable grant_status(const PatstatDataset& ds, const Cohort& cohort,
                            const std::string& office, const std::string& kind = "A",
                            bool emit_defaults = false);

std::vector<ExternalNumberRow> external_publication_numbers(
    const PatstatDataset& ds, const Cohort& cohort, const std::string& office = "GB",
    std::vector<std::string>* warnings = nullptr);

}  // namespace patstat::oracle
