#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "patstat/model.hpp"

namespace patstat {

// Knobs for the seeded synthetic dataset. Shares are probabilities in
// [0, 1]; the generator is deterministic in the seed (mt19937_64, modulo
// sampling), so one seed always produces byte-identical table files.
struct GeneratorParams {
  std::uint64_t seed = 1;
  std::size_t n_applications = 1000;
  std::size_t n_persons = 800;

  double family_geometric_p = 0.45;    // P(family size = k) ~ geometric(p)
  double citation_density = 0.8;       // citation rows per publication
  double pct_share = 0.15;             // share of kind-'W' applications
  double missing_date_share = 0.05;
  double missing_country_share = 0.15;
  double sequence_gap_share = 0.10;    // chance of a gap before each seq nr
  double family_membership_share = 0.85;
  double priority_share = 0.40;

  std::vector<std::string> authorities = {"DE", "EP", "US", "GB", "DK",
                                          "CN", "JP", "FR", "AT", "SE"};
  int filing_year_min = 2000;
  int filing_year_max = 2010;
  std::size_t max_publications_per_app = 4;
  std::size_t max_persons_per_app = 5;
  std::size_t max_ipc_per_app = 3;
};

// Hand-built dataset realizing every reference row asserted by the golden
// test suite: wind-turbine cohort of 2005, the DK PCT national-phase
// entries, the five pinned families, fractional-share and citation-window
// cases, and the GB grant / publication-number rows.
PatstatDataset golden_fixture();

// Schema-valid random dataset with guaranteed referential integrity.
// Edge cases (sequence gaps, unknown countries, missing dates, WO-only
// families, multi-priority claims) all occur with nonzero probability.
// Throws InvalidParamsError on out-of-range parameters.
PatstatDataset generate_random_dataset(const GeneratorParams& params);

}  // namespace patstat
