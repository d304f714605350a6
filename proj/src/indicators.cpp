#include "patstat/indicators.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "patstat/errors.hpp"

namespace patstat {

namespace {

std::set<std::string> normalize_codes(const std::set<std::string>& codes) {
  std::set<std::string> out;
  for (const auto& c : codes) out.insert(normalize_code(c));
  return out;
}

void sort_by_appln_id(std::vector<IndicatorRow>& rows) {
  std::sort(rows.begin(), rows.end(),
            [](const IndicatorRow& a, const IndicatorRow& b) { return a.appln_id < b.appln_id; });
}

void sort_by_value_desc(std::vector<IndicatorRow>& rows) {
  std::sort(rows.begin(), rows.end(), [](const IndicatorRow& a, const IndicatorRow& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.appln_id < b.appln_id;
  });
}

}  // namespace

PersonRole parse_person_role(const std::string& text) {
  const std::string t = normalize_code(text);
  if (t == "INVENTOR") return PersonRole::inventor;
  if (t == "APPLICANT") return PersonRole::applicant;
  throw InvalidRoleError(text);
}

std::string to_string(PersonRole role) {
  return role == PersonRole::inventor ? "inventor" : "applicant";
}

Cohort select_cohort(const IndexedStore& store, const CohortFilter& filter) {
  const std::string prefix = ipc_prefix_key(filter.ipc_prefix);
  if (prefix.empty()) throw InvalidParamsError("cohort filter: empty ipc prefix");
  if (filter.filing_year < 1800 || filter.filing_year > 2200) {
    throw InvalidParamsError("cohort filter: filing year out of range [1800, 2200]");
  }

  std::set<std::string> kinds;
  for (const auto& k : filter.kinds) kinds.insert(normalize_code(k));

  const PatstatDataset& ds = store.dataset();
  std::vector<ApplnId> candidates;
  for (std::uint32_t row : store.ipc_rows_with_prefix(prefix)) {
    candidates.push_back(ds.ipc_assignments[row].appln_id);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<const Application*> matched;
  for (ApplnId id : candidates) {
    const Application* app = store.application(id);
    if (!app) continue;
    if (!app->appln_filing_date) continue;  // unknown filing dates never match
    if (app->appln_filing_date->year() != filter.filing_year) continue;
    if (!kinds.contains(app->appln_kind)) continue;
    matched.push_back(app);
  }
  std::sort(matched.begin(), matched.end(), [](const Application* a, const Application* b) {
    if (a->appln_auth != b->appln_auth) return a->appln_auth < b->appln_auth;
    return a->appln_id < b->appln_id;
  });

  Cohort cohort;
  cohort.provenance.kind = CohortProvenance::Kind::filter;
  cohort.provenance.ipc_prefix = filter.ipc_prefix;
  cohort.provenance.filing_year = filter.filing_year;
  cohort.provenance.kinds.assign(kinds.begin(), kinds.end());
  cohort.members.reserve(matched.size());
  for (const Application* app : matched) cohort.members.push_back(app->appln_id);
  return cohort;
}

std::vector<NationalPhaseRow> national_phase_entries(
    const IndexedStore& store, const Cohort& cohort, const std::string& receiving_office,
    const std::set<std::string>& target_offices) {
  const std::string receiving = normalize_code(receiving_office);
  const std::set<std::string> targets = normalize_codes(target_offices);
  const PatstatDataset& ds = store.dataset();

  std::vector<NationalPhaseRow> rows;
  for (ApplnId member : cohort.members) {
    const Application* pct = store.application(member);
    if (!pct || pct->appln_auth != receiving) continue;
    for (const auto& [key, idx] : store.national_phase_children(member)) {
      const Application& entry = ds.applications[idx];
      if (!targets.empty() && !targets.contains(entry.appln_auth)) continue;
      rows.push_back({pct->appln_id, pct->appln_auth, pct->appln_nr, pct->appln_kind,
                      entry.appln_id, entry.appln_auth});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const NationalPhaseRow& a, const NationalPhaseRow& b) {
    if (a.pct_appln_id != b.pct_appln_id) return a.pct_appln_id < b.pct_appln_id;
    return a.entry_appln_id < b.entry_appln_id;
  });
  return rows;
}

IndicatorTable priority_status(const IndexedStore& store, const Cohort& cohort) {
  IndicatorTable table{"priority-status", "is_a_pf", "appln_id asc", {}};
  table.rows.reserve(cohort.size());
  for (ApplnId member : cohort.members) {
    table.rows.push_back({member, store.has_priority_claim(member) ? 0LL : 1LL});
  }
  sort_by_appln_id(table.rows);
  return table;
}

IndicatorTable family_size(const IndexedStore& store, const Cohort& cohort,
                           bool emit_defaults) {
  IndicatorTable table{"family-size", "family_size", "appln_id asc", {}};
  for (ApplnId member : cohort.members) {
    const auto family = store.family_of(member);
    if (family) {
      table.rows.push_back(
          {member, static_cast<long long>(store.family_members(*family).size())});
    } else if (emit_defaults) {
      table.rows.push_back({member, 1});  // an application is its own family
    }
  }
  sort_by_appln_id(table.rows);
  return table;
}

IndicatorTable geographic_family_size(const IndexedStore& store, const Cohort& cohort,
                                      bool emit_defaults) {
  IndicatorTable table{"geog-family-size", "geog_family_size", "appln_id asc", {}};
  const PatstatDataset& ds = store.dataset();
  std::vector<std::string_view> auths;
  for (ApplnId member : cohort.members) {
    const auto family = store.family_of(member);
    if (!family) {
      if (emit_defaults) table.rows.push_back({member, 0});
      continue;
    }
    auths.clear();
    for (const auto& [fkey, frow] : store.family_members(*family)) {
      const ApplnId relative = ds.family_memberships[frow].appln_id;
      for (const auto& [pkey, prow] : store.publications_of(relative)) {
        auths.push_back(ds.publications[prow].publn_auth);
      }
    }
    if (auths.empty()) {
      // family with no publications at all: outside the publication join
      if (emit_defaults) table.rows.push_back({member, 0});
      continue;
    }
    std::sort(auths.begin(), auths.end());
    auths.erase(std::unique(auths.begin(), auths.end()), auths.end());
    long long distinct = 0;
    for (const auto& auth : auths) {
      if (auth != "WO") ++distinct;
    }
    table.rows.push_back({member, distinct});
  }
  sort_by_appln_id(table.rows);
  return table;
}

std::vector<FractionalCountRow> fractional_count_by_country(
    const IndexedStore& store, const Cohort& cohort, PersonRole role,
    FractionalDenominator denominator) {
  const PatstatDataset& ds = store.dataset();

  // accumulate per country; nullopt key groups unknown residences
  std::map<std::optional<std::string>, Fraction> sums;

  std::map<std::optional<std::string_view>, long long> groups;
  for (ApplnId member : cohort.members) {
    groups.clear();
    long long max_seq = 0;
    long long role_rows = 0;
    for (const auto& [key, row] : store.person_links_of(member)) {
      const PersonApplnLink& link = ds.person_appln_links[row];
      const int seq = role == PersonRole::inventor ? link.invt_seq_nr : link.applt_seq_nr;
      if (seq <= 0) continue;
      max_seq = std::max<long long>(max_seq, seq);
      ++role_rows;
      const Person* person = store.person(link.person_id);
      if (!person) continue;  // unresolved person: raises the denominator only
      if (person->person_ctry_code) {
        groups[std::string_view(*person->person_ctry_code)] += 1;
      } else {
        groups[std::nullopt] += 1;
      }
    }

    const long long denom_value =
        denominator == FractionalDenominator::max_sequence ? max_seq : role_rows;
    if (groups.empty()) {
      // no resolvable rows for the role: counts fall back to 1
      sums[std::nullopt] += Fraction(1, denom_value > 0 ? denom_value : 1);
      continue;
    }
    for (const auto& [country, n] : groups) {
      const Fraction share(n, denom_value);
      if (country) {
        sums[std::string(*country)] += share;
      } else {
        sums[std::nullopt] += share;
      }
    }
  }

  std::vector<FractionalCountRow> rows;
  rows.reserve(sums.size());
  for (auto& [country, count] : sums) rows.push_back({country, std::move(count)});
  std::stable_sort(rows.begin(), rows.end(),
                   [](const FractionalCountRow& a, const FractionalCountRow& b) {
                     if (a.count != b.count) return b.count < a.count;
                     if (a.country.has_value() != b.country.has_value()) {
                       return !a.country.has_value();  // unknown group first
                     }
                     return a.country < b.country;
                   });
  return rows;
}

IndicatorTable inventor_country_count(const IndexedStore& store, const Cohort& cohort,
                                      bool emit_defaults) {
  IndicatorTable table{"country-count", "nb_locations", "nb_locations desc, appln_id asc", {}};
  const PatstatDataset& ds = store.dataset();
  std::vector<std::string_view> countries;
  for (ApplnId member : cohort.members) {
    countries.clear();
    for (const auto& [key, row] : store.person_links_of(member)) {
      const PersonApplnLink& link = ds.person_appln_links[row];
      if (link.invt_seq_nr <= 0) continue;
      const Person* person = store.person(link.person_id);
      if (!person || !person->person_ctry_code) continue;
      countries.push_back(*person->person_ctry_code);
    }
    std::sort(countries.begin(), countries.end());
    countries.erase(std::unique(countries.begin(), countries.end()), countries.end());
    if (!countries.empty()) {
      table.rows.push_back({member, static_cast<long long>(countries.size())});
    } else if (emit_defaults) {
      table.rows.push_back({member, 0});
    }
  }
  sort_by_value_desc(table.rows);
  return table;
}

IndicatorTable forward_citations_window(const IndexedStore& store, const Cohort& cohort,
                                        const std::string& cited_office,
                                        const std::string& citing_office, int window_years,
                                        bool emit_defaults) {
  if (window_years < 0) {
    throw InvalidParamsError("forward citations: window_years must be >= 0");
  }
  const std::string cited = normalize_code(cited_office);
  const std::string citing = normalize_code(citing_office);

  IndicatorTable table{"forward-citations", "cites_" + std::to_string(window_years) + "y",
                       "cites desc, appln_id asc", {}};
  const PatstatDataset& ds = store.dataset();
  std::vector<PublnId> citing_ids;
  for (ApplnId member : cohort.members) {
    const auto ref = store.earliest_publication_date(member);
    if (!ref) {
      // no usable reference date: the member is outside the window query
      if (emit_defaults) table.rows.push_back({member, 0});
      continue;
    }
    const Date deadline = ref->add_years(window_years);

    citing_ids.clear();
    for (const auto& [pkey, prow] : store.publications_of(member)) {
      const Publication& cited_publn = ds.publications[prow];
      if (cited_publn.publn_auth != cited) continue;
      for (const auto& [ckey, crow] : store.citations_of(cited_publn.pat_publn_id)) {
        const Citation& citation = ds.citations[crow];
        const Publication* citing_publn = store.publication(citation.pat_publn_id);
        if (!citing_publn || citing_publn->publn_auth != citing) continue;
        if (!citing_publn->publn_date) continue;
        if (*citing_publn->publn_date <= deadline) {
          citing_ids.push_back(citing_publn->pat_publn_id);
        }
      }
    }
    std::sort(citing_ids.begin(), citing_ids.end());
    citing_ids.erase(std::unique(citing_ids.begin(), citing_ids.end()), citing_ids.end());
    if (!citing_ids.empty()) {
      table.rows.push_back({member, static_cast<long long>(citing_ids.size())});
    } else if (emit_defaults) {
      table.rows.push_back({member, 0});
    }
  }
  sort_by_value_desc(table.rows);
  return table;
}

IndicatorTable grant_status(const IndexedStore& store, const Cohort& cohort,
                            const std::string& office, const std::string& kind,
                            bool emit_defaults) {
  const std::string auth = normalize_code(office);
  const std::string kind_code = normalize_code(kind);

  IndicatorTable table{"grant-status", "granted", "appln_id asc", {}};
  const PatstatDataset& ds = store.dataset();
  for (ApplnId member : cohort.members) {
    const Application* app = store.application(member);
    if (!app || app->appln_auth != auth || app->appln_kind != kind_code) continue;
    const auto pubs = store.publications_of(member);
    if (pubs.empty()) {
      // never published: outside the publication join
      if (emit_defaults) table.rows.push_back({member, 0});
      continue;
    }
    long long granted = 0;
    for (const auto& [key, row] : pubs) {
      if (ds.publications[row].publn_first_grant) {
        granted = 1;
        break;
      }
    }
    table.rows.push_back({member, granted});
  }
  sort_by_appln_id(table.rows);
  return table;
}

namespace {

struct OfficeNumberFormat {
  std::string prefix;
  std::size_t keep_last;
};

const OfficeNumberFormat* office_number_format(const std::string& office) {
  // UKIPO is the only office shipped; its online service wants GBnnnnnnn.
  static const std::map<std::string, OfficeNumberFormat> registry = {
      {"GB", {"GB", 7}},
  };
  auto it = registry.find(office);
  return it == registry.end() ? nullptr : &it->second;
}

}  // namespace

std::vector<ExternalNumberRow> external_publication_numbers(
    const IndexedStore& store, const Cohort& cohort, const std::string& office,
    std::vector<std::string>* warnings) {
  const std::string auth = normalize_code(office);
  const OfficeNumberFormat* format = office_number_format(auth);
  if (!format) throw UnknownOfficeFormatterError(auth);

  const PatstatDataset& ds = store.dataset();
  std::vector<ExternalNumberRow> rows;
  for (ApplnId member : cohort.members) {
    const Application* app = store.application(member);
    if (!app || app->appln_auth != auth || app->appln_kind != "A") continue;
    for (const auto& [key, row] : store.publications_of(member)) {
      const Publication& publn = ds.publications[row];
      if (publn.publn_kind == "D0") continue;  // applications as filed
      std::string external = format->prefix;
      if (publn.publn_nr.size() >= format->keep_last) {
        external += publn.publn_nr.substr(publn.publn_nr.size() - format->keep_last);
      } else {
        external += publn.publn_nr;
        if (warnings) {
          warnings->push_back("publication number '" + publn.publn_nr + "' of appln " +
                              std::to_string(member) + " is shorter than " +
                              std::to_string(format->keep_last) + " characters; used whole");
        }
      }
      rows.push_back({member, publn.publn_nr, std::move(external)});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const ExternalNumberRow& a, const ExternalNumberRow& b) {
    if (a.appln_id != b.appln_id) return a.appln_id < b.appln_id;
    if (a.publn_nr_patstat != b.publn_nr_patstat) return a.publn_nr_patstat < b.publn_nr_patstat;
    return a.publn_nr_external < b.publn_nr_external;
  });
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

}  // namespace patstat
