#include "patstat/oracle.hpp"

#include <algorithm>
#include <map>

#include "patstat/errors.hpp"

namespace patstat::oracle {

namespace {

const Application* find_application(const PatstatDataset& ds, ApplnId id) {
  for (const auto& a : ds.applications) {
    if (a.appln_id == id) return &a;
  }
  return nullptr;
}

const Publication* find_publication(const PatstatDataset& ds, PublnId id) {
  for (const auto& p : ds.publications) {
    if (p.pat_publn_id == id) return &p;
  }
  return nullptr;
}

const Person* find_person(const PatstatDataset& ds, PersonId id) {
  for (const auto& p : ds.persons) {
    if (p.person_id == id) return &p;
  }
  return nullptr;
}

std::optional<Date> earliest_publication_date(const PatstatDataset& ds, ApplnId id) {
  std::optional<Date> earliest;
  for (const auto& p : ds.publications) {
    if (p.appln_id != id || !p.publn_date) continue;
    if (!earliest || p.publn_date->day_number() < earliest->day_number()) {
      earliest = p.publn_date;
    }
  }
  return earliest;
}

// Year shift with the Feb-29 clamp, recomputed here instead of calling the
// Date helper so the window arithmetic has two independent routes.
std::int64_t window_end_day(const Date& ref, int years) {
  int day = ref.day();
  if (ref.month() == 2 && day == 29 && !is_leap_year(ref.year() + years)) day = 28;
  const auto end = Date::make(ref.year() + years, ref.month(), day);
  return end->day_number();
}

void order_by_appln_id(std::vector<IndicatorRow>& rows) {
  std::sort(rows.begin(), rows.end(),
            [](const IndicatorRow& a, const IndicatorRow& b) { return a.appln_id < b.appln_id; });
}

void order_by_value_desc(std::vector<IndicatorRow>& rows) {
  std::sort(rows.begin(), rows.end(), [](const IndicatorRow& a, const IndicatorRow& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.appln_id < b.appln_id;
  });
}

}  // namespace

Cohort select_cohort(const PatstatDataset& ds, const CohortFilter& filter) {
  const std::string prefix = ipc_prefix_key(filter.ipc_prefix);
  if (prefix.empty()) throw InvalidParamsError("cohort filter: empty ipc prefix");
  if (filter.filing_year < 1800 || filter.filing_year > 2200) {
    throw InvalidParamsError("cohort filter: filing year out of range [1800, 2200]");
  }
  std::vector<std::string> kinds;
  for (const auto& k : filter.kinds) kinds.push_back(normalize_code(k));

  std::vector<const Application*> matched;
  for (const auto& app : ds.applications) {
    if (!app.appln_filing_date) continue;
    if (app.appln_filing_date->year() != filter.filing_year) continue;
    bool kind_ok = false;
    for (const auto& k : kinds) {
      if (app.appln_kind == k) kind_ok = true;
    }
    if (!kind_ok) continue;
    bool ipc_ok = false;
    for (const auto& row : ds.ipc_assignments) {
      if (row.appln_id != app.appln_id) continue;
      if (ipc_compare_key(row.ipc_class_symbol).starts_with(prefix)) {
        ipc_ok = true;
        break;
      }
    }
    if (!ipc_ok) continue;
    matched.push_back(&app);
  }

  std::sort(matched.begin(), matched.end(), [](const Application* a, const Application* b) {
    if (a->appln_auth != b->appln_auth) return a->appln_auth < b->appln_auth;
    return a->appln_id < b->appln_id;
  });

  Cohort cohort;
  cohort.provenance.kind = CohortProvenance::Kind::filter;
  cohort.provenance.ipc_prefix = filter.ipc_prefix;
  cohort.provenance.filing_year = filter.filing_year;
  std::vector<std::string> sorted_kinds = kinds;
  std::sort(sorted_kinds.begin(), sorted_kinds.end());
  sorted_kinds.erase(std::unique(sorted_kinds.begin(), sorted_kinds.end()),
                     sorted_kinds.end());
  cohort.provenance.kinds = sorted_kinds;
  for (const Application* app : matched) cohort.members.push_back(app->appln_id);
  return cohort;
}

std::vector<NationalPhaseRow> national_phase_entries(
    const PatstatDataset& ds, const Cohort& cohort, const std::string& receiving_office,
    const std::set<std::string>& target_offices) {
  const std::string receiving = normalize_code(receiving_office);
  std::set<std::string> targets;
  for (const auto& t : target_offices) targets.insert(normalize_code(t));

  std::vector<NationalPhaseRow> rows;
  for (ApplnId member : cohort.members) {
    const Application* pct = find_application(ds, member);
    if (!pct || pct->appln_auth != receiving) continue;
    for (const auto& entry : ds.applications) {
      if (entry.internat_appln_id != member) continue;
      if (!targets.empty() && targets.find(entry.appln_auth) == targets.end()) continue;
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

IndicatorTable priority_status(const PatstatDataset& ds, const Cohort& cohort) {
  IndicatorTable table{"priority-status", "is_a_pf", "appln_id asc", {}};
  for (ApplnId member : cohort.members) {
    bool claims = false;
    for (const auto& c : ds.priority_claims) {
      if (c.appln_id == member) claims = true;
    }
    table.rows.push_back({member, claims ? 0LL : 1LL});
  }
  order_by_appln_id(table.rows);
  return table;
}

IndicatorTable family_size(const PatstatDataset& ds, const Cohort& cohort,
                           bool emit_defaults) {
  IndicatorTable table{"family-size", "family_size", "appln_id asc", {}};
  for (ApplnId member : cohort.members) {
    std::optional<FamilyId> family;
    for (const auto& f : ds.family_memberships) {
      if (f.appln_id == member) {
        family = f.inpadoc_family_id;
        break;
      }
    }
    if (!family) {
      if (emit_defaults) table.rows.push_back({member, 1});
      continue;
    }
    long long size = 0;
    for (const auto& f : ds.family_memberships) {
      if (f.inpadoc_family_id == *family) ++size;
    }
    table.rows.push_back({member, size});
  }
  order_by_appln_id(table.rows);
  return table;
}

IndicatorTable geographic_family_size(const PatstatDataset& ds, const Cohort& cohort,
                                      bool emit_defaults) {
  IndicatorTable table{"geog-family-size", "geog_family_size", "appln_id asc", {}};
  for (ApplnId member : cohort.members) {
    std::optional<FamilyId> family;
    for (const auto& f : ds.family_memberships) {
      if (f.appln_id == member) {
        family = f.inpadoc_family_id;
        break;
      }
    }
    if (!family) {
      if (emit_defaults) table.rows.push_back({member, 0});
      continue;
    }
    std::vector<std::string> auths;
    bool any_publication = false;
    for (const auto& f : ds.family_memberships) {
      if (f.inpadoc_family_id != *family) continue;
      for (const auto& p : ds.publications) {
        if (p.appln_id != f.appln_id) continue;
        any_publication = true;
        if (p.publn_auth != "WO") auths.push_back(p.publn_auth);
      }
    }
    if (!any_publication) {
      if (emit_defaults) table.rows.push_back({member, 0});
      continue;
    }
    std::sort(auths.begin(), auths.end());
    auths.erase(std::unique(auths.begin(), auths.end()), auths.end());
    table.rows.push_back({member, static_cast<long long>(auths.size())});
  }
  order_by_appln_id(table.rows);
  return table;
}

std::vector<FractionalCountRow> fractional_count_by_country(
    const PatstatDataset& ds, const Cohort& cohort, PersonRole role,
    FractionalDenominator denominator) {
  std::map<std::optional<std::string>, Fraction> sums;

  for (ApplnId member : cohort.members) {
    long long max_seq = 0;
    long long role_rows = 0;
    std::map<std::optional<std::string>, long long> by_country;
    for (const auto& link : ds.person_appln_links) {
      if (link.appln_id != member) continue;
      const int seq = role == PersonRole::inventor ? link.invt_seq_nr : link.applt_seq_nr;
      if (seq <= 0) continue;
      if (seq > max_seq) max_seq = seq;
      ++role_rows;
      const Person* person = find_person(ds, link.person_id);
      if (!person) continue;
      by_country[person->person_ctry_code] += 1;
    }
    const long long denom =
        denominator == FractionalDenominator::max_sequence ? max_seq : role_rows;
    if (by_country.empty()) {
      sums[std::nullopt] += Fraction(1, denom > 0 ? denom : 1);
      continue;
    }
    for (const auto& [country, n] : by_country) {
      sums[country] += Fraction(n, denom);
    }
  }

  std::vector<FractionalCountRow> rows;
  for (auto& [country, count] : sums) rows.push_back({country, count});
  std::stable_sort(rows.begin(), rows.end(),
                   [](const FractionalCountRow& a, const FractionalCountRow& b) {
                     if (a.count != b.count) return b.count < a.count;
                     if (a.country.has_value() != b.country.has_value()) {
                       return !a.country.has_value();
                     }
                     return a.country < b.country;
                   });
  return rows;
}

IndicatorTable inventor_country_count(const PatstatDataset& ds, const Cohort& cohort,
                                      bool emit_defaults) {
  IndicatorTable table{"country-count", "nb_locations", "nb_locations desc, appln_id asc", {}};
  for (ApplnId member : cohort.members) {
    std::vector<std::string> countries;
    for (const auto& link : ds.person_appln_links) {
      if (link.appln_id != member || link.invt_seq_nr <= 0) continue;
      const Person* person = find_person(ds, link.person_id);
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
  order_by_value_desc(table.rows);
  return table;
}

IndicatorTable forward_citations_window(const PatstatDataset& ds, const Cohort& cohort,
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
  for (ApplnId member : cohort.members) {
    const auto ref = earliest_publication_date(ds, member);
    if (!ref) {
      if (emit_defaults) table.rows.push_back({member, 0});
      continue;
    }
    const std::int64_t deadline = window_end_day(*ref, window_years);

    std::vector<PublnId> citing_ids;
    for (const auto& cited_publn : ds.publications) {
      if (cited_publn.appln_id != member || cited_publn.publn_auth != cited) continue;
      for (const auto& citation : ds.citations) {
        if (citation.cited_pat_publn_id != cited_publn.pat_publn_id) continue;
        if (citation.cited_pat_publn_id == 0) continue;
        const Publication* citing_publn = find_publication(ds, citation.pat_publn_id);
        if (!citing_publn || citing_publn->publn_auth != citing) continue;
        if (!citing_publn->publn_date) continue;
        if (citing_publn->publn_date->day_number() <= deadline) {
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
  order_by_value_desc(table.rows);
  return table;
}

IndicatorTable grant_status(const PatstatDataset& ds, const Cohort& cohort,
                            const std::string& office, const std::string& kind,
                            bool emit_defaults) {
  const std::string auth = normalize_code(office);
  const std::string kind_code = normalize_code(kind);

  IndicatorTable table{"grant-status", "granted", "appln_id asc", {}};
  for (ApplnId member : cohort.members) {
    const Application* app = find_application(ds, member);
    if (!app || app->appln_auth != auth || app->appln_kind != kind_code) continue;
    bool any = false;
    long long granted = 0;
    for (const auto& p : ds.publications) {
      if (p.appln_id != member) continue;
      any = true;
      if (p.publn_first_grant) granted = 1;
    }
    if (!any) {
      if (emit_defaults) table.rows.push_back({member, 0});
      continue;
    }
    table.rows.push_back({member, granted});
  }
  order_by_appln_id(table.rows);
  return table;
}

std::vector<ExternalNumberRow> external_publication_numbers(
    const PatstatDataset& ds, const Cohort& cohort, const std::string& office,
    std::vector<std::string>* warnings) {
  const std::string auth = normalize_code(office);
  if (auth != "GB") throw UnknownOfficeFormatterError(auth);

  std::vector<ExternalNumberRow> rows;
  for (ApplnId member : cohort.members) {
    const Application* app = find_application(ds, member);
    if (!app || app->appln_auth != auth || app->appln_kind != "A") continue;
    for (const auto& p : ds.publications) {
      if (p.appln_id != member || p.publn_kind == "D0") continue;
      std::string external = "GB";
      if (p.publn_nr.size() >= 7) {
        external += p.publn_nr.substr(p.publn_nr.size() - 7);
      } else {
        external += p.publn_nr;
        if (warnings) {
          warnings->push_back("publication number '" + p.publn_nr + "' of appln " +
                              std::to_string(member) +
                              " is shorter than 7 characters; used whole");
        }
      }
      rows.push_back({member, p.publn_nr, std::move(external)});
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

}  // namespace patstat::oracle
