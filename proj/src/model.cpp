#include "patstat/model.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace patstat {

std::uint64_t PatstatDataset::total_rows() const {
  return applications.size() + publications.size() + persons.size() +
         person_appln_links.size() + ipc_assignments.size() + priority_claims.size() +
         family_memberships.size() + citations.size();
}

bool PatstatDataset::same_rows(const PatstatDataset& other) const {
  return applications == other.applications && publications == other.publications &&
         persons == other.persons && person_appln_links == other.person_appln_links &&
         ipc_assignments == other.ipc_assignments &&
         priority_claims == other.priority_claims &&
         family_memberships == other.family_memberships && citations == other.citations;
}

std::string CohortProvenance::describe() const {
  if (kind == Kind::explicit_list) return "explicit list";
  std::ostringstream os;
  os << "ipc_prefix=" << ipc_prefix << " filing_year=" << filing_year << " kinds=";
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    if (i) os << ',';
    os << kinds[i];
  }
  return os.str();
}

Cohort Cohort::from_ids(const std::vector<ApplnId>& ids) {
  Cohort cohort;
  cohort.provenance.kind = CohortProvenance::Kind::explicit_list;
  std::unordered_set<ApplnId> seen;
  seen.reserve(ids.size());
  for (ApplnId id : ids) {
    if (seen.insert(id).second) cohort.members.push_back(id);
  }
  return cohort;
}

std::string normalize_code(std::string_view raw) {
  std::size_t b = 0, e = raw.size();
  while (b < e && std::isspace(static_cast<unsigned char>(raw[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(raw[e - 1]))) --e;
  std::string out;
  out.reserve(e - b);
  for (std::size_t i = b; i < e; ++i) {
    out += static_cast<char>(std::toupper(static_cast<unsigned char>(raw[i])));
  }
  return out;
}

std::string ipc_compare_key(std::string_view symbol) {
  std::string out;
  out.reserve(symbol.size());
  for (char c : symbol) {
    out += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string ipc_prefix_key(std::string_view prefix) {
  std::string key = ipc_compare_key(prefix);
  while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
  return key;
}

std::uint64_t ValidationReport::violation_count() const {
  std::uint64_t n = 0;
  for (const auto& issue : issues) {
    if (issue.violation) n += issue.count;
  }
  return n;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  if (issues.empty()) {
    os << "validation: clean (0 violations)\n";
    return os.str();
  }
  for (const auto& issue : issues) {
    os << (issue.violation ? "[violation] " : "[info]      ") << issue.table << ": "
       << issue.check << " count=" << issue.count;
    if (!issue.sample_keys.empty()) {
      os << " samples=";
      for (std::size_t i = 0; i < issue.sample_keys.size(); ++i) {
        if (i) os << ',';
        os << issue.sample_keys[i];
      }
    }
    os << '\n';
  }
  os << "total violations: " << violation_count() << '\n';
  return os.str();
}

namespace {

class IssueBuilder {
 public:
  IssueBuilder(std::string table, std::string check, bool violation)
      : issue_{std::move(table), std::move(check), violation, 0, {}} {}

  void hit(long long key) {
    ++issue_.count;
    if (issue_.sample_keys.size() < ValidationReport::kMaxSampleKeys) {
      issue_.sample_keys.push_back(key);
    }
  }

  void emit(ValidationReport& report) {
    if (issue_.count > 0) report.issues.push_back(std::move(issue_));
  }

 private:
  ValidationIssue issue_;
};

bool is_two_upper(const std::string& code) {
  return code.size() == 2 && std::isupper(static_cast<unsigned char>(code[0])) &&
         std::isupper(static_cast<unsigned char>(code[1]));
}

}  // namespace

ValidationReport validate_dataset(const PatstatDataset& ds) {
  ValidationReport report;

  std::unordered_set<ApplnId> appln_ids;
  appln_ids.reserve(ds.applications.size());
  std::unordered_set<PublnId> publn_ids;
  publn_ids.reserve(ds.publications.size());
  std::unordered_set<PersonId> person_ids;
  person_ids.reserve(ds.persons.size());

  {
    IssueBuilder dup("tls201_appln", "duplicate appln_id", true);
    IssueBuilder auth("tls201_appln", "appln_auth not a 2-char uppercase code", true);
    IssueBuilder missing("tls201_appln", "missing appln_filing_date", false);
    for (const auto& a : ds.applications) {
      if (!appln_ids.insert(a.appln_id).second) dup.hit(a.appln_id);
      if (!is_two_upper(a.appln_auth)) auth.hit(a.appln_id);
      if (!a.appln_filing_date) missing.hit(a.appln_id);
    }
    IssueBuilder dangle("tls201_appln", "dangling internat_appln_id", true);
    for (const auto& a : ds.applications) {
      if (a.internat_appln_id != 0 && !appln_ids.contains(a.internat_appln_id)) {
        dangle.hit(a.appln_id);
      }
    }
    dup.emit(report);
    auth.emit(report);
    dangle.emit(report);
    missing.emit(report);
  }

  {
    IssueBuilder dup("tls211_pat_publn", "duplicate pat_publn_id", true);
    IssueBuilder dangle("tls211_pat_publn", "dangling appln_id", true);
    IssueBuilder missing("tls211_pat_publn", "missing publn_date", false);
    for (const auto& p : ds.publications) {
      if (!publn_ids.insert(p.pat_publn_id).second) dup.hit(p.pat_publn_id);
      if (!appln_ids.contains(p.appln_id)) dangle.hit(p.pat_publn_id);
      if (!p.publn_date) missing.hit(p.pat_publn_id);
    }
    dup.emit(report);
    dangle.emit(report);
    missing.emit(report);
  }

  {
    IssueBuilder dup("tls206_person", "duplicate person_id", true);
    IssueBuilder ctry("tls206_person", "person_ctry_code not a 2-char uppercase code", true);
    IssueBuilder missing("tls206_person", "missing person_ctry_code", false);
    for (const auto& p : ds.persons) {
      if (!person_ids.insert(p.person_id).second) dup.hit(p.person_id);
      if (p.person_ctry_code) {
        if (!is_two_upper(*p.person_ctry_code)) ctry.hit(p.person_id);
      } else {
        missing.hit(p.person_id);
      }
    }
    dup.emit(report);
    ctry.emit(report);
    missing.emit(report);
  }

  {
    IssueBuilder dup("tls207_pers_appln", "duplicate (person_id, appln_id) pair", true);
    IssueBuilder dangle_p("tls207_pers_appln", "dangling person_id", true);
    IssueBuilder dangle_a("tls207_pers_appln", "dangling appln_id", true);
    IssueBuilder seq("tls207_pers_appln", "negative sequence number", true);
    std::vector<std::pair<PersonId, ApplnId>> pairs;
    pairs.reserve(ds.person_appln_links.size());
    for (const auto& l : ds.person_appln_links) {
      pairs.emplace_back(l.person_id, l.appln_id);
      if (!person_ids.contains(l.person_id)) dangle_p.hit(l.person_id);
      if (!appln_ids.contains(l.appln_id)) dangle_a.hit(l.appln_id);
      if (l.invt_seq_nr < 0 || l.applt_seq_nr < 0) seq.hit(l.person_id);
    }
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 1; i < pairs.size(); ++i) {
      if (pairs[i] == pairs[i - 1]) dup.hit(pairs[i].first);
    }
    dup.emit(report);
    dangle_p.emit(report);
    dangle_a.emit(report);
    seq.emit(report);
  }

  {
    IssueBuilder dangle("tls209_appln_ipc", "dangling appln_id", true);
    IssueBuilder sym("tls209_appln_ipc", "empty ipc_class_symbol", true);
    for (const auto& row : ds.ipc_assignments) {
      if (!appln_ids.contains(row.appln_id)) dangle.hit(row.appln_id);
      if (row.ipc_class_symbol.empty()) sym.hit(row.appln_id);
    }
    dangle.emit(report);
    sym.emit(report);
  }

  {
    IssueBuilder dup("tls204_appln_prior", "duplicate (appln_id, prior_appln_id) pair", true);
    IssueBuilder dangle_a("tls204_appln_prior", "dangling appln_id", true);
    IssueBuilder dangle_p("tls204_appln_prior", "dangling prior_appln_id", true);
    std::vector<std::pair<ApplnId, ApplnId>> pairs;
    pairs.reserve(ds.priority_claims.size());
    for (const auto& c : ds.priority_claims) {
      pairs.emplace_back(c.appln_id, c.prior_appln_id);
      if (!appln_ids.contains(c.appln_id)) dangle_a.hit(c.appln_id);
      if (!appln_ids.contains(c.prior_appln_id)) dangle_p.hit(c.prior_appln_id);
    }
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 1; i < pairs.size(); ++i) {
      if (pairs[i] == pairs[i - 1]) dup.hit(pairs[i].first);
    }
    dup.emit(report);
    dangle_a.emit(report);
    dangle_p.emit(report);
  }

  {
    IssueBuilder dup("tls219_inpadoc_fam", "appln_id in more than one family row", true);
    IssueBuilder dangle("tls219_inpadoc_fam", "dangling appln_id", true);
    std::unordered_set<ApplnId> seen;
    seen.reserve(ds.family_memberships.size());
    for (const auto& f : ds.family_memberships) {
      if (!seen.insert(f.appln_id).second) dup.hit(f.appln_id);
      if (!appln_ids.contains(f.appln_id)) dangle.hit(f.appln_id);
    }
    dup.emit(report);
    dangle.emit(report);
  }

  {
    IssueBuilder citing_zero("tls212_citation", "pat_publn_id not positive", true);
    IssueBuilder dangle_citing("tls212_citation", "dangling pat_publn_id", true);
    IssueBuilder dangle_cited("tls212_citation", "dangling cited_pat_publn_id", true);
    IssueBuilder npl("tls212_citation", "non-patent citation (cited_pat_publn_id = 0)", false);
    for (const auto& c : ds.citations) {
      if (c.pat_publn_id <= 0) {
        citing_zero.hit(c.pat_publn_id);
      } else if (!publn_ids.contains(c.pat_publn_id)) {
        dangle_citing.hit(c.pat_publn_id);
      }
      if (c.cited_pat_publn_id == 0) {
        npl.hit(c.pat_publn_id);
      } else if (!publn_ids.contains(c.cited_pat_publn_id)) {
        dangle_cited.hit(c.cited_pat_publn_id);
      }
    }
    citing_zero.emit(report);
    dangle_citing.emit(report);
    dangle_cited.emit(report);
    npl.emit(report);
  }

  return report;
}

}  // namespace patstat
