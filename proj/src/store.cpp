#include "patstat/store.hpp"

#include "patstat/errors.hpp"

namespace patstat {

namespace {

template <typename Key>
const std::pair<Key, std::uint32_t>* find_unique(
    const std::vector<std::pair<Key, std::uint32_t>>& index, Key key) {
  auto it = std::lower_bound(index.begin(), index.end(),
                             std::pair<Key, std::uint32_t>(key, 0));
  if (it == index.end() || it->first != key) return nullptr;
  return &*it;
}

template <typename Key>
void sort_unique_or_throw(std::vector<std::pair<Key, std::uint32_t>>& index,
                          const char* key_kind) {
  std::sort(index.begin(), index.end());
  for (std::size_t i = 1; i < index.size(); ++i) {
    if (index[i].first == index[i - 1].first) {
      throw DuplicateKeyError(key_kind, static_cast<long long>(index[i].first));
    }
  }
}

}  // namespace

IndexedStore IndexedStore::build(PatstatDataset dataset) {
  IndexedStore store;
  store.ds_ = std::move(dataset);
  const PatstatDataset& ds = store.ds_;

  store.applications_by_id_.reserve(ds.applications.size());
  store.applications_by_internat_.reserve(ds.applications.size() / 4);
  for (std::uint32_t i = 0; i < ds.applications.size(); ++i) {
    const auto& a = ds.applications[i];
    store.applications_by_id_.emplace_back(a.appln_id, i);
    if (a.internat_appln_id != 0) store.applications_by_internat_.add(a.internat_appln_id, i);
  }
  sort_unique_or_throw(store.applications_by_id_, "appln_id");
  store.applications_by_internat_.finalize();

  store.publications_by_id_.reserve(ds.publications.size());
  store.publications_by_appln_.reserve(ds.publications.size());
  for (std::uint32_t i = 0; i < ds.publications.size(); ++i) {
    const auto& p = ds.publications[i];
    store.publications_by_id_.emplace_back(p.pat_publn_id, i);
    store.publications_by_appln_.add(p.appln_id, i);
  }
  sort_unique_or_throw(store.publications_by_id_, "pat_publn_id");
  store.publications_by_appln_.finalize();

  store.persons_by_id_.reserve(ds.persons.size());
  for (std::uint32_t i = 0; i < ds.persons.size(); ++i) {
    store.persons_by_id_.emplace_back(ds.persons[i].person_id, i);
  }
  sort_unique_or_throw(store.persons_by_id_, "person_id");

  store.links_by_appln_.reserve(ds.person_appln_links.size());
  for (std::uint32_t i = 0; i < ds.person_appln_links.size(); ++i) {
    store.links_by_appln_.add(ds.person_appln_links[i].appln_id, i);
  }
  store.links_by_appln_.finalize();

  store.family_members_by_family_.reserve(ds.family_memberships.size());
  store.family_row_by_appln_.reserve(ds.family_memberships.size());
  for (std::uint32_t i = 0; i < ds.family_memberships.size(); ++i) {
    const auto& f = ds.family_memberships[i];
    store.family_members_by_family_.add(f.inpadoc_family_id, i);
    store.family_row_by_appln_.emplace_back(f.appln_id, i);
  }
  store.family_members_by_family_.finalize();
  // an application belongs to one family; if the data disagrees, the first
  // row (in table order) wins and validation reports the duplicate
  std::stable_sort(store.family_row_by_appln_.begin(), store.family_row_by_appln_.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  store.family_row_by_appln_.erase(
      std::unique(store.family_row_by_appln_.begin(), store.family_row_by_appln_.end(),
                  [](const auto& a, const auto& b) { return a.first == b.first; }),
      store.family_row_by_appln_.end());

  store.claiming_applns_.reserve(ds.priority_claims.size());
  for (const auto& c : ds.priority_claims) store.claiming_applns_.push_back(c.appln_id);
  std::sort(store.claiming_applns_.begin(), store.claiming_applns_.end());
  store.claiming_applns_.erase(
      std::unique(store.claiming_applns_.begin(), store.claiming_applns_.end()),
      store.claiming_applns_.end());

  store.citations_by_cited_.reserve(ds.citations.size());
  for (std::uint32_t i = 0; i < ds.citations.size(); ++i) {
    const auto& c = ds.citations[i];
    if (c.cited_pat_publn_id != 0) store.citations_by_cited_.add(c.cited_pat_publn_id, i);
  }
  store.citations_by_cited_.finalize();

  store.ipc_by_key_.reserve(ds.ipc_assignments.size());
  for (std::uint32_t i = 0; i < ds.ipc_assignments.size(); ++i) {
    store.ipc_by_key_.emplace_back(ipc_compare_key(ds.ipc_assignments[i].ipc_class_symbol), i);
  }
  std::sort(store.ipc_by_key_.begin(), store.ipc_by_key_.end());

  return store;
}

const Application* IndexedStore::application(ApplnId id) const {
  const auto* entry = find_unique(applications_by_id_, id);
  return entry ? &ds_.applications[entry->second] : nullptr;
}

const Publication* IndexedStore::publication(PublnId id) const {
  const auto* entry = find_unique(publications_by_id_, id);
  return entry ? &ds_.publications[entry->second] : nullptr;
}

const Person* IndexedStore::person(PersonId id) const {
  const auto* entry = find_unique(persons_by_id_, id);
  return entry ? &ds_.persons[entry->second] : nullptr;
}

std::optional<FamilyId> IndexedStore::family_of(ApplnId id) const {
  const auto* entry = find_unique(family_row_by_appln_, id);
  if (!entry) return std::nullopt;
  return ds_.family_memberships[entry->second].inpadoc_family_id;
}

std::vector<std::uint32_t> IndexedStore::ipc_rows_with_prefix(std::string_view prefix) const {
  const std::string key = ipc_prefix_key(prefix);
  std::vector<std::uint32_t> rows;
  auto it = std::lower_bound(
      ipc_by_key_.begin(), ipc_by_key_.end(), key,
      [](const auto& entry, const std::string& k) { return entry.first < k; });
  for (; it != ipc_by_key_.end() && it->first.starts_with(key); ++it) {
    rows.push_back(it->second);
  }
  return rows;
}

std::optional<Date> IndexedStore::earliest_publication_date(ApplnId id) const {
  std::optional<Date> earliest;
  for (const auto& [key, row] : publications_of(id)) {
    const auto& date = ds_.publications[row].publn_date;
    if (!date) continue;
    if (!earliest || *date < *earliest) earliest = date;
  }
  return earliest;
}

}  // namespace patstat
