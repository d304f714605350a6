#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "patstat/model.hpp"

namespace patstat {

namespace detail {

// Sorted (key -> row index) multimap over a dataset column. Lookups answer
// exactly what a linear scan of the underlying collection would, which the
// property tests check.
template <typename Key>
class GroupIndex {
 public:
  void reserve(std::size_t n) { entries_.reserve(n); }
  void add(Key key, std::uint32_t row) { entries_.emplace_back(key, row); }

  void finalize() { std::sort(entries_.begin(), entries_.end()); }

  std::span<const std::pair<Key, std::uint32_t>> at(const Key& key) const {
    auto lo = std::lower_bound(entries_.begin(), entries_.end(),
                               std::pair<Key, std::uint32_t>(key, 0));
    auto hi = lo;
    while (hi != entries_.end() && hi->first == key) ++hi;
    return {lo, hi};
  }

  bool contains(const Key& key) const { return !at(key).empty(); }

 private:
  std::vector<std::pair<Key, std::uint32_t>> entries_;
};

}  // namespace detail

// Immutable indexes over a dataset. Built once, then shared freely across
// readers; all indicator operations run against this.
class IndexedStore {
 public:
  // Takes ownership of the dataset. Throws DuplicateKeyError when appln_id,
  // pat_publn_id or person_id is not unique.
  static IndexedStore build(PatstatDataset dataset);

  const PatstatDataset& dataset() const { return ds_; }

  const Application* application(ApplnId id) const;
  const Publication* publication(PublnId id) const;
  const Person* person(PersonId id) const;

  // Row indexes into dataset().publications for one application.
  std::span<const std::pair<ApplnId, std::uint32_t>> publications_of(ApplnId id) const {
    return publications_by_appln_.at(id);
  }

  // Applications whose internat_appln_id equals id (national phase entries).
  std::span<const std::pair<ApplnId, std::uint32_t>> national_phase_children(
      ApplnId id) const {
    return applications_by_internat_.at(id);
  }

  bool has_priority_claim(ApplnId id) const {
    return std::binary_search(claiming_applns_.begin(), claiming_applns_.end(), id);
  }

  std::optional<FamilyId> family_of(ApplnId id) const;

  std::span<const std::pair<FamilyId, std::uint32_t>> family_members(FamilyId id) const {
    return family_members_by_family_.at(id);
  }

  std::span<const std::pair<ApplnId, std::uint32_t>> person_links_of(ApplnId id) const {
    return links_by_appln_.at(id);
  }

  // Citation rows whose cited_pat_publn_id equals id. Rows with a zero
  // cited id (non-patent citations) are not indexed.
  std::span<const std::pair<PublnId, std::uint32_t>> citations_of(PublnId cited) const {
    return citations_by_cited_.at(cited);
  }

  // Row indexes into dataset().ipc_assignments whose uppercased symbol
  // starts with the (uppercased, right-trimmed) prefix.
  std::vector<std::uint32_t> ipc_rows_with_prefix(std::string_view prefix) const;

  // Minimum non-missing publication date over every publication of the
  // application, regardless of authority.
  std::optional<Date> earliest_publication_date(ApplnId id) const;

 private:
  PatstatDataset ds_;

  std::vector<std::pair<ApplnId, std::uint32_t>> applications_by_id_;    // unique
  std::vector<std::pair<PublnId, std::uint32_t>> publications_by_id_;    // unique
  std::vector<std::pair<PersonId, std::uint32_t>> persons_by_id_;        // unique
  detail::GroupIndex<ApplnId> publications_by_appln_;
  detail::GroupIndex<ApplnId> applications_by_internat_;
  detail::GroupIndex<ApplnId> links_by_appln_;
  detail::GroupIndex<FamilyId> family_members_by_family_;
  detail::GroupIndex<PublnId> citations_by_cited_;
  std::vector<ApplnId> claiming_applns_;                       // sorted unique
  std::vector<std::pair<ApplnId, std::uint32_t>> family_row_by_appln_;  // first row wins
  std::vector<std::pair<std::string, std::uint32_t>> ipc_by_key_;       // sorted by key
};

// Free-function spellings of the member calls.
inline IndexedStore build_store(PatstatDataset dataset) {
  return IndexedStore::build(std::move(dataset));
}

inline std::optional<Date> earliest_publication_date(const IndexedStore& store,
                                                     ApplnId id) {
  return store.earliest_publication_date(id);
}

}  // namespace patstat
