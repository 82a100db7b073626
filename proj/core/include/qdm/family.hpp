#pragma once

#include <cstddef>
#include <vector>

#include "qdm/bitset.hpp"
#include "qdm/lattice.hpp"

namespace qdm {

// A set of subspaces of one lattice, stored as a bitset over lattice ids.
class Family {
 public:
  Family() = default;
  explicit Family(LatticePtr lattice);

  static Family from_ids(LatticePtr lattice, const std::vector<SubspaceId>& ids);
  static Family all(LatticePtr lattice);
  static Family of_dims(LatticePtr lattice, const std::vector<int>& dims);

  const Lattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  const Bitset& bits() const { return bits_; }

  bool contains(SubspaceId id) const { return bits_.test(id); }
  void insert(SubspaceId id) { bits_.set(id); }
  void erase(SubspaceId id) { bits_.reset(id); }

  std::size_t size() const { return bits_.count(); }
  bool empty() const { return !bits_.any(); }
  // Members in increasing id order.
  std::vector<SubspaceId> ids() const;

  // -1 for the empty family.
  int min_dim() const;
  int max_dim() const;
  Family with_dim(int k) const;

  // {image[id] : id in this}.
  Family mapped(const std::vector<SubspaceId>& image) const;

  Family& operator|=(const Family& other);
  Family& operator&=(const Family& other);
  bool subset_of(const Family& other) const { return bits_.subset_of(other.bits_); }

  bool operator==(const Family& other) const;

 private:
  LatticePtr lattice_;
  Bitset bits_;
};

// Exchange tests shared by the axiom checkers. Both quantify over the whole
// ambient space.
//
// True iff a + x is in f for every point x not inside the hyperplane z.
bool extensions_outside_in(const Family& f, SubspaceId a, SubspaceId z);
// True iff a meet h is in f for every hyperplane h not containing the point z.
bool cuts_avoiding_in(const Family& f, SubspaceId a, SubspaceId z);

}  // namespace qdm
