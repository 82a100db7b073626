#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "qdm/bitset.hpp"
#include "qdm/subspace.hpp"

namespace qdm {

using SubspaceId = std::uint32_t;
using IdRange = std::ranges::iota_view<SubspaceId, SubspaceId>;

struct LatticeOptions {
  // Refuse to materialize more subspaces than this.
  std::size_t cap = 1'000'000;
  // Containment bitsets (two N x N bit tables) up to this size.
  std::size_t relation_table_cap = 4096;
  // Dense join/meet tables (two N x N id tables) up to this size.
  std::size_t join_table_cap = 1024;
};

// Every subspace of F_q^n, numbered by dimension and then lexicographically
// by canonical rows. Id 0 is the zero space and id size()-1 is E. Immutable
// after build; all queries are safe from concurrent readers.
class Lattice {
 public:
  static std::shared_ptr<const Lattice> build(FieldPtr field, int n, LatticeOptions options = {});
  static std::size_t subspace_count(int n, std::uint64_t q);

  const FieldPtr& field() const { return field_; }
  std::uint32_t q() const { return field_->order(); }
  int n() const { return n_; }
  std::size_t size() const { return dims_.size(); }

  int dim(SubspaceId id) const { return dims_[id]; }
  SubspaceId zero() const { return 0; }
  SubspaceId full() const { return static_cast<SubspaceId>(size() - 1); }
  IdRange of_dim(int k) const;
  IdRange all() const { return {0, static_cast<SubspaceId>(size())}; }
  IdRange points() const { return of_dim(1); }
  IdRange hyperplanes() const { return of_dim(n_ - 1); }

  std::span<const PackedVec> rows(SubspaceId id) const;
  Subspace subspace(SubspaceId id) const;
  std::string render(SubspaceId id) const { return subspace(id).to_string(); }

  std::optional<SubspaceId> find(std::span<const PackedVec> canonical_rows) const;
  // Throws AmbientMismatch for a subspace of a different space.
  SubspaceId id_of(const Subspace& s) const;
  SubspaceId span_of(std::vector<PackedVec> vectors) const;

  bool contains(SubspaceId outer, SubspaceId inner) const;
  SubspaceId join(SubspaceId a, SubspaceId b) const;
  SubspaceId meet(SubspaceId a, SubspaceId b) const;

  // Codimension-1 subspaces of id, and the subspaces covering id.
  std::span<const SubspaceId> lower_covers(SubspaceId id) const;
  std::span<const SubspaceId> upper_covers(SubspaceId id) const;

  bool has_relation_tables() const { return !down_.empty(); }
  // Subspaces of id / superspaces of id; need relation tables.
  const Bitset& down_set(SubspaceId id) const { return down_[id]; }
  const Bitset& up_set(SubspaceId id) const { return up_[id]; }

  std::vector<SubspaceId> perp_map(const BilinearForm& form) const;

  bool same_shape(const Lattice& other) const {
    return n_ == other.n_ && same_field(field_, other.field_);
  }

 private:
  Lattice() = default;

  FieldPtr field_;
  int n_ = 0;
  std::vector<int> dims_;
  std::vector<std::size_t> dim_begin_;
  std::vector<PackedVec> rows_;
  std::vector<std::size_t> row_offset_;
  std::unordered_map<std::string, SubspaceId> index_;
  std::vector<SubspaceId> lower_;
  std::vector<std::size_t> lower_offset_;
  std::vector<SubspaceId> upper_;
  std::vector<std::size_t> upper_offset_;
  std::vector<Bitset> down_;
  std::vector<Bitset> up_;
  std::vector<SubspaceId> join_;
  std::vector<SubspaceId> meet_;
};

using LatticePtr = std::shared_ptr<const Lattice>;

// The ground space E = F_q^n: its subspace lattice together with the fixed
// bilinear form and the induced perp permutation.
class Ambient {
 public:
  static std::shared_ptr<const Ambient> make(LatticePtr lattice, BilinearForm form);
  // Identity form.
  static std::shared_ptr<const Ambient> make(LatticePtr lattice);
  static std::shared_ptr<const Ambient> make(FieldPtr field, int n, LatticeOptions options = {});

  const Lattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  const BilinearForm& form() const { return form_; }
  SubspaceId perp(SubspaceId id) const { return perp_[id]; }
  const std::vector<SubspaceId>& perp_table() const { return perp_; }
  int n() const { return lattice_->n(); }
  std::size_t size() const { return lattice_->size(); }

 private:
  Ambient(LatticePtr lattice, BilinearForm form);

  LatticePtr lattice_;
  BilinearForm form_;
  std::vector<SubspaceId> perp_;
};

using AmbientPtr = std::shared_ptr<const Ambient>;

}  // namespace qdm
