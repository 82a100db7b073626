#include "qdm/lattice.hpp"

#include <cstring>

#include "qdm/error.hpp"

namespace qdm {
namespace {

std::string key_of(std::span<const PackedVec> rows) {
  std::string key(rows.size() * sizeof(PackedVec), '\0');
  if (!rows.empty()) std::memcpy(key.data(), rows.data(), key.size());
  return key;
}

}  // namespace

std::size_t Lattice::subspace_count(int n, std::uint64_t q) {
  std::size_t total = 0;
  for (int k = 0; k <= n; ++k) total += gaussian_binomial(n, k, q);
  return total;
}

std::shared_ptr<const Lattice> Lattice::build(FieldPtr field, int n, LatticeOptions options) {
  if (n < 0) fail(Errc::kInvalidDimension, "negative ambient dimension");
  const std::uint32_t q = field->order();
  if (n > max_packed_dim(q)) fail(Errc::kCapExceeded, "ambient dimension too large");
  const std::size_t total = subspace_count(n, q);
  if (total > options.cap) {
    fail(Errc::kCapExceeded, "lattice of F_" + std::to_string(q) + "^" + std::to_string(n) + " has " +
                                 std::to_string(total) + " subspaces, cap is " + std::to_string(options.cap));
  }

  std::shared_ptr<Lattice> lat(new Lattice());
  lat->field_ = field;
  lat->n_ = n;
  lat->dims_.reserve(total);
  lat->row_offset_.reserve(total + 1);
  lat->row_offset_.push_back(0);
  lat->index_.reserve(total);
  for (int k = 0; k <= n; ++k) {
    lat->dim_begin_.push_back(lat->dims_.size());
    for (const Subspace& s : enumerate_subspaces(field, n, k)) {
      const auto id = static_cast<SubspaceId>(lat->dims_.size());
      lat->dims_.push_back(k);
      lat->rows_.insert(lat->rows_.end(), s.packed_rows().begin(), s.packed_rows().end());
      lat->row_offset_.push_back(lat->rows_.size());
      lat->index_.emplace(key_of(s.packed_rows()), id);
    }
  }
  lat->dim_begin_.push_back(lat->dims_.size());

  // Lower covers: images of the hyperplanes of F_q^k under each k-dim basis.
  VectorCodec codec(q, n);
  lat->lower_offset_.assign(total + 1, 0);
  std::vector<std::vector<SubspaceId>> lower(total);
  for (int k = 1; k <= n; ++k) {
    std::vector<MatGF> coeffs;
    for (const Subspace& h : enumerate_subspaces(field, k, k - 1)) coeffs.push_back(h.basis());
    for (SubspaceId id : lat->of_dim(k)) {
      auto basis_rows = lat->rows(id);
      std::vector<std::vector<Elem>> basis;
      if (q != 2) {
        for (PackedVec r : basis_rows) basis.push_back(codec.decode(r));
      }
      auto& out = lower[id];
      out.reserve(coeffs.size());
      for (const MatGF& c : coeffs) {
        std::vector<PackedVec> combo;
        combo.reserve(c.rows());
        for (std::size_t i = 0; i < c.rows(); ++i) {
          if (q == 2) {
            PackedVec v = 0;
            for (int j = 0; j < k; ++j) {
              if (c(i, static_cast<std::size_t>(j))) v ^= basis_rows[static_cast<std::size_t>(j)];
            }
            combo.push_back(v);
          } else {
            std::vector<Elem> v(static_cast<std::size_t>(n), 0);
            for (int j = 0; j < k; ++j) {
              const Elem cj = c(i, static_cast<std::size_t>(j));
              if (cj == 0) continue;
              for (int t = 0; t < n; ++t) {
                v[static_cast<std::size_t>(t)] = field->add(v[static_cast<std::size_t>(t)],
                                                            field->mul(cj, basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)]));
              }
            }
            combo.push_back(codec.encode(v));
          }
        }
        out.push_back(lat->span_of(std::move(combo)));
      }
      std::sort(out.begin(), out.end());
    }
  }
  std::vector<std::vector<SubspaceId>> upper(total);
  for (SubspaceId id = 0; id < total; ++id) {
    for (SubspaceId c : lower[id]) upper[c].push_back(id);
  }
  auto flatten = [total](std::vector<std::vector<SubspaceId>>& lists, std::vector<SubspaceId>& flat,
                         std::vector<std::size_t>& offsets) {
    offsets.assign(total + 1, 0);
    for (std::size_t i = 0; i < total; ++i) {
      offsets[i + 1] = offsets[i] + lists[i].size();
      flat.insert(flat.end(), lists[i].begin(), lists[i].end());
      std::vector<SubspaceId>().swap(lists[i]);
    }
  };
  flatten(lower, lat->lower_, lat->lower_offset_);
  flatten(upper, lat->upper_, lat->upper_offset_);

  if (total <= options.relation_table_cap) {
    lat->down_.assign(total, Bitset(total));
    lat->up_.assign(total, Bitset(total));
    for (SubspaceId id = 0; id < total; ++id) {
      lat->down_[id].set(id);
      for (SubspaceId c : lat->lower_covers(id)) lat->down_[id] |= lat->down_[c];
    }
    for (SubspaceId id = static_cast<SubspaceId>(total); id-- > 0;) {
      lat->up_[id].set(id);
      for (SubspaceId c : lat->upper_covers(id)) lat->up_[id] |= lat->up_[c];
    }
    if (total <= options.join_table_cap) {
      lat->join_.resize(total * total);
      lat->meet_.resize(total * total);
      for (SubspaceId a = 0; a < total; ++a) {
        for (SubspaceId b = a; b < total; ++b) {
          const auto j = static_cast<SubspaceId>((lat->up_[a] & lat->up_[b]).find_first());
          const auto m = static_cast<SubspaceId>((lat->down_[a] & lat->down_[b]).find_last());
          lat->join_[a * total + b] = lat->join_[b * total + a] = j;
          lat->meet_[a * total + b] = lat->meet_[b * total + a] = m;
        }
      }
    }
  }
  return lat;
}

IdRange Lattice::of_dim(int k) const {
  if (k < 0 || k > n_) return {0, 0};
  return {static_cast<SubspaceId>(dim_begin_[static_cast<std::size_t>(k)]),
          static_cast<SubspaceId>(dim_begin_[static_cast<std::size_t>(k) + 1])};
}

std::span<const PackedVec> Lattice::rows(SubspaceId id) const {
  return {rows_.data() + row_offset_[id], row_offset_[id + 1] - row_offset_[id]};
}

Subspace Lattice::subspace(SubspaceId id) const {
  auto r = rows(id);
  return Subspace::from_canonical(field_, n_, std::vector<PackedVec>(r.begin(), r.end()));
}

std::optional<SubspaceId> Lattice::find(std::span<const PackedVec> canonical_rows) const {
  auto it = index_.find(key_of(canonical_rows));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SubspaceId Lattice::id_of(const Subspace& s) const {
  if (s.ambient_dim() != n_ || !same_field(s.field(), field_)) {
    fail(Errc::kAmbientMismatch, "subspace does not belong to this lattice");
  }
  auto id = find(s.packed_rows());
  if (!id) fail(Errc::kInternalInconsistency, "canonical subspace missing from lattice");
  return *id;
}

SubspaceId Lattice::span_of(std::vector<PackedVec> vectors) const {
  return id_of(Subspace::span_packed(field_, n_, std::move(vectors)));
}

bool Lattice::contains(SubspaceId outer, SubspaceId inner) const {
  if (!down_.empty()) return down_[outer].test(inner);
  if (dims_[inner] > dims_[outer]) return false;
  if (q() == 2) {
    auto basis = rows(outer);
    for (PackedVec v : rows(inner)) {
      if (gf2::reduce(basis, n_, v) != 0) return false;
    }
    return true;
  }
  return qdm::contains(subspace(outer), subspace(inner));
}

SubspaceId Lattice::join(SubspaceId a, SubspaceId b) const {
  if (!join_.empty()) return join_[a * size() + b];
  if (!up_.empty()) return static_cast<SubspaceId>((up_[a] & up_[b]).find_first());
  auto ra = rows(a), rb = rows(b);
  std::vector<PackedVec> v(ra.begin(), ra.end());
  v.insert(v.end(), rb.begin(), rb.end());
  return span_of(std::move(v));
}

SubspaceId Lattice::meet(SubspaceId a, SubspaceId b) const {
  if (!meet_.empty()) return meet_[a * size() + b];
  if (!down_.empty()) return static_cast<SubspaceId>((down_[a] & down_[b]).find_last());
  return id_of(intersect(subspace(a), subspace(b)));
}

std::span<const SubspaceId> Lattice::lower_covers(SubspaceId id) const {
  return {lower_.data() + lower_offset_[id], lower_offset_[id + 1] - lower_offset_[id]};
}

std::span<const SubspaceId> Lattice::upper_covers(SubspaceId id) const {
  return {upper_.data() + upper_offset_[id], upper_offset_[id + 1] - upper_offset_[id]};
}

std::vector<SubspaceId> Lattice::perp_map(const BilinearForm& form) const {
  std::vector<SubspaceId> out(size());
  for (SubspaceId id = 0; id < size(); ++id) out[id] = id_of(perp(subspace(id), form));
  return out;
}

Ambient::Ambient(LatticePtr lattice, BilinearForm form)
    : lattice_(std::move(lattice)), form_(std::move(form)), perp_(lattice_->perp_map(form_)) {}

std::shared_ptr<const Ambient> Ambient::make(LatticePtr lattice, BilinearForm form) {
  if (form.n() != lattice->n() || !same_field(form.gram().field(), lattice->field())) {
    fail(Errc::kAmbientMismatch, "bilinear form does not match the lattice");
  }
  return std::shared_ptr<const Ambient>(new Ambient(std::move(lattice), std::move(form)));
}

std::shared_ptr<const Ambient> Ambient::make(LatticePtr lattice) {
  BilinearForm form = BilinearForm::identity(lattice->field(), lattice->n());
  return make(std::move(lattice), std::move(form));
}

std::shared_ptr<const Ambient> Ambient::make(FieldPtr field, int n, LatticeOptions options) {
  return make(Lattice::build(std::move(field), n, options));
}

}  // namespace qdm
