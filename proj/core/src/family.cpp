#include "qdm/family.hpp"

#include "qdm/error.hpp"

namespace qdm {

Family::Family(LatticePtr lattice) : lattice_(std::move(lattice)), bits_(lattice_->size()) {}

Family Family::from_ids(LatticePtr lattice, const std::vector<SubspaceId>& ids) {
  Family f(std::move(lattice));
  for (SubspaceId id : ids) {
    if (id >= f.lattice().size()) fail(Errc::kAmbientMismatch, "subspace id out of range");
    f.insert(id);
  }
  return f;
}

Family Family::all(LatticePtr lattice) {
  Family f(std::move(lattice));
  for (SubspaceId id : f.lattice().all()) f.insert(id);
  return f;
}

Family Family::of_dims(LatticePtr lattice, const std::vector<int>& dims) {
  Family f(std::move(lattice));
  for (int k : dims) {
    for (SubspaceId id : f.lattice().of_dim(k)) f.insert(id);
  }
  return f;
}

std::vector<SubspaceId> Family::ids() const {
  std::vector<SubspaceId> out;
  for (std::size_t i = bits_.find_first(); i != Bitset::npos; i = bits_.find_next(i)) {
    out.push_back(static_cast<SubspaceId>(i));
  }
  return out;
}

int Family::min_dim() const {
  const std::size_t i = bits_.find_first();
  return i == Bitset::npos ? -1 : lattice_->dim(static_cast<SubspaceId>(i));
}

int Family::max_dim() const {
  const std::size_t i = bits_.find_last();
  return i == Bitset::npos ? -1 : lattice_->dim(static_cast<SubspaceId>(i));
}

Family Family::with_dim(int k) const {
  Family out(lattice_);
  for (SubspaceId id : lattice_->of_dim(k)) {
    if (contains(id)) out.insert(id);
  }
  return out;
}

Family Family::mapped(const std::vector<SubspaceId>& image) const {
  Family out(lattice_);
  for (std::size_t i = bits_.find_first(); i != Bitset::npos; i = bits_.find_next(i)) out.insert(image[i]);
  return out;
}

Family& Family::operator|=(const Family& other) {
  if (!lattice_->same_shape(other.lattice())) fail(Errc::kLatticeMismatch, "families on different lattices");
  bits_ |= other.bits_;
  return *this;
}

Family& Family::operator&=(const Family& other) {
  if (!lattice_->same_shape(other.lattice())) fail(Errc::kLatticeMismatch, "families on different lattices");
  bits_ &= other.bits_;
  return *this;
}

bool Family::operator==(const Family& other) const {
  if (!lattice_ || !other.lattice_) return lattice_ == other.lattice_;
  return lattice_->same_shape(*other.lattice_) && bits_ == other.bits_;
}

bool extensions_outside_in(const Family& f, SubspaceId a, SubspaceId z) {
  const Lattice& lat = f.lattice();
  for (SubspaceId x : lat.points()) {
    if (lat.contains(z, x)) continue;
    if (!f.contains(lat.join(a, x))) return false;
  }
  return true;
}

bool cuts_avoiding_in(const Family& f, SubspaceId a, SubspaceId z) {
  const Lattice& lat = f.lattice();
  for (SubspaceId h : lat.hyperplanes()) {
    if (lat.contains(h, z)) continue;
    if (!f.contains(lat.meet(a, h))) return false;
  }
  return true;
}

}  // namespace qdm
