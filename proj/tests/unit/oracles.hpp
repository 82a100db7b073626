#pragma once

// Brute-force reference implementations. Nothing here uses the library's
// lattice tables, echelon forms or field tables: subspaces are explicit
// sets of vectors and field arithmetic is schoolbook polynomial arithmetic.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "qdm/lattice.hpp"

namespace oracle {

// GF(p^e) with elements encoded as sum c_i p^i; reduction by the given monic
// modulus (constant term first).
class PolyField {
 public:
  PolyField(std::uint32_t p, std::vector<std::uint32_t> modulus) : p_(p), mod_(std::move(modulus)) {
    e_ = static_cast<std::uint32_t>(mod_.empty() ? 1 : mod_.size() - 1);
    order_ = 1;
    for (std::uint32_t i = 0; i < e_; ++i) order_ *= p_;
  }

  std::uint32_t order() const { return order_; }

  std::vector<std::uint32_t> digits(std::uint32_t a) const {
    std::vector<std::uint32_t> d(e_);
    for (auto& x : d) {
      x = a % p_;
      a /= p_;
    }
    return d;
  }
  std::uint32_t pack(const std::vector<std::uint32_t>& d) const {
    std::uint32_t a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p_ + d[i];
    return a;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto x = digits(a), y = digits(b);
    for (std::uint32_t i = 0; i < e_; ++i) x[i] = (x[i] + y[i]) % p_;
    return pack(x);
  }
  std::uint32_t neg(std::uint32_t a) const {
    auto x = digits(a);
    for (auto& c : x) c = (p_ - c) % p_;
    return pack(x);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (e_ == 1) return (a * b) % p_;
    auto x = digits(a), y = digits(b);
    std::vector<std::uint32_t> prod(2 * e_ - 1, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
      for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    }
    for (std::size_t top = prod.size(); top-- > e_;) {
      const std::uint32_t c = prod[top];
      if (!c) continue;
      for (std::uint32_t k = 0; k <= e_; ++k) {
        prod[top - e_ + k] = (prod[top - e_ + k] + (p_ - c) * mod_[k]) % p_;
      }
    }
    prod.resize(e_);
    return pack(prod);
  }

 private:
  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t order_;
  std::vector<std::uint32_t> mod_;
};

// Vectors of F_q^n over a prime q as base-q integers, coordinate 0 most
// significant; a subspace is the sorted list of all its vectors.
using Space = std::vector<std::uint64_t>;

struct PrimeSpace {
  std::uint32_t q;
  int n;

  std::uint64_t size() const {
    std::uint64_t s = 1;
    for (int i = 0; i < n; ++i) s *= q;
    return s;
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t out = 0, place = 1;
    for (int i = 0; i < n; ++i) {
      out += ((a % q + b % q) % q) * place;
      a /= q;
      b /= q;
      place *= q;
    }
    return out;
  }
  std::uint64_t scale(std::uint64_t a, std::uint32_t c) const {
    std::uint64_t out = 0, place = 1;
    for (int i = 0; i < n; ++i) {
      out += ((a % q) * c % q) * place;
      a /= q;
      place *= q;
    }
    return out;
  }
  Space span(const std::vector<std::uint64_t>& gens) const {
    std::set<std::uint64_t> s{0};
    for (std::uint64_t g : gens) {
      std::set<std::uint64_t> next;
      for (std::uint64_t v : s) {
        for (std::uint32_t c = 0; c < q; ++c) next.insert(add(v, scale(g, c)));
      }
      s = std::move(next);
    }
    return {s.begin(), s.end()};
  }
  int dim(const Space& s) const {
    int d = 0;
    for (std::uint64_t k = 1; k < s.size(); k *= q) ++d;
    return d;
  }
  Space sum(const Space& a, const Space& b) const {
    std::vector<std::uint64_t> g(a.begin(), a.end());
    g.insert(g.end(), b.begin(), b.end());
    return span(g);
  }
  Space meet(const Space& a, const Space& b) const {
    Space out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }
  static bool inside(const Space& inner, const Space& outer) {
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
  }

  // Every subspace, grown one vector at a time.
  std::vector<Space> all_subspaces() const {
    std::set<Space> seen{Space{0}};
    std::vector<Space> frontier{Space{0}};
    std::vector<Space> out{Space{0}};
    while (!frontier.empty()) {
      std::vector<Space> next;
      for (const Space& s : frontier) {
        for (std::uint64_t v = 1; v < size(); ++v) {
          if (std::binary_search(s.begin(), s.end(), v)) continue;
          Space t = sum(s, Space{0, v});
          if (seen.insert(t).second) {
            next.push_back(t);
            out.push_back(t);
          }
        }
      }
      frontier = std::move(next);
    }
    return out;
  }

  Space of_lattice(const qdm::Lattice& lat, qdm::SubspaceId id) const {
    const auto rows = lat.rows(id);
    return span({rows.begin(), rows.end()});
  }
};

// The exchange axioms evaluated straight from their statements on explicit
// vector sets. Returns the number of failing (X, Y, A) triples for the pair
// of axioms (F1, F2) or (F3, F4).
class ExchangeOracle {
 public:
  ExchangeOracle(PrimeSpace space) : sp_(space), subs_(space.all_subspaces()) {
    for (const Space& s : subs_) {
      if (sp_.dim(s) == 1) points_.push_back(s);
      if (sp_.dim(s) == sp_.n - 1) hyperplanes_.push_back(s);
    }
  }

  const std::vector<Space>& subspaces() const { return subs_; }

  std::size_t violations(const std::set<Space>& f, bool strong) const {
    std::size_t bad = 0;
    for (const Space& x : f) {
      for (const Space& y : f) {
        for (const Space& a : subs_) {
          const int da = sp_.dim(a), dx = sp_.dim(x);
          if (da == dx - 1 && PrimeSpace::inside(a, x)) {
            const bool alt = strong ? f.count(a) > 0 : ii(f, a);
            if (!(alt || i(f, y, a))) ++bad;
          }
          if (da == dx + 1 && PrimeSpace::inside(x, a)) {
            const bool alt = strong ? f.count(a) > 0 : iv(f, a);
            if (!(alt || iii(f, y, a))) ++bad;
          }
        }
      }
    }
    return bad;
  }

 private:
  bool i(const std::set<Space>& f, const Space& y, const Space& a) const {
    for (const Space& z : hyperplanes_) {
      if (!PrimeSpace::inside(a, z) || PrimeSpace::inside(y, z)) continue;
      bool all = true;
      for (const Space& x : points_) {
        if (!PrimeSpace::inside(x, z) && !f.count(sp_.sum(a, x))) all = false;
      }
      if (all) return true;
    }
    return false;
  }
  bool ii(const std::set<Space>& f, const Space& a) const {
    for (const Space& z : hyperplanes_) {
      if (f.count(sp_.meet(z, a))) return true;
    }
    return false;
  }
  bool iii(const std::set<Space>& f, const Space& y, const Space& a) const {
    for (const Space& z : points_) {
      if (!PrimeSpace::inside(z, a) || PrimeSpace::inside(z, y)) continue;
      bool all = true;
      for (const Space& h : hyperplanes_) {
        if (!PrimeSpace::inside(z, h) && !f.count(sp_.meet(a, h))) all = false;
      }
      if (all) return true;
    }
    return false;
  }
  bool iv(const std::set<Space>& f, const Space& a) const {
    for (const Space& z : points_) {
      if (f.count(sp_.sum(a, z))) return true;
    }
    return false;
  }

  PrimeSpace sp_;
  std::vector<Space> subs_;
  std::vector<Space> points_;
  std::vector<Space> hyperplanes_;
};

// r(A) = max over bases B of dim(A meet B).
inline std::map<Space, int> ranks_from_bases(const PrimeSpace& sp, const std::vector<Space>& all,
                                             const std::vector<Space>& bases) {
  std::map<Space, int> r;
  for (const Space& a : all) {
    int best = 0;
    for (const Space& b : bases) best = std::max(best, sp.dim(sp.meet(a, b)));
    r[a] = best;
  }
  return r;
}

// R1-R3 over every subspace and every pair.
inline bool satisfies_rank_axioms(const PrimeSpace& sp, const std::vector<Space>& all, const std::map<Space, int>& r) {
  for (const Space& a : all) {
    if (r.at(a) < 0 || r.at(a) > sp.dim(a)) return false;
  }
  for (const Space& a : all) {
    for (const Space& b : all) {
      if (PrimeSpace::inside(a, b) && r.at(a) > r.at(b)) return false;
      if (r.at(sp.sum(a, b)) + r.at(sp.meet(a, b)) > r.at(a) + r.at(b)) return false;
    }
  }
  return true;
}

}  // namespace oracle
