#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace qdm {

// An element of GF(p^e), encoded as the integer sum c_i * p^i of its
// polynomial-basis coefficients (constant term first). Zero is 0, one is 1.
using Elem = std::uint32_t;

struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t e = 1;
  // Monic degree-e polynomial over Z_p, e + 1 coefficients, constant term
  // first. Empty selects the default modulus. Ignored when e == 1.
  std::vector<std::uint32_t> modulus;
};

// Largest field order the table-driven implementation accepts.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

bool is_prime(std::uint32_t p);

// Irreducibility over Z_p by trial division with every monic polynomial of
// degree <= e / 2. Coefficients constant term first; leading must be 1.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

// The irreducible monic polynomial of degree e whose coefficient sequence,
// read from the highest-degree term down, is lexicographically least.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t e);

// Immutable GF(p^e) with log/antilog multiplication tables. Shared via
// FieldPtr; safe for concurrent readers.
class Field {
 public:
  static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t e = 1);
  static std::shared_ptr<const Field> make(FieldSpec spec);
  // GF(q) for a prime power q, default modulus.
  static std::shared_ptr<const Field> of_order(std::uint32_t q);

  std::uint32_t characteristic() const { return spec_.p; }
  std::uint32_t degree() const { return spec_.e; }
  std::uint32_t order() const { return order_; }
  const FieldSpec& spec() const { return spec_; }

  bool valid(Elem a) const { return a < order_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem div(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t k) const;

  // The class of x modulo the modulus, a root of the modulus. Requires e > 1.
  Elem root() const;
  // A generator of the multiplicative group.
  Elem primitive() const { return primitive_; }

  std::vector<std::uint32_t> coeffs(Elem a) const;
  Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;

  std::string describe() const;

  bool operator==(const Field& other) const;

 private:
  explicit Field(FieldSpec spec);

  Elem add_slow(Elem a, Elem b, bool subtract) const;

  FieldSpec spec_;
  std::uint32_t order_ = 0;
  Elem primitive_ = 1;
  std::vector<Elem> add_table_;  // order^2 entries when order <= 256
  std::vector<Elem> neg_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> exp_;  // doubled length to skip a modulo
};

using FieldPtr = std::shared_ptr<const Field>;

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace qdm
