#include "qdm/gf.hpp"

#include <sstream>

#include "qdm/error.hpp"

namespace qdm {
namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime and tiny, Fermat is plenty.
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t k = p - 2; k > 0; k >>= 1) {
    if (k & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo m over Z_p; m must have a nonzero leading term.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inverse_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::size_t shift = a.size() - m.size();
    const std::uint32_t factor = static_cast<std::uint32_t>(std::uint64_t{a.back()} * lead_inv % p);
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = std::uint64_t{factor} * m[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_from_index(std::uint64_t index, std::uint32_t p, std::size_t len) {
  Poly out(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return out;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2 || f.back() != 1) return false;
  const std::size_t e = f.size() - 1;
  if (e == 1) return true;
  for (std::size_t d = 1; d <= e / 2; ++d) {
    const std::uint64_t count = ipow(p, static_cast<std::uint32_t>(d));
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g = poly_from_index(idx, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p) || e == 0) fail(Errc::kInvalidField, "default_modulus needs prime p and e >= 1");
  if (e == 1) return {0, 1};
  // Index i encodes the lower coefficients with c_{e-1} most significant, so
  // ascending i is lexicographic order read from the top coefficient down.
  const std::uint64_t count = ipow(p, e);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f = poly_from_index(idx, p, e);
    f.push_back(1);
    if (is_irreducible(p, f)) return f;
  }
  fail(Errc::kInternalInconsistency, "no irreducible polynomial found");
}

std::shared_ptr<const Field> Field::make(std::uint32_t p, std::uint32_t e) {
  return make(FieldSpec{p, e, {}});
}

std::shared_ptr<const Field> Field::make(FieldSpec spec) {
  return std::shared_ptr<const Field>(new Field(std::move(spec)));
}

std::shared_ptr<const Field> Field::of_order(std::uint32_t q) {
  if (q < 2) fail(Errc::kInvalidField, "field order must be at least 2");
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    if (!is_prime(p)) break;
    std::uint32_t e = 0, rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (rest != 1) break;
    return make(p, e);
  }
  fail(Errc::kInvalidField, "field order " + std::to_string(q) + " is not a prime power");
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  const std::uint32_t p = spec_.p, e = spec_.e;
  if (!is_prime(p)) fail(Errc::kInvalidField, "characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) fail(Errc::kInvalidField, "extension degree must be >= 1");
  const std::uint64_t order = ipow(p, e);
  if (order > kMaxFieldOrder) fail(Errc::kInvalidField, "field order exceeds table cap");
  order_ = static_cast<std::uint32_t>(order);

  if (e == 1) {
    spec_.modulus.clear();
  } else {
    if (spec_.modulus.empty()) spec_.modulus = default_modulus(p, e);
    if (spec_.modulus.size() != e + 1) fail(Errc::kInvalidField, "modulus must have e + 1 coefficients");
    for (auto c : spec_.modulus) {
      if (c >= p) fail(Errc::kInvalidField, "modulus coefficient out of range");
    }
    if (!is_irreducible(p, spec_.modulus)) fail(Errc::kInvalidField, "modulus is not irreducible");
  }

  neg_.resize(order_);
  for (Elem a = 0; a < order_; ++a) neg_[a] = add_slow(0, a, true);
  if (order_ <= 256) {
    add_table_.resize(std::size_t{order_} * order_);
    for (Elem a = 0; a < order_; ++a) {
      for (Elem b = 0; b < order_; ++b) add_table_[std::size_t{a} * order_ + b] = add_slow(a, b, false);
    }
  }

  // Schoolbook product reduced by the modulus; only used to seed the tables.
  auto mul_slow = [&](Elem a, Elem b) -> Elem {
    if (e == 1) return static_cast<Elem>(std::uint64_t{a} * b % p);
    Poly pa = poly_from_index(a, p, e), pb = poly_from_index(b, p, e);
    Poly prod(2 * e - 1, 0);
    for (std::size_t i = 0; i < e; ++i) {
      for (std::size_t j = 0; j < e; ++j) {
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % p);
      }
    }
    Poly r = poly_mod(prod, spec_.modulus, p);
    r.resize(e, 0);
    return from_coeffs(r);
  };

  const std::uint32_t group = order_ - 1;
  primitive_ = 1;
  for (Elem g = 1; g < order_; ++g) {
    std::uint32_t ord = 1;
    Elem x = g;
    while (x != 1) {
      x = mul_slow(x, g);
      ++ord;
    }
    if (ord == group) {
      primitive_ = g;
      break;
    }
  }

  exp_.resize(2 * std::size_t{group});
  log_.assign(order_, 0);
  Elem x = 1;
  for (std::uint32_t i = 0; i < group; ++i) {
    exp_[i] = exp_[i + group] = x;
    log_[x] = i;
    x = mul_slow(x, primitive_);
  }
}

Elem Field::add_slow(Elem a, Elem b, bool subtract) const {
  const std::uint32_t p = spec_.p;
  Elem out = 0, scale = 1;
  for (std::uint32_t i = 0; i < spec_.e; ++i) {
    const std::uint32_t ca = a % p, cb = b % p;
    a /= p;
    b /= p;
    const std::uint32_t c = subtract ? (ca + p - cb) % p : (ca + cb) % p;
    out += c * scale;
    scale *= p;
  }
  return out;
}

namespace {
void check_elem(const Field& f, Elem a) {
  if (!f.valid(a)) fail(Errc::kInvalidElement, "element " + std::to_string(a) + " outside " + f.describe());
}
}  // namespace

Elem Field::add(Elem a, Elem b) const {
  check_elem(*this, a);
  check_elem(*this, b);
  if (!add_table_.empty()) return add_table_[std::size_t{a} * order_ + b];
  return add_slow(a, b, false);
}

Elem Field::sub(Elem a, Elem b) const {
  check_elem(*this, b);
  return add(a, neg_[b]);
}

Elem Field::neg(Elem a) const {
  check_elem(*this, a);
  return neg_[a];
}

Elem Field::mul(Elem a, Elem b) const {
  check_elem(*this, a);
  check_elem(*this, b);
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

Elem Field::inv(Elem a) const {
  check_elem(*this, a);
  if (a == 0) fail(Errc::kDivisionByZero, "inverse of zero");
  const std::uint32_t group = order_ - 1;
  return exp_[(group - log_[a]) % group];
}

Elem Field::div(Elem a, Elem b) const {
  check_elem(*this, b);
  if (b == 0) fail(Errc::kDivisionByZero, "division by zero");
  return mul(a, inv(b));
}

Elem Field::pow(Elem a, std::uint64_t k) const {
  check_elem(*this, a);
  if (k == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t group = order_ - 1;
  return exp_[static_cast<std::size_t>((std::uint64_t{log_[a]} * (k % group)) % group)];
}

Elem Field::root() const {
  if (spec_.e == 1) fail(Errc::kInvalidField, "prime field has no modulus root");
  return spec_.p;
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
  check_elem(*this, a);
  return poly_from_index(a, spec_.p, spec_.e);
}

Elem Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != spec_.e) fail(Errc::kInvalidElement, "coefficient count must equal the degree");
  Elem out = 0, scale = 1;
  for (auto c : coeffs) {
    if (c >= spec_.p) fail(Errc::kInvalidElement, "coefficient out of range");
    out += c * scale;
    scale *= spec_.p;
  }
  return out;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << spec_.p;
  if (spec_.e > 1) os << '^' << spec_.e;
  os << ')';
  return os.str();
}

bool Field::operator==(const Field& other) const {
  return spec_.p == other.spec_.p && spec_.e == other.spec_.e && spec_.modulus == other.spec_.modulus;
}

}  // namespace qdm
