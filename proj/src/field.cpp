#include "mqmap/field.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "mqmap/error.hpp"

namespace mqm {

namespace {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p prime: a^(p-2)
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo b over F_p; b nonzero.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t factor = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

// Monic polynomial of degree n whose lexicographic rank (constant term most
// significant) is `rank`.
Poly monic_from_rank(std::uint64_t rank, std::uint32_t p, std::uint32_t n) {
  Poly c(n + 1, 0);
  c[n] = 1;
  for (std::uint32_t i = n; i-- > 0;) {
    c[i] = static_cast<std::uint32_t>(rank % p);
    rank /= p;
  }
  return c;
}

}  // namespace

bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

bool is_irreducible(std::uint32_t p, const Poly& poly) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t r = 0; r < count; ++r) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t x = r;
      for (std::uint32_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

Field::Field(FieldDesc desc) : desc_(std::move(desc)) {
  const std::uint32_t p = desc_.p, n = desc_.n;
  powers_.resize(n + 1);
  powers_[0] = 1;
  for (std::uint32_t i = 1; i <= n; ++i) powers_[i] = powers_[i - 1] * p;
  order_ = powers_[n];

  const std::uint32_t group = order_ - 1;
  const auto factors = prime_factors(group);
  auto pow_slow = [&](Elem a, std::uint64_t e) {
    Elem r = 1;
    for (; e; e >>= 1) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
    }
    return r;
  };
  for (std::uint32_t key = 1; key < order_; ++key) {
    const Elem g = from_lex_key(key);
    bool ok = true;
    for (auto r : factors) {
      if (pow_slow(g, group / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      generator_ = g;
      break;
    }
  }
  exp_.assign(2 * static_cast<std::size_t>(group), 0);
  log_.assign(order_, 0);
  Elem x = 1;
  for (std::uint32_t k = 0; k < group; ++k) {
    exp_[k] = exp_[k + group] = x;
    log_[x] = k;
    x = mul_slow(x, generator_);
  }
}

FieldPtr Field::make(const FieldDesc& desc) {
  if (!is_prime(desc.p))
    throw Error(ErrorCode::NotPrime, std::to_string(desc.p) + " is not prime");
  if (desc.n < 1) throw Error(ErrorCode::InvalidArgument, "field degree must be >= 1");
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < desc.n; ++i) {
    order *= desc.p;
    if (order > kMaxOrder)
      throw Error(ErrorCode::TooLarge, "field order exceeds " + std::to_string(kMaxOrder));
  }
  if (desc.modulus.size() != desc.n + 1 || desc.modulus.back() != 1)
    throw Error(ErrorCode::InvalidArgument, "modulus must be monic of degree n");
  for (auto c : desc.modulus)
    if (c >= desc.p) throw Error(ErrorCode::InvalidArgument, "modulus coefficient out of range");
  if (!is_irreducible(desc.p, desc.modulus))
    throw Error(ErrorCode::Reducible, "modulus is reducible over F_" + std::to_string(desc.p));
  return FieldPtr(new Field(desc));
}

Elem Field::add(Elem a, Elem b) const {
  if (desc_.p == 2) return a ^ b;
  Elem r = 0;
  for (std::uint32_t i = 0; i < desc_.n; ++i) {
    const std::uint32_t ca = a % desc_.p, cb = b % desc_.p;
    r += ((ca + cb) % desc_.p) * powers_[i];
    a /= desc_.p;
    b /= desc_.p;
  }
  return r;
}

Elem Field::neg(Elem a) const {
  if (desc_.p == 2) return a;
  Elem r = 0;
  for (std::uint32_t i = 0; i < desc_.n; ++i) {
    const std::uint32_t c = a % desc_.p;
    r += ((desc_.p - c) % desc_.p) * powers_[i];
    a /= desc_.p;
  }
  return r;
}

Elem Field::mul_slow(Elem a, Elem b) const {
  const std::uint32_t p = desc_.p, n = desc_.n;
  const Poly ca = coeffs(a), cb = coeffs(b);
  Poly prod(2 * n - 1, 0);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p);
  Poly rem = poly_rem(std::move(prod), desc_.modulus, p);
  rem.resize(n, 0);
  return from_coeffs(rem);
}

std::string Field::name() const {
  return "GF(" + std::to_string(desc_.p) + "^" + std::to_string(desc_.n) + ")";
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const std::uint32_t group = order_ - 1;
  return exp_[(group - log_[a]) % group];
}

Elem Field::pow(Elem a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const std::int64_t group = order_ - 1;
  std::int64_t k = (static_cast<std::int64_t>(log_[a]) * (e % group)) % group;
  if (k < 0) k += group;
  return exp_[k];
}

Elem Field::frobenius(Elem a, std::int64_t k) const {
  const std::int64_t n = desc_.n;
  std::int64_t r = k % n;
  if (r < 0) r += n;
  if (a == 0) return 0;
  const std::uint64_t group = order_ - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * powers_[r]) % group];
}

Poly Field::coeffs(Elem a) const {
  Poly c(desc_.n, 0);
  for (std::uint32_t i = 0; i < desc_.n; ++i) {
    c[i] = a % desc_.p;
    a /= desc_.p;
  }
  return c;
}

Elem Field::from_coeffs(std::span<const std::uint32_t> c) const {
  if (c.size() > desc_.n) throw Error(ErrorCode::InvalidArgument, "too many coefficients");
  Elem r = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= desc_.p) throw Error(ErrorCode::InvalidArgument, "coefficient out of range");
    r += c[i] * powers_[i];
  }
  return r;
}

std::uint32_t Field::lex_key(Elem a) const {
  std::uint32_t key = 0;
  for (std::uint32_t i = 0; i < desc_.n; ++i) {
    key += (a % desc_.p) * powers_[desc_.n - 1 - i];
    a /= desc_.p;
  }
  return key;
}

Elem Field::from_lex_key(std::uint32_t key) const {
  Elem a = 0;
  for (std::uint32_t i = 0; i < desc_.n; ++i) {
    a += (key % desc_.p) * powers_[desc_.n - 1 - i];
    key /= desc_.p;
  }
  return a;
}

std::uint32_t Field::log(Elem a) const {
  if (a == 0) throw Error(ErrorCode::ZeroArgument, "log of zero");
  return log_[a];
}

FieldPtr make_field(std::uint32_t p, std::uint32_t n, std::optional<Poly> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "field degree must be >= 1");
  if (modulus) return Field::make({p, n, *modulus});
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    count *= p;
    if (count > Field::kMaxOrder)
      throw Error(ErrorCode::TooLarge, "field order exceeds " + std::to_string(Field::kMaxOrder));
  }
  for (std::uint64_t rank = 0; rank < count; ++rank) {
    Poly candidate = monic_from_rank(rank, p, n);
    if (is_irreducible(p, candidate)) return Field::make({p, n, std::move(candidate)});
  }
  throw Error(ErrorCode::Inconsistency, "no irreducible polynomial found");
}

FieldPtr parse_field_name(const std::string& name) {
  std::string digits;
  if (name.size() > 1 && (name[0] == 'F' || name[0] == 'f')) {
    digits = name.substr(1);
  } else if (name.size() > 4 && name.rfind("GF(", 0) == 0 && name.back() == ')') {
    digits = name.substr(3, name.size() - 4);
  }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](unsigned char c) { return std::isdigit(c); }))
    throw Error(ErrorCode::InvalidArgument, "unrecognized field name '" + name + "'");
  const std::uint64_t q = std::stoull(digits);
  for (std::uint64_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    std::uint64_t m = q;
    std::uint32_t n = 0;
    while (m % p == 0) {
      m /= p;
      ++n;
    }
    if (m != 1)
      throw Error(ErrorCode::InvalidArgument, "'" + name + "' is not a prime power order");
    return make_field(static_cast<std::uint32_t>(p), n);
  }
  throw Error(ErrorCode::InvalidArgument, "'" + name + "' is not a prime power order");
}

Elem find_generator(const Field& field) {
  const std::uint32_t group = field.order() - 1;
  const auto factors = prime_factors(group);
  for (std::uint32_t key = 1; key < field.order(); ++key) {
    const Elem g = field.from_lex_key(key);
    if (std::all_of(factors.begin(), factors.end(),
                    [&](std::uint64_t r) { return field.pow(g, group / r) != 1; }))
      return g;
  }
  throw Error(ErrorCode::Inconsistency, "multiplicative group has no generator");
}

std::uint64_t dlog(const Field& field, Elem x, Elem g) {
  if (x == 0) throw Error(ErrorCode::ZeroArgument, "discrete log of zero");
  if (field.order() > (1u << 16))
    throw Error(ErrorCode::DomainTooLarge, "brute-force dlog limited to 2^16 elements");
  Elem y = 1;
  for (std::uint64_t k = 0; k < field.order(); ++k) {
    if (y == x) return k;
    y = field.mul(y, g);
  }
  throw Error(ErrorCode::InvalidArgument, "element is not a power of the given base");
}

std::vector<Embedding> embeddings(const FieldPtr& K, const FieldPtr& L) {
  if (K->p() != L->p())
    throw Error(ErrorCode::CharMismatch, K->name() + " and " + L->name() + " differ in characteristic");
  std::vector<Embedding> out;
  if (L->degree() % K->degree() != 0) return out;

  // modulus of K evaluated in L; coefficients lie in the prime field
  const Poly& mod = K->desc().modulus;
  auto eval = [&](Elem x) {
    Elem acc = 0;
    for (std::size_t i = mod.size(); i-- > 0;) acc = L->add(L->mul(acc, x), L->prime(mod[i]));
    return acc;
  };
  std::optional<Elem> root0;
  // Self-embeddings start at the identity so Frobenius exponents read naturally.
  if (K->desc() == L->desc() && K->degree() > 1) root0 = K->p();
  for (std::uint32_t key = 0; key < L->order() && !root0; ++key) {
    const Elem x = L->from_lex_key(key);
    if (eval(x) == 0) root0 = x;
  }
  if (!root0) throw Error(ErrorCode::Inconsistency, "modulus has no root in the extension");

  for (std::uint32_t k = 0; k < K->degree(); ++k) {
    Embedding e{K, L, k, L->frobenius(*root0, k), {}};
    e.image.resize(K->order());
    for (Elem x = 0; x < K->order(); ++x) {
      const Poly c = K->coeffs(x);
      Elem acc = 0;
      for (std::size_t i = c.size(); i-- > 0;) acc = L->add(L->mul(acc, e.root), L->prime(c[i]));
      e.image[x] = acc;
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace mqm
