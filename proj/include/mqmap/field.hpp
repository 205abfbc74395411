#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mqmap/ring.hpp"

namespace mqm {

// Polynomial over F_p as a coefficient list, constant term first.
using Poly = std::vector<std::uint32_t>;

struct FieldDesc {
  std::uint32_t p = 2;
  std::uint32_t n = 1;
  Poly modulus;  // monic, degree n

  bool operator==(const FieldDesc&) const = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// GF(p^n) = F_p[t]/(modulus). Multiplication goes through exp/log tables
// built on the canonical generator.
class Field final : public Ring {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  // Throws NotPrime, Reducible, InvalidArgument, TooLarge.
  static FieldPtr make(const FieldDesc& desc);

  const FieldDesc& desc() const { return desc_; }
  std::uint32_t p() const { return desc_.p; }
  std::uint32_t degree() const { return desc_.n; }
  std::uint32_t order() const { return order_; }

  std::uint32_t size() const override { return order_; }
  Elem add(Elem a, Elem b) const override;
  Elem neg(Elem a) const override;
  Elem mul(Elem a, Elem b) const override {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem zero() const override { return 0; }
  Elem one() const override { return 1; }
  std::string name() const override;
  const Field* as_field() const override { return this; }

  Elem inv(Elem a) const;  // throws DivisionByZero
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  // Negative exponents need a != 0.
  Elem pow(Elem a, std::int64_t e) const;
  // a^(p^k), k taken mod n (negative k gives the inverse automorphism).
  Elem frobenius(Elem a, std::int64_t k) const;

  Poly coeffs(Elem a) const;
  Elem from_coeffs(std::span<const std::uint32_t> c) const;
  // Image of the prime-field element c (0 <= c < p).
  Elem prime(std::uint32_t c) const { return c; }
  bool in_prime_field(Elem a) const { return a < desc_.p; }

  // Key whose integer order is the coefficient-lexicographic order with the
  // constant term compared first.
  std::uint32_t lex_key(Elem a) const;
  Elem from_lex_key(std::uint32_t key) const;

  // Lexicographically smallest generator of the multiplicative group.
  Elem generator() const { return generator_; }
  // Table lookup; find_generator/dlog below are the brute-force operations.
  std::uint32_t log(Elem a) const;

 private:
  explicit Field(FieldDesc desc);
  Elem mul_slow(Elem a, Elem b) const;

  FieldDesc desc_;
  std::uint32_t order_;
  std::vector<std::uint32_t> powers_;  // p^i
  std::vector<Elem> exp_;              // length 2(order-1)
  std::vector<std::uint32_t> log_;
  Elem generator_ = 1;
};

bool is_prime(std::uint64_t m);
// Exhaustive trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible(std::uint32_t p, const Poly& poly);

// Without a modulus the lexicographically smallest monic irreducible of
// degree n is used (constant term compared first).
FieldPtr make_field(std::uint32_t p, std::uint32_t n, std::optional<Poly> modulus = std::nullopt);
// "F4", "F9", "GF(8)": the canonical field of that order.
FieldPtr parse_field_name(const std::string& name);

Elem find_generator(const Field& field);

// Least k >= 0 with g^k = x, by scanning. Throws ZeroArgument, DomainTooLarge.
std::uint64_t dlog(const Field& field, Elem x, Elem g);

// A field homomorphism K -> L fixed by the image of K's power-basis generator.
struct Embedding {
  FieldPtr K;
  FieldPtr L;
  std::uint32_t index = 0;
  Elem root = 0;
  std::vector<Elem> image;  // image[x] for every x in K

  Elem operator()(Elem x) const { return image[x]; }
};

// All embeddings K -> L, canonically indexed: embedding 0 sends the generator
// to the lexicographically smallest root of K's modulus in L, embedding k is
// embedding 0 followed by the k-th power of Frobenius. Empty when
// deg K does not divide deg L. When K and L are the same field, embedding 0
// is the identity. Throws CharMismatch.
std::vector<Embedding> embeddings(const FieldPtr& K, const FieldPtr& L);

}  // namespace mqm
