#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "mqmap/field.hpp"

namespace mqm {

// The field homomorphism K -> L, x -> iota(x^(p^k)), where iota is the
// canonical embedding `embedding_index` and k = frobenius_exp. The exponent is
// kept as given; as a map it only matters mod deg K.
class HomSpec {
 public:
  HomSpec() = default;
  // Throws InvalidArgument when deg K does not divide deg L or the embedding
  // index is out of range; CharMismatch from embeddings().
  HomSpec(FieldPtr K, FieldPtr L, std::uint32_t embedding_index, std::int64_t frobenius_exp);

  const FieldPtr& K() const { return K_; }
  const FieldPtr& L() const { return L_; }
  std::uint32_t embedding_index() const { return embedding_index_; }
  std::int64_t frobenius_exp() const { return frobenius_exp_; }
  // embedding_index + frobenius_exp, unreduced.
  std::int64_t formal_exp() const { return std::int64_t{embedding_index_} + frobenius_exp_; }
  // The k in [0, deg K) with this map = embedding 0 followed by Frobenius^k.
  std::uint32_t canonical_exp() const;

  Elem operator()(Elem x) const { return (*image_)[x]; }
  const std::vector<Elem>& image() const { return *image_; }

  // Equal as maps (same fields, same canonical exponent).
  bool same_map(const HomSpec& other) const;
  // This map followed by Frobenius^l of L.
  HomSpec twisted(std::int64_t l) const;

 private:
  FieldPtr K_;
  FieldPtr L_;
  std::uint32_t embedding_index_ = 0;
  std::int64_t frobenius_exp_ = 0;
  std::shared_ptr<const std::vector<Elem>> image_;
};

// The homomorphism (embedding 0, exponent k) agreeing with `table` on all of K,
// if any.
std::optional<HomSpec> identify_hom(const FieldPtr& K, const FieldPtr& L,
                                    const std::vector<Elem>& table);

}  // namespace mqm
