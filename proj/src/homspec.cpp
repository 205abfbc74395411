#include "mqmap/homspec.hpp"

#include "mqmap/error.hpp"

namespace mqm {

namespace {

std::uint32_t reduce_exp(std::int64_t k, std::uint32_t n) {
  std::int64_t r = k % static_cast<std::int64_t>(n);
  if (r < 0) r += n;
  return static_cast<std::uint32_t>(r);
}

}  // namespace

HomSpec::HomSpec(FieldPtr K, FieldPtr L, std::uint32_t embedding_index, std::int64_t frobenius_exp)
    : K_(std::move(K)),
      L_(std::move(L)),
      embedding_index_(embedding_index),
      frobenius_exp_(frobenius_exp) {
  const auto embs = embeddings(K_, L_);
  if (embs.empty())
    throw Error(ErrorCode::InvalidArgument, K_->name() + " does not embed in " + L_->name());
  if (embedding_index_ >= embs.size())
    throw Error(ErrorCode::InvalidArgument, "embedding index out of range");
  const Embedding& iota = embs[embedding_index_];
  auto image = std::make_shared<std::vector<Elem>>(K_->order());
  for (Elem x = 0; x < K_->order(); ++x) (*image)[x] = iota(K_->frobenius(x, frobenius_exp_));
  image_ = std::move(image);
}

std::uint32_t HomSpec::canonical_exp() const { return reduce_exp(formal_exp(), K_->degree()); }

bool HomSpec::same_map(const HomSpec& other) const {
  return K_->desc() == other.K_->desc() && L_->desc() == other.L_->desc() &&
         canonical_exp() == other.canonical_exp();
}

HomSpec HomSpec::twisted(std::int64_t l) const {
  // iota(x)^(p^l) = iota(x^(p^l)) since iota commutes with Frobenius
  return HomSpec(K_, L_, embedding_index_, frobenius_exp_ + l);
}

std::optional<HomSpec> identify_hom(const FieldPtr& K, const FieldPtr& L,
                                    const std::vector<Elem>& table) {
  const auto embs = embeddings(K, L);
  for (const Embedding& e : embs) {
    bool match = true;
    for (Elem x = 0; x < K->order() && match; ++x) match = e(x) == table[x];
    if (match) return HomSpec(K, L, 0, e.index);
  }
  return std::nullopt;
}

}  // namespace mqm
