#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mqmap/homspec.hpp"
#include "mqmap/qmap.hpp"
#include "mqmap/report.hpp"
#include "mqmap/tensor.hpp"

namespace mqm {

enum class CompKind { dim1, split2, field2 };
enum class Branch { comp_norm, char2_hom };

std::string to_string(CompKind k);
std::string to_string(Branch b);

// Commutative composition algebra M over L with norm N.
//   dim1:   M = L,        N(x) = x^2
//   split2: M = L x L,    N(x1, x2) = x1 x2 (via the idempotent e)
//   field2: M = L(w),     N(x) = x x^sigma, M identified with the canonical
//           quadratic extension by w -> root
struct CompositionAlgebra {
  CompKind kind = CompKind::dim1;
  QuotientAlgebra M;
  Vec idempotent;       // split2: the lexicographically smallest nontrivial one
  Vec w;                // field2: M = L 1 + L w
  Vec sigma_w;          // field2: image of w under the nontrivial automorphism
  FieldPtr extension;   // field2: GF(p^(2m))
  Elem root = 0;        // field2: image of w in `extension`
  std::vector<Elem> base_image;  // field2: embedding 0 of L into `extension`

  FieldPtr base() const { return M.algebra.L; }
  std::uint32_t dim() const { return M.algebra.dim; }
  // sigma for field2, the coordinate swap for split2, identity for dim1.
  Vec involution(const Vec& x) const;
  // Coordinates of x = a 1 + b w (field2).
  std::pair<Elem, Elem> split_on_w(const Vec& x) const;
  // Image of x in `extension` (field2).
  Elem to_extension(const Vec& x) const;
  // x e = c e: c for the first factor, the (1 - e) coordinate for the second (split2).
  std::pair<Elem, Elem> split_coords(const Vec& x) const;
};

struct Decomposition {
  Branch branch = Branch::comp_norm;
  std::uint32_t quotient_dim = 0;            // dim of L (x) K / rad(q~)
  std::optional<CompositionAlgebra> algebra;  // comp_norm
  std::vector<Vec> phi;                       // comp_norm: x -> class of 1 (x) x
  HomSpec phi1;                               // canonical_exp(phi1) <= canonical_exp(phi2)
  HomSpec phi2;
  std::optional<HomSpec> hom;                 // char2_hom: q itself
};

// Throws NotVerified (axioms fail), CharMismatch, UnexpectedDimension.
Decomposition classify(const QuadMapBasis& q, const CheckConfig& cfg = {});
Decomposition classify(const QuadMapTable& q, const CheckConfig& cfg = {});

// Recognizes the kind by idempotent search and automorphism enumeration and
// checks the matching norm formula. Throws UnexpectedDimension for dim > 2.
CompositionAlgebra comp_kind(const QuotientAlgebra& M);

// The pair of homomorphisms K -> L (or K -> the quadratic extension for
// field2) with q(x) = phi1(x) phi2(x), sorted by Frobenius exponent.
std::pair<HomSpec, HomSpec> hom_pair(const CompositionAlgebra& C, const FieldPtr& K,
                                     const std::vector<Vec>& phi);

Report verify_decomposition(const QuadMapTable& q, const Decomposition& d);

// Every multiplicative quadratic map K -> L: candidates q(g^k) = y^k with
// y^|K*| = 1, kept when they pass verify_axioms; ordered by the discrete log
// of y. Throws TooLarge for |K| > 2^10.
std::vector<QuadMapTable> enumerate_qmaps(const FieldPtr& K, const FieldPtr& L,
                                          const CheckConfig& cfg = {});

}  // namespace mqm
