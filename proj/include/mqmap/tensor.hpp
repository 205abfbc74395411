#pragma once

#include <cstdint>
#include <vector>

#include "mqmap/field.hpp"
#include "mqmap/linalg.hpp"
#include "mqmap/qmap.hpp"
#include "mqmap/report.hpp"

namespace mqm {

// Finite-dimensional commutative L-algebra given by structure constants.
// Elements are coordinate vectors; the enumeration index of v is
// sum v_i |L|^i.
struct Algebra {
  FieldPtr L;
  std::uint32_t dim = 0;
  std::vector<Vec> struct_consts;  // entry i*dim+j: coordinates of e_i e_j
  Vec unit;

  std::uint64_t size() const;
  Vec add(const Vec& x, const Vec& y) const { return vec_add(*L, x, y); }
  Vec scale(Elem s, const Vec& x) const { return vec_scale(*L, s, x); }
  Vec mul(const Vec& x, const Vec& y) const;
  Vec basis(std::uint32_t i) const;
  Vec from_index(std::uint64_t index) const;
  std::uint64_t index(const Vec& v) const;
};

// Quadratic form on L^dim: sum v_i^2 basis_vals[i] + sum_{i<j} v_i v_j gram[i][j].
struct QuadForm {
  FieldPtr L;
  Vec basis_vals;
  Matrix gram;

  Elem operator()(const Vec& v) const;
  Elem polar(const Vec& x, const Vec& y) const;  // q(x+y) - q(x) - q(y)
  // f(e_i, e_j) with f(e_i, e_i) = 2 q(e_i)
  Elem gram_full(std::uint32_t i, std::uint32_t j) const;
};

// L (x)_{F_p} K with basis e_i = 1 (x) t^i.
struct TensorAlgebra : Algebra {
  FieldPtr K;

  Vec embed(Elem x) const;  // 1 (x) x
};

// Throws CharMismatch. Commutativity, associativity (basis triples suffice by
// trilinearity) and the embedding K -> L (x) K are checked; a failure is an
// Inconsistency.
TensorAlgebra build_tensor(const FieldPtr& K, const FieldPtr& L);

struct ExtendedQuadMap {
  TensorAlgebra algebra;
  QuadForm form;

  Elem operator()(const Vec& v) const { return form(v); }
};

// q~(sum l_i a_i) = sum l_i^2 q(a_i) + sum_{i<j} l_i l_j f(a_i, a_j). Asserts
// q~(1 (x) x) = q(x) on all of K.
ExtendedQuadMap extend(const QuadMapBasis& q);

// Multiplicativity and f~(x, y) = sum x_i y_j f(a_i, a_j), plus
// q~(l x) = l^2 q~(x). Exhaustive up to |algebra|^2 <= bound; larger
// algebras over |L| >= 3 use the grid {0,1,2}^dim on both sides, on which a
// failure of these degree-<=2-per-coordinate identities would have to show.
// Throws TooLarge otherwise.
Report verify_extension(const ExtendedQuadMap& qt, const CheckConfig& cfg = {});
Report check_multiplicative(const Algebra& A, const QuadForm& N, const CheckConfig& cfg = {});

struct LinearSubspace {
  std::uint32_t ambient_dim = 0;
  Echelon basis;
  std::vector<std::uint64_t> members;  // sorted enumeration indices
  bool ideal = false;

  std::uint32_t dim() const { return static_cast<std::uint32_t>(basis.rank()); }
};

inline constexpr std::uint64_t kMaxAlgebraEnumeration = std::uint64_t{1} << 16;

// {v : f(v, .) = 0, N(v) = 0} by enumeration; verified to be an L-subspace
// and an ideal of A. Throws TooLarge.
LinearSubspace form_radical(const Algebra& A, const QuadForm& N);
LinearSubspace radical_ext(const ExtendedQuadMap& qt);

// M = algebra / rad with induced norm N(v + rad) = q~(v), on the basis of
// non-pivot coordinates of the radical's echelon form.
struct QuotientAlgebra {
  Algebra algebra;
  QuadForm norm;
  std::uint32_t ambient_dim = 0;
  Echelon radical;
  std::vector<std::size_t> free_cols;

  Vec project(const Vec& v) const;
  Vec lift(const Vec& m) const;
};

// Asserts N is constant on cosets and multiplicative.
QuotientAlgebra quotient_algebra(const ExtendedQuadMap& qt, const LinearSubspace& rad);

}  // namespace mqm
