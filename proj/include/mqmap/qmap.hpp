#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mqmap/field.hpp"
#include "mqmap/linalg.hpp"
#include "mqmap/report.hpp"
#include "mqmap/ring.hpp"

namespace mqm {

// q : K -> L given pointwise; values[a] = q(a).
struct QuadMapTable {
  RingPtr domain;
  RingPtr codomain;
  std::vector<Elem> values;

  Elem operator()(Elem a) const { return values[a]; }
  // f(a, b) = q(a + b) - q(a) - q(b)
  Elem form(Elem a, Elem b) const {
    const Ring& L = *codomain;
    return L.sub(L.sub(values[domain->add(a, b)], values[a]), values[b]);
  }
};

// Throws InvalidArgument on size or range mismatch.
QuadMapTable make_table_map(RingPtr domain, RingPtr codomain, std::vector<Elem> values);

// x -> x^e between fields of one characteristic. When deg K | deg L the power
// is taken after embedding 0; otherwise x^e in K must lie in the image of L.
QuadMapTable power_map(const FieldPtr& K, const FieldPtr& L, std::int64_t exponent);

// Prime-field basis form: K has power basis e_i = t^i over F_p and
// q(sum l_i e_i) = sum l_i^2 q(e_i) + sum_{i<j} l_i l_j f(e_i, e_j).
struct QuadMapBasis {
  FieldPtr K;
  FieldPtr L;
  std::vector<Elem> basis_vals;  // q(e_i)
  Matrix gram;                   // n x n; only entries with i < j are read

  Elem operator()(Elem x) const;
};

// Symmetric matrix of f over the listed points (all of K for table maps, the
// power basis for basis maps).
struct BilinearGram {
  std::uint32_t dim = 0;
  std::vector<Elem> entries;

  Elem at(std::uint32_t i, std::uint32_t j) const { return entries[i * dim + j]; }
  bool is_zero() const {
    for (auto e : entries)
      if (e != 0) return false;
    return true;
  }
};

// A subset of the domain ring, kept as sorted member indices.
struct Subspace {
  RingPtr ambient;
  std::vector<Elem> members;
  bool ideal = false;

  bool contains(Elem a) const;
  std::size_t size() const { return members.size(); }
  bool is_zero() const { return members.size() == 1 && members[0] == ambient->zero(); }
};

Subspace whole_ring(RingPtr ring);
// Additively closed, contains zero, absorbs multiplication by the ring.
bool is_ideal(const Ring& ring, const std::vector<Elem>& members);

// (1) multiplicativity over all pairs, never sampled; (2) q(k 1) = k^2 1;
// (3) biadditivity of f over triples, sampled above the bound.
Report verify_axioms(const QuadMapTable& q, const CheckConfig& cfg = {});

BilinearGram assoc_form(const QuadMapTable& q);
BilinearGram assoc_form(const QuadMapBasis& q);

// f(ac, bc) = f(a, b) q(c) and f(a, b) f(c, d) = f(ac, bd) + f(ad, bc).
Report check_lemma21(const QuadMapTable& q, const CheckConfig& cfg = {});

// I^perp = {a : f(a, b) = 0 for all b in I}. Throws NotAnIdeal.
Subspace perp(const QuadMapTable& q, const Subspace& I);
// {a in K^perp : q(a) = 0}
Subspace radical(const QuadMapTable& q);

struct QuotientMap {
  QuadMapTable map;               // on K / rad(q)
  Subspace radical;
  std::vector<Elem> class_of;     // domain element -> coset index
  std::vector<Elem> representatives;  // smallest member of each coset
};

// Cosets are ordered by their smallest member.
QuotientMap quotient(const QuadMapTable& q);

enum class HomBranch { char2_hom, bilinear_nondegenerate, degenerate };

std::string to_string(HomBranch b);

struct BranchReport {
  HomBranch branch;
  std::vector<Witness> witnesses;  // only for degenerate
};

// Throws NonzeroRadical.
BranchReport detect_hom_branch(const QuadMapTable& q);

// Throws NotFQuadratic (witness: the mismatching domain element),
// CharMismatch, InvalidArgument when either side is not a field.
QuadMapBasis table_to_basis(const QuadMapTable& q);
QuadMapTable basis_to_table(const QuadMapBasis& q);

}  // namespace mqm
