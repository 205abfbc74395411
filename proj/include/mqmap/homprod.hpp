#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mqmap/homspec.hpp"
#include "mqmap/linalg.hpp"

namespace mqm {

// x -> prod_i sigma_i(x); all factors share K and L.
struct ProductMap {
  std::vector<HomSpec> homs;

  const FieldPtr& K() const { return homs.front().K(); }
  const FieldPtr& L() const { return homs.front().L(); }
  std::size_t length() const { return homs.size(); }
  // sum p^(canonical exponent) mod |K*|: the map is iota_0(x)^e on K*.
  std::uint64_t exponent() const;
};

// Throws InvalidArgument for an empty list or mixed fields.
ProductMap make_product(std::vector<HomSpec> homs);

Elem product_eval(const ProductMap& P, Elem x);

struct EqualityResult {
  bool equal = false;
  std::optional<Elem> witness;  // first x where the products differ
  std::uint64_t exponent_p = 0;
  std::uint64_t exponent_q = 0;
};

// Pointwise over all of K and by exponent sums; throws Inconsistency if the
// two disagree, CharMismatch/InvalidArgument if the fields differ.
EqualityResult products_equal(const ProductMap& P, const ProductMap& Q);

struct ArtinResult {
  bool independent = true;
  Vec dependence;  // first nonzero entry is 1
};

// Kernel of the |K| x n matrix [sigma_i(x)] over L. Throws TooLarge for |K| > 2^12.
ArtinResult artin_check(const std::vector<HomSpec>& homs);

// sum over permutations g of prod_i sigma_{g(i)}(x_i). Throws TooManyFactors for n > 6.
Elem symmetrized_sum(const std::vector<HomSpec>& sigmas, const std::vector<Elem>& xs);
// sum over nonempty J of (-1)^|J| prod_i sigma_i(x_J), x_J = sum_{j in J} x_j.
Elem polarized_sum(const std::vector<HomSpec>& sigmas, const std::vector<Elem>& xs);

struct SymsumResult {
  bool vanishes = false;    // exhaustive evaluation over K^n
  bool structural = false;  // some map occurs at least p times
  std::vector<Elem> witness;
  std::uint64_t evaluations = 0;
};

// Throws TooLarge for |K|^n > 2^20, TooManyFactors for n > 6.
SymsumResult symsum_vanishes(const std::vector<HomSpec>& sigmas);

enum class VerdictTag { not_equal, case1, case2, inconsistent };
std::string to_string(VerdictTag t);

// target = source followed by Frobenius^l, with lower <= l (p - 1) <= upper.
struct Twist {
  std::size_t target = 0;
  std::size_t source = 0;
  std::int64_t l = 0;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
};

// Indices are 0-based and refer to sigma = the longer list (P unless swapped).
struct Verdict {
  VerdictTag tag = VerdictTag::not_equal;
  bool swapped = false;
  std::optional<Elem> witness;             // not_equal
  std::vector<std::size_t> permutation;    // case1: tau_i = sigma_{permutation[i]}
  std::vector<std::size_t> equal_indices;  // case2: p indices with equal sigmas
  std::vector<Twist> tau_twists;           // tau_j = sigma_i p^l
  std::vector<Twist> sigma_twists;         // sigma_i = tau_j p^l
  std::string inconsistency;
};

Verdict theorem14_verdict(const ProductMap& P, const ProductMap& Q);
// Replays the payload: the permutation or every twist and bound.
bool verify_verdict(const ProductMap& P, const ProductMap& Q, const Verdict& v);

struct ScanReport {
  std::uint64_t tuples = 0;
  std::uint64_t pairs = 0;
  std::uint64_t equal_pairs = 0;
  std::uint64_t case1 = 0;
  std::uint64_t case2 = 0;
  std::vector<std::string> inconsistencies;
};

// All pairs of hom tuples of length <= n_max and <= m_max. Throws TooLarge
// when there are more than 2^20 tuples.
ScanReport theorem14_scan(const FieldPtr& K, const FieldPtr& L, std::uint32_t n_max,
                          std::uint32_t m_max);

}  // namespace mqm
