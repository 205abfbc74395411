#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "mqmap/classify.hpp"
#include "mqmap/json_io.hpp"
#include "oracle.hpp"

using namespace mqm;

namespace {

std::set<std::int64_t> power_exponents(const std::vector<QuadMapTable>& maps) {
  std::set<std::int64_t> out;
  for (const auto& q : maps) {
    auto K = std::dynamic_pointer_cast<const Field>(q.domain);
    auto L = std::dynamic_pointer_cast<const Field>(q.codomain);
    for (std::int64_t e = 1; e < K->order(); ++e)
      if (power_map(K, L, e).values == q.values) {
        out.insert(e);
        break;
      }
  }
  return out;
}

// Tables of every map predicted by the decomposition theorem: products of two
// embeddings into the quadratic extension of L that land in L, and, in
// characteristic 2, embeddings into L.
std::set<std::vector<Elem>> predicted(const FieldPtr& K, const FieldPtr& L) {
  std::set<std::vector<Elem>> out;
  const FieldPtr L2 = make_field(L->p(), 2 * L->degree());
  const auto base = embeddings(L, L2).front();
  std::vector<std::int64_t> back(L2->order(), -1);
  for (Elem y = 0; y < L->order(); ++y) back[base(y)] = y;
  const auto es = embeddings(K, L2);
  for (const auto& a : es)
    for (const auto& b : es) {
      std::vector<Elem> v(K->order());
      bool lands = true;
      for (Elem x = 0; x < K->order() && lands; ++x) {
        const std::int64_t y = back[L2->mul(a(x), b(x))];
        lands = y >= 0;
        v[x] = static_cast<Elem>(y);
      }
      if (lands) out.insert(v);
    }
  if (L->p() == 2)
    for (const auto& e : embeddings(K, L)) out.insert(e.image);
  return out;
}

}  // namespace

TEST_CASE("enumerate_qmaps examples") {
  CHECK(power_exponents(enumerate_qmaps(F(4), F(4))) == std::set<std::int64_t>{1, 2, 3});
  CHECK(power_exponents(enumerate_qmaps(F(9), F(9))) == std::set<std::int64_t>{2, 4, 6});
  const auto norm = enumerate_qmaps(F(4), F(2));
  REQUIRE(norm.size() == 1);
  CHECK(norm[0].values == power_map(F(4), F(2), 3).values);
  check_throws_code([] { enumerate_qmaps(make_field(2, 11), F(2)); }, ErrorCode::TooLarge);
}

TEST_CASE("enumeration matches the schoolbook oracle") {
  for (auto order : {4u, 8u, 9u, 16u, 25u}) {
    const auto K = F(order);
    const auto expected = oracle::qmap_exponents(oracle::Gf{K->p(), K->desc().modulus});
    std::set<std::int64_t> want(expected.begin(), expected.end());
    CHECK(power_exponents(enumerate_qmaps(K, K)) == want);
  }
}

TEST_CASE("frozen F16 maps") {
  // Computed once by the brute-force oracle.
  const std::set<std::int64_t> frozen{1, 2, 3, 4, 5, 6, 8, 9, 10, 12};
  CHECK(power_exponents(enumerate_qmaps(F(16), F(16))) == frozen);
}

TEST_CASE("classify x^3 on F4") {
  const auto q = power_map(F(4), F(4), 3);
  const Decomposition d = classify(q);
  CHECK(d.branch == Branch::comp_norm);
  REQUIRE(d.algebra);
  CHECK(d.algebra->kind == CompKind::split2);
  CHECK(d.phi1.canonical_exp() == 0);
  CHECK(d.phi2.canonical_exp() == 1);
  CHECK(d.phi1.L()->desc() == F(4)->desc());
  CHECK(verify_decomposition(q, d).ok);
}

TEST_CASE("classify x on F4") {
  const auto q = power_map(F(4), F(4), 1);
  const Decomposition d = classify(q);
  CHECK(d.branch == Branch::char2_hom);
  REQUIRE(d.hom);
  CHECK(d.hom->canonical_exp() == 0);  // q itself is the identity
  CHECK(d.phi1.canonical_exp() == 1);  // its square root is Frobenius^-1
  CHECK(verify_decomposition(q, d).ok);
  for (Elem a = 0; a < 4; ++a) CHECK(F(4)->mul(d.phi1(a), d.phi1(a)) == q(a));
}

TEST_CASE("classify x^2 on F9") {
  const auto q = power_map(F(9), F(9), 2);
  const Decomposition d = classify(q);
  CHECK(d.branch == Branch::comp_norm);
  CHECK(d.algebra->kind == CompKind::dim1);
  CHECK(d.phi1.canonical_exp() == 0);
  CHECK(d.phi2.canonical_exp() == 0);
}

TEST_CASE("classify x^3 from F4 to F2") {
  const auto q = power_map(F(4), F(2), 3);
  const Decomposition d = classify(q);
  CHECK(d.branch == Branch::comp_norm);
  REQUIRE(d.algebra);
  CHECK(d.algebra->kind == CompKind::field2);
  CHECK(d.algebra->dim() == 2);
  CHECK(d.phi1.L()->order() == 4);
  CHECK(d.phi1.canonical_exp() == 0);
  CHECK(d.phi2.canonical_exp() == 1);
  // sigma is an automorphism of M fixing L, of order 2
  const CompositionAlgebra& C = *d.algebra;
  const Algebra& A = C.M.algebra;
  for (std::uint64_t i = 0; i < A.size(); ++i) {
    const Vec x = A.from_index(i);
    CHECK(C.involution(C.involution(x)) == x);
    CHECK(C.M.norm(x) == [&] {
      const Vec n = A.mul(x, C.involution(x));
      return n[0];
    }());
  }
  CHECK(verify_decomposition(q, d).ok);
}

TEST_CASE("comp_kind") {
  auto M_of = [](const QuadMapTable& q) {
    const ExtendedQuadMap qt = extend(table_to_basis(q));
    return quotient_algebra(qt, radical_ext(qt));
  };
  CHECK(comp_kind(M_of(power_map(F(4), F(4), 3))).kind == CompKind::split2);
  CHECK(comp_kind(M_of(power_map(F(4), F(2), 3))).kind == CompKind::field2);
  CHECK(comp_kind(M_of(power_map(F(5), F(5), 2))).kind == CompKind::dim1);
  CHECK(to_string(CompKind::field2) == "field2");
}

TEST_CASE("classify errors") {
  check_throws_code([] { classify(power_map(F(3), F(3), 1)); }, ErrorCode::NotVerified);
  check_throws_code([] { classify(power_map(F(9), F(9), 3)); }, ErrorCode::NotVerified);
  QuadMapBasis mixed{F(4), F(9), {1, 1}, Matrix(2, Vec(2, 0))};
  check_throws_code([&] { classify(mixed); }, ErrorCode::CharMismatch);
}

TEST_CASE("verify_decomposition detects a corrupted pair") {
  const auto q = power_map(F(4), F(4), 3);
  Decomposition d = classify(q);
  d.phi2 = HomSpec(F(4), F(4), 0, 0);
  d.algebra.reset();
  const Report r = verify_decomposition(q, d);
  CHECK_FALSE(r.ok);
  REQUIRE_FALSE(r.witnesses.empty());
  CHECK(r.witnesses[0].check == "product_of_homomorphisms");

  Decomposition swapped = classify(q);
  std::swap(swapped.phi1, swapped.phi2);
  CHECK_FALSE(verify_decomposition(q, swapped).ok);

  const auto id = power_map(F(4), F(4), 1);
  Decomposition h = classify(id);
  CHECK(verify_decomposition(id, h).ok);
  h.phi1 = h.phi2 = HomSpec(F(4), F(4), 0, 0);
  CHECK_FALSE(verify_decomposition(id, h).ok);
}

TEST_CASE("corpus: classification, set equality, determinism") {
  const std::vector<std::uint32_t> orders{2, 4, 8, 16, 3, 9, 5};
  for (auto k : orders)
    for (auto l : orders) {
      const auto K = F(k), L = F(l);
      if (K->p() != L->p()) continue;
      CAPTURE(k);
      CAPTURE(l);
      const auto maps = enumerate_qmaps(K, L);
      std::set<std::vector<Elem>> found;
      for (const auto& q : maps) {
        found.insert(q.values);
        const Decomposition d = classify(q);
        CHECK(verify_decomposition(q, d).ok);
        if (K->p() != 2) CHECK(d.branch == Branch::comp_norm);
        CHECK(to_json(d) == to_json(classify(q)));
      }
      CHECK(found == predicted(K, L));
    }
}
