#include <doctest.h>

#include "helpers.hpp"
#include "mqmap/classify.hpp"
#include "mqmap/tensor.hpp"

using namespace mqm;

namespace {

std::vector<Vec> idempotents(const Algebra& A) {
  std::vector<Vec> out;
  for (std::uint64_t i = 0; i < A.size(); ++i) {
    const Vec x = A.from_index(i);
    if (A.mul(x, x) == x) out.push_back(x);
  }
  return out;
}

bool has_zero_divisors(const Algebra& A) {
  for (std::uint64_t i = 1; i < A.size(); ++i)
    for (std::uint64_t j = 1; j < A.size(); ++j)
      if (A.index(A.mul(A.from_index(i), A.from_index(j))) == 0) return true;
  return false;
}

}  // namespace

TEST_CASE("build_tensor examples") {
  const TensorAlgebra a = build_tensor(F(2), F(4));
  CHECK(a.dim == 1);
  CHECK(a.size() == 4);
  CHECK_FALSE(has_zero_divisors(a));

  const TensorAlgebra b = build_tensor(F(4), F(4));
  CHECK(b.dim == 2);
  CHECK(b.struct_consts[1 * 2 + 1] == Vec{1, 1});  // e2^2 = e2 + 1
  CHECK(b.unit == Vec{1, 0});
  CHECK(idempotents(b).size() == 4);  // 0, 1 and one nontrivial pair

  const TensorAlgebra c = build_tensor(F(4), F(8));
  CHECK(c.dim == 2);
  CHECK(idempotents(c).size() == 2);
  CHECK_FALSE(has_zero_divisors(c));

  check_throws_code([] { build_tensor(F(4), F(9)); }, ErrorCode::CharMismatch);
}

TEST_CASE("the embedding into the tensor algebra is a ring map") {
  for (auto [k, l] : {std::pair{4u, 4u}, {8u, 4u}, {9u, 3u}, {16u, 2u}}) {
    const auto K = F(k);
    const TensorAlgebra A = build_tensor(K, F(l));
    CHECK(A.embed(1) == A.unit);
    for (Elem x = 0; x < K->order(); ++x)
      for (Elem y = 0; y < K->order(); ++y) {
        REQUIRE(A.embed(K->mul(x, y)) == A.mul(A.embed(x), A.embed(y)));
        REQUIRE(A.embed(K->add(x, y)) == A.add(A.embed(x), A.embed(y)));
      }
  }
}

TEST_CASE("extend examples") {
  const auto cube = table_to_basis(power_map(F(4), F(4), 3));
  const ExtendedQuadMap qt = extend(cube);
  CHECK(qt.form.basis_vals == Vec{1, 1});
  CHECK(qt.form.gram[0][1] == 1);
  const Field& L = *qt.form.L;
  for (Elem l1 = 0; l1 < 4; ++l1)
    for (Elem l2 = 0; l2 < 4; ++l2) {
      const Elem expected = L.add(L.add(L.mul(l1, l1), L.mul(l2, l2)), L.mul(l1, l2));
      CHECK(qt(Vec{l1, l2}) == expected);
    }
  for (Elem x = 0; x < 4; ++x) CHECK(qt(qt.algebra.embed(x)) == power_map(F(4), F(4), 3)(x));

  const ExtendedQuadMap sq = extend(table_to_basis(power_map(F(5), F(5), 2)));
  for (Elem l = 0; l < 5; ++l) CHECK(sq(Vec{l}) == F(5)->mul(l, l));
}

TEST_CASE("verify_extension") {
  const ExtendedQuadMap cube = extend(table_to_basis(power_map(F(4), F(4), 3)));
  const Report r = verify_extension(cube);
  CHECK(r.ok);
  CHECK(r.checks[0].evaluations == 256);
  CHECK(verify_extension(extend(table_to_basis(power_map(F(9), F(9), 2)))).ok);

  ExtendedQuadMap bad = cube;
  bad.form.gram[0][1] = 0;
  const Report rb = verify_extension(bad);
  CHECK_FALSE(rb.ok);
  REQUIRE_FALSE(rb.witnesses.empty());
  CHECK(rb.witnesses[0].args.size() == 2);
}

TEST_CASE("large algebras use the grid or refuse") {
  const ExtendedQuadMap qt = extend(table_to_basis(power_map(F(16), F(16), 3)));
  const Report r = verify_extension(qt);
  CHECK(r.ok);
  CHECK(r.checks[0].mode == CheckMode::grid);
  ExtendedQuadMap bad = qt;
  bad.form.gram[1][3] = F(16)->add(bad.form.gram[1][3], 1);
  const Report rb = verify_extension(bad);
  CHECK_FALSE(rb.ok);
  CHECK(rb.checks[0].mode == CheckMode::grid);
  CheckConfig cfg;
  cfg.exhaustive_bound = 1000;
  check_throws_code([&] { verify_extension(qt, cfg); }, ErrorCode::TooLarge);
}

TEST_CASE("radical_ext and quotient_algebra") {
  const ExtendedQuadMap cube = extend(table_to_basis(power_map(F(4), F(4), 3)));
  const LinearSubspace rad = radical_ext(cube);
  CHECK(rad.dim() == 0);
  CHECK(rad.ideal);
  const QuotientAlgebra M = quotient_algebra(cube, rad);
  CHECK(M.algebra.dim == 2);

  // char 2 homomorphism x -> x: the form vanishes, and q~ only vanishes at 0
  const ExtendedQuadMap id = extend(table_to_basis(power_map(F(4), F(4), 1)));
  for (std::uint32_t i = 0; i < 2; ++i)
    for (std::uint32_t j = 0; j < 2; ++j) CHECK(id.form.gram_full(i, j) == 0);
  CHECK(radical_ext(id).dim() == 1);

  const ExtendedQuadMap sq = extend(table_to_basis(power_map(F(3), F(3), 2)));
  CHECK(radical_ext(sq).dim() == 0);
}

TEST_CASE("Frobenius-semilinear radical of the identity on F4") {
  // q~(l1, l2) = l1^2 + t l2^2 = (l1 + s l2)^2 with s^2 = t, so the radical
  // is the line through (s, 1).
  const ExtendedQuadMap id = extend(table_to_basis(power_map(F(4), F(4), 1)));
  const LinearSubspace rad = radical_ext(id);
  REQUIRE(rad.members.size() == 4);
  for (auto idx : rad.members) CHECK(id(id.algebra.from_index(idx)) == 0);
  const QuotientAlgebra M = quotient_algebra(id, rad);
  CHECK(M.algebra.dim == 1);
  CHECK(radical_ext(ExtendedQuadMap{TensorAlgebra{M.algebra, F(4)}, M.norm}).dim() == 0);
}

TEST_CASE("split quotient of F4 (x) F4 has norm x1 x2 on idempotent coordinates") {
  const ExtendedQuadMap cube = extend(table_to_basis(power_map(F(4), F(4), 3)));
  const QuotientAlgebra M = quotient_algebra(cube, radical_ext(cube));
  const auto ids = idempotents(M.algebra);
  REQUIRE(ids.size() == 4);
  Vec e;
  for (const auto& x : ids)
    if (x != Vec{0, 0} && x != M.algebra.unit) e = x;
  const Vec f = M.algebra.add(M.algebra.unit, M.algebra.scale(F(4)->neg(1), e));
  const Field& L = *M.algebra.L;
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) {
      const Vec x = M.algebra.add(M.algebra.scale(a, e), M.algebra.scale(b, f));
      CHECK(M.norm(x) == L.mul(a, b));
    }
}

TEST_CASE("properties over the corpus") {
  for (auto order : {4u, 8u, 9u}) {
    const auto K = F(order);
    for (const auto& q : enumerate_qmaps(K, K)) {
      const QuadMapBasis b = table_to_basis(q);
      const ExtendedQuadMap qt = extend(b);
      for (Elem x = 0; x < K->order(); ++x) REQUIRE(qt(qt.algebra.embed(x)) == q(x));
      CHECK(verify_extension(qt).ok);
      const LinearSubspace rad = radical_ext(qt);
      CHECK(rad.ideal);
      for (auto m : rad.members) {
        const Vec v = qt.algebra.from_index(m);
        for (std::uint32_t i = 0; i < qt.algebra.dim; ++i)
          CHECK(std::binary_search(rad.members.begin(), rad.members.end(),
                                   qt.algebra.index(qt.algebra.mul(v, qt.algebra.basis(i)))));
      }
      const QuotientAlgebra M = quotient_algebra(qt, rad);
      CHECK(M.algebra.dim <= 2);
    }
  }
}
