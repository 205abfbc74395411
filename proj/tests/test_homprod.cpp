#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mqmap/homprod.hpp"

using namespace mqm;

namespace {

std::vector<HomSpec> homs(const FieldPtr& K, const FieldPtr& L, std::initializer_list<std::int64_t> exps) {
  std::vector<HomSpec> out;
  for (auto e : exps) out.emplace_back(K, L, 0, e);
  return out;
}

ProductMap prod(const FieldPtr& K, std::initializer_list<std::int64_t> exps) {
  return make_product(homs(K, K, exps));
}

// Every tuple of length n of the deg K Frobenius powers.
std::vector<std::vector<HomSpec>> tuples(const FieldPtr& K, const FieldPtr& L, std::size_t n) {
  std::vector<std::vector<HomSpec>> out{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<HomSpec>> next;
    for (const auto& t : out)
      for (std::uint32_t k = 0; k < K->degree(); ++k) {
        auto u = t;
        u.emplace_back(K, L, 0, k);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("HomSpec") {
  const auto K = F(4), L = F(16);
  const HomSpec h(K, L, 1, 0), g(K, L, 0, 1), id(K, L, 0, 0);
  CHECK(h.same_map(g));
  CHECK_FALSE(h.same_map(id));
  CHECK(h.canonical_exp() == 1);
  CHECK(HomSpec(K, K, 0, -1).canonical_exp() == 1);
  CHECK(HomSpec(K, K, 0, 5).formal_exp() == 5);
  CHECK(id.twisted(1).same_map(g));
  CHECK(id.twisted(-1).same_map(g));
  check_throws_code([&] { HomSpec(K, L, 2, 0); }, ErrorCode::InvalidArgument);
  check_throws_code([&] { HomSpec(K, F(8), 0, 0); }, ErrorCode::InvalidArgument);
  for (std::uint32_t e = 0; e < 2; ++e)
    for (std::int64_t k = -2; k < 3; ++k) {
      const HomSpec s(K, L, e, k);
      for (Elem a = 0; a < 4; ++a)
        for (Elem b = 0; b < 4; ++b) {
          REQUIRE(s(K->add(a, b)) == L->add(s(a), s(b)));
          REQUIRE(s(K->mul(a, b)) == L->mul(s(a), s(b)));
        }
    }
  const auto t = identify_hom(K, K, {0, 1, 3, 2});
  REQUIRE(t);
  CHECK(t->canonical_exp() == 1);
  CHECK_FALSE(identify_hom(K, K, {0, 1, 1, 1}));
}

TEST_CASE("product_eval") {
  const auto K = F(4);
  CHECK(product_eval(prod(K, {0, 1}), f4::t) == 1);
  for (Elem x = 0; x < 4; ++x) CHECK(product_eval(prod(K, {0}), x) == x);
  CHECK(product_eval(prod(K, {1, 1, 1}), f4::t) == 1);
  check_throws_code([] { make_product({}); }, ErrorCode::InvalidArgument);
  check_throws_code([&] { make_product({HomSpec(K, K, 0, 0), HomSpec(K, F(16), 0, 0)}); },
                    ErrorCode::InvalidArgument);
}

TEST_CASE("products_equal") {
  const auto K = F(4);
  CHECK(products_equal(prod(K, {1, 1, 1}), prod(K, {2, 0, 0})).equal);
  const auto ne = products_equal(prod(K, {0}), prod(K, {1}));
  CHECK_FALSE(ne.equal);
  CHECK(ne.witness == f4::t);
  CHECK(products_equal(prod(K, {0, 0}), prod(K, {1})).equal);
}

TEST_CASE("products over mixed embedding indices") {
  const auto K = F(4), L = F(16);
  const ProductMap P = make_product({HomSpec(K, L, 1, 0), HomSpec(K, L, 0, 0)});
  const ProductMap Q = make_product({HomSpec(K, L, 0, 1), HomSpec(K, L, 1, 1)});
  CHECK(products_equal(P, Q).equal);
  const ProductMap R = make_product({HomSpec(K, L, 1, 1), HomSpec(K, L, 1, 0)});
  CHECK(products_equal(P, R).equal);
  const ProductMap S = make_product({HomSpec(K, L, 1, 0), HomSpec(K, L, 1, 0)});
  CHECK_FALSE(products_equal(P, S).equal);
}

TEST_CASE("exponent route agrees with pointwise evaluation") {
  for (auto [k, l] : {std::pair{4u, 4u}, {8u, 8u}, {9u, 9u}, {4u, 16u}, {3u, 9u}}) {
    const auto K = F(k), L = F(l);
    std::vector<std::vector<HomSpec>> all;
    for (std::size_t n = 1; n <= 3; ++n)
      for (auto& t : tuples(K, L, n)) all.push_back(t);
    for (const auto& a : all)
      for (const auto& b : all) {
        const ProductMap P = make_product(a), Q = make_product(b);
        bool pointwise = true;
        for (Elem x = 0; x < K->order(); ++x) pointwise = pointwise && product_eval(P, x) == product_eval(Q, x);
        // products_equal throws Inconsistency if its two routes disagree
        REQUIRE(products_equal(P, Q).equal == pointwise);
      }
  }
}

TEST_CASE("artin_check") {
  const auto K = F(4);
  CHECK(artin_check(homs(K, K, {0, 1})).independent);
  CHECK(artin_check(homs(K, K, {0})).independent);
  const ArtinResult dup = artin_check(homs(K, K, {0, 0}));
  CHECK_FALSE(dup.independent);
  CHECK(dup.dependence == Vec{1, K->neg(1)});
  const ArtinResult dup9 = artin_check(homs(F(9), F(9), {1, 1}));
  CHECK(dup9.dependence == Vec{1, 2});
  check_throws_code([] { artin_check(homs(make_field(2, 13), make_field(2, 13), {0})); }, ErrorCode::TooLarge);
}

TEST_CASE("artin_check on distinct tuples") {
  for (auto [k, l] : {std::pair{4u, 4u}, {8u, 8u}, {16u, 16u}, {9u, 9u}, {4u, 16u}, {2u, 16u}, {3u, 9u}}) {
    const auto K = F(k), L = F(l);
    std::vector<HomSpec> all;
    for (const auto& e : embeddings(K, L)) all.emplace_back(K, L, e.index, 0);
    for (std::uint32_t mask = 1; mask < (1u << all.size()); ++mask) {
      std::vector<HomSpec> pick;
      for (std::size_t i = 0; i < all.size(); ++i)
        if (mask >> i & 1) pick.push_back(all[i]);
      if (pick.size() > 4) continue;
      CHECK(artin_check(pick).independent);
    }
  }
}

TEST_CASE("symmetrized_sum") {
  const auto K = F(4);
  using namespace f4;
  CHECK(symmetrized_sum(homs(K, K, {0, 0}), {t, t}) == 0);
  CHECK(symmetrized_sum(homs(K, K, {0, 1}), {one, t}) == 1);
  CHECK(symmetrized_sum(homs(K, K, {0}), {t}) == t);
  check_throws_code([&] { symmetrized_sum(homs(K, K, {0, 0, 0, 0, 0, 0, 0}), Vec(7, 1)); },
                    ErrorCode::TooManyFactors);
  check_throws_code([&] { symmetrized_sum(homs(K, K, {0, 0}), {1}); }, ErrorCode::InvalidArgument);
}

TEST_CASE("polarized_sum") {
  const auto K = F(4), K9 = F(9);
  using namespace f4;
  CHECK(polarized_sum(homs(K, K, {0}), {t}) == K->neg(t));
  CHECK(polarized_sum(homs(K9, K9, {0}), {4}) == K9->neg(4));
  CHECK(polarized_sum(homs(K, K, {0, 1}), {one, t}) == symmetrized_sum(homs(K, K, {0, 1}), {one, t}));
  check_throws_code([&] { polarized_sum(homs(K, K, {0, 0, 0, 0, 0, 0, 0}), Vec(7, 1)); },
                    ErrorCode::TooManyFactors);
}

TEST_CASE("polarization sign identity, n <= 3 exhaustive over F4") {
  const auto K = F(4);
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& s : tuples(K, K, n)) {
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < n; ++i) total *= 4;
      for (std::uint64_t c = 0; c < total; ++c) {
        Vec xs(n);
        std::uint64_t r = c;
        for (auto& x : xs) {
          x = static_cast<Elem>(r % 4);
          r /= 4;
        }
        const Elem sym = symmetrized_sum(s, xs);
        REQUIRE(polarized_sum(s, xs) == (n % 2 ? K->neg(sym) : sym));
      }
    }
}

TEST_CASE("symsum_vanishes") {
  const auto K = F(4);
  const auto a = symsum_vanishes(homs(K, K, {0, 0}));
  CHECK(a.vanishes);
  CHECK(a.structural);
  CHECK(a.evaluations == 16);
  const auto b = symsum_vanishes(homs(K, K, {0, 1}));
  CHECK_FALSE(b.vanishes);
  CHECK_FALSE(b.structural);
  CHECK(b.witness == Vec{1, f4::t});
  const auto c = symsum_vanishes(homs(F(9), F(9), {0}));
  CHECK_FALSE(c.vanishes);
  CHECK(c.witness == Vec{1});
  CHECK_FALSE(symsum_vanishes(homs(F(9), F(9), {0, 0})).vanishes);
  CHECK(symsum_vanishes(homs(F(9), F(9), {1, 1, 1})).vanishes);
  check_throws_code([] { symsum_vanishes(homs(F(16), F(16), {0, 0, 0, 0, 0, 0})); }, ErrorCode::TooLarge);
}

TEST_CASE("symsum biconditional for n <= 3") {
  for (auto order : {4u, 8u, 9u}) {
    const auto K = F(order);
    for (std::size_t n = 1; n <= 3; ++n)
      for (const auto& s : tuples(K, K, n)) {
        const auto r = symsum_vanishes(s);
        REQUIRE(r.vanishes == r.structural);
      }
  }
}

TEST_CASE("theorem14_verdict examples") {
  const auto K = F(4);
  const ProductMap P = prod(K, {1, 1, 1}), Q = prod(K, {2, 0, 0});
  const Verdict v = theorem14_verdict(P, Q);
  CHECK(v.tag == VerdictTag::case2);
  CHECK_FALSE(v.swapped);
  CHECK(v.equal_indices == std::vector<std::size_t>{0, 1});
  REQUIRE(v.tau_twists.size() == 3);
  CHECK(v.tau_twists[0].l == 1);
  CHECK(v.tau_twists[0].source == 0);
  CHECK(v.tau_twists[1].l == -1);
  CHECK(v.tau_twists[0].lower == -2);
  CHECK(v.tau_twists[0].upper == 2);
  CHECK(verify_verdict(P, Q, v));

  const auto K9 = F(9);
  const Verdict c1 = theorem14_verdict(prod(K9, {0, 1}), prod(K9, {1, 0}));
  CHECK(c1.tag == VerdictTag::case1);
  CHECK(c1.permutation == std::vector<std::size_t>{1, 0});

  const ProductMap sq = prod(K, {0, 0}), fr = prod(K, {1});
  const Verdict c2 = theorem14_verdict(sq, fr);
  CHECK(c2.tag == VerdictTag::case2);
  REQUIRE(c2.tau_twists.size() == 1);
  CHECK(c2.tau_twists[0].l == 1);
  CHECK(c2.tau_twists[0].lower == 0);
  CHECK(c2.tau_twists[0].upper == 1);
  REQUIRE(c2.sigma_twists.size() == 2);
  CHECK(c2.sigma_twists[0].l == -1);
  CHECK(c2.sigma_twists[0].lower == -1);
  CHECK(c2.sigma_twists[0].upper == 0);

  const Verdict sw = theorem14_verdict(fr, sq);
  CHECK(sw.swapped);
  CHECK(sw.tag == VerdictTag::case2);
  CHECK(verify_verdict(fr, sq, sw));

  const Verdict ne = theorem14_verdict(prod(K, {0}), prod(K, {1}));
  CHECK(ne.tag == VerdictTag::not_equal);
  CHECK(ne.witness == f4::t);
  CHECK(verify_verdict(prod(K, {0}), prod(K, {1}), ne));
}

TEST_CASE("tampered verdicts fail re-verification") {
  const auto K = F(4);
  const ProductMap P = prod(K, {1, 1, 1}), Q = prod(K, {2, 0, 0});
  Verdict v = theorem14_verdict(P, Q);
  Verdict bad_l = v;
  bad_l.tau_twists[0].l = 3;
  CHECK_FALSE(verify_verdict(P, Q, bad_l));
  Verdict bad_bound = v;
  bad_bound.tau_twists[0].upper = 5;
  CHECK_FALSE(verify_verdict(P, Q, bad_bound));
  Verdict bad_idx = v;
  bad_idx.equal_indices = {0};
  CHECK_FALSE(verify_verdict(P, Q, bad_idx));
  const auto K9 = F(9);
  Verdict c1 = theorem14_verdict(prod(K9, {0, 1}), prod(K9, {1, 0}));
  c1.permutation = {0, 1};
  CHECK_FALSE(verify_verdict(prod(K9, {0, 1}), prod(K9, {1, 0}), c1));
}

TEST_CASE("theorem14_scan") {
  const ScanReport a = theorem14_scan(F(4), F(4), 3, 3);
  CHECK(a.inconsistencies.empty());
  CHECK(a.case2 >= 1);
  const ScanReport b = theorem14_scan(F(9), F(9), 2, 2);
  CHECK(b.inconsistencies.empty());
  CHECK(b.case2 == 0);
  CHECK(b.case1 == b.equal_pairs);
  const ScanReport c = theorem14_scan(F(9), F(9), 3, 1);
  CHECK(c.inconsistencies.empty());
  CHECK(c.case2 >= 1);
  CHECK(products_equal(prod(F(9), {0, 0, 0}), prod(F(9), {1})).equal);
  CHECK(theorem14_verdict(prod(F(9), {0, 0, 0}), prod(F(9), {1})).tag == VerdictTag::case2);
  check_throws_code([] { theorem14_scan(F(16), F(16), 11, 1); }, ErrorCode::TooLarge);
}

TEST_CASE("scan over a proper extension") {
  const ScanReport r = theorem14_scan(F(4), F(16), 3, 3);
  CHECK(r.inconsistencies.empty());
  const ScanReport s = theorem14_scan(F(8), F(8), 3, 3);
  CHECK(s.inconsistencies.empty());
}
