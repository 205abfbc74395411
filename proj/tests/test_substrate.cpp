#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "mqmap/field.hpp"
#include "mqmap/ring.hpp"
#include "oracle.hpp"

using namespace mqm;

TEST_CASE("make_field picks the smallest irreducible modulus") {
  CHECK(make_field(2, 1)->desc().modulus == Poly{0, 1});
  CHECK(make_field(2, 2)->desc().modulus == Poly{1, 1, 1});
  CHECK(make_field(2, 3)->desc().modulus == Poly{1, 0, 1, 1});
  CHECK(make_field(2, 4)->desc().modulus == Poly{1, 0, 0, 1, 1});
  CHECK(make_field(3, 2)->desc().modulus == Poly{1, 0, 1});
  CHECK(make_field(3, 1)->order() == 3);
  CHECK(make_field(2, 3)->desc() == make_field(2, 3)->desc());
}

TEST_CASE("make_field errors") {
  check_throws_code([] { make_field(2, 2, Poly{1, 0, 1}); }, ErrorCode::Reducible);
  check_throws_code([] { make_field(4, 1); }, ErrorCode::NotPrime);
  check_throws_code([] { make_field(1, 1); }, ErrorCode::NotPrime);
  check_throws_code([] { make_field(2, 0); }, ErrorCode::InvalidArgument);
  check_throws_code([] { make_field(2, 2, Poly{1, 1, 0}); }, ErrorCode::InvalidArgument);
  check_throws_code([] { make_field(2, 2, Poly{1, 1, 2}); }, ErrorCode::InvalidArgument);
  CHECK(make_field(2, 2, Poly{1, 1, 1})->desc().modulus == Poly{1, 1, 1});
}

TEST_CASE("field names") {
  CHECK(parse_field_name("F4")->order() == 4);
  CHECK(parse_field_name("GF(9)")->desc().p == 3);
  check_throws_code([] { parse_field_name("F6"); }, ErrorCode::InvalidArgument);
  check_throws_code([] { parse_field_name("banana"); }, ErrorCode::InvalidArgument);
}

TEST_CASE("F4 arithmetic") {
  const auto K = F(4);
  using namespace f4;
  CHECK(K->mul(t, t) == t1);
  CHECK(K->mul(t, t1) == one);
  CHECK(K->add(t, t1) == one);
  CHECK(K->inv(t) == t1);
  CHECK(K->pow(t, 3) == one);
  CHECK(K->pow(t, -1) == t1);
  check_throws_code([&] { K->inv(0); }, ErrorCode::DivisionByZero);
  CHECK(K->coeffs(t1) == Poly{1, 1});
}

TEST_CASE("frobenius") {
  const auto K = F(4);
  using namespace f4;
  CHECK(K->frobenius(t, 1) == t1);
  CHECK(K->frobenius(t, 2) == t);
  CHECK(K->frobenius(t, -1) == t1);
  CHECK(K->frobenius(t, 0) == t);
  for (auto order : {8u, 9u, 16u, 25u, 27u}) {
    const auto L = F(order);
    for (std::int64_t k = -3; k <= 3; ++k)
      for (Elem a = 0; a < L->order(); ++a) {
        CHECK(L->frobenius(a, k + L->degree()) == L->frobenius(a, k));
        for (Elem b = 0; b < L->order(); ++b) {
          REQUIRE(L->frobenius(L->add(a, b), k) == L->add(L->frobenius(a, k), L->frobenius(b, k)));
          REQUIRE(L->frobenius(L->mul(a, b), k) == L->mul(L->frobenius(a, k), L->frobenius(b, k)));
        }
      }
    for (Elem a = 0; a < L->order(); ++a) CHECK(L->frobenius(L->frobenius(a, 1), -1) == a);
  }
}

TEST_CASE("arithmetic agrees with schoolbook reference") {
  for (auto order : {2u, 3u, 4u, 5u, 8u, 9u, 16u, 25u, 27u, 32u, 49u}) {
    const auto K = F(order);
    const oracle::Gf G{K->p(), K->desc().modulus};
    for (Elem a = 0; a < K->order(); ++a)
      for (Elem b = 0; b < K->order(); ++b) {
        REQUIRE(K->mul(a, b) == G.mul(a, b));
        REQUIRE(K->add(a, b) == G.add(a, b));
        REQUIRE(K->sub(a, b) == G.sub(a, b));
      }
  }
}

TEST_CASE("moduli are irreducible by exhaustive root and factor search") {
  for (auto order : {2u, 4u, 8u, 16u, 3u, 9u, 27u, 5u, 25u, 7u, 49u, 64u, 81u}) {
    const auto K = F(order);
    const oracle::Gf G{K->p(), K->desc().modulus};
    // no proper factor: every nonzero element has an inverse
    for (Elem a = 1; a < K->order(); ++a) {
      bool has_inverse = false;
      for (Elem b = 1; b < K->order() && !has_inverse; ++b) has_inverse = G.mul(a, b) == 1;
      REQUIRE(has_inverse);
    }
  }
  CHECK_FALSE(is_irreducible(2, Poly{1, 0, 1}));
  CHECK_FALSE(is_irreducible(2, Poly{1, 1, 1, 1}));
  CHECK(is_irreducible(3, Poly{2, 2, 1}));
}

TEST_CASE("generators") {
  CHECK(find_generator(*F(2)) == 1);
  CHECK(find_generator(*F(4)) == f4::t);
  CHECK(find_generator(*F(3)) == 2);
  for (auto order : {5u, 7u, 8u, 9u, 16u, 25u}) {
    const auto K = F(order);
    const Elem g = find_generator(*K);
    CHECK(g == K->generator());
    std::set<Elem> seen;
    Elem x = 1;
    for (std::uint32_t k = 0; k + 1 < K->order(); ++k, x = K->mul(x, g)) seen.insert(x);
    CHECK(seen.size() == K->order() - 1);
    // nothing lexicographically smaller generates
    for (std::uint32_t key = 0; key < K->lex_key(g); ++key) {
      const Elem y = K->from_lex_key(key);
      if (y == 0) continue;
      std::uint32_t ord = 1;
      for (Elem z = y; z != 1; z = K->mul(z, y)) ++ord;
      CHECK(ord < K->order() - 1);
    }
  }
}

TEST_CASE("dlog") {
  const auto K = F(4);
  CHECK(dlog(*K, 1, f4::t) == 0);
  CHECK(dlog(*K, f4::t1, f4::t) == 2);
  check_throws_code([&] { dlog(*K, 0, f4::t); }, ErrorCode::ZeroArgument);
  for (auto order : {9u, 16u, 49u}) {
    const auto L = F(order);
    const Elem g = L->generator();
    for (std::int64_t k = 0; k + 1 < L->order(); ++k) REQUIRE(dlog(*L, L->pow(g, k), g) == std::uint64_t(k));
  }
}

TEST_CASE("embeddings") {
  CHECK(embeddings(F(2), F(4)).size() == 1);
  const auto e44 = embeddings(F(4), F(4));
  REQUIRE(e44.size() == 2);
  CHECK(e44[0].root == f4::t);
  CHECK(e44[1].root == f4::t1);
  CHECK(embeddings(F(4), F(8)).empty());
  check_throws_code([] { embeddings(F(4), F(9)); }, ErrorCode::CharMismatch);
  for (auto [k, l] : {std::pair{4u, 16u}, {2u, 8u}, {8u, 64u}, {9u, 81u}, {3u, 9u}, {16u, 16u}}) {
    const auto K = F(k), L = F(l);
    const auto es = embeddings(K, L);
    REQUIRE(es.size() == K->degree());
    for (std::size_t i = 0; i < es.size(); ++i) {
      const auto& e = es[i];
      std::set<Elem> image(e.image.begin(), e.image.end());
      CHECK(image.size() == K->order());
      for (Elem a = 0; a < K->order(); ++a) {
        REQUIRE(e(a) == L->frobenius(es[0](a), static_cast<std::int64_t>(i)));
        for (Elem b = 0; b < K->order(); ++b) {
          REQUIRE(e(K->add(a, b)) == L->add(e(a), e(b)));
          REQUIRE(e(K->mul(a, b)) == L->mul(e(a), e(b)));
        }
      }
      for (std::size_t j = 0; j < i; ++j) CHECK(es[j].image != e.image);
    }
  }
}

TEST_CASE("embedding 0 of a proper extension uses the smallest root") {
  const auto K = F(4), L = F(16);
  const auto es = embeddings(K, L);
  Elem best = es[0].root;
  for (const auto& e : es) CHECK(L->lex_key(best) <= L->lex_key(e.root));
}

TEST_CASE("ring tables") {
  const auto z4 = zmod_ring(4);
  CHECK(z4->size() == 4);
  CHECK(z4->mul(2, 2) == 0);
  CHECK(z4->add(3, 3) == 2);
  CHECK(z4->characteristic() == 4);
  const auto f4 = ring_of(*F(4));
  CHECK(f4->size() == 4);
  CHECK(f4->mul(f4::t, f4::t) == f4::t1);
  const auto prod = product_ring(*F(2), *F(2));
  CHECK(prod->size() == 4);
  CHECK(prod->mul(2, 1) == 0);  // (1,0)(0,1)
  CHECK(prod->one() == 3);
}

TEST_CASE("broken tables are rejected") {
  // Z/2 addition with multiplication 1*1 = 0 and 0*0 = 1: not distributive
  check_throws_code(
      [] { RingTable::make(2, {0, 1, 1, 0}, {1, 0, 0, 0}, 0, 1); }, ErrorCode::AxiomViolation);
  // noncommutative multiplication
  check_throws_code(
      [] { RingTable::make(2, {0, 1, 1, 0}, {0, 1, 0, 1}, 0, 1); }, ErrorCode::AxiomViolation);
  check_throws_code([] { RingTable::make(2, {0, 1, 1}, {0, 0, 0, 1}, 0, 1); }, ErrorCode::InvalidArgument);
  check_throws_code([] { zmod_ring(5000); }, ErrorCode::TooLarge);
  CHECK(RingTable::make(2, {0, 1, 1, 0}, {0, 0, 0, 1}, 0, 1)->size() == 2);
}
