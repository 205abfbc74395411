#include "mqmap/classify.hpp"

#include <algorithm>

namespace mqm {

std::string to_string(CompKind k) {
  switch (k) {
    case CompKind::dim1: return "dim1";
    case CompKind::split2: return "split2";
    case CompKind::field2: return "field2";
  }
  return "unknown";
}

std::string to_string(Branch b) {
  return b == Branch::comp_norm ? "comp_norm" : "char2_hom";
}

namespace {

[[noreturn]] void inconsistent(const std::string& what, std::vector<Elem> w = {}) {
  throw Error(ErrorCode::Inconsistency, what, std::move(w));
}

// c with multiple = c * base.
Elem coefficient_of(const Field& L, const Vec& multiple, const Vec& base) {
  const auto k = static_cast<std::size_t>(
      std::find_if(base.begin(), base.end(), [](Elem x) { return x != 0; }) - base.begin());
  if (k == base.size()) inconsistent("coefficient against the zero vector");
  const Elem c = L.div(multiple[k], base[k]);
  if (vec_scale(L, c, base) != multiple) inconsistent("vector is not a multiple of the base vector");
  return c;
}

}  // namespace

std::pair<Elem, Elem> CompositionAlgebra::split_on_w(const Vec& x) const {
  const Field& L = *base();
  const Vec& u = M.algebra.unit;
  const Elem det = L.sub(L.mul(u[0], w[1]), L.mul(u[1], w[0]));
  const Elem a = L.div(L.sub(L.mul(x[0], w[1]), L.mul(x[1], w[0])), det);
  const Elem b = L.div(L.sub(L.mul(u[0], x[1]), L.mul(u[1], x[0])), det);
  return {a, b};
}

Elem CompositionAlgebra::to_extension(const Vec& x) const {
  const auto [a, b] = split_on_w(x);
  return extension->add(base_image[a], extension->mul(base_image[b], root));
}

std::pair<Elem, Elem> CompositionAlgebra::split_coords(const Vec& x) const {
  const Algebra& A = M.algebra;
  const Vec other = vec_add(*A.L, A.unit, vec_scale(*A.L, A.L->neg(1), idempotent));
  return {coefficient_of(*A.L, A.mul(x, idempotent), idempotent),
          coefficient_of(*A.L, A.mul(x, other), other)};
}

Vec CompositionAlgebra::involution(const Vec& x) const {
  const Algebra& A = M.algebra;
  switch (kind) {
    case CompKind::dim1:
      return x;
    case CompKind::split2: {
      const auto [c1, c2] = split_coords(x);
      const Vec other = A.add(A.unit, A.scale(A.L->neg(1), idempotent));
      return A.add(A.scale(c2, idempotent), A.scale(c1, other));
    }
    case CompKind::field2: {
      const auto [a, b] = split_on_w(x);
      return A.add(A.scale(a, A.unit), A.scale(b, sigma_w));
    }
  }
  return x;
}

CompositionAlgebra comp_kind(const QuotientAlgebra& M) {
  const Algebra& A = M.algebra;
  const Field& L = *A.L;
  if (A.dim == 0 || A.dim > 2)
    throw Error(ErrorCode::UnexpectedDimension,
                "commutative composition algebra of dimension " + std::to_string(A.dim));
  CompositionAlgebra C;
  C.M = M;
  const QuadForm& N = M.norm;
  if (N(A.unit) != 1) inconsistent("N(1) != 1");
  {
    Matrix g(A.dim, Vec(A.dim));
    for (std::uint32_t i = 0; i < A.dim; ++i)
      for (std::uint32_t j = 0; j < A.dim; ++j) g[i][j] = N.gram_full(i, j);
    if (row_reduce(L, g, A.dim).rank() != A.dim) inconsistent("bilinear form of N is degenerate");
  }
  const std::uint64_t size = A.size();

  if (A.dim == 1) {
    C.kind = CompKind::dim1;
    for (std::uint64_t k = 0; k < size; ++k) {
      const Vec x = A.from_index(k);
      const Elem c = coefficient_of(L, x, A.unit);
      if (N(x) != L.mul(c, c)) inconsistent("dim1 norm is not x^2", {Elem(k)});
    }
    return C;
  }

  for (std::uint64_t k = 1; k < size; ++k) {
    const Vec e = A.from_index(k);
    if (e != A.unit && A.mul(e, e) == e) {
      C.idempotent = e;
      break;
    }
  }
  if (!C.idempotent.empty()) {
    C.kind = CompKind::split2;
    for (std::uint64_t k = 0; k < size; ++k) {
      const auto [c1, c2] = C.split_coords(A.from_index(k));
      if (N(A.from_index(k)) != L.mul(c1, c2)) inconsistent("split norm is not x1 x2", {Elem(k)});
    }
    return C;
  }

  C.kind = CompKind::field2;
  const Vec& u = A.unit;
  C.w = u[0] != 0 ? A.basis(1) : A.basis(0);  // not a multiple of 1
  const auto [alpha, beta] = C.split_on_w(A.mul(C.w, C.w));
  std::vector<Vec> conjugates;
  for (std::uint64_t k = 0; k < size; ++k) {
    const Vec v = A.from_index(k);
    if (v == C.w || C.split_on_w(v).second == 0) continue;
    if (A.mul(v, v) == A.add(A.scale(alpha, u), A.scale(beta, v))) conjugates.push_back(v);
  }
  if (conjugates.size() != 1) inconsistent("expected exactly one nontrivial automorphism");
  C.sigma_w = conjugates.front();

  if (size * size <= (std::uint64_t{1} << 24)) {
    for (std::uint64_t a = 0; a < size; ++a)
      for (std::uint64_t b = a; b < size; ++b) {
        const Vec x = A.from_index(a), y = A.from_index(b);
        if (C.involution(A.mul(x, y)) != A.mul(C.involution(x), C.involution(y)))
          inconsistent("sigma is not multiplicative", {Elem(a), Elem(b)});
      }
  }
  for (std::uint64_t k = 0; k < size; ++k) {
    const Vec x = A.from_index(k);
    if (A.mul(x, C.involution(x)) != A.scale(N(x), u)) inconsistent("norm is not x x^sigma", {Elem(k)});
  }

  C.extension = make_field(L.p(), 2 * L.degree());
  const Field& E = *C.extension;
  const auto to_E = embeddings(A.L, C.extension);
  C.base_image = to_E.front().image;
  const Elem a_img = C.base_image[alpha], b_img = C.base_image[beta];
  bool found = false;
  for (std::uint32_t key = 0; key < E.order() && !found; ++key) {
    const Elem r = E.from_lex_key(key);
    if (E.sub(E.sub(E.mul(r, r), E.mul(b_img, r)), a_img) == 0) {
      C.root = r;
      found = true;
    }
  }
  if (!found) inconsistent("quadratic extension has no root of the minimal polynomial");
  return C;
}

std::pair<HomSpec, HomSpec> hom_pair(const CompositionAlgebra& C, const FieldPtr& K,
                                     const std::vector<Vec>& phi) {
  const FieldPtr& L = C.base();
  std::vector<Elem> t1(K->order()), t2(K->order());
  FieldPtr target = L;
  for (Elem x = 0; x < K->order(); ++x) {
    switch (C.kind) {
      case CompKind::dim1:
        t1[x] = t2[x] = coefficient_of(*L, phi[x], C.M.algebra.unit);
        break;
      case CompKind::split2:
        std::tie(t1[x], t2[x]) = C.split_coords(phi[x]);
        break;
      case CompKind::field2:
        target = C.extension;
        t1[x] = C.to_extension(phi[x]);
        t2[x] = C.to_extension(C.involution(phi[x]));
        break;
    }
  }
  auto h1 = identify_hom(K, target, t1);
  auto h2 = identify_hom(K, target, t2);
  if (!h1 || !h2) inconsistent("coordinate of phi is not a field homomorphism");
  if (h1->canonical_exp() > h2->canonical_exp()) std::swap(h1, h2);
  return {*h1, *h2};
}

Report verify_decomposition(const QuadMapTable& q, const Decomposition& d) {
  const FieldPtr K = d.phi1.K();
  Report report;
  const auto L = std::dynamic_pointer_cast<const Field>(q.codomain);
  if (!K || !L || q.domain->size() != K->order()) {
    report.add({"shape", false, CheckMode::exhaustive, 0},
               Witness{"shape", {}, "decomposition does not match the map's domain"});
    return report;
  }
  const FieldPtr& T = d.phi1.L();

  {
    CheckResult r{"normalization", d.phi1.canonical_exp() <= d.phi2.canonical_exp(), CheckMode::exhaustive, 1};
    report.add(r, r.ok ? std::nullopt
                       : std::optional<Witness>(Witness{"normalization", {}, "phi1 exponent exceeds phi2"}));
  }

  if (d.branch == Branch::comp_norm) {
    const auto to_T = embeddings(L, T);
    CheckResult r{"product_of_homomorphisms", true, CheckMode::exhaustive, 0};
    std::optional<Witness> w;
    for (Elem a = 0; a < K->order(); ++a) {
      ++r.evaluations;
      if (T->mul(d.phi1(a), d.phi2(a)) != to_T.front()(q(a))) {
        r.ok = false;
        w = Witness{r.name, {a}, "q(a) != phi1(a) phi2(a)"};
        break;
      }
    }
    report.add(r, w);
    if (d.algebra && d.phi.size() == K->order()) {
      CheckResult n{"norm_of_phi", true, CheckMode::exhaustive, 0};
      std::optional<Witness> wn;
      for (Elem a = 0; a < K->order(); ++a) {
        ++n.evaluations;
        if (d.algebra->M.norm(d.phi[a]) != q(a)) {
          n.ok = false;
          wn = Witness{n.name, {a}, "N(phi(a)) != q(a)"};
          break;
        }
      }
      report.add(n, wn);
    }
    return report;
  }

  const HomSpec& phi = d.phi1;
  CheckResult hom{"phi_homomorphism", true, CheckMode::exhaustive, 0};
  std::optional<Witness> wh;
  for (Elem a = 0; a < K->order() && hom.ok; ++a)
    for (Elem b = 0; b < K->order(); ++b) {
      ++hom.evaluations;
      if (phi(K->add(a, b)) != T->add(phi(a), phi(b)) || phi(K->mul(a, b)) != T->mul(phi(a), phi(b))) {
        hom.ok = false;
        wh = Witness{hom.name, {a, b}, "phi is not a ring homomorphism"};
        break;
      }
    }
  report.add(hom, wh);
  CheckResult sq{"phi_squared", d.phi1.same_map(d.phi2), CheckMode::exhaustive, 0};
  std::optional<Witness> ws;
  if (!sq.ok) ws = Witness{sq.name, {}, "phi1 and phi2 differ in the char2_hom branch"};
  for (Elem a = 0; a < K->order() && sq.ok; ++a) {
    ++sq.evaluations;
    if (T->mul(phi(a), phi(a)) != q(a) || (d.hom && (*d.hom)(a) != q(a))) {
      sq.ok = false;
      ws = Witness{sq.name, {a}, "phi(a)^2 != q(a)"};
    }
  }
  report.add(sq, ws);
  return report;
}

namespace {

Decomposition classify_verified(const QuadMapBasis& q, const QuadMapTable& table) {
  if (!radical(table).is_zero()) inconsistent("nonzero radical on a field domain");
  const FieldPtr& K = q.K;
  const FieldPtr& L = q.L;
  const ExtendedQuadMap qt = extend(q);
  const LinearSubspace rad = radical_ext(qt);
  const QuotientAlgebra M = quotient_algebra(qt, rad);

  Decomposition d;
  d.quotient_dim = M.algebra.dim;
  bool form_zero = true;
  for (std::uint32_t i = 0; i < qt.algebra.dim; ++i)
    for (std::uint32_t j = 0; j < qt.algebra.dim; ++j)
      if (qt.form.gram_full(i, j) != 0) form_zero = false;

  if (form_zero) {
    if (L->p() != 2) inconsistent("vanishing form in odd characteristic");
    if (M.algebra.dim != 1) inconsistent("char2 branch with quotient dimension != 1");
    d.branch = Branch::char2_hom;
    std::vector<Elem> root(K->order());
    for (Elem a = 0; a < K->order(); ++a) root[a] = L->frobenius(table(a), -1);
    const auto phi = identify_hom(K, L, root);
    const auto hom = identify_hom(K, L, table.values);
    if (!phi || !hom) inconsistent("char2 branch map is not a field homomorphism");
    d.phi1 = d.phi2 = *phi;
    d.hom = *hom;
  } else {
    d.branch = Branch::comp_norm;
    CompositionAlgebra C = comp_kind(M);
    d.phi.resize(K->order());
    for (Elem x = 0; x < K->order(); ++x) d.phi[x] = M.project(qt.algebra.embed(x));
    std::tie(d.phi1, d.phi2) = hom_pair(C, K, d.phi);
    d.algebra = std::move(C);
  }
  const Report check = verify_decomposition(table, d);
  if (!check.ok) inconsistent("decomposition failed verification: " + check.witnesses.front().detail);
  return d;
}

void require_verified(const QuadMapTable& table, const CheckConfig& cfg) {
  const Report r = verify_axioms(table, cfg);
  if (!r.ok) {
    const Witness& w = r.witnesses.front();
    throw Error(ErrorCode::NotVerified, "map fails " + w.check, w.args);
  }
}

}  // namespace

Decomposition classify(const QuadMapBasis& q, const CheckConfig& cfg) {
  if (q.K->p() != q.L->p()) throw Error(ErrorCode::CharMismatch, "domain and codomain characteristic differ");
  const QuadMapTable table = basis_to_table(q);
  require_verified(table, cfg);
  return classify_verified(q, table);
}

Decomposition classify(const QuadMapTable& q, const CheckConfig& cfg) {
  auto K = std::dynamic_pointer_cast<const Field>(q.domain);
  auto L = std::dynamic_pointer_cast<const Field>(q.codomain);
  if (!K || !L) throw Error(ErrorCode::InvalidArgument, "classify needs field domain and codomain");
  if (K->p() != L->p()) throw Error(ErrorCode::CharMismatch, "domain and codomain characteristic differ");
  require_verified(q, cfg);
  return classify_verified(table_to_basis(q), q);
}

std::vector<QuadMapTable> enumerate_qmaps(const FieldPtr& K, const FieldPtr& L, const CheckConfig& cfg) {
  if (K->order() > (1u << 10)) throw Error(ErrorCode::TooLarge, "enumeration limited to |K| <= 2^10");
  const std::uint64_t group_k = K->order() - 1, group_l = L->order() - 1;
  const Elem g = find_generator(*L);
  std::vector<QuadMapTable> out;
  Elem y = 1;
  for (std::uint64_t k = 0; k < group_l; ++k, y = L->mul(y, g)) {
    if ((k * group_k) % group_l != 0) continue;  // y^|K*| = 1
    std::vector<Elem> values(K->order(), 0);
    for (Elem x = 1; x < K->order(); ++x) values[x] = L->pow(y, K->log(x));
    QuadMapTable q{K, L, std::move(values)};
    if (verify_axioms(q, cfg).ok) out.push_back(std::move(q));
  }
  return out;
}

}  // namespace mqm
