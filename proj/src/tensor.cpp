#include "mqmap/tensor.hpp"

#include <limits>

namespace mqm {

std::uint64_t Algebra::size() const {
  std::uint64_t s = 1;
  for (std::uint32_t i = 0; i < dim; ++i) {
    if (s > std::numeric_limits<std::uint64_t>::max() / L->order())
      return std::numeric_limits<std::uint64_t>::max();
    s *= L->order();
  }
  return s;
}

Vec Algebra::mul(const Vec& x, const Vec& y) const {
  Vec out(dim, 0);
  for (std::uint32_t i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (std::uint32_t j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      const Elem c = L->mul(x[i], y[j]);
      const Vec& e = struct_consts[i * dim + j];
      for (std::uint32_t k = 0; k < dim; ++k)
        if (e[k] != 0) out[k] = L->add(out[k], L->mul(c, e[k]));
    }
  }
  return out;
}

Vec Algebra::basis(std::uint32_t i) const {
  Vec v(dim, 0);
  v[i] = 1;
  return v;
}

Vec Algebra::from_index(std::uint64_t index) const {
  Vec v(dim);
  for (auto& c : v) {
    c = static_cast<Elem>(index % L->order());
    index /= L->order();
  }
  return v;
}

std::uint64_t Algebra::index(const Vec& v) const {
  std::uint64_t idx = 0;
  for (std::size_t i = v.size(); i-- > 0;) idx = idx * L->order() + v[i];
  return idx;
}

Elem QuadForm::operator()(const Vec& v) const {
  Elem acc = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    acc = L->add(acc, L->mul(L->mul(v[i], v[i]), basis_vals[i]));
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[j] != 0) acc = L->add(acc, L->mul(L->mul(v[i], v[j]), gram[i][j]));
  }
  return acc;
}

Elem QuadForm::polar(const Vec& x, const Vec& y) const {
  return L->sub(L->sub((*this)(vec_add(*L, x, y)), (*this)(x)), (*this)(y));
}

Elem QuadForm::gram_full(std::uint32_t i, std::uint32_t j) const {
  if (i == j) return L->add(basis_vals[i], basis_vals[i]);
  return i < j ? gram[i][j] : gram[j][i];
}

Vec TensorAlgebra::embed(Elem x) const {
  const Poly c = K->coeffs(x);
  Vec v(dim);
  for (std::uint32_t i = 0; i < dim; ++i) v[i] = L->prime(c[i]);
  return v;
}

TensorAlgebra build_tensor(const FieldPtr& K, const FieldPtr& L) {
  if (K->p() != L->p())
    throw Error(ErrorCode::CharMismatch, K->name() + " and " + L->name() + " differ in characteristic");
  TensorAlgebra A;
  A.K = K;
  A.L = L;
  A.dim = K->degree();
  const std::uint32_t n = A.dim;
  std::vector<Elem> t_pow(n);
  Elem e = 1;
  for (std::uint32_t i = 0; i < n; ++i, e *= K->p()) t_pow[i] = e;
  A.struct_consts.resize(std::size_t{n} * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) A.struct_consts[i * n + j] = A.embed(K->mul(t_pow[i], t_pow[j]));
  A.unit = A.embed(K->one());

  auto inconsistent = [](const std::string& what, std::vector<Elem> w) {
    throw Error(ErrorCode::Inconsistency, "tensor algebra: " + what, std::move(w));
  };
  for (std::uint32_t i = 0; i < n; ++i) {
    if (A.mul(A.unit, A.basis(i)) != A.basis(i)) inconsistent("unit", {i});
    for (std::uint32_t j = 0; j < n; ++j) {
      if (A.struct_consts[i * n + j] != A.struct_consts[j * n + i]) inconsistent("commutativity", {i, j});
      for (std::uint32_t k = 0; k < n; ++k)
        if (A.mul(A.mul(A.basis(i), A.basis(j)), A.basis(k)) !=
            A.mul(A.basis(i), A.mul(A.basis(j), A.basis(k))))
          inconsistent("associativity", {i, j, k});
    }
  }
  // 1 (x) x is additive by construction; multiplicativity over all pairs
  // while cheap, otherwise on the power basis (which spans).
  const bool all_pairs = K->order() <= 256;
  const std::uint32_t range = all_pairs ? K->order() : n;
  for (std::uint32_t a = 0; a < range; ++a)
    for (std::uint32_t b = 0; b < range; ++b) {
      const Elem x = all_pairs ? a : t_pow[a], y = all_pairs ? b : t_pow[b];
      if (A.embed(K->mul(x, y)) != A.mul(A.embed(x), A.embed(y))) inconsistent("embedding of K", {x, y});
    }
  return A;
}

ExtendedQuadMap extend(const QuadMapBasis& q) {
  ExtendedQuadMap qt{build_tensor(q.K, q.L), QuadForm{q.L, q.basis_vals, q.gram}};
  for (Elem x = 0; x < q.K->order(); ++x)
    if (qt(qt.algebra.embed(x)) != q(x))
      throw Error(ErrorCode::Inconsistency, "extension does not restrict to q", {x});
  return qt;
}

namespace {

// Point set for identity checks: every element, or the {0,1,2}^dim grid.
struct PointSet {
  CheckMode mode;
  std::uint64_t count;
  std::uint32_t dim;
  std::uint32_t radix;

  Vec at(std::uint64_t k) const {
    Vec v(dim);
    for (auto& c : v) {
      c = static_cast<Elem>(k % radix);
      k /= radix;
    }
    return v;
  }
};

PointSet choose_points(const Algebra& A, const CheckConfig& cfg) {
  const std::uint64_t size = A.size();
  if (size <= (std::uint64_t{1} << 32) && size * size <= cfg.exhaustive_bound)
    return {CheckMode::exhaustive, size, A.dim, A.L->order()};
  if (A.L->order() >= 3) {
    std::uint64_t g = 1;
    for (std::uint32_t i = 0; i < A.dim && g <= cfg.exhaustive_bound; ++i) g *= 3;
    if (g * g <= cfg.exhaustive_bound) return {CheckMode::grid, g, A.dim, 3};
  }
  throw Error(ErrorCode::TooLarge, "algebra with " + std::to_string(A.L->order()) + "^" +
                                       std::to_string(A.dim) + " elements is too large to verify");
}

}  // namespace

Report check_multiplicative(const Algebra& A, const QuadForm& N, const CheckConfig& cfg) {
  const Field& L = *A.L;
  const PointSet pts = choose_points(A, cfg);
  Report report;

  std::vector<Vec> points(pts.count);
  std::vector<Elem> values(pts.count);
  for (std::uint64_t k = 0; k < pts.count; ++k) {
    points[k] = pts.at(k);
    values[k] = N(points[k]);
  }

  CheckResult mult{"multiplicativity", true, pts.mode, 0};
  CheckResult bilin{"bilinearity", true, pts.mode, 0};
  std::optional<Witness> wm, wb;
  for (std::uint64_t a = 0; a < pts.count; ++a) {
    for (std::uint64_t b = 0; b < pts.count; ++b) {
      const Vec& x = points[a];
      const Vec& y = points[b];
      if (mult.ok) {
        ++mult.evaluations;
        if (N(A.mul(x, y)) != L.mul(values[a], values[b])) {
          mult.ok = false;
          wm = Witness{"multiplicativity", {Elem(A.index(x)), Elem(A.index(y))}, "N(xy) != N(x)N(y)"};
        }
      }
      if (bilin.ok && b >= a) {
        ++bilin.evaluations;
        Elem expected = 0;
        for (std::uint32_t i = 0; i < A.dim; ++i)
          for (std::uint32_t j = 0; j < A.dim; ++j)
            if (x[i] != 0 && y[j] != 0)
              expected = L.add(expected, L.mul(L.mul(x[i], y[j]), N.gram_full(i, j)));
        if (N.polar(x, y) != expected) {
          bilin.ok = false;
          wb = Witness{"bilinearity", {Elem(A.index(x)), Elem(A.index(y))},
                       "polar form differs from its Gram expansion"};
        }
      }
    }
  }
  report.add(mult, wm);
  report.add(bilin, wb);

  CheckResult homog{"homogeneity", true, pts.mode, 0};
  std::optional<Witness> wh;
  for (std::uint64_t a = 0; a < pts.count && homog.ok; ++a)
    for (Elem s = 0; s < L.order(); ++s) {
      ++homog.evaluations;
      if (N(A.scale(s, points[a])) != L.mul(L.mul(s, s), values[a])) {
        homog.ok = false;
        wh = Witness{"homogeneity", {s, Elem(A.index(points[a]))}, "N(s x) != s^2 N(x)"};
        break;
      }
    }
  report.add(homog, wh);
  return report;
}

Report verify_extension(const ExtendedQuadMap& qt, const CheckConfig& cfg) {
  return check_multiplicative(qt.algebra, qt.form, cfg);
}

LinearSubspace form_radical(const Algebra& A, const QuadForm& N) {
  const Field& L = *A.L;
  const std::uint64_t size = A.size();
  if (size > kMaxAlgebraEnumeration)
    throw Error(ErrorCode::TooLarge, "radical enumeration limited to 2^16 algebra elements");
  LinearSubspace rad;
  rad.ambient_dim = A.dim;
  Matrix rows;
  std::vector<Vec> basis(A.dim);
  for (std::uint32_t j = 0; j < A.dim; ++j) basis[j] = A.basis(j);
  for (std::uint64_t k = 0; k < size; ++k) {
    const Vec v = A.from_index(k);
    if (N(v) != 0) continue;
    bool orthogonal = true;
    for (std::uint32_t j = 0; j < A.dim && orthogonal; ++j) orthogonal = N.polar(v, basis[j]) == 0;
    if (!orthogonal) continue;
    rad.members.push_back(k);
    rows.push_back(v);
  }
  rad.basis = row_reduce(L, std::move(rows), A.dim);

  std::uint64_t expected = 1;
  for (std::size_t r = 0; r < rad.basis.rank(); ++r) expected *= L.order();
  if (expected != rad.members.size())
    throw Error(ErrorCode::Inconsistency, "radical is not an L-subspace");
  for (const Vec& b : rad.basis.rows)
    for (std::uint32_t j = 0; j < A.dim; ++j) {
      const Vec r = reduce(L, rad.basis, A.mul(b, basis[j]));
      for (Elem c : r)
        if (c != 0) throw Error(ErrorCode::Inconsistency, "radical is not an ideal");
    }
  rad.ideal = true;
  return rad;
}

LinearSubspace radical_ext(const ExtendedQuadMap& qt) { return form_radical(qt.algebra, qt.form); }

Vec QuotientAlgebra::project(const Vec& v) const {
  const Vec r = reduce(*algebra.L, radical, v);
  Vec m(free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) m[k] = r[free_cols[k]];
  return m;
}

Vec QuotientAlgebra::lift(const Vec& m) const {
  Vec v(ambient_dim, 0);
  for (std::size_t k = 0; k < free_cols.size(); ++k) v[free_cols[k]] = m[k];
  return v;
}

QuotientAlgebra quotient_algebra(const ExtendedQuadMap& qt, const LinearSubspace& rad) {
  const TensorAlgebra& V = qt.algebra;
  QuotientAlgebra M;
  M.ambient_dim = V.dim;
  M.radical = rad.basis;
  std::vector<bool> pivot(V.dim, false);
  for (auto c : rad.basis.pivots) pivot[c] = true;
  for (std::size_t c = 0; c < V.dim; ++c)
    if (!pivot[c]) M.free_cols.push_back(c);

  const std::uint32_t m = static_cast<std::uint32_t>(M.free_cols.size());
  auto lift_basis = [&](std::uint32_t k) {
    Vec v(V.dim, 0);
    v[M.free_cols[k]] = 1;
    return v;
  };
  M.algebra.L = V.L;
  M.algebra.dim = m;
  M.algebra.struct_consts.resize(std::size_t{m} * m);
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = 0; j < m; ++j)
      M.algebra.struct_consts[i * m + j] = M.project(V.mul(lift_basis(i), lift_basis(j)));
  M.algebra.unit = M.project(V.unit);

  M.norm.L = V.L;
  M.norm.basis_vals.resize(m);
  M.norm.gram.assign(m, Vec(m, 0));
  for (std::uint32_t i = 0; i < m; ++i) {
    M.norm.basis_vals[i] = qt(lift_basis(i));
    for (std::uint32_t j = i + 1; j < m; ++j) M.norm.gram[i][j] = qt.form.polar(lift_basis(i), lift_basis(j));
  }

  for (std::uint64_t k = 0; k < V.size(); ++k) {
    const Vec v = V.from_index(k);
    if (M.norm(M.project(v)) != qt(v))
      throw Error(ErrorCode::Inconsistency, "induced norm is not constant on a coset", {Elem(k)});
  }
  const Report r = check_multiplicative(M.algebra, M.norm);
  if (!r.ok) throw Error(ErrorCode::Inconsistency, "induced norm is not multiplicative");
  return M;
}

}  // namespace mqm
