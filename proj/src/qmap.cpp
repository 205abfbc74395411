#include "mqmap/qmap.hpp"

#include <algorithm>
#include <unordered_map>

namespace mqm {

std::string to_string(CheckMode mode) {
  switch (mode) {
    case CheckMode::exhaustive: return "exhaustive";
    case CheckMode::sampled: return "sampled";
    case CheckMode::grid: return "grid";
  }
  return "unknown";
}

std::string to_string(HomBranch b) {
  switch (b) {
    case HomBranch::char2_hom: return "char2_hom";
    case HomBranch::bilinear_nondegenerate: return "bilinear_nondegenerate";
    case HomBranch::degenerate: return "degenerate";
  }
  return "unknown";
}

QuadMapTable make_table_map(RingPtr domain, RingPtr codomain, std::vector<Elem> values) {
  if (!domain || !codomain) throw Error(ErrorCode::InvalidArgument, "missing ring");
  if (values.size() != domain->size())
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(domain->size()) +
                                                " values, got " + std::to_string(values.size()));
  for (Elem a = 0; a < values.size(); ++a)
    if (values[a] >= codomain->size())
      throw Error(ErrorCode::InvalidArgument, "value out of codomain range", {a});
  return {std::move(domain), std::move(codomain), std::move(values)};
}

QuadMapTable power_map(const FieldPtr& K, const FieldPtr& L, std::int64_t exponent) {
  if (exponent < 0) throw Error(ErrorCode::InvalidArgument, "exponent must be nonnegative");
  std::vector<Elem> values(K->order());
  if (L->degree() % K->degree() == 0) {
    const auto emb = embeddings(K, L).front();
    for (Elem x = 0; x < K->order(); ++x) values[x] = L->pow(emb(x), exponent);
  } else if (K->degree() % L->degree() == 0) {
    const auto emb = embeddings(L, K).front();
    std::unordered_map<Elem, Elem> preimage;
    for (Elem y = 0; y < L->order(); ++y) preimage[emb(y)] = y;
    for (Elem x = 0; x < K->order(); ++x) {
      const auto it = preimage.find(K->pow(x, exponent));
      if (it == preimage.end())
        throw Error(ErrorCode::InvalidArgument, "x^e does not land in the codomain", {x});
      values[x] = it->second;
    }
  } else {
    throw Error(ErrorCode::InvalidArgument, "neither field contains the other");
  }
  return {K, L, std::move(values)};
}

Elem QuadMapBasis::operator()(Elem x) const {
  const Poly lambda = K->coeffs(x);
  const std::size_t n = lambda.size();
  Elem acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (lambda[i] == 0) continue;
    const Elem li = L->prime(lambda[i]);
    acc = L->add(acc, L->mul(L->mul(li, li), basis_vals[i]));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (lambda[j] == 0) continue;
      acc = L->add(acc, L->mul(L->mul(li, L->prime(lambda[j])), gram[i][j]));
    }
  }
  return acc;
}

bool Subspace::contains(Elem a) const {
  return std::binary_search(members.begin(), members.end(), a);
}

Subspace whole_ring(RingPtr ring) {
  Subspace s{ring, {}, true};
  s.members.resize(ring->size());
  for (Elem a = 0; a < ring->size(); ++a) s.members[a] = a;
  return s;
}

bool is_ideal(const Ring& ring, const std::vector<Elem>& members) {
  std::vector<bool> in(ring.size(), false);
  for (auto a : members) in[a] = true;
  if (!in[ring.zero()]) return false;
  for (auto a : members) {
    for (auto b : members)
      if (!in[ring.add(a, b)]) return false;
    for (Elem c = 0; c < ring.size(); ++c)
      if (!in[ring.mul(a, c)]) return false;
  }
  return true;
}

Report verify_axioms(const QuadMapTable& q, const CheckConfig& cfg) {
  const Ring& K = *q.domain;
  const Ring& L = *q.codomain;
  const std::uint32_t n = K.size();
  Report report;
  std::optional<Witness> w;

  report.add(scan_tuples("multiplicativity", n, 2, cfg, false,
                         [&](const Elem* t) { return q(K.mul(t[0], t[1])) == L.mul(q(t[0]), q(t[1])); },
                         w),
             w);

  // q(k 1_K) only depends on k mod c = additive order of 1_K; checking
  // k = 0..c+1 also forces c^2 1_L = 0 and 2c 1_L = 0, so every integer k
  // is covered.
  {
    const std::uint32_t c = K.additive_order(K.one());
    CheckResult r{"integer_squares", true, CheckMode::exhaustive, 0};
    w.reset();
    for (std::uint64_t k = 0; k <= std::uint64_t{c} + 1; ++k) {
      ++r.evaluations;
      const Elem lhs = q(K.times(k, K.one()));
      const Elem rhs = L.times(k * k, L.one());
      if (lhs != rhs) {
        r.ok = false;
        w = Witness{"integer_squares", {K.times(k, K.one())},
                    "q(" + std::to_string(k) + "*1) = " + std::to_string(lhs) + " but " +
                        std::to_string(k * k) + "*1 = " + std::to_string(rhs)};
        break;
      }
    }
    report.add(r, w);
  }

  w.reset();
  report.add(scan_tuples("biadditivity", n, 3, cfg, true,
                         [&](const Elem* t) {
                           return q.form(K.add(t[0], t[1]), t[2]) ==
                                  L.add(q.form(t[0], t[2]), q.form(t[1], t[2]));
                         },
                         w),
             w);
  return report;
}

BilinearGram assoc_form(const QuadMapTable& q) {
  const std::uint32_t n = q.domain->size();
  BilinearGram g{n, std::vector<Elem>(std::size_t{n} * n)};
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) g.entries[a * n + b] = q.form(a, b);
  return g;
}

BilinearGram assoc_form(const QuadMapBasis& q) {
  const Field& L = *q.L;
  const std::uint32_t n = q.K->degree();
  BilinearGram g{n, std::vector<Elem>(std::size_t{n} * n)};
  for (std::uint32_t i = 0; i < n; ++i) {
    g.entries[i * n + i] = L.add(q.basis_vals[i], q.basis_vals[i]);  // f(e, e) = 2 q(e)
    for (std::uint32_t j = i + 1; j < n; ++j) g.entries[i * n + j] = g.entries[j * n + i] = q.gram[i][j];
  }
  return g;
}

Report check_lemma21(const QuadMapTable& q, const CheckConfig& cfg) {
  const Ring& K = *q.domain;
  const Ring& L = *q.codomain;
  const std::uint32_t n = K.size();
  Report report;
  std::optional<Witness> w;
  report.add(scan_tuples("scaling_identity", n, 3, cfg, true,
                         [&](const Elem* t) {
                           const Elem a = t[0], b = t[1], c = t[2];
                           return q.form(K.mul(a, c), K.mul(b, c)) == L.mul(q.form(a, b), q(c));
                         },
                         w),
             w);
  w.reset();
  report.add(scan_tuples("product_identity", n, 4, cfg, true,
                         [&](const Elem* t) {
                           const Elem a = t[0], b = t[1], c = t[2], d = t[3];
                           return L.mul(q.form(a, b), q.form(c, d)) ==
                                  L.add(q.form(K.mul(a, c), K.mul(b, d)),
                                        q.form(K.mul(a, d), K.mul(b, c)));
                         },
                         w),
             w);
  return report;
}

Subspace perp(const QuadMapTable& q, const Subspace& I) {
  const Ring& K = *q.domain;
  if (!is_ideal(K, I.members)) throw Error(ErrorCode::NotAnIdeal, "argument is not an ideal");
  Subspace out{q.domain, {}, false};
  for (Elem a = 0; a < K.size(); ++a) {
    const bool orthogonal = std::all_of(I.members.begin(), I.members.end(),
                                        [&](Elem b) { return q.form(a, b) == q.codomain->zero(); });
    if (orthogonal) out.members.push_back(a);
  }
  if (!is_ideal(K, out.members))
    throw Error(ErrorCode::Inconsistency, "orthogonal complement of an ideal is not an ideal");
  out.ideal = true;
  return out;
}

Subspace radical(const QuadMapTable& q) {
  Subspace kperp = perp(q, whole_ring(q.domain));
  Subspace rad{q.domain, {}, false};
  for (auto a : kperp.members)
    if (q(a) == q.codomain->zero()) rad.members.push_back(a);
  if (!is_ideal(*q.domain, rad.members))
    throw Error(ErrorCode::Inconsistency, "radical is not an ideal");
  rad.ideal = true;
  return rad;
}

namespace {

class CosetRing final : public Ring {
 public:
  CosetRing(const Ring& base, const std::vector<Elem>& class_of, const std::vector<Elem>& reps)
      : base_(base), class_of_(class_of), reps_(reps) {}
  std::uint32_t size() const override { return static_cast<std::uint32_t>(reps_.size()); }
  Elem add(Elem a, Elem b) const override { return class_of_[base_.add(reps_[a], reps_[b])]; }
  Elem neg(Elem a) const override { return class_of_[base_.neg(reps_[a])]; }
  Elem mul(Elem a, Elem b) const override { return class_of_[base_.mul(reps_[a], reps_[b])]; }
  Elem zero() const override { return class_of_[base_.zero()]; }
  Elem one() const override { return class_of_[base_.one()]; }
  std::string name() const override { return base_.name() + "/rad"; }

 private:
  const Ring& base_;
  const std::vector<Elem>& class_of_;
  const std::vector<Elem>& reps_;
};

}  // namespace

QuotientMap quotient(const QuadMapTable& q) {
  const Ring& K = *q.domain;
  QuotientMap out;
  out.radical = radical(q);
  const std::uint32_t none = K.size();
  out.class_of.assign(K.size(), none);
  for (Elem a = 0; a < K.size(); ++a) {
    if (out.class_of[a] != none) continue;
    const Elem cls = static_cast<Elem>(out.representatives.size());
    out.representatives.push_back(a);
    for (auto r : out.radical.members) {
      const Elem b = K.add(a, r);
      out.class_of[b] = cls;
      if (q(b) != q(a))
        throw Error(ErrorCode::Inconsistency, "q is not constant on a coset of the radical", {a, b});
    }
  }
  const CosetRing cosets(K, out.class_of, out.representatives);
  RingPtr ring = ring_of(cosets);
  std::vector<Elem> values(out.representatives.size());
  for (Elem c = 0; c < values.size(); ++c) values[c] = q(out.representatives[c]);
  out.map = {std::move(ring), q.codomain, std::move(values)};
  return out;
}

BranchReport detect_hom_branch(const QuadMapTable& q) {
  const Ring& K = *q.domain;
  const Ring& L = *q.codomain;
  if (!radical(q).is_zero())
    throw Error(ErrorCode::NonzeroRadical, "detect_hom_branch needs rad(q) = 0");
  bool form_zero = true;
  for (Elem a = 0; a < K.size() && form_zero; ++a)
    for (Elem b = a; b < K.size() && form_zero; ++b)
      if (q.form(a, b) != L.zero()) form_zero = false;
  if (form_zero) {
    if (L.add(L.one(), L.one()) != L.zero())
      return {HomBranch::degenerate,
              {Witness{"char2_hom", {}, "form vanishes but the codomain has characteristic != 2"}}};
    return {HomBranch::char2_hom, {}};
  }
  const Subspace kperp = perp(q, whole_ring(q.domain));
  if (kperp.is_zero()) return {HomBranch::bilinear_nondegenerate, {}};
  const Elem a = kperp.members[1];
  return {HomBranch::degenerate,
          {Witness{"degenerate", {a}, "nonzero element of K^perp with rad(q) = 0"}}};
}

namespace {

std::pair<FieldPtr, FieldPtr> fields_of(const QuadMapTable& q) {
  auto K = std::dynamic_pointer_cast<const Field>(q.domain);
  auto L = std::dynamic_pointer_cast<const Field>(q.codomain);
  if (!K || !L) throw Error(ErrorCode::InvalidArgument, "basis form needs field domain and codomain");
  if (K->p() != L->p()) throw Error(ErrorCode::CharMismatch, "domain and codomain characteristic differ");
  return {K, L};
}

}  // namespace

QuadMapBasis table_to_basis(const QuadMapTable& q) {
  auto [K, L] = fields_of(q);
  const std::uint32_t n = K->degree();
  std::vector<Elem> basis(n);
  Elem e = 1;
  for (std::uint32_t i = 0; i < n; ++i, e *= K->p()) basis[i] = e;  // index of t^i is p^i
  QuadMapBasis out{K, L, std::vector<Elem>(n), Matrix(n, Vec(n, 0))};
  for (std::uint32_t i = 0; i < n; ++i) {
    out.basis_vals[i] = q(basis[i]);
    for (std::uint32_t j = i + 1; j < n; ++j) out.gram[i][j] = q.form(basis[i], basis[j]);
  }
  for (Elem x = 0; x < K->order(); ++x)
    if (out(x) != q(x))
      throw Error(ErrorCode::NotFQuadratic,
                  "quadratic expansion disagrees with the table at element " + std::to_string(x), {x});
  return out;
}

QuadMapTable basis_to_table(const QuadMapBasis& q) {
  std::vector<Elem> values(q.K->order());
  for (Elem x = 0; x < values.size(); ++x) values[x] = q(x);
  return {q.K, q.L, std::move(values)};
}

}  // namespace mqm
