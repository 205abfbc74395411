#include "mqmap/homprod.hpp"

#include <algorithm>
#include <numeric>

#include "mqmap/error.hpp"

namespace mqm {

std::string to_string(VerdictTag t) {
  switch (t) {
    case VerdictTag::not_equal: return "not_equal";
    case VerdictTag::case1: return "case1";
    case VerdictTag::case2: return "case2";
    case VerdictTag::inconsistent: return "inconsistent";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kMaxFactors = 6;

void require_same_fields(const std::vector<HomSpec>& homs) {
  if (homs.empty()) throw Error(ErrorCode::InvalidArgument, "empty homomorphism list");
  for (const auto& h : homs)
    if (!(h.K()->desc() == homs.front().K()->desc()) || !(h.L()->desc() == homs.front().L()->desc()))
      throw Error(ErrorCode::InvalidArgument, "homomorphisms with different fields");
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// source followed by Frobenius^l equals target
bool twist_matches(const HomSpec& source, std::int64_t l, const HomSpec& target) {
  const std::int64_t n = source.K()->degree();
  std::int64_t d = (std::int64_t{source.canonical_exp()} + l - target.canonical_exp()) % n;
  return d == 0;
}

// For each target find (source, l) with target = source p^l and
// lower <= l (p-1) <= upper. Prefers the unreduced exponent difference, then
// the smallest |l| (negative first) and smallest source index.
std::optional<std::vector<Twist>> find_twists(const std::vector<HomSpec>& targets,
                                              const std::vector<HomSpec>& sources, std::int64_t lower,
                                              std::int64_t upper, std::int64_t p) {
  const std::int64_t lo = ceil_div(lower, p - 1), hi = floor_div(upper, p - 1);
  std::vector<Twist> out;
  for (std::size_t j = 0; j < targets.size(); ++j) {
    std::optional<Twist> found;
    for (std::size_t i = 0; i < sources.size() && !found; ++i) {
      const std::int64_t l = targets[j].formal_exp() - sources[i].formal_exp();
      if (l >= lo && l <= hi && twist_matches(sources[i], l, targets[j])) found = Twist{j, i, l, lower, upper};
    }
    std::vector<std::int64_t> order;
    for (std::int64_t l = lo; l <= hi; ++l) order.push_back(l);
    std::stable_sort(order.begin(), order.end(), [](std::int64_t a, std::int64_t b) {
      return std::llabs(a) < std::llabs(b);
    });
    for (std::int64_t l : order) {
      if (found) break;
      for (std::size_t i = 0; i < sources.size() && !found; ++i)
        if (twist_matches(sources[i], l, targets[j])) found = Twist{j, i, l, lower, upper};
    }
    if (!found) return std::nullopt;
    out.push_back(*found);
  }
  return out;
}

}  // namespace

ProductMap make_product(std::vector<HomSpec> homs) {
  require_same_fields(homs);
  return ProductMap{std::move(homs)};
}

std::uint64_t ProductMap::exponent() const {
  const std::uint64_t group = K()->order() - 1;
  const std::uint64_t p = K()->p();
  std::uint64_t e = 0;
  for (const auto& h : homs) {
    std::uint64_t term = 1 % group;
    for (std::uint32_t i = 0; i < h.canonical_exp(); ++i) term = term * p % group;
    e = (e + term) % group;
  }
  return e;
}

Elem product_eval(const ProductMap& P, Elem x) {
  const Field& L = *P.L();
  Elem acc = L.one();
  for (const auto& h : P.homs) acc = L.mul(acc, h(x));
  return acc;
}

EqualityResult products_equal(const ProductMap& P, const ProductMap& Q) {
  if (P.K()->p() != Q.K()->p() || P.L()->p() != Q.L()->p())
    throw Error(ErrorCode::CharMismatch, "products over different characteristics");
  if (!(P.K()->desc() == Q.K()->desc()) || !(P.L()->desc() == Q.L()->desc()))
    throw Error(ErrorCode::InvalidArgument, "products over different fields");
  EqualityResult r;
  r.equal = true;
  for (Elem x = 0; x < P.K()->order(); ++x)
    if (product_eval(P, x) != product_eval(Q, x)) {
      r.equal = false;
      r.witness = x;
      break;
    }
  // Embedding e is embedding 0 after Frobenius^e, so every factor is
  // iota_0(x^(p^k)) and the product is iota_0(x^exponent).
  r.exponent_p = P.exponent();
  r.exponent_q = Q.exponent();
  if ((r.exponent_p == r.exponent_q) != r.equal)
    throw Error(ErrorCode::Inconsistency, "exponent and pointwise comparisons disagree");
  return r;
}

ArtinResult artin_check(const std::vector<HomSpec>& homs) {
  require_same_fields(homs);
  const FieldPtr& K = homs.front().K();
  const Field& L = *homs.front().L();
  if (K->order() > (1u << 12)) throw Error(ErrorCode::TooLarge, "artin_check limited to |K| <= 2^12");
  Matrix A(K->order(), Vec(homs.size()));
  for (Elem x = 0; x < K->order(); ++x)
    for (std::size_t i = 0; i < homs.size(); ++i) A[x][i] = homs[i](x);
  const Matrix ker = kernel(L, A, homs.size());
  if (ker.empty()) return {true, {}};
  return {false, ker.front()};
}

Elem symmetrized_sum(const std::vector<HomSpec>& sigmas, const std::vector<Elem>& xs) {
  require_same_fields(sigmas);
  if (sigmas.size() > kMaxFactors) throw Error(ErrorCode::TooManyFactors, "at most 6 factors");
  if (xs.size() != sigmas.size()) throw Error(ErrorCode::InvalidArgument, "need one argument per factor");
  const Field& L = *sigmas.front().L();
  std::vector<std::size_t> g(sigmas.size());
  std::iota(g.begin(), g.end(), 0);
  Elem sum = 0;
  do {
    Elem term = L.one();
    for (std::size_t i = 0; i < g.size(); ++i) term = L.mul(term, sigmas[g[i]](xs[i]));
    sum = L.add(sum, term);
  } while (std::next_permutation(g.begin(), g.end()));
  return sum;
}

Elem polarized_sum(const std::vector<HomSpec>& sigmas, const std::vector<Elem>& xs) {
  require_same_fields(sigmas);
  if (sigmas.size() > kMaxFactors) throw Error(ErrorCode::TooManyFactors, "at most 6 factors");
  if (xs.size() != sigmas.size()) throw Error(ErrorCode::InvalidArgument, "need one argument per factor");
  const Field& K = *sigmas.front().K();
  const Field& L = *sigmas.front().L();
  const std::size_t n = xs.size();
  Elem sum = 0;
  for (std::uint32_t J = 1; J < (1u << n); ++J) {
    Elem xJ = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (J >> j & 1) xJ = K.add(xJ, xs[j]);
    Elem term = L.one();
    for (const auto& s : sigmas) term = L.mul(term, s(xJ));
    sum = (std::popcount(J) % 2 == 0) ? L.add(sum, term) : L.sub(sum, term);
  }
  return sum;
}

SymsumResult symsum_vanishes(const std::vector<HomSpec>& sigmas) {
  require_same_fields(sigmas);
  if (sigmas.size() > kMaxFactors) throw Error(ErrorCode::TooManyFactors, "at most 6 factors");
  const Field& K = *sigmas.front().K();
  const std::size_t n = sigmas.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= K.order();
    if (total > (std::uint64_t{1} << 20)) throw Error(ErrorCode::TooLarge, "|K|^n exceeds 2^20");
  }
  SymsumResult r;
  r.vanishes = true;
  std::vector<Elem> xs(n);
  for (std::uint64_t k = 0; k < total && r.vanishes; ++k) {
    std::uint64_t t = k;
    for (std::size_t i = n; i-- > 0;) {
      xs[i] = static_cast<Elem>(t % K.order());
      t /= K.order();
    }
    ++r.evaluations;
    if (symmetrized_sum(sigmas, xs) != 0) {
      r.vanishes = false;
      r.witness = xs;
    }
  }
  for (const auto& s : sigmas) {
    const auto count = std::count_if(sigmas.begin(), sigmas.end(), [&](const HomSpec& o) { return o.same_map(s); });
    if (static_cast<std::uint64_t>(count) >= K.p()) r.structural = true;
  }
  return r;
}

Verdict theorem14_verdict(const ProductMap& P, const ProductMap& Q) {
  Verdict v;
  const EqualityResult eq = products_equal(P, Q);
  if (!eq.equal) {
    v.tag = VerdictTag::not_equal;
    v.witness = eq.witness;
    return v;
  }
  v.swapped = P.length() < Q.length();
  const std::vector<HomSpec>& sigma = v.swapped ? Q.homs : P.homs;
  const std::vector<HomSpec>& tau = v.swapped ? P.homs : Q.homs;
  const std::size_t n = sigma.size(), m = tau.size();

  if (n == m) {
    std::vector<bool> used(n, false);
    std::vector<std::size_t> perm;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t k = 0; k < n; ++k)
        if (!used[k] && sigma[k].same_map(tau[i])) {
          used[k] = true;
          perm.push_back(k);
          break;
        }
      if (perm.size() != i + 1) break;
    }
    if (perm.size() == m) {
      v.tag = VerdictTag::case1;
      v.permutation = std::move(perm);
      return v;
    }
  }

  const std::int64_t p = P.K()->p();
  for (std::size_t i = 0; i < n && v.equal_indices.empty(); ++i) {
    std::vector<std::size_t> idx;
    for (std::size_t k = i; k < n && idx.size() < static_cast<std::size_t>(p); ++k)
      if (sigma[k].same_map(sigma[i])) idx.push_back(k);
    if (idx.size() == static_cast<std::size_t>(p)) v.equal_indices = std::move(idx);
  }
  if (v.equal_indices.empty()) {
    v.tag = VerdictTag::inconsistent;
    v.inconsistency = "equal products without a permutation or p equal factors";
    return v;
  }
  const std::int64_t sn = static_cast<std::int64_t>(n), sm = static_cast<std::int64_t>(m);
  auto tau_tw = find_twists(tau, sigma, -(sm - 1), sn - 1, p);
  auto sigma_tw = find_twists(sigma, tau, -(sn - 1), sm - 1, p);
  if (!tau_tw || !sigma_tw) {
    v.tag = VerdictTag::inconsistent;
    v.inconsistency = "no Frobenius twist inside the bounds";
    return v;
  }
  v.tag = VerdictTag::case2;
  v.tau_twists = std::move(*tau_tw);
  v.sigma_twists = std::move(*sigma_tw);
  return v;
}

bool verify_verdict(const ProductMap& P, const ProductMap& Q, const Verdict& v) {
  const EqualityResult eq = products_equal(P, Q);
  if (v.tag == VerdictTag::not_equal) return !eq.equal && v.witness && product_eval(P, *v.witness) != product_eval(Q, *v.witness);
  if (!eq.equal || v.tag == VerdictTag::inconsistent) return false;
  if (v.swapped != (P.length() < Q.length())) return false;
  const std::vector<HomSpec>& sigma = v.swapped ? Q.homs : P.homs;
  const std::vector<HomSpec>& tau = v.swapped ? P.homs : Q.homs;
  const std::int64_t n = static_cast<std::int64_t>(sigma.size()), m = static_cast<std::int64_t>(tau.size());
  if (v.tag == VerdictTag::case1) {
    if (n != m || v.permutation.size() != tau.size()) return false;
    std::vector<std::size_t> sorted = v.permutation;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != i) return false;
    for (std::size_t i = 0; i < tau.size(); ++i)
      if (!tau[i].same_map(sigma[v.permutation[i]])) return false;
    return true;
  }
  const std::int64_t p = P.K()->p();
  if (v.equal_indices.size() != static_cast<std::size_t>(p)) return false;
  for (std::size_t k = 0; k < v.equal_indices.size(); ++k) {
    if (v.equal_indices[k] >= sigma.size()) return false;
    if (k > 0 && v.equal_indices[k] <= v.equal_indices[k - 1]) return false;
    if (!sigma[v.equal_indices[k]].same_map(sigma[v.equal_indices[0]])) return false;
  }
  auto check = [&](const std::vector<Twist>& tw, const std::vector<HomSpec>& targets,
                   const std::vector<HomSpec>& sources, std::int64_t lower, std::int64_t upper) {
    if (tw.size() != targets.size()) return false;
    for (std::size_t j = 0; j < tw.size(); ++j) {
      const Twist& t = tw[j];
      if (t.target != j || t.source >= sources.size()) return false;
      if (t.lower != lower || t.upper != upper) return false;
      const std::int64_t scaled = t.l * (p - 1);
      if (scaled < lower || scaled > upper) return false;
      if (!sources[t.source].twisted(t.l).same_map(targets[j])) return false;
    }
    return true;
  };
  return check(v.tau_twists, tau, sigma, -(m - 1), n - 1) && check(v.sigma_twists, sigma, tau, -(n - 1), m - 1);
}

ScanReport theorem14_scan(const FieldPtr& K, const FieldPtr& L, std::uint32_t n_max, std::uint32_t m_max) {
  std::vector<HomSpec> homs;
  for (std::uint32_t k = 0; k < K->degree(); ++k) homs.emplace_back(K, L, 0, k);
  const std::uint32_t longest = std::max(n_max, m_max);
  std::vector<std::vector<ProductMap>> by_length(longest + 1);
  std::uint64_t count = 0;
  for (std::uint32_t len = 1; len <= longest; ++len) {
    std::uint64_t c = 1;
    for (std::uint32_t i = 0; i < len; ++i) c *= homs.size();
    count += c;
    if (count > (std::uint64_t{1} << 20)) throw Error(ErrorCode::TooLarge, "more than 2^20 tuples");
    for (std::uint64_t k = 0; k < c; ++k) {
      std::vector<HomSpec> t(len);
      std::uint64_t x = k;
      for (std::uint32_t i = len; i-- > 0;) {
        t[i] = homs[x % homs.size()];
        x /= homs.size();
      }
      by_length[len].push_back(ProductMap{std::move(t)});
    }
  }
  ScanReport report;
  report.tuples = count;
  for (std::uint32_t n = 1; n <= n_max; ++n)
    for (std::uint32_t m = 1; m <= m_max; ++m)
      for (const auto& P : by_length[n])
        for (const auto& Q : by_length[m]) {
          ++report.pairs;
          if (P.exponent() != Q.exponent()) continue;
          ++report.equal_pairs;
          const Verdict v = theorem14_verdict(P, Q);
          if (v.tag == VerdictTag::case1) ++report.case1;
          if (v.tag == VerdictTag::case2) ++report.case2;
          if (v.tag == VerdictTag::inconsistent || v.tag == VerdictTag::not_equal || !verify_verdict(P, Q, v)) {
            std::string desc = "P=(";
            for (const auto& h : P.homs) desc += std::to_string(h.canonical_exp()) + ",";
            desc.back() = ')';
            desc += " Q=(";
            for (const auto& h : Q.homs) desc += std::to_string(h.canonical_exp()) + ",";
            desc.back() = ')';
            report.inconsistencies.push_back(desc + ": " + (v.inconsistency.empty() ? "payload failed re-verification" : v.inconsistency));
          }
        }
  return report;
}

}  // namespace mqm
