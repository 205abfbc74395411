#include "mqmap/json_io.hpp"

#include <map>

namespace mqm {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::InvalidArgument, msg); }

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class T>
T get_as(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    bad(std::string("bad value for ") + what);
  }
}

std::uint32_t get_u32(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0 || j.get<std::int64_t>() > 0xffffffffLL)
    bad(std::string("expected a nonnegative integer for ") + what);
  return j.get<std::uint32_t>();
}

std::vector<Elem> index_list(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string("expected an array for ") + what);
  std::vector<Elem> out;
  for (const auto& x : j) out.push_back(get_u32(x, what));
  return out;
}

}  // namespace

FieldPtr field_from_json(const json& j) {
  if (j.is_string()) return parse_field_name(j.get<std::string>());
  const std::uint32_t p = get_u32(member(j, "p"), "p");
  const std::uint32_t n = get_u32(member(j, "n"), "n");
  std::optional<Poly> modulus;
  if (j.contains("modulus")) modulus = get_as<Poly>(j.at("modulus"), "modulus");
  return make_field(p, n, modulus);
}

json to_json(const FieldDesc& d) { return json{{"p", d.p}, {"n", d.n}, {"modulus", d.modulus}}; }

RingPtr ring_from_json(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (!s.empty() && s[0] == 'Z') {
      std::uint32_t m = 0;
      try {
        m = static_cast<std::uint32_t>(std::stoul(s.substr(1)));
      } catch (const std::exception&) {
        bad("bad ring name " + s);
      }
      return zmod_ring(m);
    }
    return field_from_json(j);
  }
  if (!j.is_object()) bad("ring descriptor must be a string or an object");
  if (j.contains("p")) return field_from_json(j);
  if (j.contains("m")) return zmod_ring(get_u32(j.at("m"), "m"));
  if (j.contains("product")) {
    const json& f = j.at("product");
    if (!f.is_array() || f.size() < 2) bad("product needs at least two factors");
    RingPtr acc = ring_from_json(f[0]);
    for (std::size_t i = 1; i < f.size(); ++i) acc = product_ring(*acc, *ring_from_json(f[i]));
    return acc;
  }
  const std::uint32_t size = get_u32(member(j, "size"), "size");
  auto flat = [&](const char* key) {
    const json& t = member(j, key);
    std::vector<Elem> out;
    if (t.is_array() && !t.empty() && t[0].is_array()) {
      for (const auto& row : t) {
        auto r = index_list(row, key);
        out.insert(out.end(), r.begin(), r.end());
      }
    } else {
      out = index_list(t, key);
    }
    return out;
  };
  return RingTable::make(size, flat("add"), flat("mul"), get_u32(member(j, "zero"), "zero"),
                         get_u32(member(j, "one"), "one"),
                         j.contains("name") ? get_as<std::string>(j.at("name"), "name") : "table");
}

json ring_to_json(const Ring& r) {
  if (const Field* F = r.as_field()) return to_json(F->desc());
  json add = json::array(), mul = json::array();
  for (Elem a = 0; a < r.size(); ++a) {
    json ra = json::array(), rm = json::array();
    for (Elem b = 0; b < r.size(); ++b) {
      ra.push_back(r.add(a, b));
      rm.push_back(r.mul(a, b));
    }
    add.push_back(std::move(ra));
    mul.push_back(std::move(rm));
  }
  return json{{"name", r.name()}, {"size", r.size()}, {"add", add}, {"mul", mul},
              {"zero", r.zero()}, {"one", r.one()}};
}

Elem elem_from_json(const Ring& r, const json& j) {
  if (j.is_array()) {
    const Field* F = r.as_field();
    if (!F) bad("coefficient arrays need a field");
    auto c = get_as<Poly>(j, "element");
    if (c.size() > F->degree()) bad("too many coefficients");
    for (auto x : c)
      if (x >= F->p()) bad("coefficient out of range");
    return F->from_coeffs(c);
  }
  const Elem x = get_u32(j, "element");
  if (x >= r.size()) bad("element index out of range");
  return x;
}

json elem_to_json(const Ring& r, Elem x) {
  if (const Field* F = r.as_field()) return F->coeffs(x);
  return x;
}

Vec vec_from_json(const Field& L, const json& j) {
  if (!j.is_array()) bad("expected an array of elements");
  Vec v;
  for (const auto& x : j) v.push_back(elem_from_json(L, x));
  return v;
}

json vec_to_json(const Field& L, const Vec& v) {
  json out = json::array();
  for (auto x : v) out.push_back(elem_to_json(L, x));
  return out;
}

QuadMapTable map_from_json(const json& j) {
  const RingPtr K = ring_from_json(member(j, "domain"));
  const RingPtr L = ring_from_json(member(j, "codomain"));
  const std::string form = j.contains("form") ? get_as<std::string>(j.at("form"), "form") : "table";
  if (form == "table") {
    const json& v = member(j, "values");
    if (!v.is_array()) bad("values must be an array");
    std::vector<Elem> values;
    for (const auto& x : v) values.push_back(elem_from_json(*L, x));
    return make_table_map(K, L, std::move(values));
  }
  auto KF = std::dynamic_pointer_cast<const Field>(K);
  auto LF = std::dynamic_pointer_cast<const Field>(L);
  if (!KF || !LF) bad(form + " form needs field domain and codomain");
  if (form == "power") return power_map(KF, LF, get_as<std::int64_t>(member(j, "exponent"), "exponent"));
  if (form == "basis") {
    QuadMapBasis q{KF, LF, vec_from_json(*LF, member(j, "basis_vals")), {}};
    const std::size_t n = KF->degree();
    if (q.basis_vals.size() != n) bad("basis_vals needs one entry per basis element");
    q.gram.assign(n, Vec(n, 0));
    const json& g = member(j, "gram");
    if (!g.is_array() || g.size() != n) bad("gram must be an n x n array");
    for (std::size_t i = 0; i < n; ++i) {
      Vec row = vec_from_json(*LF, g[i]);
      if (row.size() != n) bad("gram must be an n x n array");
      for (std::size_t k = i + 1; k < n; ++k) q.gram[i][k] = q.gram[k][i] = row[k];
    }
    return basis_to_table(q);
  }
  bad("unknown map form " + form);
}

json map_to_json(const QuadMapTable& q) {
  json values = json::array();
  for (auto v : q.values) values.push_back(elem_to_json(*q.codomain, v));
  return json{{"domain", ring_to_json(*q.domain)}, {"codomain", ring_to_json(*q.codomain)},
              {"form", "table"}, {"values", values}};
}

json map_to_json(const QuadMapBasis& q) {
  const std::size_t n = q.K->degree();
  json gram = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Vec row(n, 0);
    for (std::size_t k = 0; k < n; ++k)
      if (k != i) row[k] = i < k ? q.gram[i][k] : q.gram[k][i];
    gram.push_back(vec_to_json(*q.L, row));
  }
  return json{{"domain", to_json(q.K->desc())}, {"codomain", to_json(q.L->desc())}, {"form", "basis"},
              {"basis_vals", vec_to_json(*q.L, q.basis_vals)}, {"gram", gram}};
}

json to_json(const TensorAlgebra& A) {
  json sc = json::array();
  for (std::uint32_t i = 0; i < A.dim; ++i) {
    json row = json::array();
    for (std::uint32_t k = 0; k < A.dim; ++k) row.push_back(vec_to_json(*A.L, A.struct_consts[i * A.dim + k]));
    sc.push_back(std::move(row));
  }
  return json{{"K", to_json(A.K->desc())}, {"L", to_json(A.L->desc())}, {"dim", A.dim},
              {"struct_consts", sc}, {"unit", vec_to_json(*A.L, A.unit)}};
}

json to_json(const ExtendedQuadMap& qt) {
  const Field& L = *qt.form.L;
  const std::size_t n = qt.form.basis_vals.size();
  json gram = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Vec row(n, 0);
    for (std::size_t k = i + 1; k < n; ++k) row[k] = qt.form.gram[i][k];
    gram.push_back(vec_to_json(L, row));
  }
  return json{{"algebra", to_json(qt.algebra)}, {"basis_vals", vec_to_json(L, qt.form.basis_vals)},
              {"gram", gram}};
}

HomSpec hom_from_json(const FieldPtr& K, const FieldPtr& L, const json& j) {
  return HomSpec(K, L, j.contains("embedding_index") ? get_u32(j.at("embedding_index"), "embedding_index") : 0,
                 get_as<std::int64_t>(member(j, "frobenius_exp"), "frobenius_exp"));
}

json to_json(const HomSpec& h) {
  return json{{"embedding_index", h.embedding_index()}, {"frobenius_exp", h.frobenius_exp()}};
}

json to_json(const Report& r) {
  json checks = json::array(), witnesses = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"ok", c.ok}, {"mode", to_string(c.mode)}, {"evaluations", c.evaluations}});
  for (const auto& w : r.witnesses) witnesses.push_back({{"check", w.check}, {"args", w.args}, {"detail", w.detail}});
  return json{{"ok", r.ok}, {"sampled", r.sampled()}, {"checks", checks}, {"witnesses", witnesses}};
}

Report report_from_json(const json& j) {
  static const std::map<std::string, CheckMode> modes{
      {"exhaustive", CheckMode::exhaustive}, {"sampled", CheckMode::sampled}, {"grid", CheckMode::grid}};
  Report r;
  for (const auto& c : member(j, "checks")) {
    const auto mode = modes.find(get_as<std::string>(member(c, "mode"), "mode"));
    if (mode == modes.end()) bad("unknown check mode");
    r.checks.push_back(CheckResult{get_as<std::string>(member(c, "name"), "name"), get_as<bool>(member(c, "ok"), "ok"),
                                   mode->second, get_as<std::uint64_t>(member(c, "evaluations"), "evaluations")});
  }
  for (const auto& w : member(j, "witnesses"))
    r.witnesses.push_back(Witness{get_as<std::string>(member(w, "check"), "check"), index_list(member(w, "args"), "args"),
                                  get_as<std::string>(member(w, "detail"), "detail")});
  r.ok = get_as<bool>(member(j, "ok"), "ok");
  return r;
}

json to_json(const Decomposition& d) {
  auto hom = [](const HomSpec& h) {
    json j{{"target", to_json(h.L()->desc())}};
    j.update(to_json(h));
    return j;
  };
  json j{{"branch", to_string(d.branch)}};
  j["kind"] = d.algebra ? json(to_string(d.algebra->kind)) : json(nullptr);
  j["quotient_dim"] = d.quotient_dim;
  j["phi1"] = hom(d.phi1);
  j["phi2"] = hom(d.phi2);
  if (d.hom) j["hom"] = hom(*d.hom);
  return j;
}

json to_json(const Verdict& v, const Field& K) {
  json payload = json::object();
  payload["swapped"] = v.swapped;
  switch (v.tag) {
    case VerdictTag::not_equal:
      payload["witness"] = v.witness ? elem_to_json(K, *v.witness) : json(nullptr);
      break;
    case VerdictTag::case1:
      payload["permutation"] = v.permutation;
      break;
    case VerdictTag::case2: {
      payload["equal_indices"] = v.equal_indices;
      json tau = json::array(), sigma = json::array();
      for (const auto& t : v.tau_twists)
        tau.push_back({{"j", t.target}, {"i", t.source}, {"l", t.l}, {"lower", t.lower}, {"upper", t.upper}});
      for (const auto& t : v.sigma_twists)
        sigma.push_back({{"i", t.target}, {"j", t.source}, {"l", t.l}, {"lower", t.lower}, {"upper", t.upper}});
      payload["tau_twists"] = tau;
      payload["sigma_twists"] = sigma;
      break;
    }
    case VerdictTag::inconsistent:
      payload["message"] = v.inconsistency;
      break;
  }
  return json{{"tag", to_string(v.tag)}, {"payload", payload}};
}

Verdict verdict_from_json(const json& j, const Field& K) {
  static const std::map<std::string, VerdictTag> tags{{"not_equal", VerdictTag::not_equal},
                                                      {"case1", VerdictTag::case1},
                                                      {"case2", VerdictTag::case2},
                                                      {"inconsistent", VerdictTag::inconsistent}};
  const auto tag = tags.find(get_as<std::string>(member(j, "tag"), "tag"));
  if (tag == tags.end()) bad("unknown verdict tag");
  const json& p = member(j, "payload");
  Verdict v;
  v.tag = tag->second;
  v.swapped = get_as<bool>(member(p, "swapped"), "swapped");
  auto twists = [&](const char* key, const char* target, const char* source) {
    std::vector<Twist> out;
    for (const auto& t : member(p, key))
      out.push_back(Twist{get_as<std::size_t>(member(t, target), target), get_as<std::size_t>(member(t, source), source),
                          get_as<std::int64_t>(member(t, "l"), "l"), get_as<std::int64_t>(member(t, "lower"), "lower"),
                          get_as<std::int64_t>(member(t, "upper"), "upper")});
    return out;
  };
  switch (v.tag) {
    case VerdictTag::not_equal:
      if (!member(p, "witness").is_null()) v.witness = elem_from_json(K, p.at("witness"));
      break;
    case VerdictTag::case1:
      v.permutation = get_as<std::vector<std::size_t>>(member(p, "permutation"), "permutation");
      break;
    case VerdictTag::case2:
      v.equal_indices = get_as<std::vector<std::size_t>>(member(p, "equal_indices"), "equal_indices");
      v.tau_twists = twists("tau_twists", "j", "i");
      v.sigma_twists = twists("sigma_twists", "i", "j");
      break;
    case VerdictTag::inconsistent:
      v.inconsistency = get_as<std::string>(member(p, "message"), "message");
      break;
  }
  return v;
}

json to_json(const ScanReport& s) {
  return json{{"tuples", s.tuples},   {"pairs", s.pairs}, {"equal_pairs", s.equal_pairs},
              {"case1", s.case1},     {"case2", s.case2}, {"inconsistencies", s.inconsistencies}};
}

json to_json(const ArtinResult& a, const Field& L) {
  json j{{"independent", a.independent}};
  j["dependence"] = a.independent ? json(nullptr) : vec_to_json(L, a.dependence);
  return j;
}

json to_json(const SymsumResult& s, const Field& K) {
  json j{{"vanishes", s.vanishes}, {"structural", s.structural}, {"agree", s.vanishes == s.structural},
         {"evaluations", s.evaluations}};
  j["witness"] = s.witness.empty() ? json(nullptr) : vec_to_json(K, s.witness);
  return j;
}

json to_json(const Error& e) {
  json j{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  if (!e.witness().empty()) j["witness"] = e.witness();
  return json{{"schema_version", kSchemaVersion}, {"error", j}};
}

}  // namespace mqm
