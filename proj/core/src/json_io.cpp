#include "jconf/json_io.hpp"

#include <chrono>
#include <utility>

#include "jconf/minrep.hpp"
#include "jconf/models.hpp"
#include "json.hpp"

namespace jconf {

namespace {

using Json = nlohmann::ordered_json;

std::string dumps(const Json& j) { return j.dump(2) + "\n"; }

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

// --- typed field access with path-carrying errors ------------------------

const Json& require_field(const Json& j, const std::string& path,
                          const char* key) {
  if (!j.is_object()) throw JsonError(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end())
    throw JsonError(path + "." + key + ": required field is missing");
  return *it;
}

long get_int(const Json& j, const std::string& path, const char* key) {
  const Json& v = require_field(j, path, key);
  if (!v.is_number_integer())
    throw JsonError(path + "." + key + ": expected an integer");
  return v.get<long>();
}

bool get_bool(const Json& j, const std::string& path, const char* key) {
  const Json& v = require_field(j, path, key);
  if (!v.is_boolean())
    throw JsonError(path + "." + key + ": expected a boolean");
  return v.get<bool>();
}

std::string get_str(const Json& j, const std::string& path, const char* key) {
  const Json& v = require_field(j, path, key);
  if (!v.is_string())
    throw JsonError(path + "." + key + ": expected a string");
  return v.get<std::string>();
}

// Rational field: a rational string like "3/2", or a plain JSON integer.
Rational get_rational(const Json& j, const std::string& path, const char* key) {
  const Json& v = require_field(j, path, key);
  if (v.is_number_integer()) {
    Rational q(v.get<long>());
    return q;
  }
  if (!v.is_string())
    throw JsonError(path + "." + key +
                    ": expected a rational string or an integer");
  try {
    return rational_from_string(v.get<std::string>());
  } catch (const std::exception& e) {
    throw JsonError(path + "." + key + ": " + e.what());
  }
}

Scalar parse_scalar(const Json& v, const std::string& where) {
  if (!v.is_string()) throw JsonError(where + ": expected a scalar string");
  try {
    return Scalar::parse(v.get<std::string>());
  } catch (const std::exception& e) {
    throw JsonError(where + ": " + e.what());
  }
}

Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (const Scalar& s : v) a.push_back(s.str());
  return a;
}

Json mat_json(const Mat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) rows.push_back(vec_json(m.row(i)));
  return rows;
}

Json parse_doc(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw JsonError(what + ": " + e.what());
  }
}

// --- algebra object -------------------------------------------------------

Json algebra_obj(const JordanAlgebra& V) {
  Json j;
  j["name"] = V.name;
  j["field"] = field_name(V.field);
  j["n"] = V.n;
  j["r"] = V.r;
  j["d"] = V.d;
  j["delta"] = V.delta;
  j["euclidean"] = V.euclidean;
  j["basis"] = V.labels;
  j["unit"] = vec_json(V.unit);
  j["theta"] = mat_json(V.cartan0);
  Json table = Json::array();
  for (int a = 0; a < V.n; ++a) {
    Json row = Json::array();
    for (int b = 0; b < V.n; ++b) {
      Json cell = Json::array();
      for (const auto& e : V.product[a][b])
        cell.push_back(Json::array({e.idx, e.val.str()}));
      row.push_back(std::move(cell));
    }
    table.push_back(std::move(row));
  }
  j["product"] = std::move(table);
  return j;
}

JordanAlgebra algebra_from_obj(const Json& j) {
  const std::string p = "algebra";
  JordanAlgebra V;
  V.name = get_str(j, p, "name");
  std::string f = get_str(j, p, "field");
  if (f == "R")
    V.field = Field::R;
  else if (f == "C")
    V.field = Field::C;
  else
    throw JsonError(p + ".field: expected \"R\" or \"C\"");
  V.n = int(get_int(j, p, "n"));
  V.r = int(get_int(j, p, "r"));
  V.d = int(get_int(j, p, "d"));
  V.delta = int(get_int(j, p, "delta"));
  V.euclidean = get_bool(j, p, "euclidean");
  if (V.n <= 0) throw JsonError(p + ".n: expected a positive dimension");
  if ((V.field == Field::C) != (V.delta == 2))
    throw JsonError(p + ".delta: inconsistent with the field");

  const Json& basis = require_field(j, p, "basis");
  if (!basis.is_array() || int(basis.size()) != V.n)
    throw JsonError(p + ".basis: expected an array of n labels");
  for (size_t k = 0; k < basis.size(); ++k) {
    if (!basis[k].is_string())
      throw JsonError(p + ".basis[" + std::to_string(k) +
                      "]: expected a string");
    V.labels.push_back(basis[k].get<std::string>());
  }

  const Json& unit = require_field(j, p, "unit");
  if (!unit.is_array() || int(unit.size()) != V.n)
    throw JsonError(p + ".unit: expected an array of n scalars");
  for (size_t k = 0; k < unit.size(); ++k)
    V.unit.push_back(
        parse_scalar(unit[k], p + ".unit[" + std::to_string(k) + "]"));

  const Json& theta = require_field(j, p, "theta");
  if (!theta.is_array() || int(theta.size()) != V.n)
    throw JsonError(p + ".theta: expected an n x n matrix of scalars");
  V.cartan0 = Mat(V.n, V.n);
  for (int a = 0; a < V.n; ++a) {
    const Json& row = theta[a];
    std::string where = p + ".theta[" + std::to_string(a) + "]";
    if (!row.is_array() || int(row.size()) != V.n)
      throw JsonError(where + ": expected a row of n scalars");
    for (int b = 0; b < V.n; ++b)
      V.cartan0.at(a, b) =
          parse_scalar(row[b], where + "[" + std::to_string(b) + "]");
  }

  const Json& table = require_field(j, p, "product");
  if (!table.is_array() || int(table.size()) != V.n)
    throw JsonError(p + ".product: expected an n x n table");
  V.product.assign(V.n, std::vector<SparseVec>(V.n));
  for (int a = 0; a < V.n; ++a) {
    const Json& row = table[a];
    std::string rwhere = p + ".product[" + std::to_string(a) + "]";
    if (!row.is_array() || int(row.size()) != V.n)
      throw JsonError(rwhere + ": expected a row of n cells");
    for (int b = 0; b < V.n; ++b) {
      const Json& cell = row[b];
      std::string where = rwhere + "[" + std::to_string(b) + "]";
      if (!cell.is_array()) throw JsonError(where + ": expected an array");
      int last = -1;
      for (size_t t = 0; t < cell.size(); ++t) {
        const Json& entry = cell[t];
        std::string ewhere = where + "[" + std::to_string(t) + "]";
        if (!entry.is_array() || entry.size() != 2 ||
            !entry[0].is_number_integer())
          throw JsonError(ewhere + ": expected [index, scalar]");
        int idx = entry[0].get<int>();
        if (idx < last || idx >= V.n)
          throw JsonError(ewhere + ": index out of order or range");
        last = idx;
        Scalar val = parse_scalar(entry[1], ewhere + "[1]");
        if (val.is_zero()) throw JsonError(ewhere + ": explicit zero entry");
        V.product[a][b].push_back({idx, val});
      }
    }
  }

  // If the declared name is a catalog construction and the payload coincides
  // with it bit for bit, return the constructed object so the frame and the
  // minimal-representation flags come along.
  try {
    JordanAlgebra built = make_model(V.name);
    if (algebra_obj(built) == j) return built;
  } catch (const JordanError&) {
  }
  V.finalize();
  return V;
}

// --- parameter objects ----------------------------------------------------

Json gparam_obj(const GParam& p) {
  Json j;
  std::visit(
      [&](const auto& q) {
        using T = std::decay_t<decltype(q)>;
        j["variant"] = variant_name(p);
        if constexpr (std::is_same_v<T, EuclideanHW>) {
          j["k"] = q.k;
        } else if constexpr (std::is_same_v<T, NonEuclPrincipal>) {
          j["xi"] = q.xi;
          j["mu_imag"] = rational_to_string(q.mu_imag);
        } else if constexpr (std::is_same_v<T, AqModule>) {
          j["k"] = q.k;
        } else {
          j["m"] = q.m;
          j["mu_imag"] = rational_to_string(q.mu_imag);
        }
      },
      p);
  return j;
}

Json gprime_obj(const GPrimeParam& p) {
  Json j;
  std::visit(
      [&](const auto& q) {
        using T = std::decay_t<decltype(q)>;
        j["variant"] = variant_name(p);
        if constexpr (std::is_same_v<T, HolDiscrete>) {
          j["k"] = rational_to_string(q.k);
        } else if constexpr (std::is_same_v<T, Discrete>) {
          j["k"] = q.k;
        } else if constexpr (std::is_same_v<T, Principal>) {
          j["m"] = q.m;
          j["nu_imag"] = rational_to_string(q.nu_imag);
        } else {
          j["m"] = q.m;
          j["nu"] = rational_to_string(q.nu);
        }
      },
      p);
  return j;
}

const char* status_name(CheckStatus s) { return to_string(s); }

Json check_obj(const CheckRecord& c) {
  Json j;
  j["check_id"] = c.check_id;
  j["claim"] = c.claim;
  j["status"] = status_name(c.status);
  j["witness"] = c.witness;
  j["millis"] = c.millis;
  return j;
}

Json report_obj(const VerificationReport& r, bool with_version = false) {
  Json j;
  if (with_version) j["schema_version"] = kSchemaVersion;
  j["model"] = r.model;
  j["seed"] = r.seed;
  j["level"] = r.level;
  j["tool_version"] = r.tool_version;
  j["overall"] = r.overall ? "pass" : "fail";
  Json counts;
  counts["pass"] = r.counted(CheckStatus::Pass);
  counts["fail"] = r.counted(CheckStatus::Fail);
  counts["skipped"] = r.counted(CheckStatus::Skipped);
  j["counts"] = std::move(counts);
  Json checks = Json::array();
  for (const CheckRecord& c : r.checks) checks.push_back(check_obj(c));
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace

std::string algebra_to_json(const JordanAlgebra& V) {
  return dumps(algebra_obj(V));
}

JordanAlgebra algebra_from_json(const std::string& text) {
  Json j = parse_doc(text, "algebra");
  if (j.is_object() && j.contains("algebra")) j = j["algebra"];
  return algebra_from_obj(j);
}

std::string doc_algebra(const JordanAlgebra& V) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["algebra"] = algebra_obj(V);
  return dumps(j);
}

std::string doc_lie(const ConformalAlgebra& C) {
  const LieAlgebra& L = C.co();
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["model"] = C.V().name;
  Json lie;
  lie["dim"] = L.dim;
  lie["complex_basis"] = L.complex_basis;
  lie["labels"] = L.labels;
  Json brackets = Json::array();
  for (int a = 0; a < L.dim; ++a)
    for (int b = a + 1; b < L.dim; ++b) {
      const SparseVec& v = L.bracket_basis(a, b);
      if (v.empty()) continue;
      Json cell = Json::array();
      for (const auto& e : v) cell.push_back(Json::array({e.idx, e.val.str()}));
      brackets.push_back(Json::array({a, b, std::move(cell)}));
    }
  lie["brackets"] = std::move(brackets);
  j["lie"] = std::move(lie);
  return dumps(j);
}

std::string doc_peirce(const JordanAlgebra& V) {
  PeirceData P = peirce_decompose(V);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["model"] = V.name;
  j["r"] = V.r;
  j["d"] = V.d;
  j["n"] = V.n;
  int total = 0;
  Json blocks = Json::array();
  for (int i = 0; i < V.r; ++i) {
    Json b;
    b["i"] = i + 1;
    b["j"] = i + 1;
    b["dim"] = P.diag[i].dim();
    b["basis"] = mat_json(P.diag[i].basis());
    total += P.diag[i].dim();
    blocks.push_back(std::move(b));
  }
  for (const auto& [key, sub] : P.off) {
    Json b;
    b["i"] = key.first + 1;
    b["j"] = key.second + 1;
    b["dim"] = sub.dim();
    b["basis"] = mat_json(sub.basis());
    total += sub.dim();
    blocks.push_back(std::move(b));
  }
  j["blocks"] = std::move(blocks);
  j["sum_rule_ok"] = (total == V.n) &&
                     (V.n == V.r + V.d * V.r * (V.r - 1) / 2);
  return dumps(j);
}

std::string doc_rootdata(const ConformalAlgebra& C) {
  const JordanAlgebra& V = C.V();
  RootDatum split = split_root_datum(V, C.der());
  RootDatum comp = compact_root_datum(V, C.der());
  DualPairData dp = dual_pair(C);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["model"] = V.name;
  j["r"] = V.r;
  j["d"] = V.d;
  j["delta"] = V.delta;
  const RootDatum& any = split.defined ? split : comp;
  if (any.defined) {
    j["mult_alpha"] = any.mult_alpha;
    j["mult_2alpha"] = any.mult_2alpha;
  } else {
    j["mult_alpha"] = nullptr;
    j["mult_2alpha"] = nullptr;
  }
  j["rho_a_coeff"] =
      split.defined ? Json(rational_to_string(split.rho_coeff)) : Json(nullptr);
  j["rho_t_coeff"] =
      comp.defined ? Json(rational_to_string(comp.rho_coeff)) : Json(nullptr);
  j["dualpair_ok"] = dp.mutual;
  Json dims;
  dims["co"] = C.dim();
  dims["aut"] = C.da();
  dims["sl2_centralizer"] = dp.sl2_centralizer.dim();
  dims["der_centralizer"] = dp.der_centralizer.dim();
  j["dims"] = std::move(dims);
  return dumps(j);
}

std::string doc_keylemma(const JordanAlgebra& V, int degree, int points,
                         std::uint64_t seed, bool& all_pass) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["model"] = V.name;
  j["degree"] = degree;
  j["points"] = points;
  j["seed"] = seed;

  Json ids = Json::array();
  all_pass = true;
  auto push = [&](const char* name, bool pass, std::int64_t ms,
                  const std::string& note) {
    Json e;
    e["name"] = name;
    e["status"] = pass ? "pass" : "fail";
    e["millis"] = ms;
    if (!note.empty()) e["note"] = note;
    ids.push_back(std::move(e));
    all_pass = all_pass && pass;
  };

  auto t0 = std::chrono::steady_clock::now();
  KeyLemmaReport rep = key_lemma_at_c(V, degree);
  std::int64_t shared = elapsed_ms(t0);
  push("bessel_normal_form_at_base", rep.bessel_at_c, shared, rep.mismatch);
  push("casimir_as_composed_derivations", rep.casimir_at_c, shared,
       rep.mismatch);
  push("assembled_radial_form", rep.assembled, shared, rep.mismatch);
  push("complex_pair", rep.complex_pair, shared,
       V.field == Field::C ? "" : "vacuous over a real model");

  t0 = std::chrono::steady_clock::now();
  Sl2MatchReport match = keylemma_vs_sl2_match(V.r, V.d, V.delta);
  push("radial_model_match", match.ok, elapsed_ms(t0), match.difference);

  t0 = std::chrono::steady_clock::now();
  MinRepAction act(V);
  Rng rng(seed);
  std::vector<Vec> pts;
  for (int t = 0; t < points; ++t)
    pts.push_back(V.realify(rank_one_point(V, rng)));
  RepCheckReport rel =
      rep_relation_check(act, co_E(V), co_F(V), degree, pts);
  push("cone_bracket_relations", rel.ambient_zero && rel.tangential_zero,
       elapsed_ms(t0), rel.counterexample);

  j["monomials"] = rep.monomials;
  j["identities"] = std::move(ids);
  j["overall"] = all_pass ? "pass" : "fail";
  return dumps(j);
}

std::string doc_theta(const ModelConstants& mc, const GParam& p) {
  ThetaLift lift = theta_lift(mc, p);
  CasimirEigenvalue cas = casimir_eigenvalue(mc, p);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["model"] = mc.model;
  j["input"] = gparam_obj(lift.input);
  j["output"] = gprime_obj(lift.output);
  j["cover"] = lift.cover;
  if (lift.twist) j["twist"] = *lift.twist;
  Json c;
  c["c"] = cas.c.str();
  if (cas.d) c["d"] = cas.d->str();
  j["casimir"] = std::move(c);
  return dumps(j);
}

std::string doc_plancherel(const ModelConstants& mc, long max_k) {
  PlancherelSupport sup = plancherel_support(mc);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["model"] = mc.model;
  j["max_k"] = max_k;
  if (sup.has_discrete) {
    Json d;
    d["variant"] = sup.discrete_variant;
    d["first"] = sup.discrete_first;
    d["step"] = sup.discrete_step;
    Json params = Json::array();
    for (const GParam& p : sup.discrete_upto(max_k))
      params.push_back(gparam_obj(p));
    d["params"] = std::move(params);
    j["discrete"] = std::move(d);
  } else {
    j["discrete"] = nullptr;
  }
  if (sup.has_continuous) {
    Json c;
    c["label"] = sup.continuous_label;
    if (sup.continuous_all_integers) {
      c["all_integers"] = true;
    } else {
      c["values"] = sup.continuous_values;
    }
    j["continuous"] = std::move(c);
  } else {
    j["continuous"] = nullptr;
  }
  return dumps(j);
}

std::string report_to_json(const VerificationReport& r) {
  return dumps(report_obj(r, true));
}

std::string reports_to_json(const std::vector<VerificationReport>& rs,
                            VerifyLevel level, std::uint64_t seed) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["level"] = to_string(level);
  j["seed"] = seed;
  j["tool_version"] = kToolVersion;
  bool overall = true;
  for (const auto& r : rs) overall = overall && r.overall;
  j["overall"] = overall ? "pass" : "fail";
  Json models = Json::array();
  for (const auto& r : rs) models.push_back(report_obj(r));
  j["models"] = std::move(models);
  return dumps(j);
}

GParam gparam_from_json(const std::string& text) {
  Json j = parse_doc(text, "param");
  const std::string p = "param";
  std::string variant = get_str(j, p, "variant");
  if (variant == "EuclideanHW") return EuclideanHW{get_int(j, p, "k")};
  if (variant == "NonEuclPrincipal") {
    long xi = get_int(j, p, "xi");
    return NonEuclPrincipal{int(xi), get_rational(j, p, "mu_imag")};
  }
  if (variant == "AqModule") return AqModule{get_int(j, p, "k")};
  if (variant == "ComplexPrincipal")
    return ComplexPrincipal{get_int(j, p, "m"), get_rational(j, p, "mu_imag")};
  throw JsonError(p + ".variant: unknown variant \"" + variant + "\"");
}

}  // namespace jconf
