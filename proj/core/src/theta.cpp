#include "jconf/theta.hpp"

#include <map>
#include <sstream>
#include <utility>

#include "jconf/polydiffop.hpp"

namespace jconf {

namespace {

Rational canon(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string num(long v) { return std::to_string(v); }

// "so(a,b)" with definite signatures collapsed to "so(max(a,b))".
std::string so_label(long a, long b, bool complex_form = false) {
  if (complex_form) return "so(" + num(a) + ",C)";
  if (a == 0 || b == 0) return "so(" + num(a + b) + ")";
  return "so(" + num(a) + "," + num(b) + ")";
}

struct FamilyRow {
  int r, d, delta, n;
  bool euclidean;
  std::string co, g, gs;
};

FamilyRow sym_row(int r) {
  return {r, 1, 1, r * (r + 1) / 2, true,
          "sp(" + num(r) + ",R)", so_label(r, 0), so_label(r - 1, 0)};
}
FamilyRow herm_c_row(int r) {
  return {r, 2, 1, r * r, true,
          "su(" + num(r) + "," + num(r) + ")", "su(" + num(r) + ")",
          "s(u(1)+u(" + num(r - 1) + "))"};
}
FamilyRow herm_h_row(int r) {
  return {r, 4, 1, r * (2 * r - 1), true,
          "so*(" + num(4 * r) + ")", "sp(" + num(r) + ")",
          "sp(1)+sp(" + num(r - 1) + ")"};
}
FamilyRow spin_row(int p, int q) {
  return {2, p + q - 2, 1, p + q, p == 1,
          so_label(p + 1, q + 1), so_label(p - 1, q), so_label(p - 1, q - 1)};
}
FamilyRow full_row(int r) {
  return {r, 2, 1, r * r, false,
          "sl(" + num(2 * r) + ",R)", "sl(" + num(r) + ",R)",
          "s(gl(1,R)+gl(" + num(r - 1) + ",R))"};
}
FamilyRow skew_row(int r) {  // matrices of size 2r
  return {r, 4, 1, r * (2 * r - 1), false,
          so_label(2 * r, 2 * r), "sp(" + num(r) + ",R)",
          "sp(1,R)+sp(" + num(r - 1) + ",R)"};
}
FamilyRow herm_o_row(bool split) {
  if (split) return {3, 8, 1, 27, false, "e7(7)", "f4(4)", "so(4,5)"};
  return {3, 8, 1, 27, true, "e7(-25)", "f4", "so(9)"};
}
FamilyRow sym_cx_row(int r) {
  return {r, 1, 2, r * (r + 1) / 2, false,
          "sp(" + num(r) + ",C)", so_label(r, 0, true), so_label(r - 1, 0, true)};
}
FamilyRow full_cx_row(int r) {
  return {r, 2, 2, r * r, false,
          "sl(" + num(2 * r) + ",C)", "sl(" + num(r) + ",C)",
          "s(gl(1,C)+gl(" + num(r - 1) + ",C))"};
}
FamilyRow skew_cx_row(int r) {
  return {r, 4, 2, r * (2 * r - 1), false,
          so_label(4 * r, 0, true), "sp(" + num(r) + ",C)",
          "sp(1,C)+sp(" + num(r - 1) + ",C)"};
}
FamilyRow spin_cx_row(int nn) {
  return {2, nn - 2, 2, nn, false,
          so_label(nn + 2, 0, true), so_label(nn - 1, 0, true), so_label(nn - 2, 0, true)};
}
FamilyRow herm_o_cx_row() {
  return {3, 8, 2, 27, false, "e7(C)", "f4(C)", "so(9,C)"};
}

long rd_half_int(const ModelConstants& mc) {
  // callers guarantee rd even here
  return static_cast<long>(mc.r) * mc.d / 2;
}

std::string imag_str(const Rational& t) { return rational_to_string(t) + "*i"; }

}  // namespace

ModelConstants model_constants(const std::string& id) {
  auto starts = [&](const std::string& pre) { return id.rfind(pre, 0) == 0; };
  auto num_between = [&](size_t from, size_t to) {
    return std::stoi(id.substr(from, to - from));
  };

  ModelConstants mc;
  mc.model = id;
  FamilyRow row{};
  bool found = false;
  try {
    if (id == "Herm3O") {
      row = herm_o_row(false);
      found = true;
    } else if (id == "Herm3Os") {
      row = herm_o_row(true);
      found = true;
    } else if (id == "Herm3OC") {
      row = herm_o_cx_row();
      found = true;
    } else if (starts("SpinR(") && id.back() == ')') {
      size_t comma = id.find(',');
      if (comma == std::string::npos) throw ThetaError("unknown model id: '" + id + "'");
      int p = num_between(6, comma);
      int q = num_between(comma + 1, id.size() - 1);
      if (p < 1 || q < 1 || p + q < 3) throw ThetaError("unknown model id: '" + id + "'");
      row = spin_row(p, q);
      mc.spin_p = p;
      mc.spin_q = q;
      mc.has_minrep = !(p >= 2 && q >= 2 && (p + q) % 2 == 1);
      mc.principal_twist = !row.euclidean && (((p - q) % 4 + 4) % 4 == 2);
      found = true;
    } else if (starts("SpinC(") && id.back() == ')') {
      int nn = num_between(6, id.size() - 1);
      if (nn < 3) throw ThetaError("unknown model id: '" + id + "'");
      row = spin_cx_row(nn);
      found = true;
    } else if (starts("Sym") && id.back() == 'R') {
      row = sym_row(num_between(3, id.size() - 1));
      found = true;
    } else if (starts("Sym") && id.back() == 'C') {
      row = sym_cx_row(num_between(3, id.size() - 1));
      found = true;
    } else if (starts("Herm") && id.back() == 'C') {
      row = herm_c_row(num_between(4, id.size() - 1));
      found = true;
    } else if (starts("Herm") && id.back() == 'H') {
      row = herm_h_row(num_between(4, id.size() - 1));
      found = true;
    } else if (starts("M") && id.back() == 'R') {
      row = full_row(num_between(1, id.size() - 1));
      found = true;
    } else if (starts("M") && id.back() == 'C') {
      row = full_cx_row(num_between(1, id.size() - 1));
      found = true;
    } else if (starts("Skew") && id.back() == 'R') {
      int m = num_between(4, id.size() - 1);
      if (m % 2) throw ThetaError("unknown model id: '" + id + "'");
      row = skew_row(m / 2);
      found = true;
    } else if (starts("Skew") && id.back() == 'C') {
      int m = num_between(4, id.size() - 1);
      if (m % 2) throw ThetaError("unknown model id: '" + id + "'");
      row = skew_cx_row(m / 2);
      found = true;
    }
  } catch (const std::invalid_argument&) {
    found = false;
  } catch (const std::out_of_range&) {
    found = false;
  }
  if (!found || row.r < 1) throw ThetaError("unknown model id: '" + id + "'");

  mc.r = row.r;
  mc.d = row.d;
  mc.delta = row.delta;
  mc.n = row.n;
  mc.euclidean = row.euclidean;
  mc.co_label = row.co;
  mc.g_label = row.g;
  mc.gsigma_label = row.gs;
  mc.field = row.delta == 2 ? Field::C : Field::R;
  mc.rd_half = canon(static_cast<long>(row.r) * row.d, 2);
  mc.cover_annotation =
      (static_cast<long>(row.r) * row.d) % 2 == 0 ? "integral" : "half-integral";
  return mc;
}

std::string variant_name(const GParam& p) {
  return std::visit(overloaded{[](const EuclideanHW&) { return "EuclideanHW"; },
                               [](const NonEuclPrincipal&) { return "NonEuclPrincipal"; },
                               [](const AqModule&) { return "AqModule"; },
                               [](const ComplexPrincipal&) { return "ComplexPrincipal"; }},
                    p);
}

std::string variant_name(const GPrimeParam& p) {
  return std::visit(overloaded{[](const HolDiscrete&) { return "HolDiscrete"; },
                               [](const Discrete&) { return "Discrete"; },
                               [](const Principal&) { return "Principal"; },
                               [](const Complementary&) { return "Complementary"; }},
                    p);
}

std::string describe(const GParam& p) {
  return std::visit(
      overloaded{
          [](const EuclideanHW& e) { return "EuclideanHW(k=" + num(e.k) + ")"; },
          [](const NonEuclPrincipal& e) {
            return "NonEuclPrincipal(xi=" + num(e.xi) + ", mu=" + imag_str(e.mu_imag) + ")";
          },
          [](const AqModule& e) { return "AqModule(k=" + num(e.k) + ")"; },
          [](const ComplexPrincipal& e) {
            return "ComplexPrincipal(m=" + num(e.m) + ", mu=" + imag_str(e.mu_imag) + ")";
          }},
      p);
}

std::string describe(const GPrimeParam& p) {
  return std::visit(
      overloaded{
          [](const HolDiscrete& e) { return "HolDiscrete(k=" + rational_to_string(e.k) + ")"; },
          [](const Discrete& e) { return "Discrete(k=" + num(e.k) + ")"; },
          [](const Principal& e) {
            return "Principal(m=" + num(e.m) + ", nu=" + imag_str(e.nu_imag) + ")";
          },
          [](const Complementary& e) {
            return "Complementary(m=" + num(e.m) + ", nu=" + rational_to_string(e.nu) + ")";
          }},
      p);
}

GPrimeParam canonicalize(const GPrimeParam& p, int delta) {
  auto fix = [delta](long m, Rational nu) -> std::pair<long, Rational> {
    if (delta == 1) m = ((m % 2) + 2) % 2;
    if (m < 0) {
      m = -m;
      nu = -nu;
    }
    if ((m == 0 || delta == 1) && nu < 0) nu = -nu;
    return {m, nu};
  };
  return std::visit(
      overloaded{[](const HolDiscrete& e) { return GPrimeParam(e); },
                 [](const Discrete& e) { return GPrimeParam(e); },
                 [&](const Principal& e) {
                   auto [m, nu] = fix(e.m, e.nu_imag);
                   return GPrimeParam(Principal{m, nu});
                 },
                 [&](const Complementary& e) {
                   auto [m, nu] = fix(e.m, e.nu);
                   return GPrimeParam(Complementary{m, nu});
                 }},
      p);
}

std::optional<std::string> validate_gparam(const ModelConstants& mc, const GParam& p) {
  if (!mc.has_minrep) return "model has no minimal representation";
  return std::visit(
      overloaded{
          [&](const EuclideanHW& e) -> std::optional<std::string> {
            if (!mc.euclidean) return "EuclideanHW requires a Euclidean model";
            if (e.k < 0 || e.k % 2 != 0) return "k must be a nonnegative even integer";
            return std::nullopt;
          },
          [&](const NonEuclPrincipal& e) -> std::optional<std::string> {
            if (mc.delta != 1 || mc.euclidean)
              return "NonEuclPrincipal requires a real non-Euclidean model";
            if (e.xi != 0 && e.xi != 1) return "xi must be 0 or 1";
            return std::nullopt;
          },
          [&](const AqModule& e) -> std::optional<std::string> {
            if (mc.delta != 1 || mc.euclidean)
              return "AqModule requires a real non-Euclidean model";
            long s = e.k + rd_half_int(mc);
            if (s <= 0 || s % 2 != 0) return "k + rd/2 must be a positive even integer";
            return std::nullopt;
          },
          [&](const ComplexPrincipal&) -> std::optional<std::string> {
            if (mc.delta != 2) return "ComplexPrincipal requires a complex model";
            return std::nullopt;
          }},
      p);
}

std::optional<std::string> validate_gprime(const ModelConstants& mc, const GPrimeParam& p) {
  return std::visit(
      overloaded{
          [&](const HolDiscrete& e) -> std::optional<std::string> {
            if (!(e.k > 1)) return "k must exceed 1";
            return std::nullopt;
          },
          [&](const Discrete& e) -> std::optional<std::string> {
            if (mc.delta != 1) return "Discrete requires a real model";
            if (e.k < 2 || e.k % 2 != 0) return "k must be an even integer >= 2";
            return std::nullopt;
          },
          [&](const Principal& e) -> std::optional<std::string> {
            if (mc.delta == 1 && e.m != 0 && e.m != 1)
              return "m must be 0 or 1 for a real model";
            return std::nullopt;
          },
          [&](const Complementary& e) -> std::optional<std::string> {
            if (e.nu == 0) return "nu must be nonzero";
            Rational bound = canon(mc.delta, 2);
            if (!(e.nu < bound && -e.nu < bound)) return "|nu| must be below delta/2";
            if (mc.delta == 1 && e.m != 0 && e.m != 1)
              return "m must be 0 or 1 for a real model";
            if (mc.delta == 2 && e.m != 0) return "m must be 0 for a complex model";
            return std::nullopt;
          }},
      p);
}

CasimirEigenvalue casimir_eigenvalue(const ModelConstants& mc, const GParam& p) {
  const long rd = static_cast<long>(mc.r) * mc.d;
  const Scalar c32(Rational(-1, 32));
  return std::visit(
      overloaded{
          [&](const EuclideanHW& e) {
            // pairing of k*beta + 2*rho against k*beta, with <beta,beta> = -1/32
            Rational val = Rational(e.k) * e.k + Rational(2 * e.k) * (mc.rd_half - 1);
            return CasimirEigenvalue{Scalar(val) * c32, std::nullopt};
          },
          [&](const NonEuclPrincipal& e) {
            Scalar mu(0, e.mu_imag, 0, 0, 0);
            Scalar q(mc.rd_half - 1);
            return CasimirEigenvalue{(mu + q) * (mu - q) * c32, std::nullopt};
          },
          [&](const AqModule& e) {
            return CasimirEigenvalue{Scalar(Rational(e.k) * (e.k + rd - 2)) * c32,
                                     std::nullopt};
          },
          [&](const ComplexPrincipal& e) {
            Scalar mu(0, e.mu_imag, 0, 0, 0);
            long rho = rd - 2;
            Scalar c = (mu * mu - Scalar(rho * rho)) * c32 - Scalar(canon(e.m * e.m, 8));
            Scalar d = Scalar::i() * mu * Scalar(e.m) * Scalar(Rational(-1, 8));
            return CasimirEigenvalue{c, d};
          }},
      p);
}

ThetaLift theta_lift(const ModelConstants& mc, const GParam& p) {
  if (auto why = validate_gparam(mc, p)) throw ThetaError(*why);
  ThetaLift lift;
  lift.input = p;
  lift.cover = mc.cover_annotation;
  std::visit(overloaded{[&](const EuclideanHW& e) {
                          lift.output = HolDiscrete{Rational(e.k) + mc.rd_half};
                        },
                        [&](const NonEuclPrincipal& e) {
                          long m = e.xi;
                          if (mc.principal_twist) {
                            m = (e.xi + 1) % 2;
                            lift.twist = "principal label shifted by 1 (p-q = 2 mod 4)";
                          }
                          lift.output = canonicalize(
                              Principal{m, e.mu_imag * Rational(1, 2)}, mc.delta);
                        },
                        [&](const AqModule& e) {
                          lift.output = Discrete{e.k + rd_half_int(mc)};
                        },
                        [&](const ComplexPrincipal& e) {
                          lift.output = canonicalize(
                              Principal{e.m, e.mu_imag * Rational(1, 2)}, mc.delta);
                        }},
             p);
  return lift;
}

std::vector<GParam> PlancherelSupport::discrete_upto(long max_k) const {
  std::vector<GParam> out;
  if (!has_discrete) return out;
  for (long k = discrete_first; k <= max_k; k += discrete_step) {
    if (discrete_variant == "EuclideanHW")
      out.emplace_back(EuclideanHW{k});
    else
      out.emplace_back(AqModule{k});
  }
  return out;
}

GParam PlancherelSupport::continuous_param(long label, const Rational& mu_imag) const {
  if (!has_continuous) throw ThetaError("model has no continuous spectrum");
  if (continuous_label == "xi") return NonEuclPrincipal{static_cast<int>(label), mu_imag};
  return ComplexPrincipal{label, mu_imag};
}

PlancherelSupport plancherel_support(const ModelConstants& mc) {
  if (!mc.has_minrep) throw ThetaError("no minimal representation");
  PlancherelSupport s;
  s.model = mc.model;
  if (mc.euclidean) {
    s.has_discrete = true;
    s.discrete_first = 0;
    s.discrete_variant = "EuclideanHW";
  } else if (mc.delta == 1) {
    s.has_discrete = true;
    s.discrete_first = 2 - rd_half_int(mc);
    s.discrete_variant = "AqModule";
    s.has_continuous = true;
    s.continuous_label = "xi";
    s.continuous_values = {0, 1};
  } else {
    s.has_continuous = true;
    s.continuous_label = "m";
    s.continuous_all_integers = true;
  }
  return s;
}

ConsistencyReport abstract_theta_consistency(const ModelConstants& mc) {
  ConsistencyReport rep;
  rep.ok = true;
  const Scalar c32(Rational(-1, 32));
  const Rational q = mc.rd_half - 1;
  std::ostringstream detail;
  auto check = [&](const char* tag, const Poly& diff, const std::vector<std::string>& names) {
    if (!diff.is_zero()) {
      rep.ok = false;
      detail << tag << ": " << diff.str(names) << "\n";
    }
  };
  if (mc.delta == 1) {
    Poly nu = Poly::variable(1, 0);
    Poly mu = nu.scaled(Scalar(2));
    Poly induced = ((mu + Poly::constant(1, Scalar(q))) * (mu - Poly::constant(1, Scalar(q))))
                       .scaled(c32);
    Poly radial =
        (nu * nu.scaled(Scalar(4)) - Poly::constant(1, Scalar(q * q))).scaled(c32);
    check("casimir", induced - radial, {"nu"});
  } else {
    Poly nu = Poly::variable(2, 0);
    Poly m = Poly::variable(2, 1);
    Poly mu = nu.scaled(Scalar(2));
    long rho = static_cast<long>(mc.r) * mc.d - 2;
    Poly induced_c = (mu * mu - Poly::constant(2, Scalar(rho * rho))).scaled(c32) -
                     (m * m).scaled(Scalar(Rational(1, 8)));
    Poly radial_c =
        (nu * nu + m * m - Poly::constant(2, Scalar(q * q))).scaled(Scalar(Rational(-1, 8)));
    check("casimir", induced_c - radial_c, {"nu", "m"});
    Poly induced_d = (mu * m).scaled(Scalar::i() * Scalar(Rational(-1, 8)));
    Poly radial_d = (m * nu).scaled(Scalar::i() * Scalar(Rational(-1, 4)));
    check("second invariant", induced_d - radial_d, {"nu", "m"});
  }
  rep.detail = detail.str();
  return rep;
}

InjectivityReport theta_injectivity_scan(const ModelConstants& mc, long max_k) {
  InjectivityReport rep;
  rep.ok = true;
  std::map<std::string, std::string> seen;  // canonical output -> input
  auto record = [&](const GParam& p) {
    ThetaLift lift = theta_lift(mc, p);
    std::string key = describe(lift.output);
    auto [it, inserted] = seen.emplace(key, describe(p));
    if (!inserted && !(describe(p) == it->second)) {
      rep.ok = false;
      if (rep.collision.empty())
        rep.collision = it->second + " and " + describe(p) + " both lift to " + key;
    }
  };
  PlancherelSupport s = plancherel_support(mc);
  for (const GParam& p : s.discrete_upto(max_k)) {
    record(p);
    ++rep.discrete_checked;
  }
  if (s.has_continuous) {
    std::vector<long> labels = s.continuous_values;
    if (s.continuous_all_integers)
      for (long m = -max_k; m <= max_k; ++m) labels.push_back(m);
    for (long label : labels)
      for (long j = 1; j <= 8; ++j) {
        record(s.continuous_param(label, canon(j, 2)));
        ++rep.continuous_checked;
      }
  }
  return rep;
}

}  // namespace jconf
