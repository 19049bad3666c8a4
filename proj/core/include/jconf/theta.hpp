#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "jconf/jordan.hpp"
#include "jconf/scalar.hpp"

namespace jconf {

struct ThetaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Family constants of one conformal model: rank r, off-diagonal Peirce
// dimension d, delta = dim_R F, n = dim_F V, and Lie-type labels for the
// conformal algebra co(V), the symmetry algebra g and the stabilizer
// subalgebra g^sigma. Values come from closed-form family tables, so they can
// be cross-checked against the structure constants computed by the jordan
// module.
struct ModelConstants {
  std::string model;
  Field field = Field::R;
  int r = 0;
  int d = 0;
  int delta = 1;
  int n = 0;
  std::string co_label;
  std::string g_label;
  std::string gsigma_label;
  bool euclidean = false;
  Rational rd_half;              // rd/2, exact
  std::string cover_annotation;  // "integral" if rd/2 is an integer, else "half-integral"
  bool has_minrep = true;        // false for SpinR(p,q) with p,q >= 2 and p+q odd
  bool principal_twist = false;  // SpinR(p,q), non-Euclidean, p-q = 2 (mod 4)
  int spin_p = 0, spin_q = 0;    // set for spin factors
};

// Accepts the same model ids as make_model; throws ThetaError on unknown ids.
ModelConstants model_constants(const std::string& model);

// ---- parameters on the symmetry-group side ----
//
// Imaginary quantities are stored by their imaginary part: mu_imag = t means
// mu = t*i. All formulas in scope are polynomial, so this stays exact.

struct EuclideanHW {  // highest weight k*beta; requires k even, k >= 0
  long k = 0;
  bool operator==(const EuclideanHW&) const = default;
};
struct NonEuclPrincipal {  // induced from character xi in {0,1}, mu = lambda(H0)
  int xi = 0;
  Rational mu_imag;
  bool operator==(const NonEuclPrincipal&) const = default;
};
struct AqModule {  // cohomologically induced module at k*beta; k + rd/2 in 2Z_{>0}
  long k = 0;
  bool operator==(const AqModule&) const = default;
};
struct ComplexPrincipal {  // induced from torus character m in Z, mu = lambda(H0)
  long m = 0;
  Rational mu_imag;
  bool operator==(const ComplexPrincipal&) const = default;
};
using GParam = std::variant<EuclideanHW, NonEuclPrincipal, AqModule, ComplexPrincipal>;

// ---- parameters on the rank-one side (PGL(2,F) and covers) ----

struct HolDiscrete {  // holomorphic discrete series on the universal cover; k > 1
  Rational k;
  bool operator==(const HolDiscrete&) const = default;
};
struct Discrete {  // discrete series of PGL(2,R); k >= 2 even
  long k = 2;
  bool operator==(const Discrete&) const = default;
};
struct Principal {  // unitary principal series tau_{m,nu}, nu = nu_imag * i
  long m = 0;
  Rational nu_imag;
  bool operator==(const Principal&) const = default;
};
struct Complementary {  // real nu with 0 < |nu| < delta/2
  long m = 0;
  Rational nu;
  bool operator==(const Complementary&) const = default;
};
using GPrimeParam = std::variant<HolDiscrete, Discrete, Principal, Complementary>;

std::string variant_name(const GParam& p);
std::string variant_name(const GPrimeParam& p);
std::string describe(const GParam& p);
std::string describe(const GPrimeParam& p);

// Resolves the equivalence tau_{m,nu} == tau_{-m,-nu}: first make m >= 0;
// when the sign of m carries no information (m = 0, or delta = 1 where m only
// matters mod 2) pick the representative with nu >= 0. Discrete parameters
// are already canonical.
GPrimeParam canonicalize(const GPrimeParam& p, int delta);

// nullopt when the parameter is admissible for the model; otherwise the
// violated condition.
std::optional<std::string> validate_gparam(const ModelConstants& mc, const GParam& p);
std::optional<std::string> validate_gprime(const ModelConstants& mc, const GPrimeParam& p);

// Eigenvalues of the invariant operators of degree two on the parametrized
// representation. Real models have a single Casimir value c; complex models
// additionally carry the second invariant d.
struct CasimirEigenvalue {
  Scalar c;
  std::optional<Scalar> d;
};
// Pure formula evaluation dispatched on the variant; admissibility is not
// re-checked here.
CasimirEigenvalue casimir_eigenvalue(const ModelConstants& mc, const GParam& p);

struct ThetaLift {
  GParam input;
  GPrimeParam output;
  std::string cover;                 // annotation copied from ModelConstants
  std::optional<std::string> twist;  // set only for twisted spin models
};
// Maps an admissible parameter to its partner on the rank-one side; throws
// ThetaError with the violation when the input does not validate.
ThetaLift theta_lift(const ModelConstants& mc, const GParam& p);

// Support of the spherical decomposition for one model: an arithmetic
// progression of discrete parameters, and/or continuous families labelled by
// xi in {0,1} or by all of Z, each with mu on the positive imaginary axis.
struct PlancherelSupport {
  std::string model;
  bool has_discrete = false;
  long discrete_first = 0;
  long discrete_step = 2;
  std::string discrete_variant;  // "EuclideanHW" or "AqModule"
  bool has_continuous = false;
  std::string continuous_label;  // "xi" or "m"
  std::vector<long> continuous_values;    // explicit labels; empty when all of Z
  bool continuous_all_integers = false;   // label ranges over every integer

  std::vector<GParam> discrete_upto(long max_k) const;
  GParam continuous_param(long label, const Rational& mu_imag) const;
};
// Throws ThetaError for models without a minimal representation.
PlancherelSupport plancherel_support(const ModelConstants& mc);

// Substitutes mu = 2*nu (and k = m) into the induced-parameter eigenvalue
// formulas and compares them with the radial-model eigenvalue formulas as
// polynomial identities; detail lists any nonzero difference.
struct ConsistencyReport {
  bool ok = false;
  std::string detail;
};
ConsistencyReport abstract_theta_consistency(const ModelConstants& mc);

// Lifts every admissible discrete parameter with k <= max_k together with a
// sample grid on each continuous family (labels clamped to |label| <= max_k)
// and checks that the canonical outputs are pairwise distinct.
struct InjectivityReport {
  bool ok = false;
  long discrete_checked = 0;
  long continuous_checked = 0;
  std::string collision;
};
InjectivityReport theta_injectivity_scan(const ModelConstants& mc, long max_k);

}  // namespace jconf
