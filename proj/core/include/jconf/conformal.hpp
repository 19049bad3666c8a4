#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jconf/jordan.hpp"
#include "jconf/liealg.hpp"

namespace jconf {

Vec flatten_mat(const Mat& m);
Mat unflatten_mat(const Vec& v, int n);

// [L(a), L(b)], an inner derivation of V.
Mat inner_derivation(const JordanAlgebra& V, const Vec& a, const Vec& b);

// Derivation algebra der(V) over the coefficient field, realized inside
// flattened End(V) as the bracket closure of the inner derivations.
struct DerivationAlgebra {
  Subspace space;         // canonical basis, flattened n x n matrices
  LieAlgebra algebra;     // structure constants on that basis
  std::vector<Mat> mats;  // canonical basis, unflattened

  Vec coordinates(const Mat& D) const;  // throws if D is not a derivation
  Mat matrix(const Vec& coords) const;
};

DerivationAlgebra derivation_algebra(const JordanAlgebra& V);

// Conformal Lie algebra co(V) on the free coordinates (u, x, D, v) of the
// vector field z ↦ u + (L(x) + D) z − P(z) v, with x ∈ V, D ∈ der(V).
// Over a complex-based model all coordinates are F-valued; realify the
// bracket table for real-dimension statements.
class ConformalAlgebra {
 public:
  explicit ConformalAlgebra(const JordanAlgebra& model);

  const JordanAlgebra& V() const { return V_; }
  const DerivationAlgebra& der() const { return der_; }
  const LieAlgebra& co() const { return co_; }
  int dim() const { return co_.dim; }
  int n() const { return V_.n; }
  int da() const { return int(der_.mats.size()); }

  // slot layout: [u(n) | x(n) | D(da) | v(n)]
  int u_slot(int a) const { return a; }
  int x_slot(int a) const { return V_.n + a; }
  int d_slot(int k) const { return 2 * V_.n + k; }
  int v_slot(int a) const { return 2 * V_.n + da() + a; }

  Vec element(const Vec& u, const Vec& x, const Vec& dcoords, const Vec& v) const;
  Vec u_part(const Vec& X) const;
  Vec x_part(const Vec& X) const;
  Vec d_part(const Vec& X) const;
  Vec v_part(const Vec& X) const;

  // distinguished sl(2) triple (e,0,0), (0,2L(e),0), (0,0,e)
  Vec sl2_E() const;
  Vec sl2_H() const;
  Vec sl2_F() const;
  Subspace sl2_span() const;
  Subspace grade_slice() const;    // u ⊕ v slots
  Subspace str_slice() const;      // x ⊕ D slots
  Subspace der_embedded() const;   // D slots

  // global Cartan involution (u,T,v) ↦ (−ϑv, −ϑT^#ϑ, −ϑu); antilinear over
  // complex-based coordinates.
  Vec cartan(const Vec& X) const;

 private:
  JordanAlgebra V_;
  DerivationAlgebra der_;
  LieAlgebra co_;
  std::vector<Vec> theta_der_;  // der coords of ϑ conj(D_k) ϑ
  void build_table();
};

// Mutual centralizer test for (sl2 triple, der(V)) inside co(V).
struct DualPairData {
  Subspace sl2_centralizer;  // centralizer of {E,H,F}: expected = D slots
  Subspace der_centralizer;  // centralizer of the D slots: expected = sl2
  bool mutual = false;
};
DualPairData dual_pair(const ConformalAlgebra& C);

// Fixed/flipped splitting of co under the Cartan involution, over the real
// basis (complex-based models are realified first). Bracket containments are
// exhaustive up to `pair_budget` pairs per block, seeded sampling beyond.
struct CartanSplit {
  Subspace k;  // fixed
  Subspace p;  // flipped
  bool brackets_ok = false;  // [k,k]⊆k, [k,p]⊆p, [p,p]⊆k
};
CartanSplit cartan_split(const ConformalAlgebra& C, int pair_budget = 500);

// der(V) = g0 ⊕ ⊕_{i<j} g_ij with g0 the frame stabilizer and
// g_ij = [L(c_i), L(V_ij)].
struct FrameDecomposition {
  Subspace g0;                                  // der coords
  std::map<std::pair<int, int>, Subspace> gij;  // der coords, i<j (0-based)
  bool direct_sum = false;
  bool composition_rule = false;  // [g_ij, g_jk] ⊆ g_ik
};
FrameDecomposition frame_decomposition(const JordanAlgebra& V,
                                       const DerivationAlgebra& der);

// Parity involution of der(V) with respect to c_1: fixed part
// g0 ⊕ ⊕_{2<=i<j} g_ij, flipped part ⊕_{j>=2} g_1j.
struct SymmetricPairData {
  Subspace plus, minus;             // der coords
  bool plus_is_stabilizer = false;  // plus == {D : D c_1 = 0}
  bool minus_is_half_bracket = false;  // minus == [L(c_1), L(V(c_1,1/2))]
  bool brackets_ok = false;
};
SymmetricPairData symmetric_pair(const JordanAlgebra& V,
                                 const DerivationAlgebra& der,
                                 const FrameDecomposition& dec);

// Rank-one root datum of der(V) attached to the frame: a partner vector in
// V_12 with trace square ∓32, H = [L(c_1), L(partner)], and the two root
// spaces. `compact` uses a ϑ-fixed partner and purely imaginary eigenvalues.
struct RootDatum {
  bool defined = false;
  std::string reason;  // when undefined
  bool compact = false;
  Vec partner;        // V coords over F
  Vec H0;             // der coords
  int mult_alpha = 0;   // F-dim of each ±α root space, (r-2)d
  int mult_2alpha = 0;  // F-dim of each ±2α root space, d-1
  Rational rho_coeff;   // half sum of positive roots over the primitive root
  bool verified = false;
  std::string detail;  // failure description
};
RootDatum split_root_datum(const JordanAlgebra& V, const DerivationAlgebra& der);
RootDatum compact_root_datum(const JordanAlgebra& V, const DerivationAlgebra& der);

// Square of ad((c_1,0,-c_1)) on the u ⊕ v slice: eigenvalues {0,-1,-4}; the
// u-projections of the (-1) eigenspace recover the half Peirce space.
struct RotationData {
  bool complete = false;
  std::map<Rational, int> mults;  // slice eigenvalue -> F-dim
  Subspace recovered_half;        // u-projections, ambient n
  bool matches_half = false;
};
RotationData rotation_half_space(const ConformalAlgebra& C);

// Anchor values B([L(c_1),L(v)], [L(c_1),L(w)]) = tau(v,w) for the
// normalized invariant form on der(V), with v,w in the half Peirce space.
std::vector<std::pair<std::pair<Vec, Vec>, Scalar>> invariant_form_anchors(
    const JordanAlgebra& V, const DerivationAlgebra& der);

}  // namespace jconf
