#pragma once

#include <string>
#include <vector>

#include "jconf/jordan.hpp"
#include "jconf/polydiffop.hpp"

namespace jconf {

// Element (u, T, v) of the conformal algebra in realified coordinates:
// u, v in R^N and T an N x N real matrix lying in the structure algebra.
struct CoElement {
  Vec u;
  Mat T;
  Vec v;
};

CoElement co_zero(const JordanAlgebra& V);
CoElement co_E(const JordanAlgebra& V);  // (e, 0, 0)
CoElement co_H(const JordanAlgebra& V);  // (0, 2 L(e), 0)
CoElement co_F(const JordanAlgebra& V);  // (0, 0, e)

// Adjoint of T with respect to the real trace pairing.
Mat tau_sharp(const JordanAlgebra& V, const Mat& T);
CoElement co_bracket(const JordanAlgebra& V, const CoElement& X,
                     const CoElement& Y);

// Differential-operator model of the minimal representation on functions of
// the N real coordinates of V.
class MinRepAction {
 public:
  explicit MinRepAction(const JordanAlgebra& V);

  const JordanAlgebra& model() const { return *V_; }
  const DiffCtx& ctx() const { return ctx_; }
  // Rows are coordinates of the dual basis vectors for the real trace form.
  const std::vector<Vec>& dual_basis() const { return dual_; }

  // Multiplication by -i tau(x, v).
  PolyDiffOp mult_op(const Vec& v) const;
  // -d/d(Tx) - (rd/4n) tr T.
  PolyDiffOp str_op(const Mat& T) const;
  // -i tau(B, u) for the second-order operator B with values in V.
  PolyDiffOp bessel_paired(const Vec& u) const;
  // Coordinate component of B (pairing with a dual basis vector).
  PolyDiffOp bessel_component(int gamma) const;
  // Same contraction computed in the basis given by the rows of M; must agree
  // with bessel_paired for every invertible M.
  PolyDiffOp bessel_paired_in_basis(const Vec& u, const Mat& M) const;

  PolyDiffOp dpi(const CoElement& X) const;

 private:
  const JordanAlgebra* V_;
  DiffCtx ctx_;
  std::vector<Vec> dual_;
};

// [dpi(X), dpi(Y)] - dpi([X, Y]).
PolyDiffOp rep_defect(const MinRepAction& act, const CoElement& X,
                      const CoElement& Y);

struct RepCheckReport {
  bool ambient_zero = false;     // the defect vanishes identically
  bool tangential_zero = false;  // the defect kills all test functions at all
                                 // supplied points
  int points = 0;
  int monomials = 0;
  std::string counterexample;
};

RepCheckReport rep_relation_check(const MinRepAction& act, const CoElement& X,
                                  const CoElement& Y, int degree_bound,
                                  const std::vector<Vec>& points);

// tau(x.x - tau(x,e)x, w): a quadratic that vanishes exactly on the cone of
// rank-one elements (plus 0), used as a cut function for tangentiality.
Poly cone_ideal_poly(const MinRepAction& act, const Vec& w);

struct TangentialityReport {
  bool cut_zero_on_cone = false;        // f vanishes at the supplied points
  bool cut_nonzero_at_probe = false;    // ... but f is not zero off the cone
  bool image_zero_on_cone = false;      // dpi(X) f still vanishes on the cone
  bool image_nonzero_at_probe = false;  // ... without vanishing ambiently
  std::string detail;
  bool ok() const {
    return cut_zero_on_cone && cut_nonzero_at_probe && image_zero_on_cone &&
           image_nonzero_at_probe;
  }
};

// Negative control for the on-cone identities: the action is tangential to
// the rank-one cone (it maps the vanishing ideal into itself) without
// killing the cut function f ambiently. Points must be realified; probe is
// a point off the cone (e.g. invertible). Note f must have degree >= 3 for
// image_nonzero_at_probe to be satisfiable: a tangential image of degree
// <= 1 vanishes ambiently because the cone spans the algebra.
TangentialityReport tangentiality_check(const MinRepAction& act,
                                        const CoElement& X, const Poly& f,
                                        const std::vector<Vec>& cone_points,
                                        const Vec& probe);

struct KeyLemmaReport {
  bool bessel_at_c = false;    // second-order normal form at the base point
  bool casimir_at_c = false;   // quadratic invariant as composed derivations
  bool assembled = false;      // radial form with the 8x invariant term
  bool complex_pair = true;    // the two extra identities; vacuous over R
  bool composition_checked = false;  // full composition cross-check ran
  int monomials = 0;
  std::string mismatch;
  bool ok() const {
    return bessel_at_c && casimir_at_c && assembled && complex_pair;
  }
};

KeyLemmaReport key_lemma_at_c(const JordanAlgebra& V, int degree_bound = 3);

// Operators of the degenerate principal series of the rank-one group on
// functions of xi (and eta in the complex case). Parameters nu and m enter
// as polynomial data so that a single check covers symbolic values.
struct Sl2Ops {
  DiffCtx ctx;
  bool complex_case = false;
  PolyDiffOp E, H, F;     // standard triple
  PolyDiffOp iE, iH, iF;  // imaginary copies; empty in the real case
};

Sl2Ops sl2_model_ops(int m, const Scalar& nu, int r, int d, int delta);
Sl2Ops sl2_model_ops_symbolic(int r, int d, int delta);
bool sl2_relations_ok(const Sl2Ops& s);

struct Sl2MatchReport {
  bool ok = false;
  std::string difference;
};

// Substitutes the Casimir eigenvalue polynomials into the radial shape of the
// key identities and compares with the principal-series generators.
Sl2MatchReport keylemma_vs_sl2_match(int r, int d, int delta);

}  // namespace jconf
