#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jconf/linalg.hpp"
#include "jconf/rng.hpp"

namespace jconf {

struct JordanError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Field { R, C };

inline const char* field_name(Field f) { return f == Field::R ? "R" : "C"; }

// product[a][b] = coordinates of b_a * b_b (F-bilinear).
using StructureConstants = std::vector<std::vector<SparseVec>>;

// A based Jordan algebra over F = R or C, with its trace form, Cartan
// involution theta and a fixed Jordan frame. For F = C the coordinates are
// Q(i)-valued and theta acts antilinearly: theta(x) = cartan0 * conj(x).
// A realified view (dimension N = delta*n over R) is cached on finalize().
class JordanAlgebra {
 public:
  std::string name;
  Field field = Field::R;
  int n = 0;      // dim over F
  int r = 0;      // rank
  int d = 0;      // off-diagonal Peirce dimension over F
  int delta = 1;  // dim_R F
  bool euclidean = false;
  bool has_minrep = true;  // false only for spin factors with p,q >= 2, p+q odd
  int spin_p = 0, spin_q = 0;  // set for spin factors

  std::vector<std::string> labels;
  StructureConstants product;
  Vec unit;
  Mat cartan0;             // F-linear factor of theta
  std::vector<Vec> frame;  // c_1..c_r

  // Computes caches (trace Gram, realified structure) and checks shapes.
  void finalize();

  // ---- operations over F (vectors of length n) ----
  Vec mul(const Vec& x, const Vec& y) const;
  Mat Lmat(const Vec& x) const;
  Vec apply_theta(const Vec& x) const;
  Vec conj_coords(const Vec& x) const;
  Scalar trace_form(const Vec& x, const Vec& y) const;  // tau_F
  const Mat& trace_gram() const { return trace_gram_; }
  Mat quad_rep(const Vec& x) const;                     // P(x)
  Mat quad_rep2(const Vec& x, const Vec& y) const;      // P(x,y)
  bool is_invertible(const Vec& x) const;

  // ---- realified view (vectors of length N = delta*n) ----
  int N() const { return delta * n; }
  const StructureConstants& product_R() const { return product_R_; }
  Vec mul_R(const Vec& u, const Vec& v) const;
  Mat Lmat_R(const Vec& u) const;
  Vec mul_i_R(const Vec& u) const;  // multiplication by the complex unit
  Scalar tau_R(const Vec& u, const Vec& v) const;  // Re tau_F
  const Mat& tau_R_gram() const { return tau_R_gram_; }
  const Mat& theta_R() const { return theta_R_; }
  Scalar inner_R(const Vec& u, const Vec& v) const;  // tau_R(u, theta v)
  Vec realify(const Vec& x) const;     // n -> N (identity when F = R)
  Vec complexify(const Vec& u) const;  // N -> n
  Vec unit_R;
  std::vector<Vec> frame_R;

 private:
  Mat trace_gram_;        // n x n over F
  StructureConstants product_R_;
  Mat tau_R_gram_;        // N x N real
  Mat theta_R_;           // N x N real
};

// Peirce decomposition with respect to the stored frame.
struct PeirceData {
  std::vector<Subspace> diag;                      // V_ii over F, ambient n
  std::map<std::pair<int, int>, Subspace> off;     // V_ij (i<j) over F
  std::map<std::pair<int, int>, Subspace> off_plus;   // realified, ambient N
  std::map<std::pair<int, int>, Subspace> off_minus;  // realified, ambient N
  Subspace half_F;  // V(c_1, 1/2) over F
  Subspace half_R;  // realified
};

PeirceData peirce_decompose(const JordanAlgebra& A);

// Realify an F-subspace: span of {v, iv} over R in realified coordinates.
Subspace realify_subspace(const JordanAlgebra& A, const Subspace& S);

// Random element with invertible quadratic representation (F coords).
Vec random_invertible(const JordanAlgebra& A, Rng& rng);
// P(a) c_1 for random invertible a: a point of the rank-one cone (F coords).
Vec rank_one_point(const JordanAlgebra& A, Rng& rng);

// (x^2 (x y)) - (x (x^2 y)): zero iff the Jordan identity holds for the pair.
Vec jordan_defect(const JordanAlgebra& A, const Vec& x, const Vec& y);

}  // namespace jconf
