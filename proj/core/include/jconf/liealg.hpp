#pragma once

#include <functional>
#include <string>
#include <vector>

#include "jconf/linalg.hpp"
#include "jconf/rng.hpp"
#include "jconf/unipoly.hpp"

namespace jconf {

struct LieError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A based Lie algebra given by sparse structure constants. `complex_basis`
// marks algebras whose scalars are Q(i)-valued coordinates over a complex
// basis (used by realify()).
class LieAlgebra {
 public:
  int dim = 0;
  bool complex_basis = false;
  std::vector<std::string> labels;

  explicit LieAlgebra(int dimension = 0)
      : dim(dimension), table_(dimension, std::vector<SparseVec>(dimension)) {}

  void set_bracket(int a, int b, const SparseVec& v);
  const SparseVec& bracket_basis(int a, int b) const { return table_[a][b]; }
  Vec bracket(const Vec& x, const Vec& y) const;
  SparseMat ad_sparse(const Vec& x) const;      // (ad x)_{dc}: d-th output row
  Mat ad_dense(const Vec& x) const;

  Vec jacobi_defect_basis(int a, int b, int c) const;
  bool jacobi_exhaustive() const;
  bool jacobi_sampled(Rng& rng, int triples) const;
  bool antisymmetric_table() const;

  // Killing form kappa(x,y) = tr(ad x ad y).
  Scalar killing_pair(const Vec& x, const Vec& y) const;
  Scalar killing_basis_pair(int a, int b) const;
  Mat killing_gram() const;

  // Real form of a complex-basis algebra on the basis {X_k} U {i X_k}.
  LieAlgebra realify() const;

 private:
  std::vector<std::vector<SparseVec>> table_;
};

// Bracket closure of a generating set inside an ambient space with an
// abstract bracket. Returns the closed span and the induced based algebra.
struct ClosedSubalgebra {
  Subspace space;      // rows in ambient coordinates
  LieAlgebra algebra;  // structure constants in the canonical basis of space
};
using AmbientBracket = std::function<Vec(const Vec&, const Vec&)>;
ClosedSubalgebra close_under_bracket(const std::vector<Vec>& generators,
                                     const AmbientBracket& bracket,
                                     int max_dim = 4096);

// Structure constants of a bracket-closed subspace; throws if not closed.
LieAlgebra subalgebra_on(const Subspace& space, const AmbientBracket& bracket);

// {x in L : [g, x] = 0 for all g in gens} (incremental kernel intersection).
Subspace centralizer(const LieAlgebra& L, const std::vector<Vec>& gens);

// Invariant form B = s * kappa with the ratio fixed by anchor triples
// (x, y, expected B(x,y)). All anchors must agree on s and be nonzero.
struct NormalizedForm {
  Scalar ratio;  // s
  const LieAlgebra* algebra;
  Scalar operator()(const Vec& x, const Vec& y) const {
    return ratio * algebra->killing_pair(x, y);
  }
};
NormalizedForm normalized_form(const LieAlgebra& L,
                               const std::vector<std::pair<std::pair<Vec, Vec>, Scalar>>& anchors);

// Dual basis pairs (X_k, X'_k) with B(X_k, X'_l) = delta_{kl}.
struct CasimirPairs {
  std::vector<Vec> basis;
  std::vector<Vec> dual;
};
CasimirPairs casimir_pairs(const LieAlgebra& L, const NormalizedForm& B);

// Eigen decomposition of a square matrix: kernels of (M - lambda) for the
// candidate eigenvalues, then minimal-polynomial discovery if dimensions do
// not add up. `complete` is a proof of diagonalizability over the scalars.
struct EigenDecomposition {
  std::vector<std::pair<Scalar, Subspace>> spaces;
  bool complete = false;
  std::string failure;  // irreducible cofactor report when incomplete
};
EigenDecomposition eigen_decompose(const Mat& M, std::vector<Scalar> candidates,
                                   Rng& rng);

}  // namespace jconf
