#pragma once

#include "jconf/jordan.hpp"

namespace jconf {

// Composition algebra with a signed basis-product table, built by doubling.
// split=true flips the sign of the last doubling (dim 8 only in the catalog).
struct CompAlgebra {
  int dim = 1;
  // mul[i][j] = (k, sign): b_i b_j = sign * b_k
  std::vector<std::vector<std::pair<int, int>>> mul;
  std::vector<int> conj_sign;  // conj(b_i) = conj_sign[i] * b_i
  bool split = false;
};

CompAlgebra comp_algebra(int dim, bool split);

JordanAlgebra make_sym(int r);                 // Sym(r,R)
JordanAlgebra make_herm_complex(int r);        // Herm(r,C) as a real algebra
JordanAlgebra make_herm_quat(int r);           // Herm(r,H)
JordanAlgebra make_herm_oct(bool split);       // Herm(3,O) / Herm(3,Os)
JordanAlgebra make_full_matrix(int r);         // M(r,R)
JordanAlgebra make_skew(int r);                // Skew(2r,R)
JordanAlgebra make_spin_real(int p, int q);    // R^{p,q}
JordanAlgebra make_sym_cx(int r);              // Sym(r,C)
JordanAlgebra make_full_matrix_cx(int r);      // M(r,C)
JordanAlgebra make_skew_cx(int r);             // Skew(2r,C)
JordanAlgebra make_spin_cx(int nn);            // C^n
JordanAlgebra make_herm_oct_cx();              // Herm(3,O) ⊗ C

// Parse a model id like "Sym3R", "SpinR(5,3)", "Herm3Os", "M4C".
JordanAlgebra make_model(const std::string& id);

// The fourteen default catalog models.
const std::vector<std::string>& catalog_ids();

}  // namespace jconf
