#pragma once

#include <string>
#include <vector>

#include "jconf/linalg.hpp"
#include "jconf/rng.hpp"

namespace jconf {

// Univariate polynomial over Q, coefficients low-to-high, no trailing zeros.
using UniPoly = std::vector<Rational>;

UniPoly unipoly_trim(UniPoly p);
UniPoly unipoly_mul(const UniPoly& a, const UniPoly& b);
// Remainder of a modulo b (b != 0).
UniPoly unipoly_mod(UniPoly a, const UniPoly& b);
UniPoly unipoly_monic(UniPoly p);
UniPoly unipoly_gcd(UniPoly a, UniPoly b);
UniPoly unipoly_lcm(const UniPoly& a, const UniPoly& b);
Rational unipoly_eval(const UniPoly& p, const Rational& x);
// Synthetic division by (x - root); requires root to be a root.
UniPoly unipoly_deflate(const UniPoly& p, const Rational& root);
// All rational roots with multiplicity 1 each (deflated repeatedly);
// second member is the rootless cofactor.
struct RootSplit {
  std::vector<Rational> roots;
  UniPoly cofactor;
};
RootSplit unipoly_rational_roots(UniPoly p);
std::string unipoly_str(const UniPoly& p);

// Minimal polynomial of M on the cyclic subspace of v.
UniPoly krylov_min_poly(const Mat& M, const Vec& v);
// Minimal polynomial candidate: lcm of krylov polynomials of `tries` seeded
// vectors (exact minimal polynomial with high probability; callers verify
// downstream by dimension counts).
UniPoly min_poly_candidate(const Mat& M, Rng& rng, int tries = 3);

}  // namespace jconf
