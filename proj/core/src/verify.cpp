#include "jconf/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <future>
#include <optional>
#include <sstream>
#include <thread>
#include <utility>

#include "jconf/conformal.hpp"
#include "jconf/minrep.hpp"
#include "jconf/models.hpp"
#include "jconf/theta.hpp"

namespace jconf {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "skipped";
  }
}

const char* to_string(VerifyLevel l) {
  return l == VerifyLevel::Quick ? "quick" : "full";
}

VerifyLevel level_from_string(const std::string& s) {
  if (s == "quick") return VerifyLevel::Quick;
  if (s == "full") return VerifyLevel::Full;
  throw std::invalid_argument("unknown level \"" + s + "\" (quick|full)");
}

int VerificationReport::counted(CheckStatus s) const {
  int k = 0;
  for (const auto& c : checks) k += (c.status == s);
  return k;
}

namespace {

using Clock = std::chrono::steady_clock;
// A check body returns nullopt on pass, a witness string on failure.
using Witness = std::optional<std::string>;

std::string scal(const Scalar& s) { return s.str(); }

struct Runner {
  VerificationReport rep;
  std::uint64_t seed = kDefaultSeed;
  int salt = 0;

  // Every sampled check draws from its own stream so the report does not
  // depend on which gated checks around it ran.
  Rng fresh_rng() { return Rng(seed + 0x9e3779b97f4a7c15ull * ++salt); }

  template <class F>
  void check(const char* id, const std::string& claim, F&& body) {
    CheckRecord c;
    c.check_id = id;
    c.claim = claim;
    auto t0 = Clock::now();
    try {
      Witness w = body();
      c.status = w ? CheckStatus::Fail : CheckStatus::Pass;
      if (w) c.witness = *w;
    } catch (const std::exception& e) {
      c.status = CheckStatus::Fail;
      c.witness = std::string("exception: ") + e.what();
    }
    c.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   Clock::now() - t0)
                   .count();
    rep.checks.push_back(std::move(c));
  }

  void skip(const char* id, const std::string& claim, const std::string& why) {
    ++salt;  // keep downstream streams stable across levels
    CheckRecord c;
    c.check_id = id;
    c.claim = claim;
    c.status = CheckStatus::Skipped;
    c.witness = why;
    rep.checks.push_back(std::move(c));
  }
};

Vec rand_vec(const JordanAlgebra& V, Rng& rng) {
  Vec v(V.n);
  for (auto& s : v) s = rng.scalar(V.field == Field::C);
  return v;
}

Vec rand_real_vec(int N, Rng& rng) {
  Vec v(N);
  for (auto& s : v) s = rng.real_scalar();
  return v;
}

Mat random_str(const JordanAlgebra& V, Rng& rng) {
  int N = V.N();
  return V.Lmat_R(rand_real_vec(N, rng)) +
         commutator(V.Lmat_R(rand_real_vec(N, rng)),
                    V.Lmat_R(rand_real_vec(N, rng)));
}

CoElement random_co(const JordanAlgebra& V, Rng& rng) {
  CoElement X;
  X.u = rand_real_vec(V.N(), rng);
  X.T = random_str(V, rng);
  X.v = rand_real_vec(V.N(), rng);
  return X;
}

// Dimension of aut(V) = der(V) over F, from the rank/degree family data.
// Coinciding rank-2 families give the same value, so the dispatch is total.
int expected_aut_dim(const JordanAlgebra& V) {
  if (V.d == 1) return V.r * (V.r - 1) / 2;
  if (V.r == 2) return (V.n - 1) * (V.n - 2) / 2;
  if (V.d == 8) return 52;
  if (V.d == 2) return V.r * V.r - 1;
  return V.r * (2 * V.r + 1);  // d == 4
}

// Dimension over F of the frame-point stabilizer inside aut(V).
int expected_fixed_dim(const JordanAlgebra& V) {
  if (V.d == 1) return (V.r - 1) * (V.r - 2) / 2;
  if (V.r == 2) return (V.n - 2) * (V.n - 3) / 2;
  if (V.d == 8) return 36;
  if (V.d == 2) return (V.r - 1) * (V.r - 1);
  return 3 + (V.r - 1) * (2 * V.r - 1);  // d == 4
}

Rational half_rd_minus_one(const JordanAlgebra& V) {
  Rational q(V.r * V.d - 2, 2);
  q.canonicalize();
  return q;
}

void jordan_checks(Runner& R, const JordanAlgebra& V, bool full) {
  R.check("model.shape",
          "construction shapes are consistent and n = r + d r(r-1)/2", [&]() -> Witness {
            if (int(V.labels.size()) != V.n) return "label count != n";
            if (int(V.unit.size()) != V.n) return "unit length != n";
            if (V.delta != (V.field == Field::C ? 2 : 1))
              return "delta does not match the field";
            if (V.N() != V.delta * V.n) return "realified dimension mismatch";
            if (V.n != V.r + V.d * V.r * (V.r - 1) / 2)
              return "dimension sum rule violated";
            return std::nullopt;
          });

  R.check("jordan.unit", "e x = x on every basis vector", [&]() -> Witness {
    for (int a = 0; a < V.n; ++a) {
      Vec ba = unit_vec(V.n, a);
      if (V.mul(V.unit, ba) != ba) return "unit fails at " + V.labels[a];
    }
    return std::nullopt;
  });

  R.check("jordan.commutative", "x y = y x on all basis pairs", [&]() -> Witness {
    for (int a = 0; a < V.n; ++a)
      for (int b = a + 1; b < V.n; ++b) {
        Vec ba = unit_vec(V.n, a), bb = unit_vec(V.n, b);
        if (V.mul(ba, bb) != V.mul(bb, ba))
          return V.labels[a] + " * " + V.labels[b];
      }
    return std::nullopt;
  });

  R.check("jordan.identity",
          "(x^2 (x y)) = (x (x^2 y)) on all basis pairs and seeded dense pairs",
          [&, rng = R.fresh_rng()]() mutable -> Witness {
            for (int a = 0; a < V.n; ++a)
              for (int b = 0; b < V.n; ++b)
                if (!is_zero_vec(
                        jordan_defect(V, unit_vec(V.n, a), unit_vec(V.n, b))))
                  return "basis pair " + V.labels[a] + ", " + V.labels[b];
            int pairs = full ? 100 : 25;
            for (int t = 0; t < pairs; ++t) {
              Vec x = rand_vec(V, rng), y = rand_vec(V, rng);
              if (!is_zero_vec(jordan_defect(V, x, y)))
                return "seeded pair #" + std::to_string(t);
            }
            return std::nullopt;
          });

  R.check("jordan.trace.symmetric", "tau(x,y) = tau(y,x) on all basis pairs",
          [&]() -> Witness {
            const Mat& g = V.trace_gram();
            for (int a = 0; a < V.n; ++a)
              for (int b = a + 1; b < V.n; ++b)
                if (g.at(a, b) != g.at(b, a))
                  return V.labels[a] + ", " + V.labels[b];
            return std::nullopt;
          });

  R.check("jordan.trace.associative",
          "tau(x y, z) = tau(x, y z) on basis or seeded triples",
          [&, rng = R.fresh_rng()]() mutable -> Witness {
            auto defect = [&](const Vec& x, const Vec& y, const Vec& z) {
              return V.trace_form(V.mul(x, y), z) -
                     V.trace_form(x, V.mul(y, z));
            };
            if (V.n <= 16) {
              for (int a = 0; a < V.n; ++a)
                for (int b = 0; b < V.n; ++b)
                  for (int c = 0; c < V.n; ++c)
                    if (!defect(unit_vec(V.n, a), unit_vec(V.n, b),
                                unit_vec(V.n, c))
                             .is_zero())
                      return "basis triple (" + V.labels[a] + ", " +
                             V.labels[b] + ", " + V.labels[c] + ")";
              return std::nullopt;
            }
            for (int t = 0; t < 200; ++t)
              if (!defect(rand_vec(V, rng), rand_vec(V, rng), rand_vec(V, rng))
                       .is_zero())
                return "seeded triple #" + std::to_string(t);
            return std::nullopt;
          });

  R.check("jordan.trace.nondegenerate", "the trace-form Gram matrix is invertible",
          [&]() -> Witness {
            if (determinant(V.trace_gram()).is_zero())
              return "det tau = 0";
            return std::nullopt;
          });

  R.check("jordan.trace.unit", "tau(e, e) = r", [&]() -> Witness {
    Scalar t = V.trace_form(V.unit, V.unit);
    if (t != Scalar(V.r)) return "tau(e,e) = " + scal(t);
    return std::nullopt;
  });

  R.check("jordan.theta.automorphism",
          "theta is an order-2 automorphism, trivial exactly in the Euclidean "
          "case",
          [&]() -> Witness {
            const Mat& th = V.theta_R();
            int N = V.N();
            if (!(th * th == Mat::identity(N))) return "theta^2 != id";
            bool is_id = th == Mat::identity(N);
            if (is_id != V.euclidean)
              return is_id ? "theta trivial on a non-Euclidean model"
                           : "theta nontrivial on a Euclidean model";
            for (int a = 0; a < N; ++a)
              for (int b = a; b < N; ++b) {
                Vec ba = unit_vec(N, a), bb = unit_vec(N, b);
                if (th.apply(V.mul_R(ba, bb)) !=
                    V.mul_R(th.apply(ba), th.apply(bb)))
                  return "theta(xy) != theta(x)theta(y) at basis pair (" +
                         std::to_string(a) + ", " + std::to_string(b) + ")";
              }
            return std::nullopt;
          });

  R.check("jordan.trace.signature",
          "the real trace form is positive definite exactly for Euclidean "
          "models",
          [&]() -> Witness {
            if (positive_definite(V.tau_R_gram()) != V.euclidean)
              return "signature does not match the Euclidean flag";
            return std::nullopt;
          });

  R.check("jordan.inner.positive",
          "the theta-twisted trace pairing is positive definite",
          [&]() -> Witness {
            Mat gram = V.tau_R_gram() * V.theta_R();
            if (!positive_definite(gram)) return "a leading minor is <= 0";
            return std::nullopt;
          });

  R.check("jordan.frame",
          "the frame consists of orthogonal primitive idempotents summing to e",
          [&]() -> Witness {
            Vec sum = zero_vec(V.n);
            for (int i = 0; i < V.r; ++i) {
              sum = add(sum, V.frame[i]);
              for (int j = 0; j < V.r; ++j) {
                Vec prod = V.mul(V.frame[i], V.frame[j]);
                Vec want = i == j ? V.frame[i] : zero_vec(V.n);
                if (prod != want)
                  return "c_" + std::to_string(i + 1) + " c_" +
                         std::to_string(j + 1);
                Scalar t = V.trace_form(V.frame[i], V.frame[j]);
                if (t != (i == j ? Scalar(1) : Scalar()))
                  return "tau(c_i, c_j) off at (" + std::to_string(i + 1) +
                         ", " + std::to_string(j + 1) + ")";
              }
            }
            if (sum != V.unit) return "frame does not sum to e";
            return std::nullopt;
          });
}

void peirce_checks(Runner& R, const JordanAlgebra& V, const PeirceData& P) {
  R.check("jordan.peirce.dims",
          "Peirce blocks have dims 1 and d and fill the algebra",
          [&]() -> Witness {
            int total = 0;
            for (int i = 0; i < V.r; ++i) {
              if (P.diag[i].dim() != 1)
                return "dim V_" + std::to_string(i + 1) +
                       std::to_string(i + 1) + " = " +
                       std::to_string(P.diag[i].dim());
              total += 1;
            }
            for (const auto& [key, sub] : P.off) {
              if (sub.dim() != V.d)
                return "dim V_" + std::to_string(key.first + 1) +
                       std::to_string(key.second + 1) + " = " +
                       std::to_string(sub.dim());
              total += sub.dim();
            }
            if (total != V.n) return "blocks do not fill V";
            if (P.half_F.dim() != (V.r - 1) * V.d)
              return "half space dimension != (r-1)d";
            return std::nullopt;
          });

  R.check("jordan.peirce.products",
          "block products land in the composition-rule target blocks",
          [&]() -> Witness {
            // block(i,i) = diag[i]; block(i,j) = off[{i,j}] for i < j
            auto block = [&](int i, int j) -> const Subspace& {
              if (i == j) return P.diag[i];
              return P.off.at({std::min(i, j), std::max(i, j)});
            };
            auto target = [&](int i, int j, int k, int l) -> Subspace {
              // product target of V_ij and V_kl: shared-index composition,
              // V_ij^2 into V_ii + V_jj, disjoint blocks annihilate.
              if (i == k && j == l)
                return i == j ? P.diag[i] : P.diag[i].sum(P.diag[j]);
              std::vector<int> shared, rest;
              for (int t : {i, j})
                if (t == k || t == l) shared.push_back(t);
              if (i == j && k == l)  // distinct diagonals
                return Subspace::span(Mat(0, V.n));
              for (int t : {i, j, k, l}) {
                bool dup = false;
                for (int s : shared) dup = dup || s == t;
                if (!dup) rest.push_back(t);
              }
              if (shared.empty()) return Subspace::span(Mat(0, V.n));
              if (rest.size() == 2)
                return block(std::min(rest[0], rest[1]),
                             std::max(rest[0], rest[1]));
              if (rest.size() == 1) return block(rest[0], shared[0]);
              return block(i, j);  // V_ii V_ij or V_ij V_ij handled above
            };
            std::vector<std::pair<int, int>> idx;
            for (int i = 0; i < V.r; ++i) idx.push_back({i, i});
            for (const auto& [key, sub] : P.off) idx.push_back(key);
            for (auto [i, j] : idx)
              for (auto [k, l] : idx) {
                Subspace tgt = target(i, j, k, l);
                const Mat& A = block(i, j).basis();
                const Mat& B = block(k, l).basis();
                for (int a = 0; a < A.rows(); ++a)
                  for (int b = 0; b < B.rows(); ++b) {
                    Vec prod = V.mul(A.row(a), B.row(b));
                    if (is_zero_vec(prod)) continue;
                    if (!tgt.contains(prod))
                      return "V_" + std::to_string(i + 1) +
                             std::to_string(j + 1) + " * V_" +
                             std::to_string(k + 1) + std::to_string(l + 1) +
                             " leaves its target";
                  }
              }
            return std::nullopt;
          });
}

void quadratic_checks(Runner& R, const JordanAlgebra& V, bool full) {
  R.check("jordan.quad.unit", "P(e) = id and P(x) e = x^2",
          [&, rng = R.fresh_rng()]() mutable -> Witness {
            if (!(V.quad_rep(V.unit) == Mat::identity(V.n)))
              return "P(e) != id";
            for (int t = 0; t < 3; ++t) {
              Vec x = rand_vec(V, rng);
              if (V.quad_rep(x).apply(V.unit) != V.mul(x, x))
                return "P(x)e != x^2 at sample #" + std::to_string(t);
            }
            return std::nullopt;
          });

  R.check("jordan.quad.fundamental", "P(P(x) y) = P(x) P(y) P(x)",
          [&, rng = R.fresh_rng(), full]() mutable -> Witness {
            int pairs = full ? 3 : 1;
            for (int t = 0; t < pairs; ++t) {
              Vec x = rand_vec(V, rng), y = rand_vec(V, rng);
              Mat px = V.quad_rep(x);
              if (!(V.quad_rep(px.apply(y)) == px * V.quad_rep(y) * px))
                return "sample #" + std::to_string(t);
            }
            return std::nullopt;
          });

  R.check("jordan.rank_one", "seeded cone points x satisfy x^2 = tau(x,e) x",
          [&, rng = R.fresh_rng()]() mutable -> Witness {
            for (int t = 0; t < 5; ++t) {
              Vec x = rank_one_point(V, rng);
              if (is_zero_vec(x)) return "cone sample is zero";
              if (V.mul(x, x) != scale(V.trace_form(x, V.unit), x))
                return "sample #" + std::to_string(t);
            }
            return std::nullopt;
          });

  R.check("jordan.invertible",
          "seeded elements from the invertible sampler are invertible",
          [&, rng = R.fresh_rng()]() mutable -> Witness {
            for (int t = 0; t < 3; ++t) {
              Vec x = random_invertible(V, rng);
              if (!V.is_invertible(x)) return "sample #" + std::to_string(t);
            }
            return std::nullopt;
          });
}

void conformal_checks(Runner& R, const JordanAlgebra& V,
                      const ConformalAlgebra& C, const PeirceData& P,
                      bool full) {
  const LieAlgebra& L = C.co();
  const int dimF = C.dim();

  R.check("conformal.dim", "dim co(V) = 3n + dim aut(V)", [&]() -> Witness {
    if (dimF != 3 * V.n + C.da())
      return "dim = " + std::to_string(dimF);
    return std::nullopt;
  });

  R.check("conformal.aut.dim",
          "dim aut(V) matches the family value for (r, d, n)", [&]() -> Witness {
            if (C.da() != expected_aut_dim(V))
              return "dim aut = " + std::to_string(C.da()) + ", expected " +
                     std::to_string(expected_aut_dim(V));
            return std::nullopt;
          });

  R.check("conformal.antisymmetry", "the bracket table is antisymmetric",
          [&]() -> Witness {
            if (!L.antisymmetric_table()) return "antisymmetry fails";
            return std::nullopt;
          });

  R.check("conformal.jacobi",
          dimF <= 66 ? std::string("Jacobi identity on all basis triples")
                     : std::string("Jacobi identity on seeded basis triples"),
          [&, rng = R.fresh_rng(), full]() mutable -> Witness {
            if (dimF <= 66) {
              if (!L.jacobi_exhaustive()) return "a basis triple fails";
            } else if (!L.jacobi_sampled(rng, full ? 5000 : 500)) {
              return "a sampled triple fails";
            }
            return std::nullopt;
          });

  if (V.delta == 2) {
    R.check("conformal.jacobi.real",
            "Jacobi identity holds in the realified algebra",
            [&, rng = R.fresh_rng(), full]() mutable -> Witness {
              LieAlgebra RL = L.realify();
              if (!RL.jacobi_sampled(rng, full ? 2000 : 300))
                return "a sampled triple fails";
              return std::nullopt;
            });
  } else {
    R.skip("conformal.jacobi.real",
           "Jacobi identity holds in the realified algebra",
           "coordinates are already real");
  }

  R.check("conformal.sl2", "[H,E] = 2E, [H,F] = -2F, [E,F] = H",
          [&]() -> Witness {
            Vec E = C.sl2_E(), H = C.sl2_H(), F = C.sl2_F();
            if (L.bracket(H, E) != scale(Scalar(2), E)) return "[H,E] != 2E";
            if (L.bracket(H, F) != scale(Scalar(-2), F)) return "[H,F] != -2F";
            if (L.bracket(E, F) != H) return "[E,F] != H";
            return std::nullopt;
          });

  R.check("conformal.grading",
          "ad(H) has eigenvalue 2 on the u slots, 0 on str, -2 on the v slots",
          [&]() -> Witness {
            Vec H = C.sl2_H();
            for (int a = 0; a < V.n; ++a) {
              Vec u = unit_vec(dimF, C.u_slot(a));
              if (L.bracket(H, u) != scale(Scalar(2), u))
                return "u slot " + std::to_string(a);
              Vec v = unit_vec(dimF, C.v_slot(a));
              if (L.bracket(H, v) != scale(Scalar(-2), v))
                return "v slot " + std::to_string(a);
              Vec x = unit_vec(dimF, C.x_slot(a));
              if (!is_zero_vec(L.bracket(H, x)))
                return "x slot " + std::to_string(a);
            }
            for (int k = 0; k < C.da(); ++k) {
              Vec dk = unit_vec(dimF, C.d_slot(k));
              if (!is_zero_vec(L.bracket(H, dk)))
                return "D slot " + std::to_string(k);
            }
            return std::nullopt;
          });

  R.check("conformal.cartan",
          "the global involution squares to one, is an automorphism, and "
          "swaps E with -F",
          [&, rng = R.fresh_rng(), full]() mutable -> Witness {
            for (int k = 0; k < dimF; ++k) {
              Vec e = unit_vec(dimF, k);
              if (C.cartan(C.cartan(e)) != e)
                return "square != id at basis " + std::to_string(k);
            }
            if (C.cartan(C.sl2_E()) != scale(Scalar(-1), C.sl2_F()))
              return "E does not map to -F";
            if (C.cartan(C.sl2_H()) != scale(Scalar(-1), C.sl2_H()))
              return "H does not map to -H";
            int pairs = full ? 20 : 8;
            for (int t = 0; t < pairs; ++t) {
              Vec X(dimF), Y(dimF);
              for (auto& s : X) s = rng.scalar(V.delta == 2);
              for (auto& s : Y) s = rng.scalar(V.delta == 2);
              if (C.cartan(L.bracket(X, Y)) !=
                  L.bracket(C.cartan(X), C.cartan(Y)))
                return "not an automorphism at sample #" + std::to_string(t);
            }
            return std::nullopt;
          });

  R.check("conformal.cartan.split",
          "co = k + p with [k,k], [p,p] in k and [k,p] in p", [&]() -> Witness {
            CartanSplit ks = cartan_split(C);
            if (ks.k.dim() + ks.p.dim() != V.delta * dimF)
              return "dims " + std::to_string(ks.k.dim()) + "+" +
                     std::to_string(ks.p.dim());
            if (!ks.brackets_ok) return "bracket containments fail";
            if (V.delta == 1) {
              if (!ks.k.contains(sub(C.sl2_E(), C.sl2_F())))
                return "E - F is not fixed";
              if (!ks.p.contains(add(C.sl2_E(), C.sl2_F())) ||
                  !ks.p.contains(C.sl2_H()))
                return "E + F or H is not flipped";
            }
            return std::nullopt;
          });

  R.check("conformal.dualpair",
          "the sl2 triple and aut(V) are mutual centralizers in co(V)",
          [&]() -> Witness {
            DualPairData dp = dual_pair(C);
            if (!dp.mutual) return "centralizers differ from the pair";
            if (dp.sl2_centralizer.dim() != C.da())
              return "Z(sl2) has dim " +
                     std::to_string(dp.sl2_centralizer.dim());
            if (dp.der_centralizer.dim() != 3)
              return "Z(aut) has dim " +
                     std::to_string(dp.der_centralizer.dim());
            return std::nullopt;
          });

  R.check("conformal.frame.decomposition",
          "aut(V) splits into the frame stabilizer and the d-dimensional "
          "blocks [L(c_i), L(V_ij)]",
          [&]() -> Witness {
            FrameDecomposition dec = frame_decomposition(V, C.der());
            if (!dec.direct_sum) return "not a direct sum";
            if (!dec.composition_rule) return "[g_ij, g_jk] leaves g_ik";
            for (const auto& [key, sub] : dec.gij)
              if (sub.dim() != V.d)
                return "dim g_" + std::to_string(key.first + 1) +
                       std::to_string(key.second + 1) + " = " +
                       std::to_string(sub.dim());
            int expected_g0 = C.da() - V.d * V.r * (V.r - 1) / 2;
            if (dec.g0.dim() != expected_g0)
              return "dim g_0 = " + std::to_string(dec.g0.dim()) +
                     ", expected " + std::to_string(expected_g0);
            return std::nullopt;
          });

  R.check("conformal.symmetric_pair",
          "the frame-point parity splits aut(V) into the stabilizer of c_1 "
          "and [L(c_1), L(V(c_1,1/2))]",
          [&]() -> Witness {
            FrameDecomposition dec = frame_decomposition(V, C.der());
            SymmetricPairData sp = symmetric_pair(V, C.der(), dec);
            if (!sp.plus_is_stabilizer) return "fixed part != stabilizer";
            if (!sp.minus_is_half_bracket)
              return "flipped part != [L(c_1), L(half space)]";
            if (!sp.brackets_ok) return "bracket parities fail";
            if (sp.plus.dim() != expected_fixed_dim(V))
              return "dim fixed = " + std::to_string(sp.plus.dim()) +
                     ", expected " + std::to_string(expected_fixed_dim(V));
            if (sp.minus.dim() != (V.r - 1) * V.d)
              return "dim flipped = " + std::to_string(sp.minus.dim());
            return std::nullopt;
          });

  R.check("conformal.roots.split",
          "the split rank-one datum exists exactly for non-Euclidean models, "
          "with multiplicities ((r-2)d, d-1) and rho = delta(rd/2 - 1) alpha",
          [&]() -> Witness {
            RootDatum rd = split_root_datum(V, C.der());
            if (rd.defined == V.euclidean)
              return rd.defined ? "defined on a Euclidean model"
                                : "undefined on a non-Euclidean model";
            if (!rd.defined) return std::nullopt;
            if (!rd.verified) return rd.detail;
            if (rd.mult_alpha != (V.r - 2) * V.d ||
                rd.mult_2alpha != V.d - 1)
              return "multiplicities (" + std::to_string(rd.mult_alpha) +
                     ", " + std::to_string(rd.mult_2alpha) + ")";
            Rational want = half_rd_minus_one(V) * V.delta;
            want.canonicalize();
            if (rd.rho_coeff != want)
              return "rho = " + rational_to_string(rd.rho_coeff);
            return std::nullopt;
          });

  R.check("conformal.roots.compact",
          "the compact rank-one datum, defined for every Euclidean model, has "
          "multiplicities ((r-2)d, d-1) and rho = (rd/2 - 1) beta",
          [&]() -> Witness {
            RootDatum rd = compact_root_datum(V, C.der());
            if (V.euclidean && !rd.defined)
              return "undefined on a Euclidean model";
            if (!rd.defined) return std::nullopt;
            if (!rd.verified) return rd.detail;
            if (rd.mult_alpha != (V.r - 2) * V.d ||
                rd.mult_2alpha != V.d - 1)
              return "multiplicities (" + std::to_string(rd.mult_alpha) +
                     ", " + std::to_string(rd.mult_2alpha) + ")";
            if (rd.rho_coeff != half_rd_minus_one(V))
              return "rho = " + rational_to_string(rd.rho_coeff);
            return std::nullopt;
          });

  R.check("conformal.rotation",
          "ad(c_1, 0, -c_1)^2 acts on u + v with eigenvalues {0, -1, -4} and "
          "recovers the half Peirce space",
          [&]() -> Witness {
            RotationData rot = rotation_half_space(C);
            if (!rot.complete) return "slice action not diagonalizable";
            for (const auto& [ev, mult] : rot.mults)
              if (ev != Rational(0) && ev != Rational(-1) && ev != Rational(-4))
                return "unexpected eigenvalue " + rational_to_string(ev);
            if (!rot.matches_half)
              return "recovered space differs from V(c_1, 1/2)";
            return std::nullopt;
          });

  R.check("conformal.d0",
          "D_0 = [L(c_1), L(x)] sends c_1 to -x/4 and satisfies the parity "
          "commutator relations on tau-orthogonal V_12",
          [&]() -> Witness {
            const Vec& c1 = V.frame[0];
            const Subspace& flipped = P.off_minus.at({0, 1});
            Vec x = flipped.dim() > 0 ? flipped.basis().row(0)
                                      : P.off_plus.at({0, 1}).basis().row(0);
            if (V.field == Field::C) x = V.complexify(x);
            Mat D0 = inner_derivation(V, c1, x);
            if (D0.apply(c1) != scale(Scalar(Rational(-1, 4)), x))
              return "D_0 c_1 != -x/4";
            const Subspace& v12 = P.off.at({0, 1});
            Mat cond(1, v12.dim());
            for (int t = 0; t < v12.dim(); ++t)
              cond.at(0, t) = V.trace_form(x, v12.basis().row(t));
            Mat coeffs = kernel_basis(cond);
            for (int s = 0; s < coeffs.rows(); ++s) {
              Vec y(V.n);
              for (int t = 0; t < v12.dim(); ++t)
                add_scaled(y, coeffs.at(s, t), v12.basis().row(t));
              if (commutator(D0, inner_derivation(V, c1, y)) !=
                  inner_derivation(V, x, y).scaled(Scalar(Rational(-1, 4))))
                return "[D_0, [L(c_1), L(y)]] != -1/4 [L(x), L(y)]";
              if (commutator(D0, inner_derivation(V, x, y)) !=
                  inner_derivation(V, c1, y).scaled(
                      V.trace_form(x, x) * Scalar(Rational(1, 2))))
                return "[D_0, [L(x), L(y)]] != tau(x,x)/2 [L(c_1), L(y)]";
            }
            return std::nullopt;
          });

  R.check("conformal.quarter",
          "x^2 = tau(x,x)/2 (c_i + c_j) on V_ij, and L(x)^2 = tau(x,x)/8 on a "
          "linked off-diagonal block when r >= 3",
          [&]() -> Witness {
            const Scalar half(Rational(1, 2));
            for (const auto& [key, sub] : P.off) {
              Vec target = add(V.frame[key.first], V.frame[key.second]);
              for (int t = 0; t < sub.dim(); ++t) {
                Vec x = sub.basis().row(t);
                if (V.mul(x, x) !=
                    scale(half * V.trace_form(x, x), target))
                  return "square rule fails on V_" +
                         std::to_string(key.first + 1) +
                         std::to_string(key.second + 1);
              }
            }
            if (V.r >= 3) {
              const Scalar eighth(Rational(1, 8));
              const Subspace& v01 = P.off.at({0, 1});
              const Subspace& v02 = P.off.at({0, 2});
              for (int a = 0; a < v01.dim(); ++a) {
                Vec x = v01.basis().row(a);
                Mat Lx = V.Lmat(x);
                Scalar ev = eighth * V.trace_form(x, x);
                for (int b = 0; b < v02.dim(); ++b) {
                  Vec y = v02.basis().row(b);
                  if (Lx.apply(Lx.apply(y)) != scale(ev, y))
                    return "eigenvalue rule fails at (x_" +
                           std::to_string(a) + ", y_" + std::to_string(b) +
                           ")";
                }
              }
            }
            return std::nullopt;
          });

  int form_budget = full ? 21 : 8;
  if (C.da() <= form_budget) {
    R.check("conformal.invariant_form",
            "the anchor-normalized invariant form gives tau on the half "
            "space, value 32 on torus generators, and dual Casimir pairs",
            [&]() -> Witness {
              auto anchors = invariant_form_anchors(V, C.der());
              if (anchors.empty()) return "no anchors";
              NormalizedForm B = normalized_form(C.der().algebra, anchors);
              RootDatum comp = compact_root_datum(V, C.der());
              if (comp.defined && B(comp.H0, comp.H0) != Scalar(32))
                return "B(t_0, t_0) = " + scal(B(comp.H0, comp.H0));
              RootDatum split = split_root_datum(V, C.der());
              if (split.defined && B(split.H0, split.H0) != Scalar(-32))
                return "B(h_0, h_0) = " + scal(B(split.H0, split.H0));
              CasimirPairs cp = casimir_pairs(C.der().algebra, B);
              if (int(cp.basis.size()) != C.da()) return "pair count != dim";
              for (size_t k = 0; k < cp.basis.size(); ++k)
                for (size_t l = 0; l < cp.dual.size(); ++l)
                  if (B(cp.basis[k], cp.dual[l]) !=
                      (k == l ? Scalar(1) : Scalar()))
                    return "duality fails at (" + std::to_string(k) + ", " +
                           std::to_string(l) + ")";
              return std::nullopt;
            });
  } else {
    R.skip("conformal.invariant_form",
           "the anchor-normalized invariant form gives tau on the half space, "
           "value 32 on torus generators, and dual Casimir pairs",
           "Killing Gram of a " + std::to_string(C.da()) +
               "-dimensional derivation algebra exceeds this level's budget");
  }

  int killing_budget = full ? 66 : 36;
  if (dimF <= killing_budget) {
    R.check("liealg.killing.invariance",
            "kappa([x,y],z) = kappa(x,[y,z]) on sampled basis triples",
            [&, rng = R.fresh_rng()]() mutable -> Witness {
              Mat gram = L.killing_gram();
              auto pair_with = [&](const SparseVec& x, int c) {
                Scalar t;
                for (const auto& e : x) t += e.val * gram.at(e.idx, c);
                return t;
              };
              for (int t = 0; t < 12; ++t) {
                int a = rng.uniform(0, dimF - 1);
                int b = rng.uniform(0, dimF - 1);
                int c = rng.uniform(0, dimF - 1);
                Scalar lhs = pair_with(L.bracket_basis(a, b), c);
                SparseVec bc = L.bracket_basis(b, c);
                Scalar rhs;
                for (const auto& e : bc) rhs += gram.at(a, e.idx) * e.val;
                if (lhs != rhs)
                  return "triple (" + std::to_string(a) + ", " +
                         std::to_string(b) + ", " + std::to_string(c) + ")";
              }
              return std::nullopt;
            });
  } else {
    R.skip("liealg.killing.invariance",
           "kappa([x,y],z) = kappa(x,[y,z]) on sampled basis triples",
           "Killing Gram of dimension " + std::to_string(dimF) +
               " exceeds this level's budget");
  }

  int center_budget = full ? 70 : 40;
  if (dimF <= center_budget) {
    R.check("liealg.center", "co(V) has trivial center", [&]() -> Witness {
      std::vector<Vec> gens;
      for (int k = 0; k < dimF; ++k) gens.push_back(unit_vec(dimF, k));
      Subspace z = centralizer(L, gens);
      if (z.dim() != 0) return "center has dim " + std::to_string(z.dim());
      return std::nullopt;
    });
  } else {
    R.skip("liealg.center", "co(V) has trivial center",
           "centralizer computation in dimension " + std::to_string(dimF) +
               " exceeds this level's budget");
  }
}

void minrep_checks(Runner& R, const JordanAlgebra& V, bool full) {
  const int N = V.N();

  int sl2_budget = full ? 30 : 12;
  if (N <= sl2_budget) {
    R.check("minrep.sl2",
            "the operators of the distinguished triple satisfy the sl2 "
            "bracket relations",
            [&]() -> Witness {
              MinRepAction act(V);
              CoElement E = co_E(V), H = co_H(V), F = co_F(V);
              for (auto [X, Y, name] :
                   {std::tuple{&E, &H, "(E,H)"}, std::tuple{&E, &F, "(E,F)"},
                    std::tuple{&H, &F, "(H,F)"}}) {
                RepCheckReport rep =
                    rep_relation_check(act, *X, *Y, 2, {});
                if (!rep.ambient_zero)
                  return std::string("defect of ") + name + ": " +
                         rep.counterexample;
              }
              return std::nullopt;
            });
  } else {
    R.skip("minrep.sl2",
           "the operators of the distinguished triple satisfy the sl2 bracket "
           "relations",
           "operator composition in " + std::to_string(N) +
               " variables exceeds this level's budget");
  }

  int pair_budget = full ? 15 : 9;
  if (N <= pair_budget) {
    R.check("minrep.bracket",
            "[dpi(X), dpi(Y)] = dpi([X,Y]) for seeded conformal pairs",
            [&, rng = R.fresh_rng(), full]() mutable -> Witness {
              MinRepAction act(V);
              int pairs = full ? 2 : 1;
              for (int t = 0; t < pairs; ++t) {
                CoElement X = random_co(V, rng), Y = random_co(V, rng);
                RepCheckReport rep = rep_relation_check(act, X, Y, 2, {});
                if (!rep.ambient_zero)
                  return "pair #" + std::to_string(t) + ": " +
                         rep.counterexample;
              }
              return std::nullopt;
            });
  } else {
    R.skip("minrep.bracket",
           "[dpi(X), dpi(Y)] = dpi([X,Y]) for seeded conformal pairs",
           "operator composition in " + std::to_string(N) +
               " variables exceeds this level's budget");
  }

  int cone_budget = full ? 27 : 9;
  if (N <= cone_budget) {
    R.check("minrep.cone.relations",
            "the (E,F) bracket defect vanishes identically, in particular at "
            "20 cone points",
            [&, rng = R.fresh_rng()]() mutable -> Witness {
              MinRepAction act(V);
              std::vector<Vec> pts;
              for (int t = 0; t < 20; ++t)
                pts.push_back(V.realify(rank_one_point(V, rng)));
              RepCheckReport rep =
                  rep_relation_check(act, co_E(V), co_F(V), 3, pts);
              if (!rep.ambient_zero) return "ambient defect nonzero";
              if (!rep.tangential_zero) return rep.counterexample;
              return std::nullopt;
            });
  } else {
    R.skip("minrep.cone.relations",
           "the (E,F) bracket defect vanishes identically, in particular at "
           "20 cone points",
           "operator composition in " + std::to_string(N) +
               " variables exceeds this level's budget");
  }

  if (N <= pair_budget) {
    R.check("minrep.tangential",
            "the action preserves the vanishing ideal of the cone without "
            "killing cut functions ambiently",
            [&, rng = R.fresh_rng()]() mutable -> Witness {
              MinRepAction act(V);
              std::vector<Vec> pts;
              for (int t = 0; t < 10; ++t)
                pts.push_back(V.realify(rank_one_point(V, rng)));
              Vec probe = V.realify(random_invertible(V, rng));
              Poly q = cone_ideal_poly(act, rand_real_vec(N, rng));
              for (const Vec& pt : pts)
                if (!q.eval(pt).is_zero()) return "cut not zero on the cone";
              if (q.eval(probe).is_zero()) return "cut zero at the probe";
              for (CoElement X : {co_F(V), co_E(V)}) {
                bool witnessed = false;
                for (int t = 0; t < N && !witnessed; ++t) {
                  Poly f = Poly::variable(N, t) * q;
                  TangentialityReport rep =
                      tangentiality_check(act, X, f, pts, probe);
                  if (!rep.cut_zero_on_cone) return "ideal member not zero";
                  if (!rep.cut_nonzero_at_probe) continue;
                  if (!rep.image_zero_on_cone)
                    return "image leaves the ideal: " + rep.detail;
                  witnessed = rep.image_nonzero_at_probe;
                }
                if (!witnessed) return "no nonvanishing image found";
              }
              return std::nullopt;
            });

    R.check("minrep.bessel.basis_free",
            "the contracted second-order operator is basis independent",
            [&, rng = R.fresh_rng()]() mutable -> Witness {
              MinRepAction act(V);
              Vec u = rand_real_vec(N, rng);
              Mat M = Mat::identity(N);
              for (int i = 0; i < N; ++i)
                for (int j = i + 1; j < N; ++j)
                  M.at(i, j) = rng.real_scalar();
              if (!(act.bessel_paired_in_basis(u, M) == act.bessel_paired(u)))
                return "contraction differs in a unitriangular basis";
              return std::nullopt;
            });
  } else {
    R.skip("minrep.tangential",
           "the action preserves the vanishing ideal of the cone without "
           "killing cut functions ambiently",
           "operator evaluation in " + std::to_string(N) +
               " variables exceeds this level's budget");
    R.skip("minrep.bessel.basis_free",
           "the contracted second-order operator is basis independent",
           "operator construction in " + std::to_string(N) +
               " variables exceeds this level's budget");
  }

  int key_budget = full ? 15 : 12;
  if (N <= key_budget) {
    R.check("minrep.keylemma",
            "the operator identities at the base point hold on all monomials "
            "of degree <= 3",
            [&]() -> Witness {
              KeyLemmaReport rep = key_lemma_at_c(V, 3);
              if (!rep.ok()) return rep.mismatch;
              return std::nullopt;
            });
  } else {
    R.skip("minrep.keylemma",
           "the operator identities at the base point hold on all monomials "
           "of degree <= 3",
           "degree-3 monomial space in " + std::to_string(N) +
               " variables exceeds this level's budget");
  }

  R.check("minrep.sl2.radial",
          "the radial model operators satisfy the sl2 relations symbolically",
          [&]() -> Witness {
            if (!sl2_relations_ok(sl2_model_ops_symbolic(V.r, V.d, V.delta)))
              return "a symbolic relation fails";
            return std::nullopt;
          });

  R.check("minrep.radial.match",
          "the base-point identities match the radial model generators",
          [&]() -> Witness {
            Sl2MatchReport rep = keylemma_vs_sl2_match(V.r, V.d, V.delta);
            if (!rep.ok) return rep.difference;
            return std::nullopt;
          });
}

void theta_checks(Runner& R, const JordanAlgebra& V, bool full) {
  ModelConstants mc = model_constants(V.name);

  R.check("theta.constants",
          "the parameter-table constants match the constructed algebra",
          [&]() -> Witness {
            if (mc.r != V.r || mc.d != V.d || mc.n != V.n ||
                mc.delta != V.delta)
              return "(r, d, n, delta) differ";
            if (mc.euclidean != V.euclidean) return "Euclidean flag differs";
            if (mc.has_minrep != V.has_minrep)
              return "minimal-representation flag differs";
            if ((mc.field == Field::C) != (V.field == Field::C))
              return "field differs";
            return std::nullopt;
          });

  if (!mc.has_minrep) {
    const char* why = "the model has no minimal representation";
    R.skip("theta.consistency",
           "induced and radial Casimir eigenvalue polynomials agree", why);
    R.skip("theta.support",
           "every enumerated parameter is admissible and lifts to an "
           "admissible parameter",
           why);
    R.skip("theta.injective", "distinct parameters lift to distinct outputs",
           why);
    R.skip("theta.casimir.match",
           "the highest-weight and cohomological eigenvalue routes agree",
           why);
    return;
  }

  R.check("theta.consistency",
          "induced and radial Casimir eigenvalue polynomials agree",
          [&]() -> Witness {
            ConsistencyReport rep = abstract_theta_consistency(mc);
            if (!rep.ok) return rep.detail;
            return std::nullopt;
          });

  R.check("theta.support",
          "every enumerated parameter is admissible and lifts to an "
          "admissible parameter",
          [&]() -> Witness {
            PlancherelSupport sup = plancherel_support(mc);
            std::vector<GParam> params = sup.discrete_upto(12);
            if (sup.has_continuous) {
              Rational t(1, 2);
              if (sup.continuous_all_integers) {
                for (long m : {-3L, 0L, 3L})
                  params.push_back(sup.continuous_param(m, t));
              } else {
                for (long xi : sup.continuous_values)
                  params.push_back(sup.continuous_param(xi, t));
              }
            }
            if (params.empty()) return "support is empty";
            for (const GParam& p : params) {
              if (auto why = validate_gparam(mc, p))
                return describe(p) + ": " + *why;
              ThetaLift lift = theta_lift(mc, p);
              if (auto why = validate_gprime(mc, lift.output))
                return describe(lift.output) + ": " + *why;
            }
            return std::nullopt;
          });

  R.check("theta.injective", "distinct parameters lift to distinct outputs",
          [&, full]() -> Witness {
            InjectivityReport rep = theta_injectivity_scan(mc, full ? 40 : 20);
            if (!rep.ok) return rep.collision;
            return std::nullopt;
          });

  if (mc.delta == 1) {
    R.check("theta.casimir.match",
            "the highest-weight and cohomological eigenvalue routes agree",
            [&]() -> Witness {
              for (long k : {0L, 2L, 4L, 6L, 40L}) {
                Scalar a = casimir_eigenvalue(mc, GParam(EuclideanHW{k})).c;
                Scalar b = casimir_eigenvalue(mc, GParam(AqModule{k})).c;
                if (a != b)
                  return "k = " + std::to_string(k) + ": " + scal(a) +
                         " vs " + scal(b);
              }
              return std::nullopt;
            });
  } else {
    R.skip("theta.casimir.match",
           "the highest-weight and cohomological eigenvalue routes agree",
           "single continuous family; covered by the symbolic consistency "
           "check");
  }
}

}  // namespace

VerificationReport run_verify(const std::string& model_id, VerifyLevel level,
                              std::uint64_t seed) {
  Runner R;
  R.seed = seed;
  R.rep.model = model_id;
  R.rep.seed = seed;
  R.rep.tool_version = kToolVersion;
  R.rep.level = to_string(level);

  JordanAlgebra V = make_model(model_id);
  bool full = level == VerifyLevel::Full;

  jordan_checks(R, V, full);
  PeirceData P = peirce_decompose(V);
  peirce_checks(R, V, P);
  quadratic_checks(R, V, full);
  ConformalAlgebra C(V);
  conformal_checks(R, V, C, P, full);
  minrep_checks(R, V, full);
  theta_checks(R, V, full);

  R.rep.overall = R.rep.counted(CheckStatus::Fail) == 0;
  return R.rep;
}

std::vector<std::string> verify_models(VerifyLevel level) {
  std::vector<std::string> out;
  for (const std::string& id : catalog_ids()) {
    if (level == VerifyLevel::Quick) {
      JordanAlgebra V = make_model(id);
      int real_dim = V.delta * (3 * V.n + expected_aut_dim(V));
      if (real_dim > 40) continue;
    }
    out.push_back(id);
  }
  return out;
}

std::vector<VerificationReport> run_verify_all(VerifyLevel level,
                                               std::uint64_t seed,
                                               int workers) {
  std::vector<std::string> ids = verify_models(level);
  if (workers <= 0) {
    workers = int(std::thread::hardware_concurrency());
    if (workers <= 0) workers = 2;
  }
  workers = std::min<int>(workers, int(ids.size()));

  std::vector<VerificationReport> out(ids.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < ids.size(); i = next.fetch_add(1))
      out[i] = run_verify(ids[i], level, seed);
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace jconf
