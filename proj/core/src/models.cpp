#include "jconf/models.hpp"

#include <sstream>

namespace jconf {

namespace {

CompAlgebra doubled(const CompAlgebra& A, int lambda) {
  int m = A.dim;
  CompAlgebra B;
  B.dim = 2 * m;
  B.split = A.split || lambda > 0;
  B.mul.assign(2 * m, std::vector<std::pair<int, int>>(2 * m));
  // (a,b)(c,d) = (ac + lambda * conj(d) b, d a + b conj(c))
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto [k, s] = A.mul[i][j];
      B.mul[i][j] = {k, s};                                    // (a,0)(c,0)
      auto [k2, s2] = A.mul[j][i];
      B.mul[i][m + j] = {m + k2, s2};                          // (a,0)(0,d)
      auto [k3, s3] = A.mul[i][j];
      B.mul[m + i][j] = {m + k3, s3 * A.conj_sign[j]};         // (0,b)(c,0)
      auto [k4, s4] = A.mul[j][i];
      B.mul[m + i][m + j] = {k4, lambda * s4 * A.conj_sign[j]};  // (0,b)(0,d)
    }
  B.conj_sign = A.conj_sign;
  B.conj_sign.resize(2 * m, 0);
  for (int i = 0; i < m; ++i) B.conj_sign[m + i] = -1;
  return B;
}

}  // namespace

CompAlgebra comp_algebra(int dim, bool split) {
  CompAlgebra A;
  A.dim = 1;
  A.mul = {{{0, 1}}};
  A.conj_sign = {1};
  while (A.dim < dim) {
    bool last = 2 * A.dim == dim;
    A = doubled(A, (split && last) ? +1 : -1);
  }
  if (A.dim != dim) throw JordanError("composition algebra dimension must be 1,2,4,8");
  return A;
}

namespace {

// Shared builder for Herm(r, K): basis E_ii and u E_ij + conj(u) E_ji.
// gamma_signs (optional) define the Cartan involution entrywise on K;
// identity when empty.
JordanAlgebra make_hermitian(int r, const CompAlgebra& K, const std::string& name,
                             const std::vector<int>& gamma_signs) {
  int dk = K.dim;
  int npairs = r * (r - 1) / 2;
  JordanAlgebra A;
  A.name = name;
  A.field = Field::R;
  A.r = r;
  A.d = dk;
  A.n = r + npairs * dk;
  A.euclidean = !K.split;

  auto pair_index = [&](int i, int j) {  // i < j
    // pairs ordered (0,1),(0,2),...,(0,r-1),(1,2),...
    return i * r - i * (i + 1) / 2 + (j - i - 1);
  };
  auto diag_idx = [&](int i) { return i; };
  auto off_idx = [&](int i, int j, int u) { return r + pair_index(i, j) * dk + u; };

  for (int i = 0; i < r; ++i) {
    std::ostringstream os;
    os << "E" << i + 1 << i + 1;
    A.labels.push_back(os.str());
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (int u = 0; u < dk; ++u) {
        std::ostringstream os;
        os << "X" << i + 1 << j + 1 << "_" << u;
        A.labels.push_back(os.str());
      }

  // Element as entries[i][j][u] (rational coordinates in K).
  using Entry = std::vector<Rational>;
  using HMat = std::vector<std::vector<Entry>>;
  auto zero_mat = [&]() {
    return HMat(r, std::vector<Entry>(r, Entry(dk)));
  };
  auto basis_mat = [&](int idx) {
    HMat m = zero_mat();
    if (idx < r) {
      m[idx][idx][0] = 1;
    } else {
      int rest = idx - r;
      int pi = rest / dk, u = rest % dk;
      int i = 0, j = 0;
      for (i = 0; i < r; ++i) {
        int count = r - i - 1;
        if (pi < count) {
          j = i + 1 + pi;
          break;
        }
        pi -= count;
      }
      m[i][j][u] = 1;
      m[j][i][u] = K.conj_sign[u];
    }
    return m;
  };
  auto matmul = [&](const HMat& x, const HMat& y) {
    HMat z = zero_mat();
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k)
          for (int u = 0; u < dk; ++u) {
            if (x[i][k][u] == 0) continue;
            for (int v = 0; v < dk; ++v) {
              if (y[k][j][v] == 0) continue;
              auto [w, sg] = K.mul[u][v];
              z[i][j][w] += Rational(sg) * x[i][k][u] * y[k][j][v];
            }
          }
    return z;
  };
  auto coords_of = [&](const HMat& m) {
    Vec c(A.n);
    for (int i = 0; i < r; ++i) {
      c[diag_idx(i)] = Scalar(m[i][i][0]);
      for (int u = 1; u < dk; ++u)
        if (m[i][i][u] != 0)
          throw JordanError(name + ": product left the hermitian subspace (diag)");
    }
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j)
        for (int u = 0; u < dk; ++u) {
          c[off_idx(i, j, u)] = Scalar(m[i][j][u]);
          if (m[j][i][u] != Rational(K.conj_sign[u]) * m[i][j][u])
            throw JordanError(name + ": product left the hermitian subspace (off)");
        }
    return c;
  };

  A.product.assign(A.n, std::vector<SparseVec>(A.n));
  std::vector<HMat> mats(A.n);
  for (int a = 0; a < A.n; ++a) mats[a] = basis_mat(a);
  for (int a = 0; a < A.n; ++a)
    for (int b = a; b < A.n; ++b) {
      HMat xy = matmul(mats[a], mats[b]);
      HMat yx = matmul(mats[b], mats[a]);
      HMat sum = zero_mat();
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          for (int u = 0; u < dk; ++u)
            sum[i][j][u] = (xy[i][j][u] + yx[i][j][u]) / 2;
      SparseVec sv = to_sparse(coords_of(sum));
      A.product[a][b] = sv;
      A.product[b][a] = std::move(sv);
    }

  A.unit = Vec(A.n);
  for (int i = 0; i < r; ++i) A.unit[i] = Scalar(1);
  A.cartan0 = Mat::identity(A.n);
  if (!gamma_signs.empty()) {
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j)
        for (int u = 0; u < dk; ++u)
          A.cartan0.at(off_idx(i, j, u), off_idx(i, j, u)) = Scalar(gamma_signs[u]);
  }
  for (int i = 0; i < r; ++i) A.frame.push_back(unit_vec(A.n, i));
  A.finalize();
  return A;
}

}  // namespace

JordanAlgebra make_sym(int r) {
  if (r < 2) throw JordanError("Sym(r,R) needs r >= 2");
  std::ostringstream os;
  os << "Sym" << r << "R";
  return make_hermitian(r, comp_algebra(1, false), os.str(), {});
}

JordanAlgebra make_herm_complex(int r) {
  if (r < 2) throw JordanError("Herm(r,C) needs r >= 2");
  std::ostringstream os;
  os << "Herm" << r << "C";
  return make_hermitian(r, comp_algebra(2, false), os.str(), {});
}

JordanAlgebra make_herm_quat(int r) {
  if (r < 2) throw JordanError("Herm(r,H) needs r >= 2");
  std::ostringstream os;
  os << "Herm" << r << "H";
  return make_hermitian(r, comp_algebra(4, false), os.str(), {});
}

JordanAlgebra make_herm_oct(bool split) {
  CompAlgebra K = comp_algebra(8, split);
  if (!split) return make_hermitian(3, K, "Herm3O", {});
  // Cartan involution = entrywise gamma: fix the quaternion half, flip the rest.
  std::vector<int> gamma(8, 1);
  for (int u = 4; u < 8; ++u) gamma[u] = -1;
  return make_hermitian(3, K, "Herm3Os", gamma);
}

JordanAlgebra make_full_matrix(int r) {
  if (r < 2) throw JordanError("M(r,R) needs r >= 2");
  JordanAlgebra A;
  std::ostringstream os;
  os << "M" << r << "R";
  A.name = os.str();
  A.field = Field::R;
  A.r = r;
  A.d = 2;
  A.n = r * r;
  A.euclidean = false;
  auto idx = [&](int i, int j) { return i * r + j; };
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      std::ostringstream lab;
      lab << "E" << i + 1 << j + 1;
      A.labels.push_back(lab.str());
    }
  A.product.assign(A.n, std::vector<SparseVec>(A.n));
  const Scalar half(Rational(1, 2));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l) {
          // E_ij ∘ E_kl = (δ_jk E_il + δ_li E_kj) / 2
          Vec v(A.n);
          if (j == k) v[idx(i, l)] += half;
          if (l == i) v[idx(k, j)] += half;
          A.product[idx(i, j)][idx(k, l)] = to_sparse(v);
        }
  A.unit = Vec(A.n);
  for (int i = 0; i < r; ++i) A.unit[idx(i, i)] = Scalar(1);
  A.cartan0 = Mat(A.n, A.n);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) A.cartan0.at(idx(j, i), idx(i, j)) = Scalar(1);
  for (int i = 0; i < r; ++i) A.frame.push_back(unit_vec(A.n, idx(i, i)));
  A.finalize();
  return A;
}

JordanAlgebra make_skew(int r) {
  if (r < 2) throw JordanError("Skew(2r,R) needs r >= 2");
  int m = 2 * r;
  JordanAlgebra A;
  std::ostringstream os;
  os << "Skew" << m << "R";
  A.name = os.str();
  A.field = Field::R;
  A.r = r;
  A.d = 4;
  A.n = m * (m - 1) / 2;
  A.euclidean = false;

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) pairs.push_back({i, j});
  auto pidx = [&](int i, int j) {  // i < j
    return i * m - i * (i + 1) / 2 + (j - i - 1);
  };
  for (auto [i, j] : pairs) {
    std::ostringstream lab;
    lab << "A" << i + 1 << j + 1;
    A.labels.push_back(lab.str());
  }

  using MM = std::vector<std::vector<Rational>>;
  auto zero = [&]() { return MM(m, std::vector<Rational>(m)); };
  MM J = zero();
  for (int b = 0; b < r; ++b) {
    J[2 * b][2 * b + 1] = 1;
    J[2 * b + 1][2 * b] = -1;
  }
  auto from_idx = [&](int a) {
    MM x = zero();
    auto [i, j] = pairs[a];
    x[i][j] = 1;
    x[j][i] = -1;
    return x;
  };
  auto mm_mul = [&](const MM& x, const MM& y) {
    MM z = zero();
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k) {
        if (x[i][k] == 0) continue;
        for (int j = 0; j < m; ++j)
          if (y[k][j] != 0) z[i][j] += x[i][k] * y[k][j];
      }
    return z;
  };
  auto coords_of = [&](const MM& x) {
    Vec c(A.n);
    for (auto [i, j] : pairs) {
      c[pidx(i, j)] = Scalar(x[i][j]);
      if (x[j][i] != -x[i][j] || x[i][i] != 0)
        throw JordanError("Skew: product left the skew subspace");
    }
    return c;
  };

  A.product.assign(A.n, std::vector<SparseVec>(A.n));
  for (int a = 0; a < A.n; ++a) {
    MM xa = from_idx(a);
    MM xaJ = mm_mul(xa, J);
    for (int b = a; b < A.n; ++b) {
      MM xb = from_idx(b);
      // x∘y = (x J y + y J x)/2
      MM p1 = mm_mul(xaJ, xb);
      MM p2 = mm_mul(mm_mul(xb, J), xa);
      MM sum = zero();
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) sum[i][j] = (p1[i][j] + p2[i][j]) / 2;
      SparseVec sv = to_sparse(coords_of(sum));
      A.product[a][b] = sv;
      A.product[b][a] = std::move(sv);
    }
  }

  // unit = J^{-1} = -J
  {
    MM e = zero();
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) e[i][j] = -J[i][j];
    A.unit = coords_of(e);
  }
  // theta(x) = -J x J
  A.cartan0 = Mat(A.n, A.n);
  for (int a = 0; a < A.n; ++a) {
    MM img = mm_mul(mm_mul(J, from_idx(a)), J);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) img[i][j] = -img[i][j];
    Vec c = coords_of(img);
    for (int k = 0; k < A.n; ++k) A.cartan0.at(k, a) = c[k];
  }
  for (int b = 0; b < r; ++b) {
    Vec c(A.n);
    c[pidx(2 * b, 2 * b + 1)] = Scalar(-1);
    A.frame.push_back(c);
  }
  A.finalize();
  return A;
}

JordanAlgebra make_spin_real(int p, int q) {
  if (p < 1 || q < 1 || p + q < 3)
    throw JordanError("SpinR(p,q) needs p,q >= 1 and p+q >= 3");
  int nn = p + q;  // dim = 1 + (p+q-1)
  JordanAlgebra A;
  std::ostringstream os;
  os << "SpinR(" << p << "," << q << ")";
  A.name = os.str();
  A.field = Field::R;
  A.r = 2;
  A.d = nn - 2;
  A.n = nn;
  A.euclidean = (p == 1);
  A.has_minrep = !(p >= 2 && q >= 2 && (p + q) % 2 == 1);
  A.spin_p = p;
  A.spin_q = q;
  A.labels.push_back("e0");
  for (int k = 1; k < nn; ++k) {
    std::ostringstream lab;
    lab << "w" << k;
    A.labels.push_back(lab.str());
  }
  // Form on W: +1 on the first q vectors, -1 on the last p-1.
  std::vector<int> sig(nn, 0);
  for (int k = 1; k < nn; ++k) sig[k] = (k <= q) ? 1 : -1;
  A.product.assign(nn, std::vector<SparseVec>(nn));
  for (int a = 0; a < nn; ++a)
    for (int b = 0; b < nn; ++b) {
      Vec v(nn);
      if (a == 0 && b == 0) v[0] = Scalar(1);
      else if (a == 0) v[b] = Scalar(1);
      else if (b == 0) v[a] = Scalar(1);
      else if (a == b) v[0] = Scalar(sig[a]);
      A.product[a][b] = to_sparse(v);
    }
  A.unit = unit_vec(nn, 0);
  A.cartan0 = Mat(nn, nn);
  A.cartan0.at(0, 0) = Scalar(1);
  for (int k = 1; k < nn; ++k) A.cartan0.at(k, k) = Scalar(sig[k]);
  const Scalar half(Rational(1, 2));
  Vec c1(nn), c2(nn);
  c1[0] = half; c1[1] = half;
  c2[0] = half; c2[1] = -half;
  A.frame = {c1, c2};
  A.finalize();
  return A;
}

namespace {
// Complex form: same rational structure constants, coordinates in Q(i),
// theta = coordinate conjugation composed with the real form's theta.
JordanAlgebra complexify_model(JordanAlgebra base, const std::string& name) {
  base.name = name;
  base.field = Field::C;
  base.euclidean = false;
  base.has_minrep = true;
  base.spin_p = base.spin_q = 0;
  base.finalize();
  return base;
}
}  // namespace

JordanAlgebra make_sym_cx(int r) {
  std::ostringstream os;
  os << "Sym" << r << "C";
  return complexify_model(make_sym(r), os.str());
}

JordanAlgebra make_full_matrix_cx(int r) {
  std::ostringstream os;
  os << "M" << r << "C";
  return complexify_model(make_full_matrix(r), os.str());
}

JordanAlgebra make_skew_cx(int r) {
  std::ostringstream os;
  os << "Skew" << 2 * r << "C";
  return complexify_model(make_skew(r), os.str());
}

JordanAlgebra make_spin_cx(int nn) {
  if (nn < 3) throw JordanError("SpinC(n) needs n >= 3");
  std::ostringstream os;
  os << "SpinC(" << nn << ")";
  return complexify_model(make_spin_real(1, nn - 1), os.str());
}

JordanAlgebra make_herm_oct_cx() {
  return complexify_model(make_herm_oct(true), "Herm3OC");
}

JordanAlgebra make_model(const std::string& id) {
  auto starts = [&](const std::string& pre) { return id.rfind(pre, 0) == 0; };
  auto num_between = [&](size_t from, size_t to) {
    return std::stoi(id.substr(from, to - from));
  };
  try {
    if (id == "Herm3O") return make_herm_oct(false);
    if (id == "Herm3Os") return make_herm_oct(true);
    if (id == "Herm3OC") return make_herm_oct_cx();
    if (starts("SpinR(") && id.back() == ')') {
      size_t comma = id.find(',');
      if (comma == std::string::npos) throw JordanError("bad spin id");
      int p = num_between(6, comma);
      int q = num_between(comma + 1, id.size() - 1);
      return make_spin_real(p, q);
    }
    if (starts("SpinC(") && id.back() == ')')
      return make_spin_cx(num_between(6, id.size() - 1));
    if (starts("Sym") && id.back() == 'R') return make_sym(num_between(3, id.size() - 1));
    if (starts("Sym") && id.back() == 'C') return make_sym_cx(num_between(3, id.size() - 1));
    if (starts("Herm") && id.back() == 'C')
      return make_herm_complex(num_between(4, id.size() - 1));
    if (starts("Herm") && id.back() == 'H')
      return make_herm_quat(num_between(4, id.size() - 1));
    if (starts("M") && id.back() == 'R') return make_full_matrix(num_between(1, id.size() - 1));
    if (starts("M") && id.back() == 'C')
      return make_full_matrix_cx(num_between(1, id.size() - 1));
    if (starts("Skew") && id.back() == 'R') {
      int m = num_between(4, id.size() - 1);
      if (m % 2) throw JordanError("Skew size must be even");
      return make_skew(m / 2);
    }
    if (starts("Skew") && id.back() == 'C') {
      int m = num_between(4, id.size() - 1);
      if (m % 2) throw JordanError("Skew size must be even");
      return make_skew_cx(m / 2);
    }
  } catch (const std::invalid_argument&) {
    throw JordanError("unknown model id: '" + id + "'");
  } catch (const std::out_of_range&) {
    throw JordanError("unknown model id: '" + id + "'");
  }
  throw JordanError("unknown model id: '" + id + "'");
}

const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids = {
      // Euclidean
      "Sym3R", "Herm3C", "Herm3H", "SpinR(1,3)", "Herm3O",
      // non-Euclidean real
      "M3R", "Skew6R", "SpinR(5,3)", "Herm3Os",
      // complex
      "Sym3C", "M3C", "Skew6C", "SpinC(4)", "Herm3OC"};
  return ids;
}

}  // namespace jconf
