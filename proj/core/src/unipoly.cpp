#include "jconf/unipoly.hpp"

#include <algorithm>
#include <utility>

namespace jconf {

UniPoly unipoly_trim(UniPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

UniPoly unipoly_mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return unipoly_trim(std::move(out));
}

namespace {
std::pair<UniPoly, UniPoly> unipoly_divmod(UniPoly a, const UniPoly& b) {
  if (b.empty()) throw LinalgError("polynomial division by zero");
  a = unipoly_trim(std::move(a));
  if (a.size() < b.size()) return {{}, std::move(a)};
  UniPoly q(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  for (size_t k = a.size(); k-- >= b.size();) {
    Rational f = a[k] / lead;
    if (f == 0) continue;
    q[k - b.size() + 1] = f;
    for (size_t j = 0; j < b.size(); ++j) a[k - b.size() + 1 + j] -= f * b[j];
  }
  return {unipoly_trim(std::move(q)), unipoly_trim(std::move(a))};
}
}  // namespace

UniPoly unipoly_mod(UniPoly a, const UniPoly& b) {
  return unipoly_divmod(std::move(a), b).second;
}

UniPoly unipoly_monic(UniPoly p) {
  p = unipoly_trim(std::move(p));
  if (p.empty()) return p;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

UniPoly unipoly_gcd(UniPoly a, UniPoly b) {
  a = unipoly_trim(std::move(a));
  b = unipoly_trim(std::move(b));
  while (!b.empty()) {
    UniPoly r = unipoly_mod(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return unipoly_monic(std::move(a));
}

UniPoly unipoly_lcm(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly g = unipoly_gcd(a, b);
  return unipoly_monic(unipoly_divmod(unipoly_mul(a, b), g).first);
}

Rational unipoly_eval(const UniPoly& p, const Rational& x) {
  Rational acc(0);
  for (size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

UniPoly unipoly_deflate(const UniPoly& p, const Rational& root) {
  UniPoly q(p.size() >= 1 ? p.size() - 1 : 0, Rational(0));
  Rational carry(0);
  for (size_t k = p.size(); k-- > 1;) {
    carry = p[k] + carry * root;
    q[k - 1] = carry;
  }
  if (p.empty() || p[0] + carry * root != 0)
    throw LinalgError("deflation at a non-root");
  return unipoly_trim(std::move(q));
}

namespace {
// Divisors of |n| by trial division; a leftover factor beyond the bound is
// kept as a single (pseudo-prime) factor. Caps the divisor count.
std::vector<mpz_class> divisors_of(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, int>> factors;
  if (n > 1) {
    mpz_class p = 2;
    while (p * p <= n && p < 1000000) {
      if (n % p == 0) {
        int e = 0;
        while (n % p == 0) {
          n /= p;
          ++e;
        }
        factors.push_back({p, e});
      }
      p += (p == 2 ? 1 : 2);
    }
    if (n > 1) factors.push_back({n, 1});
  }
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factors) {
    size_t base = divs.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) {
        divs.push_back(divs[i] * pk);
        if (divs.size() > 4096) throw LinalgError("too many divisor candidates");
      }
    }
  }
  return divs;
}
}  // namespace

RootSplit unipoly_rational_roots(UniPoly p) {
  RootSplit out;
  p = unipoly_trim(std::move(p));
  if (p.empty()) throw LinalgError("root split of the zero polynomial");
  while (p.size() > 1 && p[0] == 0) {
    out.roots.push_back(Rational(0));
    p.erase(p.begin());
  }
  if (p.size() > 1) {
    // Integer model: clear denominators, then rational root theorem.
    mpz_class den = 1;
    for (const auto& c : p) den = lcm(den, c.get_den());
    std::vector<mpz_class> ic;
    for (const auto& c : p) ic.push_back(Rational(c * den).get_num());
    std::vector<mpz_class> nums = divisors_of(ic.front());
    std::vector<mpz_class> dens = divisors_of(ic.back());
    std::vector<Rational> candidates;
    for (const auto& a : nums)
      for (const auto& b : dens) {
        Rational r(a, b);
        r.canonicalize();
        candidates.push_back(r);
        candidates.push_back(-r);
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    for (const auto& r : candidates) {
      while (p.size() > 1 && unipoly_eval(p, r) == 0) {
        out.roots.push_back(r);
        p = unipoly_deflate(p, r);
      }
    }
  }
  out.cofactor = unipoly_monic(std::move(p));
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

std::string unipoly_str(const UniPoly& p) {
  if (p.empty()) return "0";
  std::string s;
  for (size_t k = p.size(); k-- > 0;) {
    if (p[k] == 0 && p.size() > 1) continue;
    Rational c = p[k];
    if (s.empty()) {
      if (c < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    bool unit = (c == 1) && k > 0;
    if (!unit) s += c.get_str();
    if (k > 0) {
      if (!unit) s += "*";
      s += "x";
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

UniPoly krylov_min_poly(const Mat& M, const Vec& v) {
  if (M.rows() != M.cols() || M.rows() != int(v.size()))
    throw LinalgError("krylov: shape mismatch");
  Mat K(0, M.rows());
  Vec cur = v;
  while (true) {
    Mat trial(K);
    trial.append_row(cur);
    if (rank(trial) == K.rows()) break;  // cur depends on previous iterates
    K = std::move(trial);
    cur = M.apply(cur);
  }
  // cur = sum_j c_j K_j gives min poly x^k - sum c_j x^j.
  int k = K.rows();
  if (k == 0) return {Rational(1)};
  auto c = solve(K.transpose(), cur);
  if (!c) throw LinalgError("krylov: dependency solve failed");
  UniPoly mp(k + 1, Rational(0));
  mp[k] = 1;
  for (int j = 0; j < k; ++j) mp[j] = -(*c)[j].rational();
  return mp;
}

UniPoly min_poly_candidate(const Mat& M, Rng& rng, int tries) {
  UniPoly acc{Rational(1)};
  for (int t = 0; t < tries; ++t) {
    Vec v(M.rows());
    for (auto& x : v) x = Scalar(rng.rat());
    acc = unipoly_lcm(acc, krylov_min_poly(M, v));
    if (int(acc.size()) == M.rows() + 1) break;  // cannot exceed degree n
  }
  return acc;
}

}  // namespace jconf
