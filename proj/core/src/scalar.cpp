#include "jconf/scalar.hpp"

#include <cctype>
#include <ostream>
#include <utility>
#include <vector>

namespace jconf {

std::string rational_to_string(const Rational& q) {
  return q.get_str();
}

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw ScalarError("bad rational literal: '" + s + "'");
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw ScalarError("zero denominator in rational literal: '" + s + "'");
  q.canonicalize();
  return q;
}

Scalar::Scalar(Rational a, Rational b, Rational c, Rational d, long s)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), s_(s) {
  a_.canonicalize();
  b_.canonicalize();
  c_.canonicalize();
  d_.canonicalize();
  normalize();
}

void Scalar::normalize() {
  if (c_ == 0 && d_ == 0) {
    s_ = 0;
    return;
  }
  if (s_ == 0)
    throw ScalarError("radical coordinates present with no extension set");
  if (s_ == 1) {  // sqrt(1) folds into the rational part
    a_ += c_;
    b_ += d_;
    c_ = 0;
    d_ = 0;
    s_ = 0;
  }
  if (s_ < 0)
    throw ScalarError("extension index must be a positive squarefree integer");
}

long Scalar::merge_towers(long s1, long s2) {
  if (s1 == 0) return s2;
  if (s2 == 0) return s1;
  if (s1 != s2)
    throw ScalarError("mixing incompatible extensions: sqrt(" +
                      std::to_string(s1) + ") vs sqrt(" + std::to_string(s2) + ")");
  return s1;
}

const Rational& Scalar::rational() const {
  if (!is_rational())
    throw ScalarError("value is not rational: " + str());
  return a_;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  s_ = merge_towers(s_, o.s_);
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  d_ += o.d_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  s_ = merge_towers(s_, o.s_);
  a_ -= o.a_;
  b_ -= o.b_;
  c_ -= o.c_;
  d_ -= o.d_;
  normalize();
  return *this;
}

namespace {
// Complex pair arithmetic in Q(i): p = (re, im).
using CPair = std::pair<Rational, Rational>;
CPair cmul(const CPair& x, const CPair& y) {
  return {x.first * y.first - x.second * y.second,
          x.first * y.second + x.second * y.first};
}
CPair cadd(const CPair& x, const CPair& y) {
  return {x.first + y.first, x.second + y.second};
}
CPair csub(const CPair& x, const CPair& y) {
  return {x.first - y.first, x.second - y.second};
}
CPair cscale(const CPair& x, const Rational& t) {
  return {x.first * t, x.second * t};
}
}  // namespace

Scalar& Scalar::operator*=(const Scalar& o) {
  long s = merge_towers(s_, o.s_);
  // (A + B sqrt(s)) (C + D sqrt(s)) = (AC + sBD) + (AD + BC) sqrt(s), A..D in Q(i).
  CPair A{a_, b_}, B{c_, d_}, C{o.a_, o.b_}, D{o.c_, o.d_};
  CPair rat = cadd(cmul(A, C), cscale(cmul(B, D), Rational(s)));
  CPair rad = cadd(cmul(A, D), cmul(B, C));
  a_ = std::move(rat.first);
  b_ = std::move(rat.second);
  c_ = std::move(rad.first);
  d_ = std::move(rad.second);
  s_ = s;
  normalize();
  return *this;
}

Scalar Scalar::inv() const {
  if (is_zero())
    throw ScalarError("division by zero");
  // Stage 1: kill the radical. z~ = A - B sqrt(s); z z~ = A^2 - s B^2 in Q(i).
  CPair A{a_, b_}, B{c_, d_};
  CPair w = csub(cmul(A, A), cscale(cmul(B, B), Rational(s_)));
  // Stage 2: kill i. 1/w = conj(w) / |w|^2 with |w|^2 in Q.
  Rational n2 = w.first * w.first + w.second * w.second;
  if (n2 == 0)
    throw ScalarError("internal: norm vanished on nonzero value");
  CPair winv{w.first / n2, -w.second / n2};
  CPair ra = cmul(A, winv);
  CPair rb = cmul(CPair{-B.first, -B.second}, winv);
  return Scalar(ra.first, ra.second, rb.first, rb.second, s_);
}

int Scalar::sign() const {
  if (!is_real())
    throw ScalarError("sign of a non-real value: " + str());
  if (c_ == 0) return sgn(a_);
  if (a_ == 0) return sgn(c_);
  if (sgn(a_) == sgn(c_)) return sgn(a_);
  // a and c*sqrt(s) compete; compare squares (never equal: sqrt(s) irrational).
  Rational aa = a_ * a_, cc = c_ * c_ * s_;
  return aa > cc ? sgn(a_) : sgn(c_);
}

SquarefreeSplit squarefree_split(const mpz_class& m) {
  if (m == 0) throw ScalarError("squarefree split of zero");
  mpz_class rest = abs(m);
  mpz_class outer = 1, core = 1;
  for (mpz_class p = 2; p * p <= rest && p < 100000; p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int k = 0; k + 1 < e; k += 2) outer *= p;
    if (e % 2 == 1) core *= p;
  }
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      mpz_class r;
      mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
      outer *= r;
    } else if (rest < mpz_class("10000000000")) {
      // No prime <= 1e5 divides rest and rest < 1e10, so any square factor
      // would need a prime > 1e5 squared > 1e10: rest is squarefree.
      core *= rest;
    } else {
      throw ScalarError("cannot certify squarefree part of " + m.get_str());
    }
  }
  return {outer, core};
}

Scalar Scalar::sqrt_of(const Rational& q) {
  if (q == 0) return Scalar();
  // sqrt(n/d) = sqrt(n d) / d ; negative radicand contributes a factor i.
  mpz_class nd = q.get_num() * q.get_den();
  bool neg = nd < 0;
  SquarefreeSplit sp = squarefree_split(nd);
  Rational coef(sp.outer, q.get_den());
  coef.canonicalize();
  long s = sp.squarefree.get_si();
  if (sp.squarefree == 1) {
    return neg ? Scalar(0, coef, 0, 0, 0) : Scalar(coef, 0, 0, 0, 0);
  }
  return neg ? Scalar(0, 0, 0, coef, s) : Scalar(0, 0, coef, 0, s);
}

namespace {
// One term of the printed form; suffix is "", "i", "√s" or "i*√s".
void append_term(std::string& out, const Rational& q, const std::string& suffix) {
  if (q == 0) return;
  Rational aq = abs(q);
  std::string mag;
  if (suffix.empty()) {
    mag = rational_to_string(aq);
  } else if (aq == 1) {
    mag = suffix;
  } else {
    mag = rational_to_string(aq) + "*" + suffix;
  }
  if (out.empty()) {
    out = (sgn(q) < 0 ? "-" : "") + mag;
  } else {
    out += (sgn(q) < 0 ? "-" : "+") + mag;
  }
}
}  // namespace

std::string Scalar::str() const {
  std::string out;
  const std::string rad = s_ ? "√" + std::to_string(s_) : "";
  append_term(out, a_, "");
  append_term(out, b_, "i");
  if (s_) {
    append_term(out, c_, rad);
    append_term(out, d_, "i*" + rad);
  }
  return out.empty() ? "0" : out;
}

namespace {
struct TermParts {
  Rational coef = 1;
  bool has_i = false;
  long s = 0;
};

TermParts parse_term(const std::string& term) {
  TermParts t;
  bool saw_factor = false;
  size_t pos = 0;
  while (pos < term.size()) {
    size_t next = term.find('*', pos);
    std::string f = term.substr(pos, next == std::string::npos ? next : next - pos);
    pos = next == std::string::npos ? term.size() : next + 1;
    if (f.empty()) throw ScalarError("empty factor in scalar literal");
    if (f == "i") {
      if (t.has_i) throw ScalarError("repeated i factor");
      t.has_i = true;
    } else if (f.rfind("√", 0) == 0) {
      if (t.s) throw ScalarError("repeated radical factor");
      std::string num = f.substr(std::string("√").size());
      if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
        throw ScalarError("bad radical factor: '" + f + "'");
      t.s = std::stol(num);
      if (t.s <= 1) throw ScalarError("radical index must be >= 2");
    } else {
      t.coef *= rational_from_string(f);
    }
    saw_factor = true;
  }
  if (!saw_factor) throw ScalarError("empty term in scalar literal");
  return t;
}
}  // namespace

Scalar Scalar::parse(const std::string& text) {
  std::string clean;
  clean.reserve(text.size());
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) clean += ch;
  if (clean.empty()) throw ScalarError("empty scalar literal");

  Scalar acc;
  size_t pos = 0;
  while (pos < clean.size()) {
    int sign = 1;
    if (clean[pos] == '+' || clean[pos] == '-') {
      sign = clean[pos] == '-' ? -1 : 1;
      ++pos;
    }
    size_t end = pos;
    while (end < clean.size() && clean[end] != '+' && clean[end] != '-') ++end;
    if (end == pos) throw ScalarError("dangling sign in scalar literal: '" + text + "'");
    TermParts t = parse_term(clean.substr(pos, end - pos));
    if (sign < 0) t.coef = -t.coef;
    Rational z(0);
    Scalar term = t.s ? (t.has_i ? Scalar(z, z, z, t.coef, t.s)
                                 : Scalar(z, z, t.coef, z, t.s))
                      : (t.has_i ? Scalar(z, t.coef, z, z, 0)
                                 : Scalar(t.coef, z, z, z, 0));
    acc += term;
    pos = end;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) {
  return os << x.str();
}

}  // namespace jconf
