#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace jconf {

using Rational = mpq_class;

// Thrown on illegal field operations: division by zero, mixing two different
// quadratic extensions, or using a non-real value where a real one is required.
struct ScalarError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

// Element of the tower Q ⊂ Q(i) ⊂ Q(i,√s), written on the basis
// {1, i, √s, i√s} with rational coordinates (a, b, c, d).
//
// s is 0 (no radical in play) or a squarefree integer >= 2. A value whose
// radical coordinates vanish is normalized back to s = 0, so towers only
// clash when both operands genuinely involve different radicals (an error).
class Scalar {
 public:
  Scalar() : s_(0) {}
  Scalar(long v) : a_(v), s_(0) {}  // NOLINT: implicit by design
  Scalar(const Rational& v) : a_(v), s_(0) { a_.canonicalize(); }  // NOLINT
  Scalar(Rational a, Rational b, Rational c, Rational d, long s);

  static Scalar i() { return Scalar(0, 1, 0, 0, 0); }
  // sqrt(q) for rational q: i handles q < 0, square factors are pulled out.
  static Scalar sqrt_of(const Rational& q);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }
  long s() const { return s_; }

  bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 0; }
  bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }
  bool is_real() const { return b_ == 0 && d_ == 0; }

  // Value as a plain rational; throws unless is_rational().
  const Rational& rational() const;

  Scalar operator-() const { return Scalar(-a_, -b_, -c_, -d_, s_); }
  Scalar conj() const { return Scalar(a_, -b_, c_, -d_, s_); }  // i -> -i
  Scalar re() const { return Scalar(a_, 0, c_, 0, s_); }
  Scalar im() const { return Scalar(b_, 0, d_, 0, s_); }
  Scalar normsq() const { return (*this * conj()).re(); }
  Scalar inv() const;

  // Sign of a real value (-1, 0, +1); throws if not is_real().
  int sign() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_ &&
           x.s_ == y.s_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  std::string str() const;
  static Scalar parse(const std::string& text);

 private:
  void normalize();
  static long merge_towers(long s1, long s2);

  Rational a_, b_, c_, d_;
  long s_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& x);

// Squarefree factorization m = sign * f^2 * s with s squarefree;
// returns {f, s} as positive integers (m != 0). Certified by trial division
// plus a perfect-square test; throws if the cofactor is too large to certify.
struct SquarefreeSplit {
  mpz_class outer;       // f
  mpz_class squarefree;  // s
};
SquarefreeSplit squarefree_split(const mpz_class& m);

}  // namespace jconf
