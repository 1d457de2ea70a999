// Exact linear and polynomial algebra over Z, Q and Q(i).
//
// Everything in this header is exact: big integers, big rationals and
// Gaussian rationals (p + q*i with p, q rational). No floating point is
// used anywhere; signatures, Smith normal forms and characteristic
// polynomials are discrete invariants and tolerate no rounding.

#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rotorlab::exact {

using Int = mpz_class;
using Rat = mpq_class;

struct NotHermitian : std::runtime_error {
  NotHermitian() : std::runtime_error("matrix is not Hermitian") {}
};

// ---------------------------------------------------------------------------
// Gaussian rationals

struct Gauss {
  Rat re, im;

  Gauss() : re(0), im(0) {}
  Gauss(Rat r) : re(std::move(r)), im(0) {}
  Gauss(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  Gauss(long r) : re(r), im(0) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  Gauss conj() const { return Gauss(re, -im); }
  Rat norm() const { return re * re + im * im; }  // |z|^2

  friend Gauss operator+(const Gauss& a, const Gauss& b) {
    return Gauss(a.re + b.re, a.im + b.im);
  }
  friend Gauss operator-(const Gauss& a, const Gauss& b) {
    return Gauss(a.re - b.re, a.im - b.im);
  }
  friend Gauss operator-(const Gauss& a) { return Gauss(-a.re, -a.im); }
  friend Gauss operator*(const Gauss& a, const Gauss& b) {
    return Gauss(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend Gauss operator/(const Gauss& a, const Gauss& b) {
    Rat n = b.norm();
    if (n == 0) throw std::domain_error("Gauss division by zero");
    Gauss num = a * b.conj();
    return Gauss(num.re / n, num.im / n);
  }
  friend bool operator==(const Gauss& a, const Gauss& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }

  Gauss& operator+=(const Gauss& o) { *this = *this + o; return *this; }
  Gauss& operator-=(const Gauss& o) { *this = *this - o; return *this; }
  Gauss& operator*=(const Gauss& o) { *this = *this * o; return *this; }

  std::string str() const;
};

// Parameter for points on the unit circle: a rational t, or the reserved
// token "inf" which maps to omega = -1.
struct CircleParam {
  bool inf = false;
  Rat t;

  static CircleParam parse(const std::string& s);
  std::string str() const;
  friend bool operator==(const CircleParam& a, const CircleParam& b) {
    return a.inf == b.inf && (a.inf || a.t == b.t);
  }
};

// omega(t) = ((1-t^2) + 2t*i) / (1+t^2); |omega| = 1 exactly. t="inf" -> -1.
Gauss unit_circle_point(const CircleParam& p);

// ---------------------------------------------------------------------------
// Dense matrices

struct IntMat {
  long rows = 0, cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Int(0)) {}

  Int& at(long i, long j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(long i, long j) const { return a[static_cast<size_t>(i) * cols + j]; }

  bool square() const { return rows == cols; }
  IntMat transpose() const;
  friend bool operator==(const IntMat& x, const IntMat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

struct GaussMat {
  long rows = 0, cols = 0;
  std::vector<Gauss> a;

  GaussMat() = default;
  GaussMat(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Gauss& at(long i, long j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Gauss& at(long i, long j) const { return a[static_cast<size_t>(i) * cols + j]; }

  bool square() const { return rows == cols; }
  bool is_hermitian() const;
  GaussMat conj_transpose() const;
  friend bool operator==(const GaussMat& x, const GaussMat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

GaussMat to_gauss(const IntMat& m);

// Exact determinants. Integer route is fraction-free (Bareiss).
Int det(const IntMat& m);
Gauss det(const GaussMat& m);

// ---------------------------------------------------------------------------
// Smith normal form

struct AbelianGroup {
  std::vector<Int> factors;  // invariant factors, each >= 2, d_i | d_{i+1}
  long free_rank = 0;

  bool trivial() const { return factors.empty() && free_rank == 0; }
  Int order() const;  // product of factors; caller checks free_rank == 0
  AbelianGroup localized(const Int& p) const;  // tensor with Z_p (p prime)
  std::string str() const;
  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.factors == b.factors && a.free_rank == b.free_rank;
  }
};

// Cokernel of m acting on column vectors: Z^rows / im(m).
// Pivot selection by minimal absolute value to limit coefficient growth.
AbelianGroup smith_normal_form(const IntMat& m);

// ---------------------------------------------------------------------------
// Characteristic polynomials, det(M - lambda*E) convention.
// Coefficient vector c with p(lambda) = sum c[k] lambda^k, c[n] = (-1)^n.

std::vector<Int> char_poly(const IntMat& m);
std::vector<Gauss> char_poly(const GaussMat& m);

// ---------------------------------------------------------------------------
// Hermitian signature by exact recursive congruence reduction.

int hermitian_signature(const GaussMat& m);

// ---------------------------------------------------------------------------
// Laurent polynomials with integer coefficients, one variable.

struct Laurent {
  // exponent -> coefficient; no zero coefficients stored.
  std::map<long, Int> c;

  Laurent() = default;
  static Laurent constant(Int v);
  static Laurent monomial(Int coeff, long exp);

  bool is_zero() const { return c.empty(); }
  long min_exp() const;  // requires nonzero
  long max_exp() const;
  Int coeff(long e) const;
  void set(long e, Int v);

  friend Laurent operator+(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a);
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.c == b.c; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a.c == b.c); }

  Laurent shifted(long k) const;   // multiply by x^k
  Laurent reversed() const;        // x -> x^{-1}
  Laurent substitute_neg() const;  // x -> -x
  Rat eval(const Rat& x) const;    // requires x != 0 when min_exp < 0
  std::string str(const std::string& var = "x") const;
};

// Exact determinant of a square matrix of Laurent polynomials
// (evaluation at integer points + Lagrange interpolation).
Laurent poly_det(const std::vector<std::vector<Laurent>>& m);

// Rewrite a Laurent polynomial P(x) as a polynomial in z = x - x^{-1}.
// Returns false if P is not in the image (signals an upstream bug).
bool rewrite_in_z(const Laurent& p, Laurent& out);

// ---------------------------------------------------------------------------
// Small parsing/printing helpers shared by the CLI and file formats.

Rat parse_rat(const std::string& s);    // "p", "p/q", with sign
std::string rat_str(const Rat& q);

}  // namespace rotorlab::exact
