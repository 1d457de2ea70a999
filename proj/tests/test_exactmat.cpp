#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rotorlab/exact.hpp"

#include <cmath>
#include <random>

using namespace rotorlab::exact;

namespace {

IntMat mat(long r, long c, std::initializer_list<long> v) {
  IntMat m(r, c);
  auto it = v.begin();
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < c; ++j) m.at(i, j) = Int(*it++);
  return m;
}

GaussMat gm(long n, std::initializer_list<Gauss> v) {
  GaussMat m(n, n);
  auto it = v.begin();
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) m.at(i, j) = *it++;
  return m;
}

Gauss g(long re, long im = 0) { return Gauss(Rat(re), Rat(im)); }

// Brute-force eigenvalue sign count: embed the Hermitian Q(i) matrix as a
// real symmetric 2n x 2n matrix (eigenvalues doubled) and run Jacobi sweeps.
int float_signature(const GaussMat& m) {
  long n = m.rows;
  long N = 2 * n;
  std::vector<double> a(N * N, 0.0);
  auto A = [&](long i, long j) -> double& { return a[i * N + j]; };
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      double re = m.at(i, j).re.get_d(), im = m.at(i, j).im.get_d();
      A(i, j) = re;
      A(i + n, j + n) = re;
      A(i, j + n) = -im;
      A(i + n, j) = im;
    }
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (long i = 0; i < N; ++i)
      for (long j = i + 1; j < N; ++j) off += A(i, j) * A(i, j);
    if (off < 1e-24) break;
    for (long p = 0; p < N; ++p)
      for (long q = p + 1; q < N; ++q) {
        if (std::fabs(A(p, q)) < 1e-18) continue;
        double theta = (A(q, q) - A(p, p)) / (2 * A(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (long k = 0; k < N; ++k) {
          double akp = A(k, p), akq = A(k, q);
          A(k, p) = c * akp - s * akq;
          A(k, q) = s * akp + c * akq;
        }
        for (long k = 0; k < N; ++k) {
          double apk = A(p, k), aqk = A(q, k);
          A(p, k) = c * apk - s * aqk;
          A(q, k) = s * apk + c * aqk;
        }
      }
  }
  int sig = 0;
  for (long i = 0; i < N; ++i) {
    if (A(i, i) > 1e-9) sig++;
    else if (A(i, i) < -1e-9) sig--;
  }
  REQUIRE(sig % 2 == 0);
  return sig / 2;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  auto id2 = smith_normal_form(mat(2, 2, {1, 0, 0, 1}));
  CHECK(id2.factors.empty());
  CHECK(id2.free_rank == 0);

  auto d23 = smith_normal_form(mat(2, 2, {2, 0, 0, 3}));
  REQUIRE(d23.factors.size() == 1);
  CHECK(d23.factors[0] == 6);
  CHECK(d23.free_rank == 0);

  auto z2 = smith_normal_form(mat(2, 2, {0, 0, 0, 0}));
  CHECK(z2.factors.empty());
  CHECK(z2.free_rank == 2);
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    long n = 1 + static_cast<long>(rng() % 5);
    IntMat m(n, n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) m.at(i, j) = Int(static_cast<long>(rng() % 13) - 6);
    auto snf = smith_normal_form(m);
    for (size_t k = 0; k + 1 < snf.factors.size(); ++k)
      CHECK(snf.factors[k + 1] % snf.factors[k] == 0);
    Int d = det(m);
    if (d != 0) {
      CHECK(snf.free_rank == 0);
      CHECK(abs(d) == snf.order());
    } else {
      CHECK(snf.free_rank > 0);
    }
  }
}

TEST_CASE("char poly examples") {
  auto p = char_poly(mat(2, 2, {1, 0, 0, 1}));  // (1-l)^2 = 1 - 2l + l^2
  CHECK(p == std::vector<Int>{Int(1), Int(-2), Int(1)});

  auto q = char_poly(mat(2, 2, {2, 0, 0, 3}));  // (2-l)(3-l) = 6 - 5l + l^2
  CHECK(q == std::vector<Int>{Int(6), Int(-5), Int(1)});

  auto r = char_poly(mat(2, 2, {0, 1, 1, 0}));  // l^2 - 1
  CHECK(r == std::vector<Int>{Int(-1), Int(0), Int(1)});
}

TEST_CASE("char poly at zero equals det; leading coeff (-1)^n") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    long n = 1 + static_cast<long>(rng() % 5);
    IntMat m(n, n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) m.at(i, j) = Int(static_cast<long>(rng() % 9) - 4);
    auto p = char_poly(m);
    CHECK(p[0] == det(m));
    CHECK(p[n] == ((n % 2) ? Int(-1) : Int(1)));
  }
}

TEST_CASE("hermitian signature examples") {
  CHECK(hermitian_signature(gm(2, {g(2), g(0), g(0), g(-3)})) == 0);
  CHECK(hermitian_signature(gm(2, {g(0), g(0, 1), g(0, -1), g(0)})) == 0);
  CHECK(hermitian_signature(gm(3, {g(5), g(0), g(0), g(0), g(1), g(0), g(0), g(0), g(0)})) == 2);
  // hyperbolic pair with off-diagonal only
  CHECK(hermitian_signature(gm(2, {g(0), g(7), g(7), g(0)})) == 0);
  CHECK_THROWS_AS(hermitian_signature(gm(2, {g(0), g(1), g(2), g(0)})), NotHermitian);
}

TEST_CASE("hermitian signature vs float eigensigns and congruence invariance") {
  std::mt19937_64 rng(4242);
  int tested = 0;
  for (int trial = 0; trial < 200 && tested < 80; ++trial) {
    long n = 1 + static_cast<long>(rng() % 6);
    GaussMat m(n, n);
    for (long i = 0; i < n; ++i) {
      m.at(i, i) = g(static_cast<long>(rng() % 9) - 4);
      for (long j = i + 1; j < n; ++j) {
        Gauss v = g(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 7) - 3);
        m.at(i, j) = v;
        m.at(j, i) = v.conj();
      }
    }
    int exact_sig = hermitian_signature(m);
    int fsig = float_signature(m);
    // The float check is only reliable when no eigenvalue is near zero;
    // compare rank via |signature| parity instead when they disagree by the
    // kernel dimension. We keep only clean agreements as the oracle.
    auto cp = char_poly(m);
    bool singular = cp[0].is_zero();
    if (!singular) {
      CHECK(exact_sig == fsig);
      ++tested;
    }

    // signature(-m) = -signature(m)
    GaussMat neg(n, n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) neg.at(i, j) = -m.at(i, j);
    CHECK(hermitian_signature(neg) == -exact_sig);

    // congruence invariance: P m P* for random invertible P
    GaussMat p(n, n);
    for (long i = 0; i < n; ++i) p.at(i, i) = g(1);
    for (int moves = 0; moves < 6; ++moves) {
      long i = static_cast<long>(rng() % n), j = static_cast<long>(rng() % n);
      if (i == j) continue;
      Gauss f = g(static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 3) - 1);
      for (long k = 0; k < n; ++k) p.at(i, k) = p.at(i, k) + f * p.at(j, k);
    }
    GaussMat pm(n, n), pmp(n, n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        Gauss s;
        for (long k = 0; k < n; ++k) s += p.at(i, k) * m.at(k, j);
        pm.at(i, j) = s;
      }
    GaussMat pc = p.conj_transpose();
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        Gauss s;
        for (long k = 0; k < n; ++k) s += pm.at(i, k) * pc.at(k, j);
        pmp.at(i, j) = s;
      }
    CHECK(hermitian_signature(pmp) == exact_sig);
  }
  CHECK(tested >= 40);
}

TEST_CASE("unit circle points") {
  Gauss i1 = unit_circle_point(CircleParam::parse("1"));
  CHECK(i1 == g(0, 1));
  Gauss h = unit_circle_point(CircleParam::parse("1/2"));
  CHECK(h == Gauss(Rat(3, 5), Rat(4, 5)));
  Gauss inf = unit_circle_point(CircleParam::parse("inf"));
  CHECK(inf == g(-1));
  // |omega|^2 = 1 exactly on random rationals
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    Rat t(static_cast<long>(rng() % 2001) - 1000, 1 + static_cast<long>(rng() % 97));
    t.canonicalize();
    CircleParam p;
    p.t = t;
    CHECK(unit_circle_point(p).norm() == 1);
  }
}

TEST_CASE("poly_det examples") {
  Laurent t = Laurent::monomial(Int(1), 1);
  Laurent tinv = Laurent::monomial(Int(1), -1);
  Laurent one = Laurent::constant(Int(1));

  std::vector<std::vector<Laurent>> m1{{t - tinv}};
  CHECK(poly_det(m1) == t - tinv);

  std::vector<std::vector<Laurent>> m2{{t, Laurent()}, {Laurent(), tinv}};
  CHECK(poly_det(m2) == one);

  std::vector<std::vector<Laurent>> m3{{t, one}, {one, t}};
  CHECK(poly_det(m3) == t * t - one);
}

TEST_CASE("rewrite in z") {
  // x^2 + x^{-2} + 2 is not expressible? z^2 = x^2 - 2 + x^-2, so
  // x^2 + x^-2 + 2 = z^2 + 4.
  Laurent p;
  p.set(2, Int(1));
  p.set(-2, Int(1));
  p.set(0, Int(2));
  Laurent out;
  REQUIRE(rewrite_in_z(p, out));
  CHECK(out.coeff(2) == 1);
  CHECK(out.coeff(0) == 4);

  Laurent bad = Laurent::monomial(Int(1), 1);  // plain x is not in Z[z]
  Laurent o2;
  CHECK_FALSE(rewrite_in_z(bad, o2));
}

TEST_CASE("gauss char poly and arithmetic") {
  GaussMat m = gm(2, {g(0), g(0, 1), g(0, -1), g(0)});
  auto p = char_poly(m);  // det(M - lE) = l^2 - 1
  REQUIRE(p.size() == 3);
  CHECK(p[0] == g(-1));
  CHECK(p[1] == g(0));
  CHECK(p[2] == g(1));
  CHECK((g(1, 2) * g(3, -1)) == g(5, 5));
  CHECK((g(1, 1) / g(1, 1)) == g(1));
}
