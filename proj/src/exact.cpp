#include "rotorlab/exact.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace rotorlab::exact {

// ---------------------------------------------------------------------------
// Gauss / circle points

std::string Gauss::str() const {
  std::ostringstream os;
  if (im == 0) {
    os << re.get_str();
  } else if (re == 0) {
    os << im.get_str() << "i";
  } else {
    os << re.get_str();
    if (im > 0) os << "+";
    os << im.get_str() << "i";
  }
  return os.str();
}

CircleParam CircleParam::parse(const std::string& s) {
  CircleParam p;
  if (s == "inf") {
    p.inf = true;
    return p;
  }
  p.t = parse_rat(s);
  return p;
}

std::string CircleParam::str() const { return inf ? "inf" : rat_str(t); }

Gauss unit_circle_point(const CircleParam& p) {
  if (p.inf) return Gauss(Rat(-1), Rat(0));
  Rat t2 = p.t * p.t;
  Rat den = 1 + t2;
  return Gauss((1 - t2) / den, (2 * p.t) / den);
}

// ---------------------------------------------------------------------------
// Matrices

IntMat IntMat::transpose() const {
  IntMat t(cols, rows);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool GaussMat::is_hermitian() const {
  if (!square()) return false;
  for (long i = 0; i < rows; ++i)
    for (long j = i; j < cols; ++j)
      if (at(i, j) != at(j, i).conj()) return false;
  return true;
}

GaussMat GaussMat::conj_transpose() const {
  GaussMat t(cols, rows);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) t.at(j, i) = at(i, j).conj();
  return t;
}

GaussMat to_gauss(const IntMat& m) {
  GaussMat g(m.rows, m.cols);
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j) g.at(i, j) = Gauss(Rat(m.at(i, j)));
  return g;
}

Int det(const IntMat& m) {
  if (!m.square()) throw std::invalid_argument("det: matrix not square");
  long n = m.rows;
  if (n == 0) return Int(1);
  IntMat w = m;
  Int prev(1);
  int sign = 1;
  for (long k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      long p = -1;
      for (long i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) { p = i; break; }
      if (p < 0) return Int(0);
      for (long j = k; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j) {
        Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        // Bareiss: division is exact
        w.at(i, j) = t / prev;
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  Int d = w.at(n - 1, n - 1);
  return sign > 0 ? d : Int(-d);
}

Gauss det(const GaussMat& m) {
  if (!m.square()) throw std::invalid_argument("det: matrix not square");
  long n = m.rows;
  if (n == 0) return Gauss(Rat(1));
  GaussMat w = m;
  Gauss d(Rat(1));
  for (long k = 0; k < n; ++k) {
    long p = -1;
    for (long i = k; i < n; ++i)
      if (!w.at(i, k).is_zero()) { p = i; break; }
    if (p < 0) return Gauss();
    if (p != k) {
      for (long j = k; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      d = -d;
    }
    d = d * w.at(k, k);
    Gauss inv = Gauss(Rat(1)) / w.at(k, k);
    for (long i = k + 1; i < n; ++i) {
      if (w.at(i, k).is_zero()) continue;
      Gauss f = w.at(i, k) * inv;
      for (long j = k; j < n; ++j) w.at(i, j) = w.at(i, j) - f * w.at(k, j);
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Smith normal form

Int AbelianGroup::order() const {
  Int o(1);
  for (const auto& f : factors) o *= f;
  return o;
}

AbelianGroup AbelianGroup::localized(const Int& p) const {
  AbelianGroup g;
  for (const auto& f : factors) {
    // p-part survives tensoring with Z_p for prime p: gcd(f, p)
    Int d;
    mpz_gcd(d.get_mpz_t(), f.get_mpz_t(), p.get_mpz_t());
    if (d > 1) g.factors.push_back(d);
  }
  for (long i = 0; i < free_rank; ++i) g.factors.push_back(p);
  std::sort(g.factors.begin(), g.factors.end());
  return g;
}

std::string AbelianGroup::str() const {
  if (trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& f : factors) {
    if (!first) os << "+";
    os << "Z" << f.get_str();
    first = false;
  }
  for (long i = 0; i < free_rank; ++i) {
    if (!first) os << "+";
    os << "Z";
    first = false;
  }
  return os.str();
}

AbelianGroup smith_normal_form(const IntMat& m) {
  IntMat w = m;
  long n = std::min(w.rows, w.cols);
  long t = 0;  // current pivot index

  auto find_pivot = [&](long s, long& pi, long& pj) -> bool {
    bool found = false;
    Int best;
    for (long i = s; i < w.rows; ++i)
      for (long j = s; j < w.cols; ++j) {
        if (w.at(i, j) == 0) continue;
        Int v = abs(w.at(i, j));
        if (!found || v < best) {
          found = true;
          best = v;
          pi = i;
          pj = j;
        }
      }
    return found;
  };

  while (t < n) {
    long pi, pj;
    if (!find_pivot(t, pi, pj)) break;
    if (pi != t)
      for (long j = 0; j < w.cols; ++j) std::swap(w.at(t, j), w.at(pi, j));
    if (pj != t)
      for (long i = 0; i < w.rows; ++i) std::swap(w.at(i, t), w.at(i, pj));

    bool clean = true;
    for (long i = t + 1; i < w.rows; ++i) {
      if (w.at(i, t) == 0) continue;
      Int q = w.at(i, t) / w.at(t, t);  // truncated division is fine here
      if (q != 0)
        for (long j = t; j < w.cols; ++j) w.at(i, j) -= q * w.at(t, j);
      if (w.at(i, t) != 0) clean = false;
    }
    for (long j = t + 1; j < w.cols; ++j) {
      if (w.at(t, j) == 0) continue;
      Int q = w.at(t, j) / w.at(t, t);
      if (q != 0)
        for (long i = t; i < w.rows; ++i) w.at(i, j) -= q * w.at(i, t);
      if (w.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders exist; re-pick pivot

    // Divisibility repair: pivot must divide the rest of the block.
    bool fixed = true;
    for (long i = t + 1; i < w.rows && fixed; ++i)
      for (long j = t + 1; j < w.cols && fixed; ++j) {
        if (w.at(i, j) % w.at(t, t) != 0) {
          for (long jj = t; jj < w.cols; ++jj) w.at(t, jj) += w.at(i, jj);
          fixed = false;
        }
      }
    if (!fixed) continue;
    ++t;
  }

  AbelianGroup g;
  for (long k = 0; k < t; ++k) {
    Int d = abs(w.at(k, k));
    if (d > 1) g.factors.push_back(d);
  }
  std::sort(g.factors.begin(), g.factors.end());
  g.free_rank = w.rows - t;
  return g;
}

// ---------------------------------------------------------------------------
// Characteristic polynomials (evaluation + Lagrange interpolation)

namespace {

// Interpolate the unique degree-<=n polynomial through (xs[k], ys[k]).
std::vector<Rat> lagrange(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  size_t n = xs.size();
  std::vector<Rat> acc(n, Rat(0));  // running sum
  for (size_t k = 0; k < n; ++k) {
    // basis polynomial for node k, times ys[k]
    std::vector<Rat> num(1, Rat(1));
    Rat den(1);
    for (size_t j = 0; j < n; ++j) {
      if (j == k) continue;
      // num *= (x - xs[j])
      std::vector<Rat> nx(num.size() + 1, Rat(0));
      for (size_t d = 0; d < num.size(); ++d) {
        nx[d + 1] += num[d];
        nx[d] -= num[d] * xs[j];
      }
      num = std::move(nx);
      den *= xs[k] - xs[j];
    }
    Rat f = ys[k] / den;
    for (size_t d = 0; d < num.size(); ++d) acc[d] += num[d] * f;
  }
  return acc;
}

}  // namespace

std::vector<Int> char_poly(const IntMat& m) {
  if (!m.square()) throw std::invalid_argument("char_poly: not square");
  long n = m.rows;
  std::vector<Rat> xs, ys;
  for (long k = 0; k <= n; ++k) {
    IntMat w = m;
    for (long i = 0; i < n; ++i) w.at(i, i) -= k;
    xs.push_back(Rat(k));
    ys.push_back(Rat(det(w)));
  }
  std::vector<Rat> c = lagrange(xs, ys);
  std::vector<Int> out(n + 1, Int(0));
  for (long k = 0; k <= n; ++k) {
    Rat q = k < static_cast<long>(c.size()) ? c[k] : Rat(0);
    q.canonicalize();
    if (q.get_den() != 1) throw std::logic_error("char_poly: non-integer coefficient");
    out[k] = q.get_num();
  }
  return out;
}

std::vector<Gauss> char_poly(const GaussMat& m) {
  if (!m.square()) throw std::invalid_argument("char_poly: not square");
  long n = m.rows;
  std::vector<Rat> xs;
  std::vector<Gauss> ys;
  for (long k = 0; k <= n; ++k) {
    GaussMat w = m;
    for (long i = 0; i < n; ++i) w.at(i, i) = w.at(i, i) - Gauss(Rat(k));
    xs.push_back(Rat(k));
    ys.push_back(det(w));
  }
  // interpolate real and imaginary parts separately
  std::vector<Rat> re(n + 1), im(n + 1);
  for (long k = 0; k <= n; ++k) { re[k] = ys[k].re; im[k] = ys[k].im; }
  std::vector<Rat> cr = lagrange(xs, re), ci = lagrange(xs, im);
  std::vector<Gauss> out(n + 1);
  for (long k = 0; k <= n; ++k)
    out[k] = Gauss(k < (long)cr.size() ? cr[k] : Rat(0), k < (long)ci.size() ? ci[k] : Rat(0));
  return out;
}

// ---------------------------------------------------------------------------
// Hermitian signature

int hermitian_signature(const GaussMat& m) {
  if (!m.is_hermitian()) throw NotHermitian();
  long n = m.rows;
  GaussMat w = m;
  std::vector<bool> dead(n, false);
  int sig = 0;

  for (;;) {
    // diagonal pivot of largest magnitude? any nonzero works; take first.
    long p = -1;
    for (long i = 0; i < n; ++i)
      if (!dead[i] && !w.at(i, i).is_zero()) { p = i; break; }
    if (p >= 0) {
      // Hermitian diagonal is real
      Rat d = w.at(p, p).re;
      sig += d > 0 ? 1 : -1;
      Gauss inv = Gauss(Rat(1)) / w.at(p, p);
      for (long i = 0; i < n; ++i) {
        if (dead[i] || i == p || w.at(i, p).is_zero()) continue;
        Gauss f = w.at(i, p) * inv;
        for (long j = 0; j < n; ++j) {
          if (dead[j] || j == p) continue;
          w.at(i, j) = w.at(i, j) - f * w.at(p, j);
        }
      }
      for (long j = 0; j < n; ++j) { w.at(p, j) = Gauss(); w.at(j, p) = Gauss(); }
      dead[p] = true;
      continue;
    }
    // all-zero diagonal: look for a hyperbolic pair
    long pi = -1, pj = -1;
    for (long i = 0; i < n && pi < 0; ++i) {
      if (dead[i]) continue;
      for (long j = i + 1; j < n; ++j) {
        if (dead[j]) continue;
        if (!w.at(i, j).is_zero()) { pi = i; pj = j; break; }
      }
    }
    if (pi < 0) break;  // zero form on the rest
    // Hyperbolic pair: contributes (+1, -1) = 0 to the signature.
    // Basis change e_k' = e_k + alpha_k e_i + beta_k e_j with
    //   theta(e_k', e_j) = w(k,j) + alpha_k * b        = 0
    //   theta(e_k', e_i) = w(k,i) + beta_k * conj(b)   = 0
    // (theta linear in the first argument, w(k,l) = theta(e_k, e_l),
    //  w(i,i) = w(j,j) = 0, b = w(i,j)).
    Gauss b = w.at(pi, pj);
    std::vector<Gauss> alpha(n), beta(n), col_i(n), col_j(n), row_i(n), row_j(n);
    for (long k = 0; k < n; ++k) {
      col_i[k] = w.at(k, pi);
      col_j[k] = w.at(k, pj);
      row_i[k] = w.at(pi, k);
      row_j[k] = w.at(pj, k);
      if (dead[k] || k == pi || k == pj) continue;
      alpha[k] = -col_j[k] / b;
      beta[k] = -col_i[k] / b.conj();
    }
    for (long k = 0; k < n; ++k) {
      if (dead[k] || k == pi || k == pj) continue;
      for (long l = 0; l < n; ++l) {
        if (dead[l] || l == pi || l == pj) continue;
        Gauss v = w.at(k, l) + alpha[k] * row_i[l] + beta[k] * row_j[l] +
                  alpha[l].conj() * col_i[k] + beta[l].conj() * col_j[k] +
                  alpha[k] * beta[l].conj() * b + beta[k] * alpha[l].conj() * b.conj();
        w.at(k, l) = v;
      }
    }
    for (long k = 0; k < n; ++k) {
      w.at(pi, k) = Gauss(); w.at(k, pi) = Gauss();
      w.at(pj, k) = Gauss(); w.at(k, pj) = Gauss();
    }
    dead[pi] = dead[pj] = true;
  }
  return sig;
}

// ---------------------------------------------------------------------------
// Laurent polynomials

Laurent Laurent::constant(Int v) {
  Laurent p;
  if (v != 0) p.c[0] = std::move(v);
  return p;
}

Laurent Laurent::monomial(Int coeff, long exp) {
  Laurent p;
  if (coeff != 0) p.c[exp] = std::move(coeff);
  return p;
}

long Laurent::min_exp() const {
  if (c.empty()) throw std::logic_error("min_exp of zero polynomial");
  return c.begin()->first;
}

long Laurent::max_exp() const {
  if (c.empty()) throw std::logic_error("max_exp of zero polynomial");
  return c.rbegin()->first;
}

Int Laurent::coeff(long e) const {
  auto it = c.find(e);
  return it == c.end() ? Int(0) : it->second;
}

void Laurent::set(long e, Int v) {
  if (v == 0)
    c.erase(e);
  else
    c[e] = std::move(v);
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  Laurent r = a;
  for (const auto& [e, v] : b.c) {
    Int s = r.coeff(e) + v;
    r.set(e, s);
  }
  return r;
}

Laurent operator-(const Laurent& a, const Laurent& b) {
  Laurent r = a;
  for (const auto& [e, v] : b.c) {
    Int s = r.coeff(e) - v;
    r.set(e, s);
  }
  return r;
}

Laurent operator-(const Laurent& a) {
  Laurent r;
  for (const auto& [e, v] : a.c) r.c[e] = -v;
  return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [e1, v1] : a.c)
    for (const auto& [e2, v2] : b.c) {
      Int s = r.coeff(e1 + e2) + v1 * v2;
      r.set(e1 + e2, s);
    }
  return r;
}

Laurent Laurent::shifted(long k) const {
  Laurent r;
  for (const auto& [e, v] : c) r.c[e + k] = v;
  return r;
}

Laurent Laurent::reversed() const {
  Laurent r;
  for (const auto& [e, v] : c) r.c[-e] = v;
  return r;
}

Laurent Laurent::substitute_neg() const {
  Laurent r;
  for (const auto& [e, v] : c) r.c[e] = (e % 2 != 0) ? Int(-v) : v;
  return r;
}

Rat Laurent::eval(const Rat& x) const {
  Rat acc(0);
  for (const auto& [e, v] : c) {
    Rat p(1);
    long k = e >= 0 ? e : -e;
    Rat base = e >= 0 ? x : Rat(1) / x;
    for (long i = 0; i < k; ++i) p *= base;
    acc += Rat(v) * p;
  }
  return acc;
}

std::string Laurent::str(const std::string& var) const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    const auto& [e, v] = *it;
    if (!first && v > 0) os << "+";
    if (e == 0) {
      os << v.get_str();
    } else {
      if (v == -1)
        os << "-";
      else if (v != 1)
        os << v.get_str() << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

Laurent poly_det(const std::vector<std::vector<Laurent>>& m) {
  size_t n = m.size();
  if (n == 0) return Laurent::constant(Int(1));
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("poly_det: not square");

  // Shift each row to ordinary polynomials; remember the total shift.
  long total_shift = 0;
  std::vector<std::vector<Laurent>> w(n, std::vector<Laurent>(n));
  long deg_bound = 0;
  for (size_t i = 0; i < n; ++i) {
    long mn = 0;
    bool any = false;
    for (size_t j = 0; j < n; ++j)
      if (!m[i][j].is_zero()) {
        long e = m[i][j].min_exp();
        mn = any ? std::min(mn, e) : e;
        any = true;
      }
    if (!any) return Laurent();  // zero row
    for (size_t j = 0; j < n; ++j) w[i][j] = m[i][j].shifted(-mn);
    total_shift += mn;
    long mx = 0;
    for (size_t j = 0; j < n; ++j)
      if (!w[i][j].is_zero()) mx = std::max(mx, w[i][j].max_exp());
    deg_bound += mx;
  }

  // Evaluate at deg_bound+1 nonzero integer points and interpolate.
  std::vector<Rat> xs, ys;
  long pt = 1;
  for (long k = 0; k <= deg_bound; ++k, ++pt) {
    Rat x(pt);
    GaussMat num(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) num.at(i, j) = Gauss(w[i][j].eval(x));
    xs.push_back(x);
    ys.push_back(det(num).re);
  }
  std::vector<Rat> cs = lagrange(xs, ys);
  Laurent r;
  for (size_t d = 0; d < cs.size(); ++d) {
    Rat q = cs[d];
    q.canonicalize();
    if (q.get_den() != 1) throw std::logic_error("poly_det: non-integer coefficient");
    if (q.get_num() != 0) r.c[static_cast<long>(d)] = q.get_num();
  }
  return r.shifted(total_shift);
}

bool rewrite_in_z(const Laurent& p, Laurent& out) {
  out = Laurent();
  Laurent rem = p;
  const Laurent z = Laurent::monomial(Int(1), 1) - Laurent::monomial(Int(1), -1);
  while (!rem.is_zero()) {
    long d = std::max(std::labs(rem.min_exp()), std::labs(rem.max_exp()));
    if (d == 0) {
      out.set(0, rem.coeff(0));
      return true;
    }
    Int a = rem.coeff(d);
    if (a == 0) return false;  // an x^{-d} tail nothing in Z[z] can cancel
    Laurent zd = Laurent::constant(Int(1));
    for (long i = 0; i < d; ++i) zd = zd * z;
    rem = rem - Laurent::constant(a) * zd;
    out.set(d, a);
    if (!rem.is_zero() &&
        std::max(std::labs(rem.min_exp()), std::labs(rem.max_exp())) >= d)
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Parsing helpers

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace rotorlab::exact
