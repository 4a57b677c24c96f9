#ifndef YGZ_CROSSVAL_HPP
#define YGZ_CROSSVAL_HPP

// Glue between the closed-form construction and the brute-force family:
// interpolated polynomial forms of the corner minors, gauge matrices
// identifying the two bases, conjugation, matrix-polynomial algebra, and
// the quadratic exchange identities in coefficient form.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ygz/engine.hpp"
#include "ygz/matrix.hpp"
#include "ygz/module_spec.hpp"
#include "ygz/oracle.hpp"
#include "ygz/poly.hpp"
#include "ygz/rational.hpp"

namespace ygz {

// rho_m times the requested corner minor, interpolated with the a-priori
// degree bound (r_m for the diagonal families, r_m - 1 for the raising and
// lowering ones).
inline MatrixPoly oracle_letter_poly(const TFamily& t, const ModuleSpec& spec, char letter,
                                     int m, std::uint64_t seed) {
  int rm = rho_degree(spec, m);
  int bound = (letter == 'b' || letter == 'c') ? rm - 1 : rm;
  Poly rho = rho_poly(spec, m);
  SampleStream pts(seed);
  std::vector<std::pair<Rat, Mat>> samples;
  while (static_cast<int>(samples.size()) < bound + 1) {
    Rat u = pts.next();
    try {
      Mat v;
      switch (letter) {
        case 'a': v = minor_A(t, m, u); break;
        case 'b': v = minor_B(t, m, u); break;
        case 'c': v = minor_C(t, m, u); break;
        case 'd': v = minor_D(t, m, u); break;
        default: throw std::invalid_argument("unknown family letter");
      }
      samples.emplace_back(u, rho(u) * v);
    } catch (const PoleHit&) {
    }
  }
  return lagrange_interpolate(samples, bound);
}

// Spot check of an interpolated form at one fresh point.
inline bool letter_poly_consistent(const MatrixPoly& p, const TFamily& t,
                                   const ModuleSpec& spec, char letter, int m,
                                   std::uint64_t seed) {
  Poly rho = rho_poly(spec, m);
  SampleStream pts(seed ^ 0xf00dULL);
  for (int tries = 0; tries < 50; ++tries) {
    Rat u = pts.next();
    try {
      Mat v;
      switch (letter) {
        case 'a': v = minor_A(t, m, u); break;
        case 'b': v = minor_B(t, m, u); break;
        case 'c': v = minor_C(t, m, u); break;
        case 'd': v = minor_D(t, m, u); break;
        default: throw std::invalid_argument("unknown family letter");
      }
      return p.eval_or(u, t.dim, t.dim) == rho(u) * v;
    } catch (const PoleHit&) {
    }
  }
  throw std::runtime_error("could not find a pole-free check point");
}

// Gauge matrix whose columns are the raising words applied, inside the
// brute-force realization, to a spanning vector of its singular line.  The
// words evaluate the interpolated polynomial forms of the raising families,
// which stay finite where the unrescaled family has removable poles.
inline Mat gauge_from_raising(const GTModule& mod, const std::vector<MatrixPoly>& b_or,
                              const std::vector<Rat>& xi0) {
  const ModuleSpec& spec = mod.spec;
  int dim = mod.dim();
  Mat G(dim, dim);
  for (int col = 0; col < dim; ++col) {
    std::vector<RaisingStep> word = raising_path(spec, mod.basis[col]);
    std::vector<Rat> v = xi0;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      Mat op = b_or.at(it->m - 1).eval_or(it->point, dim, dim);
      Mat w = op.apply(v);
      for (int i = 0; i < dim; ++i) v[i] = w.at(i, 0);
    }
    for (int i = 0; i < dim; ++i) G.at(i, col) = v[i];
  }
  return G;
}

inline MatrixPoly conjugate_mp(const MatrixPoly& p, const Mat& ginv, const Mat& g) {
  std::vector<Mat> out;
  out.reserve(p.coeffs().size());
  for (const Mat& c : p.coeffs()) out.push_back(ginv * c * g);
  return MatrixPoly(std::move(out));
}

// Basis of joint eigenvectors of the diagonal family, matched to the
// closed-form eigenvalue polynomials tuple by tuple; columns are determined
// up to individual scalars.
inline Mat eigenbasis_from_diagonals(const GTModule& mod,
                                     const std::vector<MatrixPoly>& a_or) {
  const ModuleSpec& spec = mod.spec;
  int dim = mod.dim();
  int N = spec.N;
  Mat G(dim, dim);
  for (int col = 0; col < dim; ++col) {
    std::vector<Mat> stacked;
    for (int m = 1; m <= N; ++m) {
      Poly w = varpi(spec, mod.basis[col], m);
      int top = std::max(a_or[m - 1].degree(), w.degree());
      for (int k = 0; k <= top; ++k) {
        Mat c = a_or[m - 1].coeff(k, dim, dim) - w.coeff(k) * Mat::identity(dim);
        stacked.push_back(std::move(c));
      }
    }
    Mat big(static_cast<int>(stacked.size()) * dim, dim);
    int r0 = 0;
    for (const Mat& s : stacked) {
      for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) big.at(r0 + r, c) = s.at(r, c);
      r0 += dim;
    }
    auto ker = mat_kernel(big);
    if (ker.size() != 1)
      throw NonUniqueSingularLine("joint eigenspace is not one-dimensional");
    for (int i = 0; i < dim; ++i) G.at(i, col) = ker[0][i];
  }
  return G;
}

// ---- matrix-polynomial algebra ----

inline MatrixPoly mp_mul(const MatrixPoly& p, const MatrixPoly& q, int dim) {
  if (p.is_zero() || q.is_zero()) return MatrixPoly();
  std::vector<Mat> out(p.coeffs().size() + q.coeffs().size() - 1, Mat(dim, dim));
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    for (std::size_t j = 0; j < q.coeffs().size(); ++j)
      out[i + j] = out[i + j] + p.coeffs()[i] * q.coeffs()[j];
  return MatrixPoly(std::move(out));
}

// p(u + h)
inline MatrixPoly mp_shift(const MatrixPoly& p, const Rat& h, int dim) {
  MatrixPoly acc;
  std::vector<Mat> id{Mat::identity(dim)};
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    // acc = acc * (u + h) + coeff
    std::vector<Mat> next(acc.coeffs().size() + 1, Mat(dim, dim));
    for (std::size_t k = 0; k < acc.coeffs().size(); ++k) {
      next[k + 1] = next[k + 1] + acc.coeffs()[k];
      next[k] = next[k] + h * acc.coeffs()[k];
    }
    next[0] = next[0] + *it;
    acc = MatrixPoly(std::move(next));
  }
  return acc;
}

inline MatrixPoly mp_sub(const MatrixPoly& p, const MatrixPoly& q, int dim) {
  std::size_t n = std::max(p.coeffs().size(), q.coeffs().size());
  std::vector<Mat> out(n, Mat(dim, dim));
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) out[i] = out[i] + p.coeffs()[i];
  for (std::size_t i = 0; i < q.coeffs().size(); ++i) out[i] = out[i] - q.coeffs()[i];
  return MatrixPoly(std::move(out));
}

// ---- exchange identities in coefficient form ----

namespace detail {
inline Mat mp_coeff(const MatrixPoly& p, int k, int dim) { return p.coeff(k, dim, dim); }
}  // namespace detail

// commutativity of two families as two-variable identities: every
// coefficient of one commutes with every coefficient of the other
inline bool coeffs_commute(const MatrixPoly& p, const MatrixPoly& q) {
  for (const Mat& x : p.coeffs())
    for (const Mat& y : q.coeffs())
      if (x * y != y * x) return false;
  return true;
}

// (u - v) [P(u), Q(v)] == R(u) S(v) - R(v) S(u), checked coefficient-wise:
// for all a, b:  [P_{a-1}, Q_b] - [P_a, Q_{b-1}] == R_a S_b - R_b S_a
inline bool exchange_identity(const MatrixPoly& p, const MatrixPoly& q, const MatrixPoly& r,
                              const MatrixPoly& s, int dim) {
  int top = 0;
  top = std::max(top, p.degree() + 1);
  top = std::max(top, q.degree() + 1);
  top = std::max(top, r.degree());
  top = std::max(top, s.degree());
  for (int a = 0; a <= top; ++a)
    for (int b = 0; b <= top; ++b) {
      Mat pa1 = detail::mp_coeff(p, a - 1, dim), qb = detail::mp_coeff(q, b, dim);
      Mat pa = detail::mp_coeff(p, a, dim), qb1 = detail::mp_coeff(q, b - 1, dim);
      Mat lhs = (pa1 * qb - qb * pa1) - (pa * qb1 - qb1 * pa);
      Mat ra = detail::mp_coeff(r, a, dim), sb = detail::mp_coeff(s, b, dim);
      Mat rb = detail::mp_coeff(r, b, dim), sa = detail::mp_coeff(s, a, dim);
      if (lhs != ra * sb - rb * sa) return false;
    }
  return true;
}

// All exchange identities of the built action, exactly:
//   commuting pairs among the diagonal/raising/lowering families,
//   the two genuine two-variable exchange relations, and the univariate
//   quadratic identity closing the system.
inline bool verify_engine_relations(const GTModule& mod) {
  int N = mod.spec.N;
  int dim = mod.dim();
  for (int m = 0; m <= N; ++m)
    for (int l = 0; l <= N; ++l)
      if (!coeffs_commute(mod.a[m], mod.a[l])) return false;
  for (int m = 1; m <= N - 1; ++m)
    for (int l = 0; l <= N; ++l)
      if (l != m && !coeffs_commute(mod.a[l], mod.b[m - 1])) return false;
  for (int m = 1; m <= N - 1; ++m)
    for (int l = 1; l <= N - 1; ++l)
      if (l != m && !coeffs_commute(mod.c[l - 1], mod.b[m - 1])) return false;
  for (int m = 1; m <= N - 1; ++m)
    for (int l = 1; l <= N - 1; ++l)
      if (l != m - 1 && l != m + 1 && !coeffs_commute(mod.b[l - 1], mod.b[m - 1]))
        return false;
  for (int m = 1; m <= N - 1; ++m) {
    if (!exchange_identity(mod.a[m], mod.b[m - 1], mod.b[m - 1], mod.a[m], dim)) return false;
    if (!exchange_identity(mod.c[m - 1], mod.b[m - 1], mod.d[m - 1], mod.a[m], dim))
      return false;
    // c(u) b(u-1) == d(u) a(u-1) - a_{m+1}(u) a_{m-1}(u-1)
    MatrixPoly lhs = mp_mul(mod.c[m - 1], mp_shift(mod.b[m - 1], rat(-1), dim), dim);
    MatrixPoly rhs = mp_sub(mp_mul(mod.d[m - 1], mp_shift(mod.a[m], rat(-1), dim), dim),
                            mp_mul(mod.a[m + 1], mp_shift(mod.a[m - 1], rat(-1), dim), dim),
                            dim);
    if (lhs != rhs) return false;
  }
  return true;
}

// ---- index tuples for the twist checks ----

inline std::vector<int> complement_tuple(const std::vector<int>& idx, int N) {
  std::vector<bool> in(N + 1, false);
  for (int i : idx) in[i] = true;
  std::vector<int> out;
  for (int i = 1; i <= N; ++i)
    if (!in[i]) out.push_back(i);
  return out;
}

// Sign of the permutation carrying one arrangement of 1..N to another.
inline int perm_sign_between(const std::vector<int>& from, const std::vector<int>& to) {
  int N = static_cast<int>(from.size());
  std::vector<int> pos(N + 1);
  for (int k = 0; k < N; ++k) pos[from[k]] = k;
  std::vector<int> p(N);
  for (int k = 0; k < N; ++k) p[k] = pos[to[k]];
  int inv = 0;
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b)
      if (p[a] > p[b]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

}  // namespace ygz

#endif  // YGZ_CROSSVAL_HPP
