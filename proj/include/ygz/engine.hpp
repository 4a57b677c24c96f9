#ifndef YGZ_ENGINE_HPP
#define YGZ_ENGINE_HPP

// Closed-form construction of the module action on the product basis of
// interlacing arrays: diagonal eigenvalue polynomials, nodal values of the
// raising/lowering families with explicit rational coefficients, the
// reconstruction of the remaining family from the quadratic exchange
// identity, raising words from the cyclic vector, and the characteristic
// polynomials read off the diagram ladder.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ygz/gz.hpp"
#include "ygz/matrix.hpp"
#include "ygz/module_spec.hpp"
#include "ygz/poly.hpp"
#include "ygz/rational.hpp"

namespace ygz {

struct NodesCollide : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotPolynomial : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct VerificationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using SchemeTuple = std::vector<GZArray>;

// prod_i (u + row_i - i + 1) / (u - i + 1)
inline RationalFunction alpha(const std::vector<long>& row) {
  Poly num = Poly::one(), den = Poly::one();
  for (std::size_t i = 1; i <= row.size(); ++i) {
    num = num * Poly::linear(rat(row[i - 1] - static_cast<long>(i) + 1));
    den = den * Poly::linear(rat(1 - static_cast<long>(i)));
  }
  return RationalFunction(num, den);
}

inline RationalFunction alpha_row(const GZArray& a, int m) { return alpha(a.rows[m - 1]); }

// prod_s alpha_{row M(s)+m of the factor array}(u + h(s)) / alpha_{mu(s)}(u - m + h(s))
inline RationalFunction chi(const ModuleSpec& spec, const SchemeTuple& t, int m) {
  RationalFunction out = RationalFunction::one();
  for (int s = 0; s < spec.n(); ++s) {
    const YangianFactor& f = spec.factors[s];
    out = out * alpha_row(t[s], f.M() + m).shifted(f.h);
    if (f.M() > 0) out = out / alpha(f.mu).shifted(f.h - rat(m));
  }
  return out;
}

// prod_s ( prod_{i=1}^m (u - i + 1 + h(s)) * prod_{i=m+1}^{M(s)+m} (u + mu(s)_{i-m} - i + 1 + h(s)) )
inline Poly rho_poly(const ModuleSpec& spec, int m) {
  Poly p = Poly::one();
  for (const auto& f : spec.factors) {
    for (int i = 1; i <= m; ++i) p = p * Poly::linear(rat(1 - i) + f.h);
    for (int i = m + 1; i <= f.M() + m; ++i)
      p = p * Poly::linear(rat(f.mu[i - m - 1] - i + 1) + f.h);
  }
  return p;
}

inline int rho_degree(const ModuleSpec& spec, int m) {
  int r = m * spec.n();
  for (const auto& f : spec.factors) r += f.M();
  return r;
}

// nu = i - row_entry - 1 - h(s), the unique zero of the diagonal eigenvalue
// polynomial attached to entry i of row M(s)+m of factor s
inline Rat node_point(const ModuleSpec& spec, const SchemeTuple& t, int m, int s, int i) {
  const YangianFactor& f = spec.factors[s];
  return rat(i - t[s].entry(f.M() + m, i) - 1) - f.h;
}

// monic prod over (s, i) of (u - nu); degree r_m
inline Poly varpi(const ModuleSpec& spec, const SchemeTuple& t, int m) {
  Poly p = Poly::one();
  for (int s = 0; s < spec.n(); ++s)
    for (int i = 1; i <= spec.factors[s].M() + m; ++i)
      p = p * Poly::linear(-node_point(spec, t, m, s, i));
  return p;
}

struct RhoNodes {
  Poly rho;
  Poly varpi;
  std::vector<std::pair<std::pair<int, int>, Rat>> nodes;  // ((s, i), nu)
};

// The normalizing polynomial, the eigenvalue polynomial and its zeros,
// cross-checked three ways: varpi must equal rho * chi exactly (so the
// rational function clears to a polynomial), the nodes must be pairwise
// distinct, and rho must satisfy the shift identity
// rho_m(u) rho_m(u-1) = rho_{m+1}(u) rho_{m-1}(u-1).
inline RhoNodes rho_and_nodes(const ModuleSpec& spec, const SchemeTuple& t, int m) {
  RhoNodes out;
  out.rho = rho_poly(spec, m);
  out.varpi = varpi(spec, t, m);
  RationalFunction prod = RationalFunction(out.rho, Poly::one()) * chi(spec, t, m);
  if (prod.den().degree() != 0)
    throw NotPolynomial("normalized eigenvalue function is not a polynomial");
  Rat lead = prod.den().coeff(0);
  if (Rat(1) / lead * prod.num() != out.varpi)
    throw NotPolynomial("eigenvalue polynomial disagrees with the nodal product");
  for (int s = 0; s < spec.n(); ++s)
    for (int i = 1; i <= spec.factors[s].M() + m; ++i)
      out.nodes.push_back({{s, i}, node_point(spec, t, m, s, i)});
  for (std::size_t a = 0; a < out.nodes.size(); ++a)
    for (std::size_t b = a + 1; b < out.nodes.size(); ++b)
      if (out.nodes[a].second == out.nodes[b].second)
        throw NodesCollide("nodal points collide");
  if (m >= 1 && m <= spec.N - 1) {
    Poly lhs = out.rho * out.rho.shifted(rat(-1));
    Poly rhs = rho_poly(spec, m + 1) * rho_poly(spec, m - 1).shifted(rat(-1));
    if (lhs != rhs) throw NotPolynomial("normalizing polynomials violate the shift identity");
  }
  return out;
}

// Coefficient of the lowering family at its nodal point: the double product
// over both neighbouring rows, with the maximal-array entry substituted for
// columns up to the active one.
inline Rat gamma_coeff(const ModuleSpec& spec, const SchemeTuple& t, int m, int s, int i) {
  const YangianFactor& fs = spec.factors[s];
  Rat base = rat(t[s].entry(fs.M() + m, i) - i);  // lambda(s)_{M+m,i} - i
  Rat out(1);
  for (int r = 0; r < spec.n(); ++r) {
    const YangianFactor& fr = spec.factors[r];
    GZArray kap = top_scheme(fr.lambda, fr.mu);
    Rat dh = fr.h - fs.h;
    for (int j = 1; j <= fr.M() + m + 1; ++j) {
      long e = (j <= i) ? kap.entry(fr.M() + m + 1, j) : t[r].entry(fr.M() + m + 1, j);
      out *= rat(e - j) - base + dh;
    }
    for (int j = 1; j <= fr.M() + m - 1; ++j) {
      long e = (j < i) ? kap.entry(fr.M() + m - 1, j) : t[r].entry(fr.M() + m - 1, j);
      out *= rat(e - j - 1) - base + dh;
    }
  }
  return out;
}

// Coefficient of the raising family at its nodal point: a ratio of the same
// kind of double products, truncated at the active column.
inline Rat beta_coeff(const ModuleSpec& spec, const SchemeTuple& t, int m, int s, int i) {
  const YangianFactor& fs = spec.factors[s];
  Rat base = rat(t[s].entry(fs.M() + m, i) - i);
  Rat out(1);
  for (int r = 0; r < spec.n(); ++r) {
    const YangianFactor& fr = spec.factors[r];
    GZArray kap = top_scheme(fr.lambda, fr.mu);
    Rat dh = fr.h - fs.h;
    int up = std::min(i, fr.M() + m + 1);
    for (int j = 1; j <= up; ++j) {
      Rat num = rat(t[r].entry(fr.M() + m + 1, j) - j + 1) - base + dh;
      Rat den = rat(kap.entry(fr.M() + m + 1, j) - j + 1) - base + dh;
      out *= num / den;
    }
    int lo = std::min(i, fr.M() + m) - 1;
    for (int j = 1; j <= lo; ++j) {
      Rat num = rat(t[r].entry(fr.M() + m - 1, j) - j) - base + dh;
      Rat den = rat(kap.entry(fr.M() + m - 1, j) - j) - base + dh;
      out *= num / den;
    }
  }
  return out;
}

struct GTModule {
  ModuleSpec spec;
  std::vector<SchemeTuple> basis;      // first factor most significant
  std::vector<MatrixPoly> a;           // index m, m = 0..N
  std::vector<MatrixPoly> b;           // index m-1, m = 1..N-1
  std::vector<MatrixPoly> c;           // index m-1, m = 1..N-1

  std::vector<MatrixPoly> d;           // index m-1, m = 1..N-1

  int dim() const { return static_cast<int>(basis.size()); }

  int index_of(const SchemeTuple& t) const {
    for (int k = 0; k < dim(); ++k)
      if (basis[k] == t) return k;
    throw EmptySchemeSet("tuple not in the basis");
  }
};

// Basis of tuples, first factor most significant.
inline std::vector<SchemeTuple> enumerate_tuples(const ModuleSpec& spec) {
  std::vector<std::vector<GZArray>> per;
  per.reserve(spec.factors.size());
  for (const auto& f : spec.factors) {
    auto v = enumerate_schemes_lm(f.lambda, f.mu);
    if (v.empty()) throw EmptySchemeSet("factor has an empty basis");
    per.push_back(std::move(v));
  }
  std::vector<SchemeTuple> out;
  SchemeTuple cur(per.size());
  std::function<void(std::size_t)> rec = [&](std::size_t s) {
    if (s == per.size()) {
      out.push_back(cur);
      return;
    }
    for (const auto& a : per[s]) {
      cur[s] = a;
      rec(s + 1);
    }
  };
  rec(0);
  return out;
}

namespace detail {

// Vector-valued Lagrange interpolation of one column through its own nodes.
inline void write_column(std::vector<Mat>& coeffs, int col,
                         const std::vector<std::pair<Rat, std::vector<Rat>>>& pts) {
  int dim = static_cast<int>(pts.at(0).second.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Poly basis = Poly::one();
    Rat denom(1);
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j == i) continue;
      if (pts[i].first == pts[j].first) throw DuplicateNode("repeated nodal point");
      basis = basis * Poly({-pts[j].first, Rat(1)});
      denom *= pts[i].first - pts[j].first;
    }
    Rat inv = Rat(1) / denom;
    for (int k = 0; k <= basis.degree(); ++k) {
      Rat w = inv * basis.coeff(k);
      if (w == 0) continue;
      for (int r = 0; r < dim; ++r)
        if (pts[i].second[r] != 0) coeffs[k].at(r, col) += w * pts[i].second[r];
    }
  }
}

}  // namespace detail

// Full closed-form action.  Requires pairwise non-integral shift differences.
inline GTModule build_action(const ModuleSpec& spec) {
  spec.validate();
  for (int r = 0; r < spec.n(); ++r)
    for (int s = r + 1; s < spec.n(); ++s)
      if (is_integer(spec.factors[r].h - spec.factors[s].h))
        throw NodesCollide("integral shift differences make nodal points collide");
  int N = spec.N;
  GTModule mod;
  mod.spec = spec;
  mod.basis = enumerate_tuples(spec);
  int dim = mod.dim();
  std::map<SchemeTuple, int> index;
  for (int k = 0; k < dim; ++k) index[mod.basis[k]] = k;

  // diagonal family: coefficient matrices straight from the eigenvalue polys
  mod.a.resize(N + 1);
  for (int m = 0; m <= N; ++m) {
    int rm = rho_degree(spec, m);
    std::vector<Mat> coeffs(rm + 1, Mat(dim, dim));
    for (int t = 0; t < dim; ++t) {
      Poly w = varpi(spec, mod.basis[t], m);
      for (int k = 0; k <= w.degree(); ++k) coeffs[k].at(t, t) = w.coeff(k);
    }
    mod.a[m] = MatrixPoly(std::move(coeffs));
  }

  // raising and lowering families: one column per basis tuple, interpolated
  // through that tuple's nodal points
  mod.b.resize(std::max(0, N - 1));
  mod.c.resize(std::max(0, N - 1));
  for (int m = 1; m <= N - 1; ++m) {
    int rm = rho_degree(spec, m);
    std::vector<Mat> bc(rm, Mat(dim, dim)), cc(rm, Mat(dim, dim));
    for (int t = 0; t < dim; ++t) {
      const SchemeTuple& tup = mod.basis[t];
      std::vector<std::pair<Rat, std::vector<Rat>>> bpts, cpts;
      for (int s = 0; s < spec.n(); ++s) {
        const YangianFactor& f = spec.factors[s];
        for (int i = 1; i <= f.M() + m; ++i) {
          Rat nu = node_point(spec, tup, m, s, i);
          std::vector<Rat> bval(dim, Rat(0)), cval(dim, Rat(0));
          SchemeTuple down = tup;
          down[s].entry(f.M() + m, i) -= 1;
          if (is_scheme(down[s])) bval[index.at(down)] = beta_coeff(spec, tup, m, s, i);
          SchemeTuple up = tup;
          up[s].entry(f.M() + m, i) += 1;
          if (is_scheme(up[s])) cval[index.at(up)] = -gamma_coeff(spec, tup, m, s, i);
          bpts.emplace_back(nu, std::move(bval));
          cpts.emplace_back(nu, std::move(cval));
        }
      }
      detail::write_column(bc, t, bpts);
      detail::write_column(cc, t, cpts);
    }
    mod.b[m - 1] = MatrixPoly(std::move(bc));
    mod.c[m - 1] = MatrixPoly(std::move(cc));
  }

  // remaining family from the quadratic identity
  // D(u) A(u-1) = C(u) B(u-1) + A_{m+1}(u) A_{m-1}(u-1),
  // interpolated at points where the diagonal factor is invertible
  mod.d.resize(std::max(0, N - 1));
  for (int m = 1; m <= N - 1; ++m) {
    int rm = rho_degree(spec, m);
    SampleStream pts(0x5eedULL + static_cast<std::uint64_t>(m));
    for (int t = 0; t < dim; ++t)
      for (int s = 0; s < spec.n(); ++s)
        for (int i = 1; i <= spec.factors[s].M() + m; ++i)
          pts.exclude(node_point(spec, mod.basis[t], m, s, i) + 1);
    std::vector<std::pair<Rat, Mat>> samples;
    while (static_cast<int>(samples.size()) < rm + 1) {
      Rat u = pts.next();
      Mat rhs = mod.c[m - 1].eval_or(u, dim, dim) * mod.b[m - 1].eval_or(u - 1, dim, dim) +
                mod.a[m + 1](u) * mod.a[m - 1].eval_or(u - 1, dim, dim);
      Mat diag = mod.a[m](u - 1);
      Mat val(dim, dim);
      for (int col = 0; col < dim; ++col) {
        Rat piv = diag.at(col, col);
        Rat inv = Rat(1) / piv;
        for (int row = 0; row < dim; ++row) val.at(row, col) = rhs.at(row, col) * inv;
      }
      samples.emplace_back(u, std::move(val));
    }
    mod.d[m - 1] = lagrange_interpolate(samples, rm);
  }
  return mod;
}

inline SchemeTuple top_tuple(const ModuleSpec& spec) {
  SchemeTuple t;
  t.reserve(spec.factors.size());
  for (const auto& f : spec.factors) t.push_back(top_scheme(f.lambda, f.mu));
  return t;
}

// Unit coordinate vector of the cyclic tuple, verified to be annihilated by
// every lowering family and to carry the expected diagonal eigenvalues.
inline std::vector<Rat> singular_vector(const GTModule& mod) {
  int t0 = mod.index_of(top_tuple(mod.spec));
  for (const MatrixPoly& cm : mod.c)
    for (const Mat& coeff : cm.coeffs())
      for (int r = 0; r < mod.dim(); ++r)
        if (coeff.at(r, t0) != 0)
          throw VerificationFailed("cyclic vector not annihilated by the lowering family");
  for (int m = 0; m <= mod.spec.N; ++m) {
    Poly w = varpi(mod.spec, mod.basis[t0], m);
    for (const Mat& coeff : mod.a[m].coeffs())
      for (int r = 0; r < mod.dim(); ++r)
        if (r != t0 && coeff.at(r, t0) != 0)
          throw VerificationFailed("diagonal family not diagonal on the cyclic vector");
    if (mod.a[m].entry(t0, t0) != w)
      throw VerificationFailed("cyclic vector has the wrong diagonal eigenvalue");
  }
  std::vector<Rat> v(mod.dim(), Rat(0));
  v[t0] = 1;
  return v;
}

struct RaisingStep {
  int m;      // which raising family
  Rat point;  // evaluation point
};

// Word of raising factors carrying the cyclic vector to the target tuple.
// The word reads left to right; the rightmost factor acts first.  Bracket
// order: entries sorted by (column ascending, level descending); inside a
// bracket the factors commute.
inline std::vector<RaisingStep> raising_path(const ModuleSpec& spec, const SchemeTuple& target) {
  int N = spec.N;
  std::vector<std::pair<int, int>> order;  // (level l, column j)
  int jmax = 0;
  for (const auto& f : spec.factors) jmax = std::max(jmax, f.M() + N - 1);
  for (int j = 1; j <= jmax; ++j)
    for (int l = N - 1; l >= 1; --l) order.emplace_back(l, j);
  std::vector<RaisingStep> word;
  for (auto [l, j] : order) {
    for (int r = 0; r < spec.n(); ++r) {
      const YangianFactor& f = spec.factors[r];
      if (j > f.M() + l) continue;
      GZArray kap = top_scheme(f.lambda, f.mu);
      long steps = kap.entry(f.M() + l, j) - target[r].entry(f.M() + l, j);
      Rat nu = node_point(spec, target, l, r, j);
      for (long tt = 1; tt <= steps; ++tt) word.push_back({l, nu - rat(tt)});
    }
  }
  return word;
}

// Characteristic monic polynomials from the diagram ladder: the product
// over factors of the shifted diagram polynomial of the full skew shape.
inline std::vector<Poly> drinfeld_polys(const ModuleSpec& spec) {
  spec.validate();
  std::vector<Poly> out;
  for (int m = 1; m <= spec.N - 1; ++m) {
    Poly p = Poly::one();
    for (const auto& f : spec.factors) {
      SkewDiagram d = kappa_diagram(f.lambda, f.mu, spec.N);
      p = p * diagram_drinfeld_poly(d, m, spec.N).shifted(f.h);
    }
    out.push_back(p);
  }
  return out;
}

// True when the diagonal eigenvalue data separates the basis tuples.
inline bool simple_spectrum_check(const ModuleSpec& spec) {
  spec.validate();
  auto basis = enumerate_tuples(spec);
  std::vector<std::vector<Poly>> keys;
  keys.reserve(basis.size());
  for (const auto& t : basis) {
    std::vector<Poly> key;
    for (int m = 1; m <= spec.N; ++m) key.push_back(varpi(spec, t, m));
    keys.push_back(std::move(key));
  }
  for (std::size_t i = 0; i < keys.size(); ++i)
    for (std::size_t j = i + 1; j < keys.size(); ++j)
      if (keys[i] == keys[j]) return false;
  return true;
}

}  // namespace ygz

#endif  // YGZ_ENGINE_HPP
