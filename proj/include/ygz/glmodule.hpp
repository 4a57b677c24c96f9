#ifndef YGZ_GLMODULE_HPP
#define YGZ_GLMODULE_HPP

// The irreducible gl_K module with a given highest weight, realized by the
// classical triangular-array matrix-element formulas, together with the
// subspace of gl_M-singular vectors of a fixed weight.

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ygz/gz.hpp"
#include "ygz/matrix.hpp"
#include "ygz/rational.hpp"

namespace ygz {

struct RelationCheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptySubspace : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GLModule {
  int K = 0;
  Weight lambda;
  std::vector<GZArray> basis;  // canonical order
  std::map<std::pair<int, int>, Mat> gen;

  int dim() const { return static_cast<int>(basis.size()); }
  const Mat& E(int i, int j) const { return gen.at({i, j}); }
};

namespace detail {

inline Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

inline void check_gl_relations(const GLModule& m) {
  for (int i = 1; i <= m.K; ++i)
    for (int j = 1; j <= m.K; ++j)
      for (int k = 1; k <= m.K; ++k)
        for (int l = 1; l <= m.K; ++l) {
          Mat lhs = commutator(m.E(i, j), m.E(k, l));
          Mat rhs(m.dim(), m.dim());
          if (j == k) rhs = rhs + m.E(i, l);
          if (l == i) rhs = rhs - m.E(k, j);
          if (lhs != rhs) throw RelationCheckFailed("gl_K commutation relations violated");
        }
}

}  // namespace detail

// Builds all generator matrices on the interlacing-array basis.  The
// adjacent generators use the standard one-entry-shift matrix elements in
// the shifted entries l_{kj} = entry(k,j) - j; a shift leaving the
// interlacing set contributes nothing.  Non-adjacent generators are
// iterated commutators.  The full commutation-relation check is the
// correctness contract and runs on every construction.
inline GLModule build_gl_module(int K, const Weight& lambda) {
  if (static_cast<int>(lambda.size()) != K || !is_non_increasing(lambda))
    throw InvalidWeight("highest weight must have K non-increasing parts");
  GLModule m;
  m.K = K;
  m.lambda = lambda;
  m.basis = enumerate_schemes(lambda);
  int d = m.dim();
  std::map<GZArray, int> index;
  for (int t = 0; t < d; ++t) index[m.basis[t]] = t;

  auto l_shift = [](const GZArray& a, int k, int j) { return rat(a.entry(k, j) - j); };

  // diagonal generators
  for (int k = 1; k <= K; ++k) {
    Mat Ekk(d, d);
    for (int t = 0; t < d; ++t) {
      long sum = 0;
      for (int i = 1; i <= k; ++i) sum += m.basis[t].entry(k, i);
      for (int i = 1; i <= k - 1; ++i) sum -= m.basis[t].entry(k - 1, i);
      Ekk.at(t, t) = rat(sum);
    }
    m.gen[{k, k}] = Ekk;
  }

  // adjacent raising and lowering generators
  for (int k = 1; k <= K - 1; ++k) {
    Mat raise(d, d), lower(d, d);
    for (int t = 0; t < d; ++t) {
      const GZArray& a = m.basis[t];
      for (int i = 1; i <= k; ++i) {
        Rat den(1);
        for (int j = 1; j <= k; ++j)
          if (j != i) den *= l_shift(a, k, j) - l_shift(a, k, i);

        GZArray up = a;
        up.entry(k, i) += 1;
        if (is_scheme(up)) {
          Rat num(1);
          for (int j = 1; j <= k + 1; ++j) num *= l_shift(a, k + 1, j) - l_shift(a, k, i);
          raise.at(index[up], t) += -num / den;
        }

        GZArray down = a;
        down.entry(k, i) -= 1;
        if (is_scheme(down)) {
          Rat num(1);
          for (int j = 1; j <= k - 1; ++j) num *= l_shift(a, k - 1, j) - l_shift(a, k, i);
          lower.at(index[down], t) += num / den;
        }
      }
    }
    m.gen[{k, k + 1}] = raise;
    m.gen[{k + 1, k}] = lower;
  }

  // remaining generators as commutators of adjacent ones
  for (int gap = 2; gap <= K - 1; ++gap)
    for (int i = 1; i + gap <= K; ++i) {
      int j = i + gap;
      m.gen[{i, j}] = detail::commutator(m.gen[{i, j - 1}], m.gen[{j - 1, j}]);
      m.gen[{j, i}] = detail::commutator(m.gen[{j, j - 1}], m.gen[{j - 1, i}]);
    }

  detail::check_gl_relations(m);

  // highest weight sanity: the all-maximal array is killed by raising
  // generators and has the prescribed diagonal eigenvalues
  GZArray top;
  top.rows.assign(K, {});
  for (int l = 1; l <= K; ++l) {
    top.rows[l - 1].resize(l);
    for (int i = 1; i <= l; ++i) top.entry(l, i) = lambda[i - 1];
  }
  int t0 = index.at(top);
  for (int i = 1; i <= K; ++i) {
    if (m.E(i, i).at(t0, t0) != rat(lambda[i - 1]))
      throw RelationCheckFailed("highest weight eigenvalue mismatch");
    for (int j = i + 1; j <= K; ++j)
      for (int r = 0; r < d; ++r)
        if (m.E(i, j).at(r, t0) != 0)
          throw RelationCheckFailed("highest weight vector not annihilated");
  }
  return m;
}

struct Subspace {
  const GLModule* ambient = nullptr;
  std::vector<GZArray> schemes;    // rows 1..M pinned, canonical order
  std::vector<int> inclusion;      // indices into the ambient basis

  int dim() const { return static_cast<int>(schemes.size()); }

  // Restriction of an ambient operator that preserves the span.
  Mat restrict_op(const Mat& big, bool* invariant = nullptr) const {
    int d = dim();
    std::vector<bool> inside(ambient->dim(), false);
    for (int t : inclusion) inside[t] = true;
    if (invariant) *invariant = true;
    for (int c = 0; c < d; ++c)
      for (int r = 0; r < ambient->dim(); ++r)
        if (!inside[r] && big.at(r, inclusion[c]) != 0) {
          if (invariant) {
            *invariant = false;
          } else {
            throw RelationCheckFailed("operator does not preserve the subspace");
          }
        }
    return big.submatrix(inclusion, inclusion);
  }
};

// Span of the basis vectors whose arrays have rows 1..M equal to mu;
// checked to consist of gl_M-singular vectors of weight mu.
inline Subspace singular_subspace(const GLModule& m, int M, const Weight& mu) {
  if (static_cast<int>(mu.size()) != M || M >= m.K)
    throw InvalidWeight("mu must have M < K parts");
  Subspace s;
  s.ambient = &m;
  for (int t = 0; t < m.dim(); ++t) {
    const GZArray& a = m.basis[t];
    bool ok = true;
    for (int l = 1; l <= M && ok; ++l)
      for (int i = 1; i <= l; ++i)
        if (a.entry(l, i) != mu[i - 1]) {
          ok = false;
          break;
        }
    if (ok) {
      s.schemes.push_back(a);
      s.inclusion.push_back(t);
    }
  }
  if (s.schemes.empty()) throw EmptySubspace("no arrays with the pinned bottom rows");

  // post-hoc verification: annihilated by raising generators of gl_M and of
  // the prescribed gl_M weight
  for (int c : s.inclusion) {
    for (int i = 1; i <= M; ++i) {
      for (int j = i + 1; j <= M; ++j)
        for (int r = 0; r < m.dim(); ++r)
          if (m.E(i, j).at(r, c) != 0)
            throw RelationCheckFailed("subspace vector not singular for gl_M");
      for (int r = 0; r < m.dim(); ++r) {
        Rat want = (r == c) ? rat(mu[i - 1]) : Rat(0);
        if (m.E(i, i).at(r, c) != want)
          throw RelationCheckFailed("subspace vector has wrong gl_M weight");
      }
    }
  }
  return s;
}

}  // namespace ygz

#endif  // YGZ_GLMODULE_HPP
