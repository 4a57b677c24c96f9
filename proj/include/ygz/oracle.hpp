#ifndef YGZ_ORACLE_HPP
#define YGZ_ORACLE_HPP

// Brute-force realization of the generating-matrix family on a tensor
// product of shifted skew modules: pointwise evaluation through block-matrix
// inversion, quantum minors, the two inversion twists, the exchange-relation
// check, and reconstruction of the characteristic monic polynomials from the
// joint singular line.

#include <algorithm>
#include <functional>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ygz/glmodule.hpp"
#include "ygz/gz.hpp"
#include "ygz/matrix.hpp"
#include "ygz/module_spec.hpp"
#include "ygz/poly.hpp"
#include "ygz/rational.hpp"

namespace ygz {

struct PoleHit : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SubspaceNotInvariant : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoSingularVector : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonUniqueSingularLine : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RelationViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FunctionalEquationUnsolvable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Pointwise N x N family of dim x dim blocks.  eval(u) returns the blocks
// row-major; it throws PoleHit at poles of the family.
struct TFamily {
  int N = 0;
  int dim = 0;
  std::function<std::vector<Mat>(const Rat&)> eval;

  static const Mat& block(const std::vector<Mat>& blocks, int N, int i, int j) {
    return blocks[static_cast<std::size_t>(i - 1) * N + (j - 1)];
  }
};

namespace detail {

inline Mat assemble_blocks(const std::vector<Mat>& blocks, int N, int dim) {
  Mat big(N * dim, N * dim);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const Mat& b = blocks[static_cast<std::size_t>(i) * N + j];
      for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) big.at(i * dim + r, j * dim + c) = b.at(r, c);
    }
  return big;
}

inline std::vector<Mat> split_blocks(const Mat& big, int N, int dim) {
  std::vector<Mat> out;
  out.reserve(static_cast<std::size_t>(N) * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Mat b(dim, dim);
      for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) b.at(r, c) = big.at(i * dim + r, j * dim + c);
      out.push_back(std::move(b));
    }
  return out;
}

inline Mat unit_mat(int n, int i, int j) {
  Mat m(n, n);
  m.at(i - 1, j - 1) = 1;
  return m;
}

inline Mat vstack(const std::vector<Mat>& parts) {
  int cols = parts.at(0).cols();
  int rows = 0;
  for (const auto& p : parts) rows += p.rows();
  Mat out(rows, cols);
  int r0 = 0;
  for (const auto& p : parts) {
    for (int r = 0; r < p.rows(); ++r)
      for (int c = 0; c < cols; ++c) out.at(r0 + r, c) = p.at(r, c);
    r0 += p.rows();
  }
  return out;
}

}  // namespace detail

// Single shifted skew factor: the classical module is built on the ambient
// highest-weight space, the generating matrix is obtained by the double
// block inversion recipe, and the result is restricted to the span of
// arrays with pinned bottom rows.  The restriction is checked to be
// invariant at every evaluation point.
inline TFamily evaluation_T(const YangianFactor& f, int N) {
  if (f.K() - f.M() != N) throw InvalidWeight("lambda must have M + N parts");
  auto mod = std::make_shared<GLModule>(build_gl_module(f.K(), f.lambda));
  auto sub = std::make_shared<Subspace>(singular_subspace(*mod, f.M(), f.mu));
  TFamily t;
  t.N = N;
  t.dim = sub->dim();
  Rat h = f.h;
  int M = f.M(), K = f.K();
  t.eval = [mod, sub, h, M, K, N](const Rat& u) {
    Rat up = u + h;
    if (up == 0) throw PoleHit("evaluation point at the pole");
    int D = mod->dim();
    // ambient first matrix: identity plus transposed generators over u'
    std::vector<Mat> first(static_cast<std::size_t>(K) * K);
    Rat inv_up = Rat(1) / up;
    for (int i = 1; i <= K; ++i)
      for (int j = 1; j <= K; ++j) {
        Mat b = inv_up * mod->E(j, i);
        if (i == j) b = b + Mat::identity(D);
        first[static_cast<std::size_t>(i - 1) * K + (j - 1)] = std::move(b);
      }
    Mat big = detail::assemble_blocks(first, K, D);
    Mat inv1;
    try {
      inv1 = mat_inverse(big);
    } catch (const SingularMatrix&) {
      throw PoleHit("first block inversion singular at this point");
    }
    // corner sub-array of the inverse, then the second inversion
    std::vector<Mat> corner = detail::split_blocks(inv1, K, D);
    std::vector<Mat> sub_blocks;
    sub_blocks.reserve(static_cast<std::size_t>(N) * N);
    for (int a = 1; a <= N; ++a)
      for (int b = 1; b <= N; ++b)
        sub_blocks.push_back(corner[static_cast<std::size_t>(M + a - 1) * K + (M + b - 1)]);
    Mat big2 = detail::assemble_blocks(sub_blocks, N, D);
    Mat inv2;
    try {
      inv2 = mat_inverse(big2);
    } catch (const SingularMatrix&) {
      throw PoleHit("second block inversion singular at this point");
    }
    std::vector<Mat> full = detail::split_blocks(inv2, N, D);
    std::vector<Mat> out;
    out.reserve(full.size());
    for (auto& b : full) {
      bool inv_ok = true;
      Mat r = sub->restrict_op(b, &inv_ok);
      if (!inv_ok) throw SubspaceNotInvariant("pinned-row span not preserved");
      out.push_back(std::move(r));
    }
    return out;
  };
  return t;
}

// Tensor product family: the block matrix product with Kronecker-lifted
// entries, left factor most significant in the product basis.
inline TFamily tensor_T(const std::vector<TFamily>& factors) {
  if (factors.empty()) throw InvalidWeight("empty tensor product");
  TFamily t;
  t.N = factors[0].N;
  t.dim = 1;
  for (const auto& f : factors) {
    if (f.N != t.N) throw ShapeMismatch("tensor factors with different rank");
    t.dim *= f.dim;
  }
  int N = t.N;
  t.eval = [factors, N](const Rat& u) {
    std::vector<Mat> acc = factors[0].eval(u);
    int acc_dim = factors[0].dim;
    for (std::size_t s = 1; s < factors.size(); ++s) {
      std::vector<Mat> nxt = factors[s].eval(u);
      int nxt_dim = factors[s].dim;
      std::vector<Mat> prod(static_cast<std::size_t>(N) * N,
                            Mat(acc_dim * nxt_dim, acc_dim * nxt_dim));
      for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
          Mat sum(acc_dim * nxt_dim, acc_dim * nxt_dim);
          for (int k = 1; k <= N; ++k)
            sum = sum + kron(TFamily::block(acc, N, i, k), TFamily::block(nxt, N, k, j));
          prod[static_cast<std::size_t>(i - 1) * N + (j - 1)] = std::move(sum);
        }
      acc = std::move(prod);
      acc_dim *= nxt_dim;
    }
    return acc;
  };
  return t;
}

// Alternating sum over permutations of the column tuple, with successive
// arguments u, u-1, ..., u-m+1 multiplied left to right.
inline Mat quantum_minor(const TFamily& t, const std::vector<int>& rows,
                         const std::vector<int>& cols, const Rat& u) {
  if (rows.size() != cols.size()) throw ShapeMismatch("minor row/column tuple lengths");
  int m = static_cast<int>(rows.size());
  if (m == 0) return Mat::identity(t.dim);
  std::vector<std::vector<Mat>> at_shift;
  at_shift.reserve(m);
  for (int k = 0; k < m; ++k) at_shift.push_back(t.eval(u - rat(k)));
  std::vector<int> perm(m);
  for (int k = 0; k < m; ++k) perm[k] = k;
  Mat acc(t.dim, t.dim);
  do {
    int inv = 0;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        if (perm[a] > perm[b]) ++inv;
    Mat term = TFamily::block(at_shift[0], t.N, rows[0], cols[perm[0]]);
    for (int k = 1; k < m; ++k)
      term = term * TFamily::block(at_shift[k], t.N, rows[k], cols[perm[k]]);
    acc = (inv % 2 == 0) ? acc + term : acc - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

namespace detail {
inline std::vector<int> iota1(int m) {
  std::vector<int> v(m);
  for (int i = 0; i < m; ++i) v[i] = i + 1;
  return v;
}
inline std::vector<int> iota1_skip_last(int m) {
  // (1, ..., m-1, m+1)
  std::vector<int> v = iota1(m);
  v[m - 1] = m + 1;
  return v;
}
}  // namespace detail

// The four named corner minors.  The diagonal family uses the leading
// principal tuple; the off-diagonal ones swap the last index for m+1.
inline Mat minor_A(const TFamily& t, int m, const Rat& u) {
  return quantum_minor(t, detail::iota1(m), detail::iota1(m), u);
}
inline Mat minor_B(const TFamily& t, int m, const Rat& u) {
  return quantum_minor(t, detail::iota1(m), detail::iota1_skip_last(m), u);
}
inline Mat minor_C(const TFamily& t, int m, const Rat& u) {
  return quantum_minor(t, detail::iota1_skip_last(m), detail::iota1(m), u);
}
inline Mat minor_D(const TFamily& t, int m, const Rat& u) {
  return quantum_minor(t, detail::iota1_skip_last(m), detail::iota1_skip_last(m), u);
}

// Twist by sign flip of the argument followed by block-matrix inversion.
inline TFamily sigma_transform(const TFamily& base) {
  TFamily t;
  t.N = base.N;
  t.dim = base.dim;
  int N = base.N, dim = base.dim;
  auto eval = base.eval;
  t.eval = [eval, N, dim](const Rat& u) {
    std::vector<Mat> b = eval(-u);
    Mat big = detail::assemble_blocks(b, N, dim);
    Mat inv;
    try {
      inv = mat_inverse(big);
    } catch (const SingularMatrix&) {
      throw PoleHit("twist inversion singular at this point");
    }
    return detail::split_blocks(inv, N, dim);
  };
  return t;
}

// Twist by block-matrix inversion composed with the index reversal
// (i, j) -> (N - j + 1, N - i + 1).
inline TFamily tau_transform(const TFamily& base) {
  TFamily t;
  t.N = base.N;
  t.dim = base.dim;
  int N = base.N, dim = base.dim;
  auto eval = base.eval;
  t.eval = [eval, N, dim](const Rat& u) {
    std::vector<Mat> b = eval(u);
    Mat big = detail::assemble_blocks(b, N, dim);
    Mat inv;
    try {
      inv = mat_inverse(big);
    } catch (const SingularMatrix&) {
      throw PoleHit("twist inversion singular at this point");
    }
    std::vector<Mat> ib = detail::split_blocks(inv, N, dim);
    std::vector<Mat> out(static_cast<std::size_t>(N) * N);
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j)
        out[static_cast<std::size_t>(i - 1) * N + (j - 1)] =
            TFamily::block(ib, N, N - j + 1, N - i + 1);
    return out;
  };
  return t;
}

// Exchange relation at a pair of distinct points, on the double auxiliary
// space: ((u - v) Id + P) T1(u) T2(v) == T2(v) T1(u) ((u - v) Id + P).
inline bool verify_rtt(const TFamily& t, const Rat& u, const Rat& v) {
  if (u == v) throw DuplicateNode("exchange check needs distinct points");
  int N = t.N, dim = t.dim;
  std::vector<Mat> Tu = t.eval(u), Tv = t.eval(v);
  Mat idN = Mat::identity(N), idD = Mat::identity(dim);
  int big = N * N * dim;
  Mat T1(big, big), T2(big, big), P(big, big);
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      Mat eij = detail::unit_mat(N, i, j);
      T1 = T1 + kron(kron(eij, idN), TFamily::block(Tu, N, i, j));
      T2 = T2 + kron(kron(idN, eij), TFamily::block(Tv, N, i, j));
      P = P + kron(kron(eij, detail::unit_mat(N, j, i)), idD);
    }
  Mat R = (u - v) * Mat::identity(big) + P;
  return R * T1 * T2 == T2 * T1 * R;
}

struct OracleDrinfeld {
  std::vector<Rat> singular_vector;  // spanning the joint kernel line
  std::vector<Poly> P;               // monic characteristic polynomials, index m-1
};

namespace detail {

// Monic polynomial of minimal degree with P(u-1)/P(u) matching the samples.
// Uniqueness: the ratio of two solutions is invariant under the unit shift,
// hence constant, so the monic solution of the successful degree is unique.
inline Poly monic_from_shift_ratio(const std::vector<std::pair<Rat, Rat>>& samples,
                                   int degree_cap) {
  for (int d = 0; d <= degree_cap; ++d) {
    if (d == 0) {
      bool ok = true;
      for (const auto& [u, v] : samples)
        if (v != 1) ok = false;
      if (ok) return Poly::one();
      continue;
    }
    if (static_cast<int>(samples.size()) < d + 2) break;
    // unknowns c_0..c_{d-1}; equation P(u-1) - v P(u) = 0 per sample,
    // homogenized with the monic top coefficient as an extra coordinate
    Mat sys(static_cast<int>(samples.size()), d + 1);
    for (int p = 0; p < static_cast<int>(samples.size()); ++p) {
      const Rat& u = samples[p].first;
      const Rat& v = samples[p].second;
      Rat pw_lo(1), pw_hi(1);
      Rat um1 = u - 1;
      for (int k = 0; k <= d; ++k) {
        sys.at(p, k) = pw_lo - v * pw_hi;
        pw_lo *= um1;
        pw_hi *= u;
      }
    }
    auto ker = mat_kernel(sys);
    if (ker.size() != 1 || ker[0][d] == 0) continue;
    Rat scale = Rat(1) / ker[0][d];
    std::vector<Rat> coeffs(d + 1);
    for (int k = 0; k <= d; ++k) coeffs[k] = scale * ker[0][k];
    return Poly(std::move(coeffs));
  }
  throw FunctionalEquationUnsolvable("no monic solution within the degree cap");
}

}  // namespace detail

// Independent reconstruction: find the joint kernel line of the lower
// corner minors sampled until stable, read off the diagonal-minor
// eigenvalues on that line, and solve the shift functional equation for
// each monic characteristic polynomial.
inline OracleDrinfeld drinfeld_from_singular(const TFamily& t, std::uint64_t seed,
                                             int degree_cap = 24) {
  int N = t.N, dim = t.dim;
  SampleStream stream(seed);
  OracleDrinfeld out;

  // joint kernel of the lower corner minors, sampled until stable
  std::vector<Mat> stacked;
  std::vector<std::vector<Rat>> line;
  if (N == 1) {
    line = {std::vector<Rat>(dim, Rat(0))};
    if (dim != 1) {
      // with no lower minors the line is only determined for 1-dim modules
      throw NonUniqueSingularLine("rank one reconstruction needs a 1-dim module");
    }
    line[0][0] = 1;
  } else {
    int stable_rounds = 0;
    int rounds = 0;
    while (stable_rounds < 2) {
      if (++rounds > 200) throw NonUniqueSingularLine("joint kernel did not stabilize");
      Rat u = stream.next();
      bool added = false;
      for (int m = 1; m <= N - 1; ++m) {
        try {
          stacked.push_back(minor_C(t, m, u));
          added = true;
        } catch (const PoleHit&) {
        }
      }
      if (!added) continue;
      auto ker = mat_kernel(detail::vstack(stacked));
      if (ker.empty()) throw NoSingularVector("joint kernel of lower minors is zero");
      if (ker.size() == 1 && !line.empty() && ker == line)
        ++stable_rounds;
      else
        stable_rounds = (ker.size() == 1) ? 1 : 0;
      line = std::move(ker);
    }
  }
  out.singular_vector = line[0];

  // eigenvalue of a diagonal minor on the line, with a proportionality check
  auto eigen_on_line = [&](int m, const Rat& u) {
    Mat v = minor_A(t, m, u).apply(out.singular_vector);
    int pivot = -1;
    for (int i = 0; i < dim; ++i)
      if (out.singular_vector[i] != 0) {
        pivot = i;
        break;
      }
    Rat scale = v.at(pivot, 0) / out.singular_vector[pivot];
    for (int i = 0; i < dim; ++i)
      if (v.at(i, 0) != scale * out.singular_vector[i])
        throw RelationViolated("line is not an eigenvector of a diagonal minor");
    return scale;
  };

  for (int m = 1; m <= N - 1; ++m) {
    std::vector<std::pair<Rat, Rat>> samples;
    SampleStream pts(seed ^ (0xabcdefull + m));
    while (static_cast<int>(samples.size()) < degree_cap + 3) {
      Rat u = pts.next();
      try {
        Rat num = eigen_on_line(m + 1, u) * eigen_on_line(m - 1, u - 1);
        Rat den = eigen_on_line(m, u) * eigen_on_line(m, u - 1);
        if (den == 0) continue;
        samples.emplace_back(u, num / den);
      } catch (const PoleHit&) {
      }
    }
    out.P.push_back(detail::monic_from_shift_ratio(samples, degree_cap));
  }

  // independent sanity: the line is killed by the entries below the
  // diagonal, and consecutive diagonal entries at shifted arguments act on
  // it in the ratio of the reconstructed polynomials
  {
    SampleStream pts(seed ^ 0x515151ULL);
    int done = 0;
    while (done < 2) {
      Rat u = pts.next();
      try {
        std::vector<Mat> blocks = t.eval(u);
        for (int i = 1; i <= N; ++i)
          for (int j = 1; j < i; ++j) {
            Mat w = TFamily::block(blocks, N, i, j).apply(out.singular_vector);
            if (!w.is_zero())
              throw RelationViolated("line not annihilated below the diagonal");
          }
        for (int m = 1; m <= N - 1; ++m) {
          const Poly& P = out.P[m - 1];
          if (P(u) == 0) continue;
          std::vector<Mat> shifted = t.eval(u - rat(m));
          Mat hi = TFamily::block(shifted, N, m + 1, m + 1).apply(out.singular_vector);
          Mat lo = TFamily::block(shifted, N, m, m).apply(out.singular_vector);
          Rat ratio = P(u - 1) / P(u);
          for (int i = 0; i < dim; ++i)
            if (hi.at(i, 0) != ratio * lo.at(i, 0))
              throw RelationViolated("diagonal-entry ratio identity fails on the line");
        }
        ++done;
      } catch (const PoleHit&) {
      }
    }
  }
  return out;
}

// Convenience: the full family for a parameter bundle.
inline TFamily oracle_family(const ModuleSpec& spec) {
  spec.validate();
  std::vector<TFamily> fams;
  fams.reserve(spec.factors.size());
  for (const auto& f : spec.factors) fams.push_back(evaluation_T(f, spec.N));
  return fams.size() == 1 ? fams[0] : tensor_T(fams);
}

}  // namespace ygz

#endif  // YGZ_ORACLE_HPP
