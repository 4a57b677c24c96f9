#ifndef YGZ_TAME_HPP
#define YGZ_TAME_HPP

// Classification layer: zero data of the characteristic polynomials, the
// separation condition, the constructive factorization of tame zero data
// into a tensor-product parameter bundle, the semisimplicity probe for the
// commutative subalgebra generated by the diagonal family, and a seeded
// sampler of tame zero data.

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ygz/engine.hpp"
#include "ygz/gz.hpp"
#include "ygz/matrix.hpp"
#include "ygz/module_spec.hpp"
#include "ygz/oracle.hpp"
#include "ygz/poly.hpp"
#include "ygz/rational.hpp"

namespace ygz {

struct NotTame : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Zeros z of the monic characteristic polynomials prod (u + z), one list
// per index m = 1..N-1.
struct ZeroData {
  int N = 0;
  std::vector<std::vector<Rat>> zeros;  // index m-1

  void validate() const {
    if (N < 1) throw InvalidWeight("rank must be positive");
    if (static_cast<int>(zeros.size()) != N - 1)
      throw InvalidWeight("need one zero list per index 1..N-1");
  }

  int total() const {
    int c = 0;
    for (const auto& v : zeros) c += static_cast<int>(v.size());
    return c;
  }
};

// "m=1:0,5;m=2:1" (levels without zeros may be omitted)
inline ZeroData parse_zeros(int N, const std::string& text) {
  ZeroData z;
  z.N = N;
  z.zeros.assign(N > 0 ? N - 1 : 0, {});
  std::stringstream ss(text);
  std::string seg;
  while (std::getline(ss, seg, ';')) {
    if (seg.empty()) continue;
    auto eq = seg.find('=');
    auto colon = seg.find(':');
    if (seg.rfind("m", 0) != 0 || eq != 1 || colon == std::string::npos || colon < eq)
      throw ParseError("bad zero list segment: " + seg);
    int m = 0;
    try {
      m = std::stoi(seg.substr(2, colon - 2));
    } catch (const std::exception&) {
      throw ParseError("bad zero list segment: " + seg);
    }
    if (m < 1 || m > N - 1) throw ParseError("zero list index out of range: " + seg);
    std::string vals = seg.substr(colon + 1);
    std::stringstream vs(vals);
    std::string tok;
    while (std::getline(vs, tok, ','))
      if (!tok.empty()) z.zeros[m - 1].push_back(parse_rat(tok));
  }
  z.validate();
  return z;
}

inline std::string zeros_str(const ZeroData& z) {
  std::string out;
  for (int m = 1; m <= z.N - 1; ++m) {
    if (z.zeros[m - 1].empty()) continue;
    if (!out.empty()) out += ";";
    out += "m=" + std::to_string(m) + ":";
    for (std::size_t i = 0; i < z.zeros[m - 1].size(); ++i) {
      if (i) out += ",";
      out += rat_str(z.zeros[m - 1][i]);
    }
  }
  return out;
}

// Separation condition: for indices l <= m, the difference of a level-l
// zero and a level-m zero never lies in {0, ..., m-l}, except for a zero
// compared with itself.
inline bool is_tame(const ZeroData& z, std::string* witness = nullptr) {
  z.validate();
  for (int l = 1; l <= z.N - 1; ++l)
    for (int m = l; m <= z.N - 1; ++m)
      for (std::size_t i = 0; i < z.zeros[l - 1].size(); ++i)
        for (std::size_t j = 0; j < z.zeros[m - 1].size(); ++j) {
          if (l == m && i == j) continue;
          Rat d = z.zeros[l - 1][i] - z.zeros[m - 1][j];
          if (!is_integer(d)) continue;
          long v = d.get_num().get_si();
          if (v >= 0 && v <= m - l) {
            if (witness)
              *witness = "(" + std::to_string(l) + "," + std::to_string(i + 1) + ")-(" +
                         std::to_string(m) + "," + std::to_string(j + 1) +
                         ") diff " + rat_str(d);
            return false;
          }
        }
  return true;
}

namespace detail {

struct TaggedZero {
  Rat value;
  int level;
};

}  // namespace detail

// Constructive converse of the separation condition: partition the zeros
// into integer-difference classes, realize each class as one skew factor
// (each zero contributing one column of its level's height), and return the
// resulting tensor-product bundle.  Shift differences across factors are
// non-integral by construction.  The reassembled characteristic
// polynomials are verified against the input before returning.
inline ModuleSpec factorize(const ZeroData& z) {
  z.validate();
  if (!is_tame(z)) throw NotTame("zero data violates the separation condition");
  ModuleSpec spec;
  spec.N = z.N;

  std::vector<detail::TaggedZero> all;
  for (int m = 1; m <= z.N - 1; ++m)
    for (const Rat& v : z.zeros[m - 1]) all.push_back({v, m});

  if (all.empty()) {
    YangianFactor f;
    f.lambda.assign(z.N, 0);
    spec.factors.push_back(std::move(f));
    spec.validate();
    return spec;
  }

  // integer-difference classes
  std::vector<std::vector<detail::TaggedZero>> classes;
  for (const auto& tz : all) {
    bool placed = false;
    for (auto& cls : classes)
      if (is_integer(tz.value - cls[0].value)) {
        cls.push_back(tz);
        placed = true;
        break;
      }
    if (!placed) classes.push_back({tz});
  }

  for (auto& cls : classes) {
    std::sort(cls.begin(), cls.end(),
              [](const detail::TaggedZero& a, const detail::TaggedZero& b) {
                return a.value > b.value;
              });
    const Rat& z1 = cls[0].value;
    int q = cls[0].level;

    // one column per class member: column q-k+1, spanning the rows whose
    // contents run from z_k - z1 up through z_k - z1 + level - 1
    std::vector<std::pair<long, long>> boxes;  // (row, column)
    for (std::size_t k = 0; k < cls.size(); ++k) {
      Rat diff = cls[k].value - z1;  // integer, <= 0
      long off = mpz_class(diff.get_num()).get_si();
      long col = q - static_cast<long>(k);
      long bottom = col - off;
      for (int t = 0; t < cls[k].level; ++t) boxes.emplace_back(bottom - t, col);
    }

    // translate rows so the top row is 1; columns stay put (the boundary
    // sequences may go negative, which the weights accommodate); shifting a
    // row changes every content by the same amount, compensated in h
    long imin = boxes[0].first;
    for (auto& [i, j] : boxes) imin = std::min(imin, i);
    long di = 1 - imin;
    Rat h = z1 + rat(di);
    for (auto& [i, j] : boxes) i += di;

    long R = 0;
    for (auto& [i, j] : boxes) R = std::max(R, i);
    std::vector<long> beta(R, 0), gamma(R, 0);
    std::vector<bool> occupied(R, false);
    std::vector<long> count(R, 0);
    for (auto& [i, j] : boxes) {
      if (!occupied[i - 1]) {
        beta[i - 1] = j;
        gamma[i - 1] = j - 1;
        occupied[i - 1] = true;
      } else {
        beta[i - 1] = std::max(beta[i - 1], j);
        gamma[i - 1] = std::min(gamma[i - 1], j - 1);
      }
      ++count[i - 1];
    }
    for (long i = 1; i <= R; ++i) {
      if (!occupied[i - 1]) continue;
      if (beta[i - 1] - gamma[i - 1] != count[i - 1])
        throw NotTame("class does not assemble into a skew shape");
    }
    // fill empty rows with the width-zero row at the next occupied row's edge
    for (long i = R; i >= 1; --i)
      if (!occupied[i - 1] && i < R) beta[i - 1] = gamma[i - 1] = beta[i];
    for (long i = 2; i <= R; ++i)
      if (beta[i - 2] < beta[i - 1] || gamma[i - 2] < gamma[i - 1])
        throw NotTame("class does not assemble into a skew shape");

    // the lower boundary of the last occupied row is the stable padding value
    long stable = gamma[R - 1];
    long M = 0;
    for (long i = 1; i <= R; ++i)
      if (gamma[i - 1] != stable) M = i;
    if (R > M + z.N) throw NotTame("class needs a column taller than the rank");

    YangianFactor f;
    f.h = h;
    for (long i = 1; i <= M; ++i) f.mu.push_back(gamma[i - 1]);
    for (long i = 1; i <= M + z.N; ++i) f.lambda.push_back(i <= R ? beta[i - 1] : stable);
    spec.factors.push_back(std::move(f));
  }

  spec.validate();

  // reassembly check: the bundle reproduces the input zeros exactly
  std::vector<Poly> polys = drinfeld_polys(spec);
  for (int m = 1; m <= z.N - 1; ++m) {
    Poly want = Poly::one();
    for (const Rat& v : z.zeros[m - 1]) want = want * Poly::linear(v);
    if (polys[m - 1] != want)
      throw std::logic_error("factorization failed to reproduce the zero data");
  }
  return spec;
}

// Zero data of a bundle, read off the diagram ladder.
inline ZeroData zeros_of_spec(const ModuleSpec& spec) {
  ZeroData z;
  z.N = spec.N;
  z.zeros.assign(spec.N - 1, {});
  for (const auto& f : spec.factors) {
    SkewDiagram d = kappa_diagram(f.lambda, f.mu, spec.N);
    for (auto& [j, info] : column_profile(d)) {
      (void)j;
      if (info.height >= 1 && info.height <= spec.N - 1)
        z.zeros[info.height - 1].push_back(rat(info.bottom_content) + f.h);
    }
  }
  return z;
}

// Interpolates the polynomial form of one diagonal minor of the brute-force
// family: rho_m(u) times the corner minor, degree r_m.
inline MatrixPoly oracle_diagonal_poly(const TFamily& t, const ModuleSpec& spec, int m,
                                       std::uint64_t seed) {
  int rm = rho_degree(spec, m);
  Poly rho = rho_poly(spec, m);
  SampleStream pts(seed);
  std::vector<std::pair<Rat, Mat>> samples;
  while (static_cast<int>(samples.size()) < rm + 1) {
    Rat u = pts.next();
    try {
      samples.emplace_back(u, rho(u) * minor_A(t, m, u));
    } catch (const PoleHit&) {
    }
  }
  return lagrange_interpolate(samples, rm);
}

// Semisimplicity of the commutative subalgebra generated by the diagonal
// family: all coefficient matrices must pairwise commute and each must have
// a squarefree minimal polynomial.
inline bool semisimplicity_test(const ModuleSpec& spec, std::uint64_t seed) {
  spec.validate();
  TFamily t = oracle_family(spec);
  std::vector<Mat> gens;
  for (int m = 1; m <= spec.N; ++m) {
    MatrixPoly p = oracle_diagonal_poly(t, spec, m, seed + m);
    for (const Mat& c : p.coeffs()) gens.push_back(c);
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  for (const Mat& g : gens)
    if (!is_squarefree(minimal_polynomial(g))) return false;
  return true;
}

// Seeded sampler of tame zero data with rank at most max_n and at most
// max_zeros zeros, by rejection.  Deterministic per seed.
inline ZeroData random_tame_zeros(std::uint64_t seed, int max_n = 4, int max_zeros = 8) {
  std::uint64_t state = seed ? seed : 0x9e3779b97f4a7c15ull;
  auto step = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  static const long dens[4] = {1, 2, 3, 5};
  for (int attempt = 0; attempt < 10000; ++attempt) {
    ZeroData z;
    z.N = 2 + static_cast<int>(step() % static_cast<std::uint64_t>(max_n - 1));
    z.zeros.assign(z.N - 1, {});
    int count = static_cast<int>(step() % static_cast<std::uint64_t>(max_zeros + 1));
    for (int k = 0; k < count; ++k) {
      int level = 1 + static_cast<int>(step() % static_cast<std::uint64_t>(z.N - 1));
      long den = dens[step() & 3];
      long ip = static_cast<long>(step() % 13) - 6;
      long num = static_cast<long>(step() % static_cast<std::uint64_t>(den));
      z.zeros[level - 1].push_back(rat(ip) + rat(num, den));
    }
    if (is_tame(z)) return z;
  }
  throw std::runtime_error("tame sampler failed to converge");
}

}  // namespace ygz

#endif  // YGZ_TAME_HPP
