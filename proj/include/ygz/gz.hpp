#ifndef YGZ_GZ_HPP
#define YGZ_GZ_HPP

// Label combinatorics: triangular interlacing arrays, skew Young diagrams,
// the maximal array, the diagram ladder and the diagram polynomials.

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ygz/poly.hpp"
#include "ygz/rational.hpp"

namespace ygz {

// Non-increasing integer parts.
using Weight = std::vector<long>;

struct EmptySchemeSet : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ColumnTooTall : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidWeight : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_non_increasing(const Weight& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] < w[i]) return false;
  return true;
}

// Triangular array (entry(l, i) | 1 <= i <= l <= K), row K on top.
struct GZArray {
  std::vector<std::vector<long>> rows;  // rows[l-1] has l entries

  int K() const { return static_cast<int>(rows.size()); }
  long entry(int l, int i) const { return rows[l - 1][i - 1]; }
  long& entry(int l, int i) { return rows[l - 1][i - 1]; }

  friend bool operator==(const GZArray& a, const GZArray& b) { return a.rows == b.rows; }
  friend bool operator!=(const GZArray& a, const GZArray& b) { return !(a == b); }
  friend bool operator<(const GZArray& a, const GZArray& b) {
    // canonical order: lexicographic on rows read top to bottom
    if (a.rows.size() != b.rows.size()) return a.rows.size() < b.rows.size();
    for (int l = a.K(); l >= 1; --l)
      if (a.rows[l - 1] != b.rows[l - 1]) return a.rows[l - 1] < b.rows[l - 1];
    return false;
  }

  std::string str() const {
    std::string out;
    for (int l = K(); l >= 1; --l) {
      out += "(";
      for (int i = 1; i <= l; ++i) {
        if (i > 1) out += ",";
        out += std::to_string(entry(l, i));
      }
      out += ")";
    }
    return out;
  }
};

// Interlacing: entry(l, i) >= entry(l-1, i) >= entry(l, i+1).
inline bool is_scheme(const GZArray& a) {
  for (int l = 2; l <= a.K(); ++l)
    for (int i = 1; i <= l - 1; ++i)
      if (!(a.entry(l, i) >= a.entry(l - 1, i) && a.entry(l - 1, i) >= a.entry(l, i + 1)))
        return false;
  return true;
}

inline long scheme_degree(const GZArray& a) {
  long d = 0;
  for (const auto& row : a.rows)
    for (long x : row) d += x;
  return d;
}

// All interlacing arrays with the given top row, canonical order.
inline std::vector<GZArray> enumerate_schemes(const Weight& lambda) {
  if (!is_non_increasing(lambda)) throw InvalidWeight("weight parts must be non-increasing");
  int K = static_cast<int>(lambda.size());
  std::vector<GZArray> out;
  GZArray cur;
  cur.rows.assign(K, {});
  cur.rows[K - 1] = lambda;
  // fill rows K-1 down to 1; each row enumerated in ascending lexicographic order
  std::function<void(int)> rec = [&](int l) {
    if (l == 0) {
      out.push_back(cur);
      return;
    }
    const std::vector<long>& upper = cur.rows[l];  // row l+1
    std::vector<long> row(l);
    std::function<void(int)> fill = [&](int i) {
      if (i == l) {
        cur.rows[l - 1] = row;
        rec(l - 1);
        return;
      }
      long lo = upper[i + 1], hi = upper[i];
      for (long v = lo; v <= hi; ++v) {
        row[i] = v;
        fill(i + 1);
      }
    };
    fill(0);
  };
  rec(K - 1);
  return out;
}

// Subset with rows 1..M pinned to mu.
inline std::vector<GZArray> enumerate_schemes_lm(const Weight& lambda, const Weight& mu) {
  int M = static_cast<int>(mu.size());
  if (M >= static_cast<int>(lambda.size()))
    throw InvalidWeight("mu must have fewer parts than lambda");
  std::vector<GZArray> out;
  for (auto& s : enumerate_schemes(lambda)) {
    bool ok = true;
    for (int l = 1; l <= M && ok; ++l)
      for (int i = 1; i <= l; ++i)
        if (s.entry(l, i) != mu[i - 1]) {
          ok = false;
          break;
        }
    if (ok) out.push_back(std::move(s));
  }
  return out;
}

// The degree-maximal interlacing array with rows 1..M pinned to mu:
// entries mu_i below row M, min(lambda_i, mu_{i-l+M}) on the mixed range,
// lambda_i on the pure range.
inline GZArray top_scheme(const Weight& lambda, const Weight& mu) {
  int K = static_cast<int>(lambda.size());
  int M = static_cast<int>(mu.size());
  GZArray a;
  a.rows.assign(K, {});
  for (int l = 1; l <= K; ++l) {
    a.rows[l - 1].resize(l);
    for (int i = 1; i <= l; ++i) {
      long v;
      if (l < M) {
        v = mu[i - 1];
      } else if (i > l - M) {
        v = lambda[i - 1];
        int k = i - l + M;  // index into mu
        if (k >= 1 && k <= M) v = std::min(lambda[i - 1], mu[k - 1]);
      } else {
        v = lambda[i - 1];
      }
      a.entry(l, i) = v;
    }
  }
  if (!is_scheme(a)) throw EmptySchemeSet("no interlacing array matches these weights");
  for (int l = 1; l <= M; ++l)
    for (int i = 1; i <= l; ++i)
      if (a.entry(l, i) != mu[i - 1]) throw EmptySchemeSet("no interlacing array matches these weights");
  return a;
}

// Skew diagram {(i,j) : beta_i >= j > gamma_i}, both boundary sequences
// non-increasing and eventually equal to `stable`.
struct SkewDiagram {
  std::vector<long> beta, gamma;  // finite prefixes of equal length
  long stable = 0;

  int prefix_len() const { return static_cast<int>(beta.size()); }
  long beta_at(int i) const { return i <= prefix_len() ? beta[i - 1] : stable; }
  long gamma_at(int i) const { return i <= prefix_len() ? gamma[i - 1] : stable; }

  void validate() const {
    if (beta.size() != gamma.size()) throw InvalidWeight("boundary prefix lengths differ");
    for (int i = 1; i <= prefix_len(); ++i) {
      if (beta_at(i) < gamma_at(i)) throw InvalidWeight("upper boundary below lower boundary");
      if (i > 1 && (beta_at(i - 1) < beta_at(i) || gamma_at(i - 1) < gamma_at(i)))
        throw InvalidWeight("boundary sequences must be non-increasing");
    }
    if (!beta.empty() && (beta.back() < stable || gamma.back() < stable))
      throw InvalidWeight("boundary sequences must end at the stable value");
  }

  // All boxes, row by row.
  std::vector<std::pair<long, long>> boxes() const {
    std::vector<std::pair<long, long>> out;
    for (int i = 1; i <= prefix_len(); ++i)
      for (long j = gamma_at(i) + 1; j <= beta_at(i); ++j) out.emplace_back(i, j);
    return out;
  }

  bool empty() const { return boxes().empty(); }

  friend bool operator==(const SkewDiagram& a, const SkewDiagram& b) {
    return a.boxes() == b.boxes();
  }
};

struct ColumnInfo {
  int height;
  long bottom_content;  // content j - i of the lowest box
};

// Per nonempty column j: box count and the content of its lowest box.
inline std::map<long, ColumnInfo> column_profile(const SkewDiagram& d) {
  std::map<long, std::pair<long, long>> span;  // j -> (min row, max row)
  for (auto [i, j] : d.boxes()) {
    auto it = span.find(j);
    if (it == span.end())
      span[j] = {i, i};
    else {
      it->second.first = std::min(it->second.first, i);
      it->second.second = std::max(it->second.second, i);
    }
  }
  std::map<long, ColumnInfo> out;
  for (auto& [j, s] : span)
    out[j] = ColumnInfo{static_cast<int>(s.second - s.first + 1), j - s.second};
  return out;
}

// Diagram ladder: skew diagram between row M+m of the maximal array and the
// mu row, both padded with lambda_{M+N}.
inline SkewDiagram kappa_diagram(const Weight& lambda, const Weight& mu, int m) {
  int K = static_cast<int>(lambda.size());
  int M = static_cast<int>(mu.size());
  if (m < 0 || M + m > K) throw InvalidWeight("ladder index out of range");
  GZArray kappa = top_scheme(lambda, mu);
  long pad = lambda[K - 1];
  int len = M + m;
  SkewDiagram d;
  d.stable = pad;
  d.beta.resize(len);
  d.gamma.resize(len);
  for (int i = 1; i <= len; ++i) {
    d.beta[i - 1] = kappa.entry(M + m, i);
    d.gamma[i - 1] = (i <= M) ? mu[i - 1] : pad;
  }
  d.validate();
  return d;
}

// Monic product of (u + k) over bottom contents k of the height-m columns.
inline Poly diagram_drinfeld_poly(const SkewDiagram& d, int m, int N) {
  Poly p = Poly::one();
  for (auto& [j, info] : column_profile(d)) {
    (void)j;
    if (info.height > N) throw ColumnTooTall("diagram column exceeds the rank bound");
    if (info.height == m) p = p * Poly::linear(rat(info.bottom_content));
  }
  return p;
}

}  // namespace ygz

#endif  // YGZ_GZ_HPP
