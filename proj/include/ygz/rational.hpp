#ifndef YGZ_RATIONAL_HPP
#define YGZ_RATIONAL_HPP

// Exact rational scalars (GMP) plus parsing/formatting and the deterministic
// seeded sample-point stream used by all pointwise identity checks.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ygz {

using Rat = mpq_class;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p", "p/q"; always canonicalizes.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw ParseError("bad rational literal: " + s);
  if (r.get_den() == 0) throw ParseError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

// "p/q" with the "/q" omitted for integers (mpq_get_str convention).
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Floor of a rational, exact.
inline mpz_class rat_floor(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

// Deterministic stream of rational sample points.  Values have the shape
// k + a/b with a small prime b, so they never land on the integer-shifted
// pole lattices of the evaluated families.  Points already emitted and
// points in the caller's exclusion list are skipped.
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed, std::vector<Rat> exclude = {})
      : state_(seed ? seed : 0x9e3779b97f4a7c15ull), exclude_(std::move(exclude)) {}

  void exclude(const Rat& r) { exclude_.push_back(r); }

  Rat next() {
    for (int tries = 0; tries < 100000; ++tries) {
      std::uint64_t r = step();
      static const long dens[8] = {7, 11, 13, 17, 19, 23, 29, 31};
      long den = dens[r & 7];
      long ip = static_cast<long>((r >> 3) % 401) - 200;
      long a = 1 + static_cast<long>((r >> 13) % static_cast<std::uint64_t>(den - 1));
      Rat v = rat(ip) + rat(a, den);
      if (seen(v)) continue;
      used_.push_back(v);
      return v;
    }
    throw std::runtime_error("sample stream exhausted");
  }

 private:
  bool seen(const Rat& v) const {
    for (const auto& x : exclude_)
      if (x == v) return true;
    for (const auto& x : used_)
      if (x == v) return true;
    return false;
  }

  std::uint64_t step() {
    std::uint64_t x = state_;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    state_ = x;
    return x;
  }

  std::uint64_t state_;
  std::vector<Rat> exclude_;
  std::vector<Rat> used_;
};

}  // namespace ygz

#endif  // YGZ_RATIONAL_HPP
