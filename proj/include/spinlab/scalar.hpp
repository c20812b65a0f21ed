#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace spinlab {

/// Exact rational scalar backing every verification path.
using Rat = boost::multiprecision::mpq_rational;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

// ============================================================================
// Gaussian rationals
// ============================================================================

/// a + b*i with exact rational parts. Closed under +, -, *, conjugation, which
/// is all the identity checks need; division is only ever by rationals.
struct GQ {
  Rat re{0};
  Rat im{0};

  GQ() = default;
  GQ(int v) : re(v) {}  // NOLINT: implicit by design, mirrors integer literals
  GQ(Rat r) : re(std::move(r)) {}
  GQ(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GQ unit_im() { return GQ(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GQ conj() const { return GQ(re, -im); }
  /// re^2 + im^2 as an exact rational.
  Rat norm_sq() const { return re * re + im * im; }

  GQ& operator+=(const GQ& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GQ& operator-=(const GQ& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GQ& operator*=(const GQ& o) {
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend GQ operator+(GQ a, const GQ& b) { return a += b; }
  friend GQ operator-(GQ a, const GQ& b) { return a -= b; }
  friend GQ operator*(GQ a, const GQ& b) { return a *= b; }
  friend GQ operator-(const GQ& a) { return GQ(-a.re, -a.im); }
  friend bool operator==(const GQ& a, const GQ& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GQ& a, const GQ& b) { return !(a == b); }

  /// Division by a nonzero rational; full complex division is never needed.
  GQ div_rat(const Rat& r) const {
    if (r == 0) throw Error("GQ: division by zero rational");
    return GQ(re / r, im / r);
  }

  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

  std::string str() const {
    std::string s = re.str();
    if (im != 0) s += (im > 0 ? "+" : "") + im.str() + "i";
    return s;
  }
};

// ============================================================================
// Scalar traits
// ============================================================================

/// The templated core (forms, Clifford matrices, identity evaluators) is
/// generic over a commutative *-ring: GQ for exact runs, complex<double> for
/// spectral/curved-geometry runs, and the test-only polynomial ring for the
/// symbolic oracles.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<GQ> {
  static constexpr bool exact = true;
  static GQ zero() { return GQ(); }
  static GQ one() { return GQ(1); }
  static GQ unit_im() { return GQ::unit_im(); }
  static GQ from_rat(const Rat& r) { return GQ(r); }
  static GQ conj(const GQ& x) { return x.conj(); }
  static GQ re(const GQ& x) { return GQ(x.re); }
  static GQ im(const GQ& x) { return GQ(x.im); }
  static bool is_zero(const GQ& x) { return x.is_zero(); }
};

template <>
struct ScalarTraits<std::complex<double>> {
  static constexpr bool exact = false;
  using C = std::complex<double>;
  static C zero() { return {0.0, 0.0}; }
  static C one() { return {1.0, 0.0}; }
  static C unit_im() { return {0.0, 1.0}; }
  static C from_rat(const Rat& r) { return {to_double(r), 0.0}; }
  static C conj(const C& x) { return std::conj(x); }
  static C re(const C& x) { return {x.real(), 0.0}; }
  static C im(const C& x) { return {x.imag(), 0.0}; }
  static bool is_zero(const C& x) { return x == C(0.0, 0.0); }
};

template <class S>
S conj_of(const S& x) {
  return ScalarTraits<S>::conj(x);
}
template <class S>
S re_of(const S& x) {
  return ScalarTraits<S>::re(x);
}
template <class S>
S im_of(const S& x) {
  return ScalarTraits<S>::im(x);
}
/// i^k as a scalar, k taken mod 4.
template <class S>
S imag_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return ScalarTraits<S>::one();
    case 1: return ScalarTraits<S>::unit_im();
    case 2: return -ScalarTraits<S>::one();
    default: return -ScalarTraits<S>::unit_im();
  }
}
template <class S>
S rat_s(const Rat& r) {
  return ScalarTraits<S>::from_rat(r);
}
template <class S>
S rat_s(long num, long den) {
  return ScalarTraits<S>::from_rat(Rat(num) / Rat(den));
}

}  // namespace spinlab
