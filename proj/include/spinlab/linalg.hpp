#pragma once

#include <vector>

#include "spinlab/scalar.hpp"

namespace spinlab {

// Small dense matrices/vectors over an exact or floating scalar. Spinor
// representations never exceed 32x32, so nothing clever is needed here.

template <class S>
struct Vec {
  std::vector<S> v;

  Vec() = default;
  explicit Vec(int size) : v(static_cast<size_t>(size), ScalarTraits<S>::zero()) {}

  int size() const { return static_cast<int>(v.size()); }
  S& operator[](int i) { return v[static_cast<size_t>(i)]; }
  const S& operator[](int i) const { return v[static_cast<size_t>(i)]; }

  Vec& operator+=(const Vec& o) {
    for (size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    for (size_t i = 0; i < v.size(); ++i) v[i] -= o.v[i];
    return *this;
  }
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const S& c, Vec a) {
    for (auto& x : a.v) x = c * x;
    return a;
  }
  friend bool operator==(const Vec& a, const Vec& b) { return a.v == b.v; }

  bool is_zero() const {
    for (const auto& x : v)
      if (!ScalarTraits<S>::is_zero(x)) return false;
    return true;
  }
};

/// Dirac inner product of spinor values: antilinear in the first slot.
template <class S>
S inner(const Vec<S>& a, const Vec<S>& b) {
  S acc = ScalarTraits<S>::zero();
  for (size_t i = 0; i < a.v.size(); ++i) acc += conj_of(a.v[i]) * b.v[i];
  return acc;
}

template <class S>
struct Mat {
  int n = 0;  // square
  std::vector<S> a;

  Mat() = default;
  explicit Mat(int size) : n(size), a(static_cast<size_t>(size) * size, ScalarTraits<S>::zero()) {}

  static Mat identity(int size) {
    Mat m(size);
    for (int i = 0; i < size; ++i) m.at(i, i) = ScalarTraits<S>::one();
    return m;
  }

  S& at(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
  const S& at(int r, int c) const { return a[static_cast<size_t>(r) * n + c]; }

  Mat& operator+=(const Mat& o) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    for (size_t i = 0; i < a.size(); ++i) a[i] -= o.a[i];
    return *this;
  }
  friend Mat operator+(Mat x, const Mat& y) { return x += y; }
  friend Mat operator-(Mat x, const Mat& y) { return x -= y; }
  friend Mat operator-(const Mat& x) {
    Mat r(x.n);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = -x.a[i];
    return r;
  }
  friend Mat operator*(const S& c, Mat x) {
    for (auto& e : x.a) e = c * e;
    return x;
  }
  friend bool operator==(const Mat& x, const Mat& y) { return x.n == y.n && x.a == y.a; }

  friend Mat operator*(const Mat& x, const Mat& y) {
    Mat r(x.n);
    for (int i = 0; i < x.n; ++i)
      for (int k = 0; k < x.n; ++k) {
        const S& xik = x.at(i, k);
        if (ScalarTraits<S>::is_zero(xik)) continue;
        for (int j = 0; j < x.n; ++j) r.at(i, j) += xik * y.at(k, j);
      }
    return r;
  }

  friend Vec<S> operator*(const Mat& m, const Vec<S>& v) {
    Vec<S> r(m.n);
    for (int i = 0; i < m.n; ++i) {
      S acc = ScalarTraits<S>::zero();
      for (int j = 0; j < m.n; ++j) acc += m.at(i, j) * v[j];
      r[i] = acc;
    }
    return r;
  }

  Mat adjoint() const {
    Mat r(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r.at(i, j) = conj_of(at(j, i));
    return r;
  }

  bool is_zero() const {
    for (const auto& x : a)
      if (!ScalarTraits<S>::is_zero(x)) return false;
    return true;
  }

  S trace() const {
    S acc = ScalarTraits<S>::zero();
    for (int i = 0; i < n; ++i) acc += at(i, i);
    return acc;
  }
};

/// Commutator [x, y].
template <class S>
Mat<S> comm(const Mat<S>& x, const Mat<S>& y) {
  return x * y - y * x;
}

/// Exact squared norm sum_i |v_i|^2 as a scalar (real for honest *-rings).
template <class S>
S norm_sq(const Vec<S>& v) {
  return re_of(inner(v, v));
}

}  // namespace spinlab
