#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "spinlab/forms.hpp"
#include "spinlab/linalg.hpp"

namespace spinlab {

enum class FieldKind { complex_kind, real_kind };

namespace detail {

/// Generalized permutation matrix: column j holds i^{phase[j]} at row[j].
/// Gamma matrices and all their products have this shape, which keeps blade
/// construction linear in the representation size.
struct GPerm {
  std::vector<int> row;
  std::vector<int> phase;  // powers of i, mod 4

  static GPerm id(int n) {
    GPerm g;
    g.row.resize(static_cast<size_t>(n));
    g.phase.assign(static_cast<size_t>(n), 0);
    for (int j = 0; j < n; ++j) g.row[static_cast<size_t>(j)] = j;
    return g;
  }
  /// Composition a*b as matrices: (a*b) e_j = a (b e_j).
  friend GPerm operator*(const GPerm& a, const GPerm& b) {
    GPerm r;
    const size_t n = b.row.size();
    r.row.resize(n);
    r.phase.resize(n);
    for (size_t j = 0; j < n; ++j) {
      int mid = b.row[j];
      r.row[j] = a.row[static_cast<size_t>(mid)];
      r.phase[j] = (b.phase[j] + a.phase[static_cast<size_t>(mid)]) % 4;
    }
    return r;
  }
  /// Kronecker product, 2x2 factor given by (row2, phase2) acting first.
  static GPerm kron(const GPerm& a, const GPerm& b) {
    GPerm r;
    const int nb = static_cast<int>(b.row.size());
    const size_t n = a.row.size() * b.row.size();
    r.row.resize(n);
    r.phase.resize(n);
    for (size_t ja = 0; ja < a.row.size(); ++ja)
      for (size_t jb = 0; jb < b.row.size(); ++jb) {
        size_t j = ja * static_cast<size_t>(nb) + jb;
        r.row[j] = a.row[ja] * nb + b.row[jb];
        r.phase[j] = (a.phase[ja] + b.phase[jb]) % 4;
      }
    return r;
  }
};

// 2x2 building blocks as GPerms: columns of sigma1 = [[0,1],[1,0]],
// sigma2 = [[0,-i],[i,0]], sigma3 = [[1,0],[0,-1]], eps = [[0,1],[-1,0]].
inline GPerm g_id2() { return {{0, 1}, {0, 0}}; }
inline GPerm g_sigma1() { return {{1, 0}, {0, 0}}; }
inline GPerm g_sigma2() { return {{1, 0}, {1, 3}}; }
inline GPerm g_sigma3() { return {{0, 1}, {0, 2}}; }
inline GPerm g_eps() { return {{1, 0}, {2, 0}}; }

}  // namespace detail

// ============================================================================
// CliffordAlgebra
// ============================================================================

/// Concrete matrix representation of Cl(n) with hermitian generators obeying
/// G^i G^j + G^j G^i = 2 delta^{ij}. Complex representations have size
/// 2^floor(n/2); the real kind (n = 8, 9) acts on R^16. Entries stay in
/// {0, ±1, ±i} so every product is exact. Immutable after construction.
template <class S>
class CliffordAlgebra {
 public:
  CliffordAlgebra(int n, FieldKind kind) : n_(n), kind_(kind) {
    if (kind == FieldKind::complex_kind) {
      if (n < 1 || n > 10) throw Error("build_algebra: complex kind needs 1 <= n <= 10");
      build_complex();
    } else {
      if (n != 8 && n != 9) throw Error("build_algebra: real kind supported for n in {8, 9} only");
      build_real();
    }
    dim_ = static_cast<int>(gperms_[0].row.size());
    gammas_.reserve(gperms_.size());
    for (const auto& g : gperms_) gammas_.push_back(to_mat(g));
    if (n_ % 2 == 0) {
      detail::GPerm vol = gperms_[0];
      for (int i = 1; i < n_; ++i) vol = vol * gperms_[static_cast<size_t>(i)];
      chirality_ = to_mat(vol);
      // volume element of Cl(2m) squares to (-1)^m
      chirality_sq_sign_ = ((n_ / 2) % 2 == 0) ? 1 : -1;
    }
    build_blades();
  }

  int n() const { return n_; }
  int rep_dim() const { return dim_; }
  FieldKind kind() const { return kind_; }
  const Mat<S>& gamma(int i) const { return gammas_[static_cast<size_t>(i)]; }
  const Mat<S>& chirality() const {
    if (!chirality_) throw Error("chirality: defined for even n only");
    return *chirality_;
  }
  int chirality_sq_sign() const { return chirality_sq_sign_; }

  /// Product G^{s1} ... G^{sp} for a sorted index set, from the blade table.
  const Mat<S>& blade(const IndexSet& s) const {
    int p = static_cast<int>(s.size());
    if (p > max_blade_degree_) throw Error("blade: degree beyond precomputed table");
    return blades_[static_cast<size_t>(p)][static_cast<size_t>(subset_rank(n_, s))];
  }
  int max_blade_degree() const { return max_blade_degree_; }

  Mat<S> identity() const { return Mat<S>::identity(dim_); }
  Vec<S> basis_spinor(int k) const {
    Vec<S> v(dim_);
    v[k] = ScalarTraits<S>::one();
    return v;
  }

 private:
  Mat<S> to_mat(const detail::GPerm& g) const {
    Mat<S> m(static_cast<int>(g.row.size()));
    for (size_t j = 0; j < g.row.size(); ++j)
      m.at(g.row[j], static_cast<int>(j)) = imag_power<S>(g.phase[j]);
    return m;
  }

  void build_complex() {
    using namespace detail;
    if (n_ == 1) {
      gperms_.push_back(GPerm::id(1));  // Cl(1) on C^1: G^1 = (1)
      return;
    }
    // G^{2j-1} = s3^(j-1) x s1 x I^(m-j),  G^{2j} = s3^(j-1) x s2 x I^(m-j)
    const int m = n_ / 2;
    for (int j = 1; j <= m; ++j) {
      GPerm odd = GPerm::id(1), even = GPerm::id(1);
      for (int t = 1; t <= m; ++t) {
        GPerm fo = (t < j) ? g_sigma3() : (t == j ? g_sigma1() : g_id2());
        GPerm fe = (t < j) ? g_sigma3() : (t == j ? g_sigma2() : g_id2());
        odd = GPerm::kron(odd, fo);
        even = GPerm::kron(even, fe);
      }
      gperms_.push_back(odd);
      gperms_.push_back(even);
    }
    if (n_ % 2 == 1) {
      // G^n := (i if m odd else 1) * G^1 ... G^{n-1}; the phase makes it a
      // hermitian involution with square +1. Sign fixed here once and for all.
      GPerm vol = gperms_[0];
      for (size_t i = 1; i < gperms_.size(); ++i) vol = vol * gperms_[i];
      if (m % 2 == 1)
        for (auto& ph : vol.phase) ph = (ph + 1) % 4;
      gperms_.push_back(vol);
    }
  }

  void build_real() {
    using namespace detail;
    // Eight anticommuting real symmetric involutions on R^16, as 4-fold tensor
    // monomials over {I, sigma1, sigma3, eps}; each carries an even number of
    // eps factors, hence is symmetric and squares to +1.
    const GPerm I = g_id2(), X = g_sigma1(), Z = g_sigma3(), E = g_eps();
    auto mono = [&](const GPerm& a, const GPerm& b, const GPerm& c, const GPerm& d) {
      return GPerm::kron(GPerm::kron(GPerm::kron(a, b), c), d);
    };
    gperms_.push_back(mono(X, I, I, I));
    gperms_.push_back(mono(Z, I, I, I));
    gperms_.push_back(mono(E, X, E, I));
    gperms_.push_back(mono(E, Z, E, I));
    gperms_.push_back(mono(E, I, Z, E));
    gperms_.push_back(mono(E, I, X, E));
    gperms_.push_back(mono(E, E, E, E));
    gperms_.push_back(mono(E, E, I, X));
    if (n_ == 9) {
      GPerm vol = gperms_[0];
      for (size_t i = 1; i < 8; ++i) vol = vol * gperms_[i];
      gperms_.push_back(vol);  // G^9 = G^1 ... G^8, symmetric with square +1
    }
  }

  void build_blades() {
    max_blade_degree_ = (n_ <= 6) ? n_ : 5;
    blades_.resize(static_cast<size_t>(max_blade_degree_) + 1);
    blades_[0].push_back(identity());
    for (int p = 1; p <= max_blade_degree_; ++p) {
      auto sp = subsets(n_, p);
      blades_[static_cast<size_t>(p)].reserve(sp.size());
      for (const auto& s : sp) {
        IndexSet head(s.begin(), s.end() - 1);
        const Mat<S>& prefix = blades_[static_cast<size_t>(p - 1)][static_cast<size_t>(subset_rank(n_, head))];
        blades_[static_cast<size_t>(p)].push_back(prefix * gammas_[static_cast<size_t>(s.back())]);
      }
    }
  }

  int n_;
  FieldKind kind_;
  int dim_ = 0;
  std::vector<detail::GPerm> gperms_;
  std::vector<Mat<S>> gammas_;
  std::optional<Mat<S>> chirality_;
  int chirality_sq_sign_ = 0;
  int max_blade_degree_ = 0;
  std::vector<std::vector<Mat<S>>> blades_;
};

template <class S>
CliffordAlgebra<S> build_algebra(int n, FieldKind kind) {
  return CliffordAlgebra<S>(n, kind);
}

// ============================================================================
// Slash map and Clifford contractions
// ============================================================================

/// omega_{i1..ip} G^{i1} ... G^{ip} summed over all index tuples (no 1/p!),
/// which on canonical components is sum over sorted sets of p! w_S blade_S.
/// Multi-degree forms map to the sum of their graded slashes.
template <class S>
Mat<S> slash(const MultiForm<S>& w, const CliffordAlgebra<S>& alg) {
  if (w.dim() != alg.n()) throw Error("slash: dimension mismatch");
  Mat<S> out(alg.rep_dim());
  for (int p : w.degrees()) {
    const auto* c = w.degree_if(p);
    Rat fact = 1;
    for (int i = 2; i <= p; ++i) fact *= i;
    auto sp = subsets(alg.n(), p);
    for (size_t i = 0; i < sp.size(); ++i) {
      if (ScalarTraits<S>::is_zero((*c)[i])) continue;
      S coeff = rat_s<S>(fact) * (*c)[i];
      const Mat<S>& b = alg.blade(sp[i]);
      for (size_t t = 0; t < out.a.size(); ++t) out.a[t] += coeff * b.a[t];
    }
  }
  return out;
}

/// Slash of the single frame co-vector e^i.
template <class S>
const Mat<S>& slash_frame(int i, const CliffordAlgebra<S>& alg) {
  return alg.gamma(i);
}

/// Dirac inner product of spinor values.
template <class S>
S dirac_inner(const Vec<S>& eta, const Vec<S>& eps) {
  if (eta.size() != eps.size()) throw Error("dirac_inner: size mismatch");
  return inner(eta, eps);
}

/// sum_i G^i M G^i, asserting the contraction identity
/// sum_i G^i w G^i = (-1)^p (n - 2p) w for the slash w of a pure p-form.
template <class S>
Mat<S> contraction(const Mat<S>& omega_slash, int p, const CliffordAlgebra<S>& alg) {
  Mat<S> acc(alg.rep_dim());
  for (int i = 0; i < alg.n(); ++i) acc += alg.gamma(i) * omega_slash * alg.gamma(i);
  Rat coeff = ((p % 2 == 0) ? 1 : -1) * Rat(alg.n() - 2 * p);
  Mat<S> expect = rat_s<S>(coeff) * omega_slash;
  if (!(acc - expect).is_zero()) throw Error("contraction: input is not the slash of a pure p-form");
  return acc;
}

}  // namespace spinlab
