#pragma once

#include <map>
#include <vector>

#include "spinlab/combinat.hpp"
#include "spinlab/scalar.hpp"

namespace spinlab {

// ============================================================================
// MultiForm
// ============================================================================

/// Graded antisymmetric coefficient data at a point. Components are kept in
/// canonical form: one coefficient per strictly increasing index set, with the
/// fully antisymmetric extension recovered through get(). Conventions follow a
/// frame where the metric is the identity, so index position carries no weight.
template <class S>
class MultiForm {
 public:
  MultiForm() = default;
  explicit MultiForm(int n) : n_(n) {}

  int dim() const { return n_; }

  bool has_degree(int p) const { return comps_.count(p) > 0; }
  std::vector<int> degrees() const {
    std::vector<int> d;
    for (const auto& kv : comps_) d.push_back(kv.first);
    return d;
  }

  /// Coefficient storage for degree p (created on demand), one slot per sorted
  /// index set in lexicographic order.
  std::vector<S>& degree(int p) {
    check_degree(p);
    auto it = comps_.find(p);
    if (it == comps_.end())
      it = comps_.emplace(p, std::vector<S>(static_cast<size_t>(binom(n_, p)), ScalarTraits<S>::zero())).first;
    return it->second;
  }
  const std::vector<S>* degree_if(int p) const {
    auto it = comps_.find(p);
    return it == comps_.end() ? nullptr : &it->second;
  }

  /// Fully antisymmetric component for an arbitrary index tuple of length p.
  S get(int p, IndexSet idx) const {
    const auto* c = degree_if(p);
    if (!c) return ScalarTraits<S>::zero();
    if (p == 0) return (*c)[0];
    int sign = sort_with_sign(idx);
    if (sign == 0) return ScalarTraits<S>::zero();
    const S& v = (*c)[static_cast<size_t>(subset_rank(n_, idx))];
    return sign == 1 ? v : -v;
  }

  S scalar() const {
    const auto* c = degree_if(0);
    return c ? (*c)[0] : ScalarTraits<S>::zero();
  }

  void set_sorted(int p, const IndexSet& idx, const S& v) { degree(p)[static_cast<size_t>(subset_rank(n_, idx))] = v; }
  void add_sorted(int p, const IndexSet& idx, const S& v) { degree(p)[static_cast<size_t>(subset_rank(n_, idx))] += v; }
  void set_scalar(const S& v) { degree(0)[0] = v; }

  /// Basis monomial e^{i1} ∧ ... ∧ e^{ip} for a sorted index set.
  static MultiForm basis(int n, const IndexSet& idx) {
    MultiForm w(n);
    w.set_sorted(static_cast<int>(idx.size()), idx, ScalarTraits<S>::one());
    return w;
  }

  MultiForm& operator+=(const MultiForm& o) {
    require_same_dim(o);
    for (const auto& kv : o.comps_) {
      auto& mine = degree(kv.first);
      for (size_t i = 0; i < kv.second.size(); ++i) mine[i] += kv.second[i];
    }
    return *this;
  }
  MultiForm& operator-=(const MultiForm& o) {
    require_same_dim(o);
    for (const auto& kv : o.comps_) {
      auto& mine = degree(kv.first);
      for (size_t i = 0; i < kv.second.size(); ++i) mine[i] -= kv.second[i];
    }
    return *this;
  }
  friend MultiForm operator+(MultiForm a, const MultiForm& b) { return a += b; }
  friend MultiForm operator-(MultiForm a, const MultiForm& b) { return a -= b; }
  friend MultiForm operator*(const S& c, MultiForm a) {
    for (auto& kv : a.comps_)
      for (auto& x : kv.second) x = c * x;
    return a;
  }

  bool is_zero() const {
    for (const auto& kv : comps_)
      for (const auto& x : kv.second)
        if (!ScalarTraits<S>::is_zero(x)) return false;
    return true;
  }

  /// Restriction to a single degree.
  MultiForm pick(int p) const {
    MultiForm w(n_);
    if (const auto* c = degree_if(p)) w.comps_[p] = *c;
    return w;
  }

  void require_same_dim(const MultiForm& o) const {
    if (n_ != o.n_) throw Error("MultiForm: dimension mismatch");
  }

 private:
  void check_degree(int p) const {
    if (p < 0 || p > n_) throw Error("MultiForm: degree out of range");
  }

  int n_ = 0;
  std::map<int, std::vector<S>> comps_;
};

// ============================================================================
// Pointwise operations
// ============================================================================

/// Graded wedge product. On sorted components:
/// (a ∧ b)_U = sum over splits U = S ⊔ T of sign(S,T) a_S b_T.
template <class S>
MultiForm<S> wedge(const MultiForm<S>& a, const MultiForm<S>& b) {
  a.require_same_dim(b);
  const int n = a.dim();
  MultiForm<S> out(n);
  for (int p : a.degrees()) {
    const auto* ca = a.degree_if(p);
    for (int q : b.degrees()) {
      if (p + q > n) continue;
      const auto* cb = b.degree_if(q);
      auto sp = subsets(n, p);
      auto sq = subsets(n, q);
      for (size_t i = 0; i < sp.size(); ++i) {
        if (ScalarTraits<S>::is_zero((*ca)[i])) continue;
        for (size_t j = 0; j < sq.size(); ++j) {
          if (ScalarTraits<S>::is_zero((*cb)[j])) continue;
          if (!disjoint(sp[i], sq[j])) continue;
          int sign = merge_sign(sp[i], sq[j]);
          S term = (*ca)[i] * (*cb)[j];
          out.add_sorted(p + q, merge_sorted(sp[i], sq[j]), sign == 1 ? term : -term);
        }
      }
    }
  }
  return out;
}

/// Pointwise inner product of two p-forms, (1/p!) chi_{I} omega^{I}.
/// On canonical components this is the plain dot product per degree.
template <class S>
S form_inner(const MultiForm<S>& a, const MultiForm<S>& b) {
  a.require_same_dim(b);
  auto da = a.degrees();
  auto db = b.degrees();
  // mixed degrees are an error for genuinely graded arguments
  int deg_a = -1, deg_b = -1;
  for (int p : da)
    if (!a.pick(p).is_zero()) {
      if (deg_a >= 0) throw Error("form_inner: first argument has mixed degree");
      deg_a = p;
    }
  for (int p : db)
    if (!b.pick(p).is_zero()) {
      if (deg_b >= 0) throw Error("form_inner: second argument has mixed degree");
      deg_b = p;
    }
  if (deg_a < 0 || deg_b < 0) return ScalarTraits<S>::zero();
  if (deg_a != deg_b) throw Error("form_inner: mixed degrees");
  const auto* ca = a.degree_if(deg_a);
  const auto* cb = b.degree_if(deg_b);
  S acc = ScalarTraits<S>::zero();
  for (size_t i = 0; i < ca->size(); ++i) acc += (*ca)[i] * (*cb)[i];
  return acc;
}

/// Unnormalized square omega_{i...} omega^{i...} (no 1/p!): p! * sum of squares
/// of canonical components, summed over the degrees present.
template <class S>
S form_sq(const MultiForm<S>& w) {
  S acc = ScalarTraits<S>::zero();
  for (int p : w.degrees()) {
    const auto* c = w.degree_if(p);
    Rat fact = 1;
    for (int i = 2; i <= p; ++i) fact *= i;
    S sum = ScalarTraits<S>::zero();
    for (const auto& x : *c) sum += x * x;
    acc += rat_s<S>(fact) * sum;
  }
  return acc;
}

/// Inner derivation of a p-form omega with an l-form chi (l >= 1, p >= 1):
///   i_chi omega = (p / (p! (l-1)!)) chi^k{}_{a1..a(l-1)} omega_{k b..}
/// expanded on the unnormalized frame basis; result degree p + l - 2.
/// The l = 1 case reduces to the usual contraction (i_X omega)_J = X^k omega_{kJ}.
template <class S>
MultiForm<S> inner_derivation(const MultiForm<S>& chi, const MultiForm<S>& omega) {
  chi.require_same_dim(omega);
  const int n = chi.dim();
  MultiForm<S> out(n);
  for (int l : chi.degrees()) {
    if (l < 1) throw Error("inner_derivation: degree-0 contraction argument");
    for (int p : omega.degrees()) {
      if (p < 1) throw Error("inner_derivation: degree-0 target");
      const int m = p + l - 2;
      if (m > n) continue;
      // fast path: contraction with a 1-form
      if (l == 1) {
        for (const auto& M : subsets(n, m)) {
          S acc = ScalarTraits<S>::zero();
          for (int k = 0; k < n; ++k) {
            IndexSet idx;
            idx.reserve(static_cast<size_t>(p));
            idx.push_back(k);
            idx.insert(idx.end(), M.begin(), M.end());
            acc += chi.get(1, {k}) * omega.get(p, idx);
          }
          out.add_sorted(m, M, acc);
        }
        continue;
      }
      // general case. With T_{a1..am} = chi^k{}_{a1..a(l-1)} omega_{k al..am},
      // the printed expansion c * T_I e^I (c = p/(p!(l-1)!), unnormalized basis)
      // has canonical components (i_chi omega)_M = c * sum_{s in S_m} sgn(s) T_{Ms}.
      Rat pref = Rat(p);
      for (int i = 2; i <= p; ++i) pref /= i;
      for (int i = 2; i <= l - 1; ++i) pref /= i;
      const auto& perms = permutations_with_sign(m);
      for (const auto& M : subsets(n, m)) {
        S acc = ScalarTraits<S>::zero();
        for (const auto& [perm, sign] : perms) {
          // T with indices M[perm[0..]], first l-1 to chi, rest to omega
          S term = ScalarTraits<S>::zero();
          for (int k = 0; k < n; ++k) {
            IndexSet ci, oi;
            ci.reserve(static_cast<size_t>(l));
            oi.reserve(static_cast<size_t>(p));
            ci.push_back(k);
            for (int t = 0; t < l - 1; ++t) ci.push_back(M[static_cast<size_t>(perm[static_cast<size_t>(t)])]);
            oi.push_back(k);
            for (int t = l - 1; t < m; ++t) oi.push_back(M[static_cast<size_t>(perm[static_cast<size_t>(t)])]);
            term += chi.get(l, ci) * omega.get(p, oi);
          }
          acc += (sign == 1) ? term : -term;
        }
        out.add_sorted(m, M, rat_s<S>(pref) * acc);
      }
    }
  }
  return out;
}

/// Adjoint of the inner derivation: <phi, adj_inner(chi, omega)> = <i_chi phi, omega>
/// for every basis form phi; computed by projecting on the orthonormal basis of
/// sorted monomials.
template <class S>
MultiForm<S> adjoint_inner(const MultiForm<S>& chi, const MultiForm<S>& omega) {
  chi.require_same_dim(omega);
  const int n = chi.dim();
  MultiForm<S> out(n);
  for (int l : chi.degrees()) {
    MultiForm<S> chil = chi.pick(l);
    if (chil.is_zero()) continue;
    for (int q : omega.degrees()) {
      MultiForm<S> omq = omega.pick(q);
      if (omq.is_zero()) continue;
      const int m = q - l + 2;  // i_chi raises degree by l-2
      if (m < 0 || m > n) continue;
      if (m == 0) {
        // phi = 1 is not a valid i_chi argument (degree-0 target); skip
        continue;
      }
      for (const auto& M : subsets(n, m)) {
        MultiForm<S> phi = MultiForm<S>::basis(n, M);
        MultiForm<S> iphi = inner_derivation(chil, phi);
        if (!iphi.has_degree(q)) continue;
        out.add_sorted(m, M, form_inner(iphi.pick(q), omq));
      }
    }
  }
  return out;
}

/// Adjoint of the wedge: <phi, vee(omega, chi)> = <omega ∧ phi, chi>, for
/// omega of degree p, chi of degree q >= p; result degree q - p.
template <class S>
MultiForm<S> vee(const MultiForm<S>& omega, const MultiForm<S>& chi) {
  omega.require_same_dim(chi);
  const int n = omega.dim();
  MultiForm<S> out(n);
  for (int p : omega.degrees()) {
    MultiForm<S> omp = omega.pick(p);
    if (omp.is_zero()) continue;
    for (int q : chi.degrees()) {
      MultiForm<S> chq = chi.pick(q);
      if (chq.is_zero()) continue;
      if (p > q) throw Error("vee: first degree exceeds second");
      const int m = q - p;
      for (const auto& M : subsets(n, m)) {
        MultiForm<S> phi = MultiForm<S>::basis(n, M);
        MultiForm<S> wphi = wedge(omp, phi);
        if (!wphi.has_degree(q)) continue;
        S c = form_inner(wphi.pick(q), chq);
        if (m == 0)
          out.set_scalar(out.scalar() + c);
        else
          out.add_sorted(m, M, c);
      }
    }
  }
  return out;
}

/// Lenient variants used by the hierarchy laws, where terms like i_F(chi_0) or
/// F ∨ chi_1 appear with coefficients that the degree bookkeeping sends to zero.
template <class S>
MultiForm<S> inner_derivation_clip(const MultiForm<S>& chi, const MultiForm<S>& omega) {
  MultiForm<S> out(chi.dim());
  for (int l : chi.degrees()) {
    if (l < 1) continue;
    for (int p : omega.degrees()) {
      if (p < 1) continue;
      MultiForm<S> piece = inner_derivation(chi.pick(l), omega.pick(p));
      out += piece;
    }
  }
  return out;
}

template <class S>
MultiForm<S> vee_clip(const MultiForm<S>& omega, const MultiForm<S>& chi) {
  MultiForm<S> out(omega.dim());
  for (int p : omega.degrees())
    for (int q : chi.degrees()) {
      if (p > q) continue;
      out += vee(omega.pick(p), chi.pick(q));
    }
  return out;
}

/// Euclidean Hodge star in an orthonormal frame: (*w)_{S^c} = sign(S, S^c) w_S.
template <class S>
MultiForm<S> hodge_star(const MultiForm<S>& w) {
  const int n = w.dim();
  MultiForm<S> out(n);
  for (int p : w.degrees()) {
    const auto* c = w.degree_if(p);
    auto sp = subsets(n, p);
    for (size_t i = 0; i < sp.size(); ++i) {
      if (ScalarTraits<S>::is_zero((*c)[i])) continue;
      IndexSet sc = complement(n, sp[i]);
      int sign = merge_sign(sp[i], sc);
      S v = (*c)[i];
      out.add_sorted(n - p, sc, sign == 1 ? v : -v);
    }
  }
  return out;
}

// ============================================================================
// Jets of forms: value + first derivatives at a point of flat space
// ============================================================================

/// grad[p] holds n * C(n,p) entries: direction-major slices d_i w_{(sorted J)}.
template <class S>
struct FormJet {
  MultiForm<S> value;
  std::map<int, std::vector<S>> grad;

  explicit FormJet(int n = 0) : value(n) {}
  int dim() const { return value.dim(); }

  std::vector<S>& grad_of(int p) {
    auto it = grad.find(p);
    if (it == grad.end())
      it = grad.emplace(p, std::vector<S>(static_cast<size_t>(dim()) * static_cast<size_t>(binom(dim(), p)),
                                          ScalarTraits<S>::zero()))
               .first;
    return it->second;
  }
  const std::vector<S>* grad_if(int p) const {
    auto it = grad.find(p);
    return it == grad.end() ? nullptr : &it->second;
  }

  /// d_dir of the fully antisymmetric component at an arbitrary tuple.
  S dcomp(int p, int dir, IndexSet idx) const {
    const auto* g = grad_if(p);
    if (!g) return ScalarTraits<S>::zero();
    if (p == 0) return (*g)[static_cast<size_t>(dir)];
    int sign = sort_with_sign(idx);
    if (sign == 0) return ScalarTraits<S>::zero();
    const S& v = (*g)[static_cast<size_t>(dir) * static_cast<size_t>(binom(dim(), p)) +
                      static_cast<size_t>(subset_rank(dim(), idx))];
    return sign == 1 ? v : -v;
  }

  /// The value-gradient slice d_dir w as a MultiForm (one degree).
  MultiForm<S> grad_slice(int p, int dir) const {
    MultiForm<S> out(dim());
    const auto* g = grad_if(p);
    if (!g) return out;
    auto sp = subsets(dim(), p);
    auto& comp = out.degree(p);
    const size_t off = static_cast<size_t>(dir) * sp.size();
    for (size_t i = 0; i < sp.size(); ++i) comp[i] = (*g)[off + i];
    return out;
  }
};

/// Exterior derivative from a jet: (dw)_U = sum_{j in U} (-1)^{pos(j,U)} d_j w_{U\j}.
template <class S>
MultiForm<S> jet_d(const FormJet<S>& jet) {
  const int n = jet.dim();
  MultiForm<S> out(n);
  for (const auto& kv : jet.grad) {
    int p = kv.first;
    if (p + 1 > n) continue;
    for (const auto& U : subsets(n, p + 1)) {
      S acc = ScalarTraits<S>::zero();
      for (int pos = 0; pos < p + 1; ++pos) {
        int j = U[static_cast<size_t>(pos)];
        S d = jet.dcomp(p, j, erase_at(U, pos));
        acc += (pos % 2 == 0) ? d : -d;
      }
      out.add_sorted(p + 1, U, acc);
    }
  }
  return out;
}

/// Codifferential from a jet in flat space: (delta w)_T = - sum_k d_k w_{kT}.
/// The sign makes delta the formal adjoint of d on the flat torus (delta = -div
/// on 1-forms).
template <class S>
MultiForm<S> jet_delta(const FormJet<S>& jet) {
  const int n = jet.dim();
  MultiForm<S> out(n);
  for (const auto& kv : jet.grad) {
    int p = kv.first;
    if (p - 1 < 0) continue;
    for (const auto& T : subsets(n, p - 1)) {
      S acc = ScalarTraits<S>::zero();
      for (int k = 0; k < n; ++k) {
        IndexSet idx;
        idx.reserve(static_cast<size_t>(p));
        idx.push_back(k);
        idx.insert(idx.end(), T.begin(), T.end());
        acc -= jet.dcomp(p, k, idx);
      }
      if (p - 1 == 0)
        out.set_scalar(out.scalar() + acc);
      else
        out.add_sorted(p - 1, T, acc);
    }
  }
  return out;
}

}  // namespace spinlab
