#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

#include "heckestar/laurent.hpp"
#include "heckestar/perm.hpp"

namespace heckestar {

struct PatternNotAvoidedError : std::domain_error {
  explicit PatternNotAvoidedError(const std::string& m) : std::domain_error(m) {}
};

/// Element of the Hecke algebra H_n(q) in the natural basis {T_w}: a sparse
/// map from permutations to Laurent polynomial coefficients.  Zero
/// coefficients are never stored.
class HeckeElt {
 public:
  explicit HeckeElt(int n) : n_(n) {}

  static HeckeElt unit(int n) { return basis(Perm::identity(n)); }

  static HeckeElt basis(const Perm& w) {
    HeckeElt h(w.size());
    h.add_term(w, LaurentPoly::one());
    return h;
  }

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Perm, LaurentPoly>& terms() const { return terms_; }

  LaurentPoly coefficient(const Perm& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentPoly() : it->second;
  }

  void add_term(const Perm& w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_monomial(const Perm& w, int vexp, std::int64_t c) {
    if (c == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) it = terms_.emplace(w, LaurentPoly()).first;
    it->second.add_monomial(vexp, c);
    if (it->second.is_zero()) terms_.erase(it);
  }

  HeckeElt& operator+=(const HeckeElt& o) {
    check_same(o);
    for (auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }

  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) {
    a += b;
    return a;
  }

  friend HeckeElt operator*(const LaurentPoly& s, const HeckeElt& h) {
    HeckeElt r(h.n_);
    for (auto& [w, c] : h.terms_) r.add_term(w, s * c);
    return r;
  }

  friend bool operator==(const HeckeElt& a, const HeckeElt& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const HeckeElt& a, const HeckeElt& b) {
    return !(a == b);
  }

  /// Terms sorted lexicographically by one-line word (map order).
  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& [w, c] : terms_)
      arr.push_back({{"perm", w.to_json()}, {"poly", c.to_json()}});
    return nlohmann::json{{"n", n_}, {"terms", arr}};
  }

  static HeckeElt from_json(const nlohmann::json& j) {
    HeckeElt h(j.at("n").get<int>());
    for (auto& t : j.at("terms"))
      h.add_term(Perm(t.at("perm").get<std::vector<int>>()),
                 LaurentPoly::from_json(t.at("poly")));
    return h;
  }

 private:
  void check_same(const HeckeElt& o) const {
    if (n_ != o.n_) throw std::invalid_argument("ambient size mismatch");
  }

  int n_;
  std::map<Perm, LaurentPoly> terms_;
};

/// h * T_{s_i}.  With the apply-left-first convention, w s_i swaps the
/// values i and i+1 in the word of w, and the length goes up exactly when
/// value i appears before value i+1.
inline HeckeElt hecke_mul_right_gen(const HeckeElt& h, int i) {
  if (i < 1 || i >= h.n())
    throw std::out_of_range("generator index out of range");
  HeckeElt out(h.n());
  for (auto& [w, c] : h.terms()) {
    std::vector<int> word = w.word();
    int pos_i = -1, pos_i1 = -1;
    for (int t = 0; t < h.n(); ++t) {
      if (word[t] == i) pos_i = t;
      if (word[t] == i + 1) pos_i1 = t;
    }
    std::swap(word[pos_i], word[pos_i1]);
    Perm ws(std::move(word));
    if (pos_i < pos_i1) {
      out.add_term(ws, c);
    } else {
      out.add_term(w, c * (LaurentPoly::q_power(1) - LaurentPoly::one()));
      out.add_term(ws, c * LaurentPoly::q_power(1));
    }
  }
  return out;
}

namespace detail {

/// Reduced word i_1,...,i_l with v = s_{i_1} ... s_{i_l} (leftmost descents).
inline std::vector<int> left_reduced_word(const Perm& v) {
  std::vector<int> gens;
  std::vector<int> w = v.word();
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] > w[i + 1]) {
        gens.push_back(static_cast<int>(i) + 1);
        std::swap(w[i], w[i + 1]);
        moved = true;
        break;
      }
    }
  }
  return gens;
}

}  // namespace detail

/// Bilinear product h1 * h2, computed by expanding each basis element of h2
/// along a reduced expression.
inline HeckeElt hecke_mul(const HeckeElt& h1, const HeckeElt& h2) {
  if (h1.n() != h2.n()) throw std::invalid_argument("ambient size mismatch");
  HeckeElt out(h1.n());
  for (auto& [v, c] : h2.terms()) {
    HeckeElt acc = h1;
    for (int i : detail::left_reduced_word(v)) acc = hecke_mul_right_gen(acc, i);
    out += c * acc;
  }
  return out;
}

/// The Kazhdan-Lusztig element C~_{s_J} = sum of T_w over the interval
/// subgroup (all KL polynomials are 1 for a reversal).
inline HeckeElt kl_reversal(const Interval& J) {
  HeckeElt out(J.n);
  for (const Perm& w : interval_subgroup(J)) out.add_term(w, LaurentPoly::one());
  return out;
}

/// C~_w = sum of T_v over the Bruhat ideal below w; valid exactly when w
/// avoids 3412 and 4231, where the KL polynomials are identically 1.
inline HeckeElt kl_smooth(const Perm& w) {
  if (!avoids_3412_4231(w))
    throw PatternNotAvoidedError("KL element requires a 3412/4231-avoiding permutation");
  HeckeElt out(w.size());
  for (const Perm& v : all_perms(w.size()))
    if (bruhat_leq(v, w)) out.add_term(v, LaurentPoly::one());
  return out;
}

/// Left-to-right product of KL reversal elements over an interval sequence.
inline HeckeElt product_of_reversals(int n, const std::vector<Interval>& js) {
  HeckeElt out = HeckeElt::unit(n);
  for (const Interval& J : js) {
    if (J.n != n) throw std::invalid_argument("interval ambient size mismatch");
    out = hecke_mul(out, kl_reversal(J));
  }
  return out;
}

/// A linear functional theta: H_n(q) -> Z[q^{1/2},q^{-1/2}], given by its
/// values on the natural basis (absent permutations map to 0).
class LinearFunctional {
 public:
  explicit LinearFunctional(int n) : n_(n) {}

  int n() const { return n_; }

  void set(const Perm& w, const LaurentPoly& c) {
    if (w.size() != n_) throw std::invalid_argument("ambient size mismatch");
    if (c.is_zero())
      values_.erase(w);
    else
      values_[w] = c;
  }

  LaurentPoly value(const Perm& w) const {
    auto it = values_.find(w);
    return it == values_.end() ? LaurentPoly() : it->second;
  }

  const std::map<Perm, LaurentPoly>& values() const { return values_; }

 private:
  int n_;
  std::map<Perm, LaurentPoly> values_;
};

inline LaurentPoly apply_functional(const LinearFunctional& theta,
                                    const HeckeElt& h) {
  if (theta.n() != h.n()) throw std::invalid_argument("ambient size mismatch");
  LaurentPoly out;
  for (auto& [w, c] : h.terms()) out += theta.value(w) * c;
  return out;
}

/// The induced sign character eps_q^lambda evaluated at h: the trace of h on
/// the module induced from the sign character of H_lambda(q), realized on
/// the right cosets S_lambda u with u minimal.  Acting by T_u h and
/// projecting T_{y u'} to (-1)^{l(y)} T_{u'} gives the diagonal entry at u.
inline LaurentPoly induced_sign_char(const Partition& lambda,
                                     const HeckeElt& h) {
  if (lambda.n() != h.n()) throw std::invalid_argument("ambient size mismatch");
  LaurentPoly out;
  for (const Perm& u : young_min_reps(lambda)) {
    HeckeElt row = hecke_mul(HeckeElt::basis(u), h);
    for (auto& [w, c] : row.terms()) {
      auto [y, wmin] = young_factor(w, lambda);
      if (wmin == u) {
        LaurentPoly sign = (y.length() % 2 == 0) ? LaurentPoly::one()
                                                 : -LaurentPoly::one();
        out += sign * c;
      }
    }
  }
  return out;
}

/// Checks g(q) * C~_w = C~_{s_{J_1}} ... C~_{s_{J_m}} exactly.
inline bool verify_kl_factorization(const Perm& w, const LaurentPoly& g,
                                    const std::vector<Interval>& js) {
  if (g.is_zero()) throw std::invalid_argument("factorization scalar g must be nonzero");
  HeckeElt lhs = g * kl_smooth(w);
  HeckeElt rhs = product_of_reversals(w.size(), js);
  return lhs == rhs;
}

}  // namespace heckestar
