#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace heckestar {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("coefficient overflow in add");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("coefficient overflow in mul");
  return r;
}

}  // namespace detail

/// Exact arithmetic in Z[q^{1/2}, q^{-1/2}].
///
/// Exponents are stored in units of v = q^{1/2}: a term with key k stands for
/// q^{k/2}, so no half-integer arithmetic appears anywhere downstream.
/// Coefficients are 64-bit integers and every add/mul is overflow-checked.
/// The representation is canonical: zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly integer(std::int64_t c) {
    LaurentPoly p;
    p.add_monomial(0, c);
    return p;
  }

  static LaurentPoly one() { return integer(1); }

  /// The monomial q^{k/2} (vexp k).
  static LaurentPoly half_power(int k) {
    LaurentPoly p;
    p.add_monomial(k, 1);
    return p;
  }

  /// The monomial q^k.
  static LaurentPoly q_power(int k) { return half_power(2 * k); }

  bool is_zero() const { return terms_.empty(); }

  const std::map<int, std::int64_t>& terms() const { return terms_; }

  std::int64_t coeff(int vexp) const {
    auto it = terms_.find(vexp);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_monomial(int vexp, std::int64_t c) {
    if (c == 0) return;
    auto it = terms_.find(vexp);
    if (it == terms_.end()) {
      terms_.emplace(vexp, c);
    } else {
      it->second = detail::checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (auto& [e, c] : o.terms_) add_monomial(e, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (auto& [e, c] : o.terms_) {
      if (c == std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("coefficient overflow in negate");
      add_monomial(e, -c);
    }
    return *this;
  }

  LaurentPoly& operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }

  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto& [ea, ca] : a.terms_)
      for (auto& [eb, cb] : b.terms_)
        r.add_monomial(ea + eb, detail::checked_mul(ca, cb));
    return r;
  }

  LaurentPoly operator-() const {
    LaurentPoly r;
    return r - *this;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

  /// True iff the element lies in N[q]: every exponent is an even
  /// nonnegative v-power and every coefficient is nonnegative.
  bool is_nonneg_q_poly() const {
    for (auto& [e, c] : terms_)
      if (e < 0 || e % 2 != 0 || c < 0) return false;
    return true;
  }

  /// Specialization at q^{1/2} = 1 (a ring homomorphism to Z).
  std::int64_t value_at_one() const {
    std::int64_t s = 0;
    for (auto& [e, c] : terms_) s = detail::checked_add(s, c);
    return s;
  }

  int min_vexp() const {
    if (terms_.empty()) throw std::domain_error("min_vexp of zero polynomial");
    return terms_.begin()->first;
  }

  int max_vexp() const {
    if (terms_.empty()) throw std::domain_error("max_vexp of zero polynomial");
    return terms_.rbegin()->first;
  }

  /// Integer powers print as "q^k" ("q" for k=1, "1" for k=0); odd v-powers
  /// print as "q^(k/2)".  Terms are listed by ascending exponent.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [e, c] : terms_) {
      std::int64_t mag = c < 0 ? -c : c;
      if (first) {
        if (c < 0) out << "-";
        first = false;
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      std::string pw = power_string(e);
      if (pw == "1") {
        out << mag;
      } else if (mag == 1) {
        out << pw;
      } else {
        out << mag << "*" << pw;
      }
    }
    return out.str();
  }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& [e, c] : terms_) arr.push_back({{"vexp", e}, {"coeff", c}});
    return nlohmann::json{{"terms", arr}};
  }

  static LaurentPoly from_json(const nlohmann::json& j) {
    LaurentPoly p;
    for (auto& t : j.at("terms"))
      p.add_monomial(t.at("vexp").get<int>(), t.at("coeff").get<std::int64_t>());
    return p;
  }

 private:
  static std::string power_string(int vexp) {
    if (vexp == 0) return "1";
    if (vexp % 2 == 0) {
      int k = vexp / 2;
      if (k == 1) return "q";
      return "q^" + std::to_string(k);
    }
    return "q^(" + std::to_string(vexp) + "/2)";
  }

  std::map<int, std::int64_t> terms_;
};

/// Exact division: returns num/den when den divides num in
/// Z[q^{1/2},q^{-1/2}], std::nullopt otherwise.  Implemented as leading-term
/// elimination followed by a multiply-back comparison.
inline std::optional<LaurentPoly> try_exact_div(const LaurentPoly& num,
                                                const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  if (num.is_zero()) return LaurentPoly();
  LaurentPoly q;
  LaurentPoly r = num;
  const int lead = den.max_vexp();
  const std::int64_t lead_c = den.terms().rbegin()->second;
  const int low_bound = num.min_vexp() - den.min_vexp();
  while (!r.is_zero()) {
    int e = r.max_vexp();
    std::int64_t c = r.terms().rbegin()->second;
    if (c % lead_c != 0) return std::nullopt;
    int qe = e - lead;
    if (qe < low_bound) return std::nullopt;
    LaurentPoly t;
    t.add_monomial(qe, c / lead_c);
    q += t;
    r -= t * den;
  }
  if (q * den != num) return std::nullopt;
  return q;
}

}  // namespace heckestar
