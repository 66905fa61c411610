#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <sstream>
#include <string>
#include <utility>

namespace brunnian {

using coeff = boost::multiprecision::cpp_int;

// Sparse integer Laurent polynomial in one variable A.
class laurent_poly {
 public:
  laurent_poly() = default;
  static laurent_poly term(const coeff& c, int exp) {
    laurent_poly p;
    if (c != 0) p.terms_[exp] = c;
    return p;
  }
  static laurent_poly one() { return term(1, 0); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, coeff>& terms() const { return terms_; }

  laurent_poly& operator+=(const laurent_poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(c, e);
    return *this;
  }
  laurent_poly& operator-=(const laurent_poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(-c, e);
    return *this;
  }
  friend laurent_poly operator+(laurent_poly a, const laurent_poly& b) { return a += b; }
  friend laurent_poly operator-(laurent_poly a, const laurent_poly& b) { return a -= b; }
  friend laurent_poly operator*(const laurent_poly& a, const laurent_poly& b) {
    laurent_poly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ca * cb, ea + eb);
    return r;
  }
  friend bool operator==(const laurent_poly& a, const laurent_poly& b) {
    return a.terms_ == b.terms_;
  }

  void add_term(const coeff& c, int exp) {
    if (c == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
      terms_[exp] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // A -> A^{-1}
  laurent_poly invert_variable() const {
    laurent_poly r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
  }

  laurent_poly pow(int n) const {
    laurent_poly r = one();
    for (int i = 0; i < n; i++) r = r * (*this);
    return r;
  }

  // Sorted term list, e.g. "-1*A^4 + 3*A^0 + 2*A^-2" (descending exponents).
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) os << " + ";
      os << it->second << "*A^" << it->first;
      first = false;
    }
    return os.str();
  }

 private:
  std::map<int, coeff> terms_;  // exponent -> nonzero coefficient
};

// Sparse integer Laurent polynomial in two variables v, z.
class laurent_poly2 {
 public:
  using key = std::pair<int, int>;  // (v exponent, z exponent)

  laurent_poly2() = default;
  static laurent_poly2 term(const coeff& c, int ve, int ze) {
    laurent_poly2 p;
    if (c != 0) p.terms_[{ve, ze}] = c;
    return p;
  }
  static laurent_poly2 one() { return term(1, 0, 0); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<key, coeff>& terms() const { return terms_; }

  laurent_poly2& operator+=(const laurent_poly2& o) {
    for (const auto& [k, c] : o.terms_) add_term(c, k.first, k.second);
    return *this;
  }
  friend laurent_poly2 operator+(laurent_poly2 a, const laurent_poly2& b) { return a += b; }
  friend laurent_poly2 operator*(const laurent_poly2& a, const laurent_poly2& b) {
    laurent_poly2 r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        r.add_term(ca * cb, ka.first + kb.first, ka.second + kb.second);
    return r;
  }
  friend bool operator==(const laurent_poly2& a, const laurent_poly2& b) {
    return a.terms_ == b.terms_;
  }

  void add_term(const coeff& c, int ve, int ze) {
    if (c == 0) return;
    key k{ve, ze};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_[k] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  laurent_poly2 pow(int n) const {
    laurent_poly2 r = one();
    for (int i = 0; i < n; i++) r = r * (*this);
    return r;
  }

  // Substitute v -> A^a, z -> p(A) where p is a one-variable polynomial.
  // Used for the HOMFLY -> Jones specialization v=A^{-4}, z=A^{-2}-A^2.
  laurent_poly substitute(int v_to_A_exp, const laurent_poly& z_image) const {
    laurent_poly r;
    for (const auto& [k, c] : terms_) {
      laurent_poly t = laurent_poly::term(c, k.first * v_to_A_exp);
      if (k.second >= 0) {
        t = t * z_image.pow(k.second);
      } else {
        // negative z powers: caller must guarantee they cancel; we clear
        // denominators instead (see invariants::specialization_check).
        throw std::logic_error("substitute: negative z exponent");
      }
      r += t;
    }
    return r;
  }

  // Smallest z exponent over all terms (0 for the zero polynomial).
  int min_z_exp() const {
    int m = 0;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      (void)c;
      if (first || k.second < m) m = k.second;
      first = false;
    }
    return m;
  }

  // Multiply by z^n (n may be negative).
  laurent_poly2 shift_z(int n) const {
    laurent_poly2 r;
    for (const auto& [k, c] : terms_) r.terms_[{k.first, k.second + n}] = c;
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) os << " + ";
      os << it->second << "*v^" << it->first.first << "*z^" << it->first.second;
      first = false;
    }
    return os.str();
  }

 private:
  std::map<key, coeff> terms_;
};

// delta = -A^2 - A^{-2}, the bracket value of an added loop.
inline laurent_poly bracket_delta() {
  laurent_poly d;
  d.add_term(-1, 2);
  d.add_term(-1, -2);
  return d;
}

// mu = (v^{-1} - v) z^{-1}, the HOMFLY value of a split extra component.
inline laurent_poly2 homfly_mu() {
  laurent_poly2 m;
  m.add_term(1, -1, -1);
  m.add_term(-1, 1, -1);
  return m;
}

}  // namespace brunnian
