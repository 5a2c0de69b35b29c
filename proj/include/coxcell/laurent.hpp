#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

namespace coxcell {

using BigInt = boost::multiprecision::cpp_int;

/// Element of Z[v, v^-1], stored sparsely as exponent -> coefficient.
/// Zero coefficients are never stored; equality is map equality.
class Laurent {
public:
  Laurent() = default;

  static Laurent monomial(int exponent, BigInt coeff = 1) {
    Laurent p;
    if (coeff != 0) p.c_.emplace(exponent, std::move(coeff));
    return p;
  }
  static Laurent constant(BigInt n) { return monomial(0, std::move(n)); }
  static Laurent one() { return constant(1); }
  static Laurent v() { return monomial(1); }

  bool is_zero() const { return c_.empty(); }

  const std::map<int, BigInt>& terms() const { return c_; }

  BigInt coefficient(int exponent) const {
    auto it = c_.find(exponent);
    return it == c_.end() ? BigInt(0) : it->second;
  }

  /// Max exponent; nullopt for the zero polynomial.
  std::optional<int> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.rbegin()->first;
  }
  /// Min exponent; nullopt for the zero polynomial.
  std::optional<int> valuation() const {
    if (c_.empty()) return std::nullopt;
    return c_.begin()->first;
  }

  void add_term(int exponent, const BigInt& coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = c_.emplace(exponent, coeff);
    if (!fresh) {
      it->second += coeff;
      if (it->second == 0) c_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [k, a] : o.c_) add_term(k, a);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [k, a] : o.c_) add_term(k, -a);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  Laurent operator-() const {
    Laurent r;
    for (const auto& [k, a] : c_) r.c_.emplace(k, -a);
    return r;
  }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ka, ca] : a.c_)
      for (const auto& [kb, cb] : b.c_) r.add_term(ka + kb, ca * cb);
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  /// r += p * q without materializing p * q.
  void add_mul(const Laurent& p, const Laurent& q) {
    for (const auto& [kp, cp] : p.c_)
      for (const auto& [kq, cq] : q.c_) add_term(kp + kq, cp * cq);
  }

  Laurent scaled(int exponent_shift, const BigInt& coeff) const {
    Laurent r;
    if (coeff == 0) return r;
    for (const auto& [k, a] : c_) r.c_.emplace(k + exponent_shift, a * coeff);
    return r;
  }

  /// The involution v -> v^-1.
  Laurent bar() const {
    Laurent r;
    for (const auto& [k, a] : c_) r.c_.emplace(-k, a);
    return r;
  }

  bool operator==(const Laurent& o) const { return c_ == o.c_; }
  bool operator!=(const Laurent& o) const { return c_ != o.c_; }

  /// "2*v^3 + 1 - v^-2", exponents descending; "0" for zero.
  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      BigInt a = it->second;
      if (first) {
        if (a < 0) { os << "-"; a = -a; }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      int k = it->first;
      if (k == 0) {
        os << a;
      } else {
        if (a != 1) os << a << "*";
        os << "v";
        if (k != 1) os << "^" << k;
      }
    }
    return os.str();
  }

private:
  std::map<int, BigInt> c_;
};

}  // namespace coxcell
