#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "tenfold/errors.hpp"

namespace tenfold {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number in canonical reduced form (denominator > 0,
/// gcd(|num|, den) = 1). The computable model of the real ground field:
/// every classification decision downstream depends only on signs,
/// dimensions and exact equality, all of which are decidable here.
/// Immutable value type; freely shareable across threads.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                // NOLINT(google-explicit-constructor)
  Rational(long long n) : v_(n) {}          // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : v_(n) {}      // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    // the backend reduces by the gcd but insists on a positive denominator
    if (den < 0)
      v_ = Backend(-num, -den);
    else
      v_ = Backend(num, den);
  }
  Rational(int num, int den) : Rational(BigInt(num), BigInt(den)) {}

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool isZero() const { return v_.is_zero(); }
  bool isOne() const { return v_ == 1; }

  /// Strict trichotomy: -1, 0 or +1.
  int sign() const { return v_.sign(); }

  Rational operator-() const { return Rational(Backend(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(Backend(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(Backend(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(Backend(v_ * o.v_)); }
  Rational operator/(const Rational& o) const {
    if (o.isZero()) throw DivisionByZero();
    return Rational(Backend(v_ / o.v_));
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  /// Canonical text form "p/q", with "/q" omitted when q = 1.
  std::string str() const;

  /// Inverse of str(). Accepts an optional sign on either part; rejects
  /// zero denominators and any non-digit garbage.
  static Rational parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  using Backend = boost::multiprecision::cpp_rational;
  explicit Rational(Backend v) : v_(std::move(v)) {}
  Backend v_;
};

inline int sign(const Rational& r) { return r.sign(); }
inline bool isZero(const Rational& r) { return r.isZero(); }
inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Element of Q(i), the computable model of the complex ground field.
/// Componentwise canonical (both parts reduced rationals).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int n) : re_(n) {}             // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool isZero() const { return re_.isZero() && im_.isZero(); }
  bool isReal() const { return im_.isZero(); }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational operator+(const GaussianRational& o) const {
    return {re_ + o.re_, im_ + o.im_};
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return {re_ - o.re_, im_ - o.im_};
  }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
  }
  GaussianRational operator/(const GaussianRational& o) const {
    if (o.isZero()) throw DivisionByZero();
    Rational n = o.re_ * o.re_ + o.im_ * o.im_;
    return {(re_ * o.re_ + im_ * o.im_) / n, (im_ * o.re_ - re_ * o.im_) / n};
  }
  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_; im_ += o.im_; return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_; im_ -= o.im_; return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }
  GaussianRational& operator/=(const GaussianRational& o) { *this = *this / o; return *this; }

  bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

 private:
  Rational re_, im_;
};

inline GaussianRational conj(const GaussianRational& z) { return {z.re(), -z.im()}; }
inline Rational normSq(const GaussianRational& z) {
  return z.re() * z.re() + z.im() * z.im();
}
inline bool isZero(const GaussianRational& z) { return z.isZero(); }

}  // namespace tenfold
