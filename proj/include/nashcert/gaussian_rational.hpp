#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace nashcert {

/// Exact element re + im*i of Q(i). Both parts are kept canonical (lowest
/// terms, positive denominator) by GMP after every operation.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return is_real() && re_ == 1; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// Squared modulus re^2 + im^2.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  /// Throws Error(ZeroInput) on division by zero.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Short human form, e.g. "3", "-1/2", "2i", "(1-3/4i)".
  std::string str() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Parses the coefficient grammar: rational | rational? 'i' |
/// '(' rational ('+'|'-') rational 'i' ')' with an optional leading '-'.
/// Throws ParseError.
GaussianRational parse_gaussian(const std::string& text);

}  // namespace nashcert
