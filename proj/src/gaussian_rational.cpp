#include "nashcert/gaussian_rational.hpp"

#include <cctype>

#include "nashcert/error.hpp"

namespace nashcert {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SpaceMismatch: return "space-mismatch";
    case ErrorCode::UnknownVariable: return "unknown-variable";
    case ErrorCode::ZeroInput: return "zero-input";
    case ErrorCode::Degenerate: return "degenerate";
    case ErrorCode::SliceExhausted: return "slice-exhausted";
    case ErrorCode::IncompatiblePart: return "incompatible-part";
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::RegionTooHostile: return "region-too-hostile";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::Syntax: return "syntax";
  }
  return "unknown";
}

GaussianRational::GaussianRational(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw Error(ErrorCode::ZeroInput, "division by zero coefficient");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const mpq_class n = o.norm();
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussianRational::str() const {
  if (is_real()) return re_.get_str();
  if (sgn(re_) == 0) {
    if (im_ == 1) return "i";
    if (im_ == -1) return "-i";
    return im_.get_str() + "i";
  }
  mpq_class abs_im = abs(im_);
  std::string im_part = abs_im == 1 ? "i" : abs_im.get_str() + "i";
  return "(" + re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + im_part + ")";
}

namespace {

class CoeffReader {
 public:
  explicit CoeffReader(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool at_digit() {
    skip_ws();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  mpq_class rational() {
    mpq_class num(integer());
    if (eat('/')) {
      mpz_class den = integer();
      if (den == 0) fail("zero denominator");
      num /= den;
    }
    return num;
  }
  mpz_class integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(s_.substr(start, pos_ - start));
  }
  bool done() {
    skip_ws();
    return pos_ == s_.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("invalid coefficient '" + s_ + "': " + what, 1, pos_ + 1);
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

GaussianRational parse_gaussian(const std::string& text) {
  CoeffReader r(text);
  const bool negative = r.eat('-');
  GaussianRational value;
  if (r.eat('(')) {
    const bool neg_re = r.eat('-');
    mpq_class re = r.rational();
    if (neg_re) re = -re;
    bool neg_im = false;
    if (r.eat('-')) {
      neg_im = true;
    } else if (!r.eat('+')) {
      r.fail("expected '+' or '-'");
    }
    mpq_class im = r.at_digit() ? r.rational() : mpq_class(1);
    if (!r.eat('i')) r.fail("expected 'i'");
    if (!r.eat(')')) r.fail("expected ')'");
    value = GaussianRational(re, neg_im ? mpq_class(-im) : im);
  } else if (r.eat('i')) {
    value = GaussianRational::i();
  } else {
    mpq_class q = r.rational();
    value = r.eat('i') ? GaussianRational(0, q) : GaussianRational(q);
  }
  if (!r.done()) r.fail("trailing characters");
  return negative ? -value : value;
}

}  // namespace nashcert
