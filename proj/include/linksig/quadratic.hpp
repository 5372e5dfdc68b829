// Exact arithmetic in the quadratic extensions Q(delta), delta^2 = D <= 0,
// used for evaluating at unit-circle points with rational cosine.
#pragma once

#include <stdexcept>

#include "linksig/rational.hpp"

namespace linksig {

// The point c + delta on the unit circle, delta^2 = dSquared = c^2 - 1 <= 0,
// delta on the positive imaginary side.
struct QuadraticComplexPoint {
  Rat c;
  Rat d_squared;

  static QuadraticComplexPoint from_cos(const Rat& c) {
    if (c < -1 || c > 1)
      throw std::invalid_argument("QuadraticComplexPoint: cosine outside [-1, 1]");
    return {c, c * c - 1};
  }
};

// re + im * delta with delta^2 = dsq. Values with im == 0 are plain rationals
// and combine with any dsq; dsq == 0 collapses to the rationals.
class QuadExt {
 public:
  QuadExt() : re_(0), im_(0), dsq_(0) {}
  QuadExt(Rat re, Rat im, Rat dsq) : re_(std::move(re)), im_(std::move(im)), dsq_(std::move(dsq)) {
    if (dsq_ == 0 || im_ == 0) {
      im_ = 0;
      dsq_ = 0;
    }
  }
  explicit QuadExt(Rat re) : re_(std::move(re)), im_(0), dsq_(0) {}

  static QuadExt point_value(const QuadraticComplexPoint& z) {
    return QuadExt(z.c, Rat(1), z.d_squared);
  }

  const Rat& re() const { return re_; }
  const Rat& im() const { return im_; }
  const Rat& dsq() const { return dsq_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  QuadExt conj() const { return QuadExt(re_, -im_, dsq_); }
  QuadExt operator-() const { return QuadExt(-re_, -im_, dsq_); }

  QuadExt operator+(const QuadExt& o) const {
    return QuadExt(re_ + o.re_, im_ + o.im_, joint_dsq(o));
  }
  QuadExt operator-(const QuadExt& o) const {
    return QuadExt(re_ - o.re_, im_ - o.im_, joint_dsq(o));
  }
  QuadExt operator*(const QuadExt& o) const {
    Rat d = joint_dsq(o);
    return QuadExt(re_ * o.re_ + im_ * o.im_ * d, re_ * o.im_ + im_ * o.re_, d);
  }
  QuadExt operator*(const Rat& s) const { return QuadExt(re_ * s, im_ * s, dsq_); }

  // Multiplicative inverse; dsq < 0 (or im == 0) makes the norm positive
  // definite, so only genuine zero divides fail.
  QuadExt inverse() const {
    Rat n = norm();
    if (n == 0) throw std::domain_error("QuadExt: inverse of zero");
    return QuadExt(re_ / n, -im_ / n, dsq_);
  }
  QuadExt operator/(const QuadExt& o) const { return *this * o.inverse(); }

  // re^2 - im^2 * dsq = x * conj(x).
  Rat norm() const { return re_ * re_ - im_ * im_ * dsq_; }

  bool operator==(const QuadExt& o) const {
    return re_ == o.re_ && im_ == o.im_ && (im_ == 0 || dsq_ == o.dsq_);
  }
  bool operator!=(const QuadExt& o) const { return !(*this == o); }

  // Sign of a real value; throws if the value is not real.
  int sign_real() const {
    if (im_ != 0) throw std::domain_error("QuadExt: sign of a non-real value");
    return sign_of(re_);
  }

 private:
  Rat joint_dsq(const QuadExt& o) const {
    if (im_ == 0) return o.dsq_;
    if (o.im_ == 0) return dsq_;
    if (dsq_ != o.dsq_) throw std::domain_error("QuadExt: mixing different extensions");
    return dsq_;
  }

  Rat re_, im_, dsq_;
};

}  // namespace linksig
