#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace molq {

using Rational = mpq_class;

enum class Field { Q, Qi };

std::string field_name(Field f);
Field field_from_name(const std::string& name);

/// Exact Gaussian rational a + b*i. Plain rational work keeps b = 0; the
/// involution is conjugation (a, b) -> (a, -b). All components stay in
/// canonical reduced form because every operation goes through mpq arithmetic.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(int v) : re_(v), im_(0) {}  // NOLINT: implicit by design, matrices from int literals
    Scalar(Rational re) : re_(std::move(re)), im_(0) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    [[nodiscard]] const Rational& re() const { return re_; }
    [[nodiscard]] const Rational& im() const { return im_; }

    [[nodiscard]] bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    [[nodiscard]] bool is_real() const { return sgn(im_) == 0; }

    [[nodiscard]] Scalar conj() const { return {re_, -im_}; }

    /// x * conj(x), always a rational; zero only for x = 0.
    [[nodiscard]] Rational norm() const { return re_ * re_ + im_ * im_; }

    Scalar operator-() const { return {-re_, -im_}; }

    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return cmp(a.re_, b.re_) == 0 && cmp(a.im_, b.im_) == 0;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    Rational re_, im_;
};

inline Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
inline Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }

inline Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
}

inline Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("scalar division by zero");
    if (is_real() && o.is_real()) {
        re_ /= o.re_;
        return *this;
    }
    const Rational n = o.norm();
    Rational re = (re_ * o.re_ + im_ * o.im_) / n;
    im_ = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(re);
    return *this;
}

inline Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
inline Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

/// Text forms: "p", "p/q", and Gaussian "p/q+r/si" (also "-1/2-3/4i", "2i", "i").
std::string to_string(const Scalar& s);
Scalar scalar_from_string(const std::string& text);
Rational rational_from_string(const std::string& text);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace molq
