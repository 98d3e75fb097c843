#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace planemf {

/// Exact rational number, always kept in canonical form (gcd 1, positive
/// denominator). All pipeline arithmetic goes through this type; there is
/// no floating point anywhere in the solver paths.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}
    Rational(long long num, long long den);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rational from_string(const std::string& s);  // "n" or "n/d"

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; v_.canonicalize(); return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; v_.canonicalize(); return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; v_.canonicalize(); return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_half_integer() const { return v_.get_den() == 1 || v_.get_den() == 2; }

    Rational floor() const;
    Rational ceil() const;

    /// Numerator / denominator as int64; throws if they do not fit.
    long long num_int64() const;
    long long den_int64() const;

    std::string str() const;  // "n" when integral, else "n/d"

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace planemf
