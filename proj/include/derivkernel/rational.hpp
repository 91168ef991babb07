#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "derivkernel/errors.hpp"

namespace dk {

// Arbitrary-precision rational number, always kept canonical:
// denominator > 0, gcd(|numerator|, denominator) = 1, zero is 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long num, long den);
    explicit Rational(mpq_class q);

    // Accepts "p", "-p" or "p/q" with q > 0.
    static Rational parse(const std::string& text);

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    Rational inverse() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& mpq() const { return q_; }

    // "p" when the denominator is 1, "p/q" otherwise.
    std::string str() const { return q_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class q_;
};

// Exact binomial coefficient C(n, k); zero when k < 0 or k > n.
Rational binomial(long n, long k);

// Trinomial multiplier n! / (i! j! (n-i-j)!).
Rational trinomial(long n, long i, long j);

}  // namespace dk
