#include "derivkernel/rational.hpp"

#include <cctype>
#include <ostream>

namespace dk {

Rational::Rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0) throw DomainError("rational with zero denominator");
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw DomainError("empty rational literal");
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
                  (c == '-' && (i == 0 || text[i - 1] == '/'));
        if (!ok) throw DomainError("bad rational literal: " + text);
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw DomainError("bad rational literal: " + text);
    if (q.get_den() == 0) throw DomainError("rational with zero denominator: " + text);
    q.canonicalize();
    if (q.get_den() < 0) {
        q.get_num() = -q.get_num();
        q.get_den() = -q.get_den();
    }
    return Rational(std::move(q));
}

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return Rational(mpq_class(1) / q_);
}

Rational& Rational::operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.q_;
}

Rational binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(mpq_class(b));
}

Rational trinomial(long n, long i, long j) {
    if (i < 0 || j < 0 || i + j > n) return Rational(0);
    return binomial(n, i) * binomial(n - i, j);
}

}  // namespace dk
