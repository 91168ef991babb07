#include "derivkernel/rational_function.hpp"

#include <ostream>

#include "derivkernel/errors.hpp"

namespace dk {

namespace {

void require_same(const RationalFunction& a, const RationalFunction& b) {
    if (!same_varset(a.vars(), b.vars())) throw VarsetError("varset mismatch");
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.vars(), Rational(1))) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (!same_varset(num_.vars(), den_.vars())) throw VarsetError("varset mismatch");
    if (den_.is_zero()) throw DomainError("zero denominator");
}

RationalFunction RationalFunction::constant(VarSetPtr vars, Rational c) {
    return RationalFunction(Polynomial::constant(std::move(vars), std::move(c)));
}

RationalFunction RationalFunction::operator-() const {
    return RationalFunction(-num_, den_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    require_same(a, b);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    require_same(a, b);
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    require_same(a, b);
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    require_same(a, b);
    if (b.num_.is_zero()) throw DomainError("division by zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

bool rf_equal(const RationalFunction& a, const RationalFunction& b) {
    require_same(a, b);
    return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
}

RationalFunction RationalFunction::lift(const VarSetPtr& target) const {
    return RationalFunction(num_.lift(target), den_.lift(target));
}

RationalFunction RationalFunction::normalized() const {
    // Common scale: lcm of all denominators, then gcd of all numerators.
    mpz_class lcm = 1, gcd = 0;
    for (const auto* p : {&num_, &den_}) {
        for (const auto& [m, c] : p->terms()) {
            mpz_class l;
            mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
            lcm = l;
        }
    }
    for (const auto* p : {&num_, &den_}) {
        for (const auto& [m, c] : p->terms()) {
            mpz_class n = c.numerator() * lcm / c.denominator();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), gcd.get_mpz_t(), n.get_mpz_t());
            gcd = g;
        }
    }
    if (gcd == 0) gcd = 1;
    Rational scale{mpq_class(lcm) / mpq_class(gcd)};
    if (den_.terms().begin()->second.sign() * scale.sign() < 0) scale = -scale;
    return RationalFunction(num_ * scale, den_ * scale);
}

std::string RationalFunction::str() const {
    RationalFunction n = normalized();
    if (n.den_.is_constant() && n.den_.constant_value().is_one()) return n.num_.str();
    return "(" + n.num_.str() + ")/(" + n.den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& r) {
    return os << r.str();
}

}  // namespace dk
