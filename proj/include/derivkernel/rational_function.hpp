#pragma once

#include <iosfwd>
#include <string>

#include "derivkernel/polynomial.hpp"

namespace dk {

// Quotient of two polynomials over a shared varset. Stored unreduced;
// equality is cross-multiplicative (num1*den2 == num2*den1), never
// representational. Printing reduces by integer content only.
class RationalFunction {
public:
    explicit RationalFunction(Polynomial num);
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction constant(VarSetPtr vars, Rational c);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const VarSetPtr& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    // Cross-multiplicative equality in k(C).
    friend bool rf_equal(const RationalFunction& a, const RationalFunction& b);

    RationalFunction lift(const VarSetPtr& target) const;

    // Scales num and den by one common rational so both have integer
    // coefficients with overall content 1 and the denominator's leading
    // coefficient is positive. Value is unchanged.
    RationalFunction normalized() const;

    // "(num)/(den)", or just "num" when den == 1 after normalization.
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& r);

private:
    Polynomial num_;
    Polynomial den_;
};

bool rf_equal(const RationalFunction& a, const RationalFunction& b);

}  // namespace dk
