#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "derivkernel/polynomial.hpp"
#include "derivkernel/rational_function.hpp"

namespace dk {

// Image of one source variable under a specialization: either a constant
// or a signed target variable (sign in {+1, -1}).
struct VarBinding {
    struct SignedVar {
        std::size_t index;
        int sign;
    };
    std::variant<Rational, SignedVar> v;

    static VarBinding pin(Rational c) { return {std::move(c)}; }
    static VarBinding var(std::size_t index, int sign = 1) { return {SignedVar{index, sign}}; }
    bool pinned() const { return std::holds_alternative<Rational>(v); }
};

// A derivation of the coefficient algebra: the linear map determined by the
// images of the variables, extended by the Leibniz rule D(fg) = D(f)g + fD(g).
class Derivation {
public:
    Derivation(VarSetPtr vars, std::map<std::string, Polynomial> images, std::string name = "");
    Derivation(VarSetPtr vars, std::vector<Polynomial> images, std::string name = "");

    static Derivation zero(VarSetPtr vars, std::string name = "");

    const VarSetPtr& vars() const { return vars_; }
    const std::string& name() const { return name_; }
    Derivation with_name(std::string name) const;

    // Image of variable i; zero polynomial when the variable is killed.
    const Polynomial& image(std::size_t i) const { return images_[i]; }

    bool is_zero() const;

    Polynomial apply(const Polynomial& p) const;

    // Quotient rule: D(f/g) = (D(f) g - f D(g)) / g^2.
    RationalFunction apply(const RationalFunction& r) const;

    friend Derivation commutator(const Derivation& a, const Derivation& b);

    friend Derivation operator-(const Derivation& d);

    // Restriction to the subvariety where each pinned variable is replaced
    // by its constant. Requires the pinned locus to be invariant under the
    // flow: for every pinned variable s, D(s) must vanish identically after
    // substituting all pins; otherwise throws DomainError.
    Derivation specialize(const std::map<std::string, Rational>& pins) const;

    // General form of specialize: bindings[i] sends source variable i either
    // to a constant or to +/- one target variable; every target variable must
    // be hit exactly once. Used for coefficient embeddings where a source
    // coordinate carries a sign.
    Derivation pullback(const VarSetPtr& target, const std::vector<VarBinding>& bindings) const;

    // Returns lambda when D(p) == lambda * p exactly (p an eigenvector, in
    // particular isobaric for weight derivations); nullopt otherwise and for
    // the zero polynomial.
    std::optional<Rational> weight_eigenvalue(const Polynomial& p) const;

private:
    VarSetPtr vars_;
    std::vector<Polynomial> images_;  // one per variable, zero allowed
    std::string name_;
};

Derivation commutator(const Derivation& a, const Derivation& b);
Derivation operator-(const Derivation& d);

// True iff every derivation in `ds` annihilates r (zero numerator after the
// quotient rule).
bool in_kernel(const std::vector<Derivation>& ds, const RationalFunction& r);
bool in_kernel(const std::vector<Derivation>& ds, const Polynomial& p);

}  // namespace dk
