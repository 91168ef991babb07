#include "derivkernel/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "derivkernel/errors.hpp"

namespace dk {

unsigned monomial_degree(const Monomial& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

Polynomial::Polynomial(VarSetPtr vars) : vars_(std::move(vars)) {
    if (!vars_) throw DomainError("polynomial without a varset");
}

Polynomial Polynomial::constant(VarSetPtr vars, Rational c) {
    Polynomial p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(Monomial(p.vars_->size(), 0), std::move(c));
    return p;
}

Polynomial Polynomial::variable(VarSetPtr vars, std::size_t index) {
    Polynomial p(std::move(vars));
    if (index >= p.vars_->size()) throw DomainError("variable index out of range");
    Monomial m(p.vars_->size(), 0);
    m[index] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

Polynomial Polynomial::monomial(VarSetPtr vars, Monomial m, Rational c) {
    Polynomial p(std::move(vars));
    if (m.size() != p.vars_->size()) throw DomainError("exponent vector length mismatch");
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0);
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
    return d;
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw DomainError("polynomial is not constant");
    return terms_.begin()->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    if (m.size() != vars_->size()) throw DomainError("exponent vector length mismatch");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::check_same_vars(const Polynomial& o) const {
    if (!same_varset(vars_, o.vars_)) throw VarsetError("varset mismatch");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_vars(b);
    Polynomial r(a.vars_);
    Monomial m(a.vars_->size());
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result = Polynomial::constant(vars_, Rational(1));
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_varset(a.vars_, b.vars_) && a.terms_ == b.terms_;
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& assignment) const {
    std::vector<std::optional<Rational>> values(vars_->size());
    for (const auto& [name, value] : assignment) {
        if (auto idx = vars_->index(name)) values[*idx] = value;
    }
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!values[i])
                throw DomainError("missing variable in assignment: " + vars_->name(i));
            Rational p(1);
            for (unsigned e = 0; e < m[i]; ++e) p *= *values[i];
            term *= p;
        }
        total += term;
    }
    return total;
}

Polynomial Polynomial::derivative(std::size_t index) const {
    if (index >= vars_->size()) throw DomainError("variable index out of range");
    Polynomial r(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[index] == 0) continue;
        Monomial dm = m;
        dm[index] -= 1;
        r.add_term(dm, c * Rational(static_cast<long>(m[index])));
    }
    return r;
}

Polynomial Polynomial::substitute(const VarSetPtr& target,
                                  const std::vector<Polynomial>& images) const {
    if (images.size() != vars_->size())
        throw DomainError("substitution image count mismatch");
    for (const auto& img : images)
        if (!same_varset(img.vars(), target)) throw VarsetError("substitution image varset mismatch");

    // Per-variable power cache; powers[i][e] = images[i]^e.
    std::vector<std::vector<Polynomial>> powers(vars_->size());
    auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(target, Rational(1)));
        while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
        return cache[e];
    };

    Polynomial result(target);
    for (const auto& [m, c] : terms_) {
        Polynomial term = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) term = term * power(i, m[i]);
        result += term;
    }
    return result;
}

Polynomial Polynomial::lift(const VarSetPtr& target) const {
    if (same_varset(vars_, target)) return *this;
    std::vector<std::optional<std::size_t>> map(vars_->size());
    for (std::size_t i = 0; i < vars_->size(); ++i) map[i] = target->index(vars_->name(i));
    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
        Monomial t(target->size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!map[i])
                throw VarsetError("variable not present in target varset: " + vars_->name(i));
            t[*map[i]] = m[i];
        }
        r.add_term(t, c);
    }
    return r;
}

std::map<unsigned, Polynomial> Polynomial::collect(std::size_t index) const {
    if (index >= vars_->size()) throw DomainError("variable index out of range");
    std::map<unsigned, Polynomial> groups;
    for (const auto& [m, c] : terms_) {
        unsigned e = m[index];
        Monomial rest = m;
        rest[index] = 0;
        auto it = groups.find(e);
        if (it == groups.end()) it = groups.emplace(e, Polynomial(vars_)).first;
        it->second.add_term(rest, c);
    }
    return groups;
}

std::optional<long> Polynomial::weight(const std::vector<long>& w) const {
    if (w.size() != vars_->size()) throw DomainError("weight vector length mismatch");
    std::optional<long> common;
    for (const auto& [m, c] : terms_) {
        long s = 0;
        for (std::size_t i = 0; i < m.size(); ++i) s += static_cast<long>(m[i]) * w[i];
        if (!common)
            common = s;
        else if (*common != s)
            return std::nullopt;
    }
    return common;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        bool has_vars = monomial_degree(m) > 0;
        bool coeff_shown = !a.is_one() || !has_vars;
        if (coeff_shown) os << a.str();
        bool need_star = coeff_shown;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (need_star) os << "*";
            os << vars_->name(i);
            if (m[i] > 1) os << "^" << m[i];
            need_star = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace dk
