#include "derivkernel/derivation.hpp"

#include <algorithm>

#include "derivkernel/errors.hpp"

namespace dk {

Derivation::Derivation(VarSetPtr vars, std::map<std::string, Polynomial> images, std::string name)
    : vars_(std::move(vars)), name_(std::move(name)) {
    images_.assign(vars_->size(), Polynomial::zero(vars_));
    for (auto& [var, img] : images) {
        auto idx = vars_->index(var);
        if (!idx) throw VarsetError("derivation image for unknown variable: " + var);
        if (!same_varset(img.vars(), vars_)) throw VarsetError("derivation image varset mismatch");
        images_[*idx] = std::move(img);
    }
}

Derivation::Derivation(VarSetPtr vars, std::vector<Polynomial> images, std::string name)
    : vars_(std::move(vars)), images_(std::move(images)), name_(std::move(name)) {
    if (images_.size() != vars_->size()) throw DomainError("derivation image count mismatch");
    for (const auto& img : images_)
        if (!same_varset(img.vars(), vars_)) throw VarsetError("derivation image varset mismatch");
}

Derivation Derivation::zero(VarSetPtr vars, std::string name) {
    auto v = vars;
    return Derivation(std::move(vars), std::vector<Polynomial>(v->size(), Polynomial::zero(v)),
                      std::move(name));
}

Derivation Derivation::with_name(std::string name) const {
    Derivation d = *this;
    d.name_ = std::move(name);
    return d;
}

bool Derivation::is_zero() const {
    return std::all_of(images_.begin(), images_.end(),
                       [](const Polynomial& p) { return p.is_zero(); });
}

Polynomial Derivation::apply(const Polynomial& p) const {
    if (!same_varset(p.vars(), vars_)) throw VarsetError("varset mismatch");
    Polynomial result(vars_);
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0 || images_[i].is_zero()) continue;
            Monomial dm = m;
            dm[i] -= 1;
            result += Polynomial::monomial(vars_, dm, c * Rational(static_cast<long>(m[i]))) *
                      images_[i];
        }
    }
    return result;
}

RationalFunction Derivation::apply(const RationalFunction& r) const {
    Polynomial dn = apply(r.num());
    Polynomial dd = apply(r.den());
    return RationalFunction(dn * r.den() - r.num() * dd, r.den() * r.den());
}

Derivation commutator(const Derivation& a, const Derivation& b) {
    if (!same_varset(a.vars_, b.vars_)) throw VarsetError("varset mismatch");
    std::vector<Polynomial> images;
    images.reserve(a.vars_->size());
    for (std::size_t i = 0; i < a.vars_->size(); ++i)
        images.push_back(a.apply(b.images_[i]) - b.apply(a.images_[i]));
    std::string name;
    if (!a.name_.empty() && !b.name_.empty()) name = "[" + a.name_ + "," + b.name_ + "]";
    return Derivation(a.vars_, std::move(images), std::move(name));
}

Derivation operator-(const Derivation& d) {
    std::vector<Polynomial> images;
    images.reserve(d.images_.size());
    for (const auto& img : d.images_) images.push_back(-img);
    std::string name = d.name_.empty() ? "" : "-" + d.name_;
    return Derivation(d.vars_, std::move(images), std::move(name));
}

Derivation Derivation::specialize(const std::map<std::string, Rational>& pins) const {
    std::vector<VarBinding> bindings(vars_->size(), VarBinding::var(0));
    std::vector<std::string> free_names;
    std::size_t next = 0;
    for (std::size_t i = 0; i < vars_->size(); ++i) {
        auto it = pins.find(vars_->name(i));
        if (it != pins.end()) {
            bindings[i] = VarBinding::pin(it->second);
        } else {
            bindings[i] = VarBinding::var(next++);
            free_names.push_back(vars_->name(i));
        }
    }
    for (const auto& [name, value] : pins)
        if (!vars_->index(name)) throw VarsetError("pin for unknown variable: " + name);
    return pullback(VarSet::create(std::move(free_names)), bindings);
}

Derivation Derivation::pullback(const VarSetPtr& target,
                                const std::vector<VarBinding>& bindings) const {
    if (bindings.size() != vars_->size()) throw DomainError("binding count mismatch");

    // Substitution images of the source variables over the target varset.
    std::vector<Polynomial> subst;
    subst.reserve(bindings.size());
    std::vector<std::size_t> source_of(target->size(), bindings.size());
    for (std::size_t i = 0; i < bindings.size(); ++i) {
        const VarBinding& b = bindings[i];
        if (b.pinned()) {
            subst.push_back(Polynomial::constant(target, std::get<Rational>(b.v)));
        } else {
            auto sv = std::get<VarBinding::SignedVar>(b.v);
            if (sv.index >= target->size()) throw DomainError("binding target out of range");
            if (source_of[sv.index] != bindings.size())
                throw DomainError("binding target hit twice: " + target->name(sv.index));
            source_of[sv.index] = i;
            subst.push_back(Polynomial::variable(target, sv.index) *
                            Rational(static_cast<long>(sv.sign)));
        }
    }
    for (std::size_t t = 0; t < target->size(); ++t)
        if (source_of[t] == bindings.size())
            throw DomainError("binding target never hit: " + target->name(t));

    // Flow invariance: pinned coordinates must be constants of the motion.
    for (std::size_t i = 0; i < bindings.size(); ++i) {
        if (!bindings[i].pinned()) continue;
        Polynomial moved = images_[i].substitute(target, subst);
        if (!moved.is_zero())
            throw DomainError("inconsistent specialization: derivation moves pinned variable " +
                              vars_->name(i) + " by " + moved.str());
    }

    std::vector<Polynomial> images;
    images.reserve(target->size());
    for (std::size_t t = 0; t < target->size(); ++t) {
        std::size_t src = source_of[t];
        int sign = std::get<VarBinding::SignedVar>(bindings[src].v).sign;
        images.push_back(images_[src].substitute(target, subst) *
                         Rational(static_cast<long>(sign)));
    }
    return Derivation(target, std::move(images), name_);
}

std::optional<Rational> Derivation::weight_eigenvalue(const Polynomial& p) const {
    if (!same_varset(p.vars(), vars_)) throw VarsetError("varset mismatch");
    if (p.is_zero()) return std::nullopt;
    Polynomial dp = apply(p);
    if (dp.is_zero()) return Rational(0);
    const auto& [m, c] = *p.terms().begin();
    auto it = dp.terms().find(m);
    if (it == dp.terms().end()) return std::nullopt;
    Rational lambda = it->second / c;
    if ((dp - p * lambda).is_zero()) return lambda;
    return std::nullopt;
}

bool in_kernel(const std::vector<Derivation>& ds, const RationalFunction& r) {
    for (const auto& d : ds)
        if (!d.apply(r).num().is_zero()) return false;
    return true;
}

bool in_kernel(const std::vector<Derivation>& ds, const Polynomial& p) {
    for (const auto& d : ds)
        if (!d.apply(p).is_zero()) return false;
    return true;
}

}  // namespace dk
