#include "derivkernel/kernelsearch.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "derivkernel/errors.hpp"

namespace dk {

namespace {

void enumerate(std::size_t var, unsigned remaining, Monomial& current,
               std::vector<Monomial>& out) {
    if (var + 1 == current.size()) {
        current[var] = remaining;
        out.push_back(current);
        current[var] = 0;
        return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
        current[var] = e;
        enumerate(var + 1, remaining - e, current, out);
    }
    current[var] = 0;
}

long weighted_degree(const Monomial& m, const std::vector<long>& w) {
    long s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) s += static_cast<long>(m[i]) * w[i];
    return s;
}

}  // namespace

std::vector<Monomial> monomial_basis(const VarSetPtr& vars, unsigned degree) {
    std::vector<Monomial> out;
    if (vars->size() == 0) {
        if (degree == 0) out.push_back(Monomial{});
        return out;
    }
    Monomial current(vars->size(), 0);
    enumerate(0, degree, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Monomial> monomial_basis(const VarSetPtr& vars, unsigned degree,
                                     const std::vector<long>& weights, long target) {
    if (weights.size() != vars->size()) throw DomainError("weight vector length mismatch");
    std::vector<Monomial> all = monomial_basis(vars, degree);
    std::vector<Monomial> out;
    for (auto& m : all)
        if (weighted_degree(m, weights) == target) out.push_back(std::move(m));
    return out;
}

ExactMatrix derivation_matrix(const Derivation& d, const std::vector<Monomial>& domain,
                              std::vector<Monomial>* image_basis) {
    std::vector<Polynomial> images;
    images.reserve(domain.size());
    std::map<Monomial, std::size_t> rows;
    for (const auto& m : domain) {
        Polynomial img = d.apply(Polynomial::monomial(d.vars(), m, Rational(1)));
        for (const auto& [im, c] : img.terms()) rows.emplace(im, 0);
        images.push_back(std::move(img));
    }
    std::size_t r = 0;
    for (auto& [m, idx] : rows) idx = r++;

    ExactMatrix mat(rows.size(), domain.size());
    for (std::size_t col = 0; col < images.size(); ++col)
        for (const auto& [im, c] : images[col].terms()) mat.at(rows.at(im), col) = c;

    if (image_basis) {
        image_basis->clear();
        image_basis->reserve(rows.size());
        for (const auto& [m, idx] : rows) image_basis->push_back(m);
    }
    return mat;
}

bool KernelReport::all_in_kernel() const {
    return std::all_of(in_kernel.begin(), in_kernel.end(),
                       [](const auto& p) { return p.second; });
}

KernelReport joint_kernel(const AnsatzSpec& spec) {
    if (spec.derivations.empty()) throw DomainError("kernel search needs derivations");
    for (const auto& d : spec.derivations)
        if (!same_varset(d.vars(), spec.vars)) throw VarsetError("varset mismatch");

    std::vector<Monomial> domain;
    if (spec.weight) {
        if (spec.var_weights.size() != spec.vars->size())
            throw DomainError("weight constraint needs per-variable weights");
        domain = monomial_basis(spec.vars, spec.degree, spec.var_weights, *spec.weight);
    } else {
        for (unsigned deg = 1; deg <= spec.degree; ++deg) {
            auto cell = monomial_basis(spec.vars, deg);
            domain.insert(domain.end(), cell.begin(), cell.end());
        }
    }

    KernelReport report;
    if (domain.empty()) return report;

    ExactMatrix stacked(0, domain.size());
    for (const auto& d : spec.derivations)
        stacked = stacked.stacked(derivation_matrix(d, domain));

    for (const auto& v : nullspace(stacked)) {
        Polynomial p(spec.vars);
        for (std::size_t k = 0; k < domain.size(); ++k) p.add_term(domain[k], v[k]);
        // Soundness: re-verify by direct application, independent of the
        // elimination path.
        for (const auto& d : spec.derivations)
            if (!d.apply(p).is_zero())
                throw Error("internal error: nullspace vector fails direct verification");
        report.basis.push_back(std::move(p));
    }
    return report;
}

namespace {

Rational random_point_coord(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 7);
    long n = num(rng);
    if (n == 0) n = 1;
    return Rational(n, den(rng));
}

}  // namespace

KernelReport verify_generator_set(const std::vector<std::pair<std::string, Polynomial>>& gens,
                                  const std::vector<Derivation>& ds, std::optional<int> bound,
                                  std::uint64_t seed) {
    KernelReport report;
    report.bound = bound;
    // The rank is taken over the passing subset only.
    for (const auto& [name, g] : gens) {
        bool ok = true;
        for (const auto& d : ds)
            if (!d.apply(g).is_zero()) ok = false;
        report.in_kernel.emplace_back(name, ok);
        if (ok) report.basis.push_back(g);
    }
    if (report.basis.empty()) {
        report.jacobian_rank = 0;
        return report;
    }

    const std::vector<Polynomial>& passing = report.basis;
    const VarSetPtr& vars = gens.front().second.vars();
    std::size_t expected = std::min(passing.size(), vars->size());
    std::mt19937_64 rng(seed);
    std::size_t best = 0;
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::map<std::string, Rational> point;
        for (std::size_t v = 0; v < vars->size(); ++v)
            point[vars->name(v)] = random_point_coord(rng);
        ExactMatrix jac(passing.size(), vars->size());
        for (std::size_t k = 0; k < passing.size(); ++k)
            for (std::size_t v = 0; v < vars->size(); ++v)
                jac.at(k, v) = passing[k].derivative(v).evaluate(point);
        best = std::max(best, rank(jac));
        if (best == expected) break;
        if (attempt == 3) report.rank_retries_exhausted = true;
    }
    report.jacobian_rank = static_cast<int>(best);
    return report;
}

}  // namespace dk
