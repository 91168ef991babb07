#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "derivkernel/derivation.hpp"
#include "derivkernel/matrix.hpp"
#include "derivkernel/polynomial.hpp"

namespace dk {

// Monomials over `vars` of exactly the given total degree, in canonical
// (lexicographic) order. With a weight constraint, only monomials whose
// weighted degree sum_i m_i w_i equals `target` are kept.
std::vector<Monomial> monomial_basis(const VarSetPtr& vars, unsigned degree);
std::vector<Monomial> monomial_basis(const VarSetPtr& vars, unsigned degree,
                                     const std::vector<long>& weights, long target);

// Matrix of D restricted to span(domain), columns indexed by the domain
// monomials, rows by the union of monomials occurring in the images
// (returned through image_basis when requested). The image basis is empty,
// and the matrix has zero rows, when D kills the whole span.
ExactMatrix derivation_matrix(const Derivation& d, const std::vector<Monomial>& domain,
                              std::vector<Monomial>* image_basis = nullptr);

// A bounded ansatz kernel search. With a weight constraint the ansatz is the
// single graded cell (exact degree, exact weight); without one it spans all
// monomials of degree 1..degree (specialized derivations are inhomogeneous,
// so kernel elements mix degrees; constants are trivially invariant and are
// excluded).
struct AnsatzSpec {
    VarSetPtr vars;
    unsigned degree = 0;
    std::optional<long> weight;
    std::vector<long> var_weights;  // required with `weight`
    std::vector<Derivation> derivations;
};

struct KernelReport {
    std::vector<Polynomial> basis;
    std::vector<std::pair<std::string, bool>> in_kernel;  // per named generator
    int jacobian_rank = -1;                               // -1 = not computed
    std::optional<int> bound;
    bool rank_retries_exhausted = false;

    bool all_in_kernel() const;
    bool rank_exceeds_bound() const { return bound && jacobian_rank > *bound; }
};

// Stacks the derivation matrices over the ansatz monomials and returns the
// joint nullspace as polynomials. Every reported polynomial is re-verified
// by direct application of each derivation, independently of the linear
// algebra.
KernelReport joint_kernel(const AnsatzSpec& spec);

// Kernel membership of each generator under every derivation, plus the rank
// of the Jacobian (dg_k/dv) evaluated at a random rational point drawn from
// `seed`. On a rank-deficient evaluation the point is redrawn up to three
// times (a deficient sample can be bad luck rather than dependence); the
// maximum rank seen is reported.
KernelReport verify_generator_set(const std::vector<std::pair<std::string, Polynomial>>& gens,
                                  const std::vector<Derivation>& ds, std::optional<int> bound,
                                  std::uint64_t seed);

// Default Jacobian evaluation seed; the DERIVKERNEL_SEED environment
// variable overrides it in the CLI.
inline constexpr std::uint64_t kDefaultJacobianSeed = 20260810;

}  // namespace dk
