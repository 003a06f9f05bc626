#pragma once

#include "filtered_complex.hpp"
#include "lefschetz.hpp"
#include "matrix.hpp"
#include "rational.hpp"
#include "subspace.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace ksseq {

enum class StructureType {
    S,      // every d eta_i = omega
    C,      // every eta_i closed
    Mixed,  // d eta_i = lambda_i omega, lambdas not all 0 or all 1
};

const char* to_string(StructureType t);

/// Subset of {1..s}: bit i-1 stands for eta_i.
using EtaMask = std::uint32_t;

/// Linear combination of eta-monomials (the eta factors written on the left).
using EtaPolynomial = std::map<EtaMask, Rational>;

EtaPolynomial eta_monomial(EtaMask mask, const Rational& c = 1);
EtaPolynomial eta_wedge(const EtaPolynomial& a, const EtaPolynomial& b);
/// eta_1 - eta_j (1-based j).
EtaPolynomial eta_difference(unsigned j);

struct InvariantBasisEntry {
    EtaMask eta;
    unsigned basic_degree;
    std::size_t basic_index;
};

struct InvariantElement {
    unsigned degree = 0;
    Vector coefficients;

    friend bool operator==(const InvariantElement&, const InvariantElement&) = default;
};

/// Formal model H(M/F) ⊗ Λ<eta_1..eta_s> with d(eta_i) = lambda_i omega and d = 0 on
/// basic classes, filtered by basic degree.
///
/// Degree-k basis order: |I| ascending, then I as an increasing tuple in lexicographic
/// order, then the basic basis index.
class InvariantComplex {
public:
    /// Throws DimensionMismatch when s = 0 or the lambda count differs from s.
    static InvariantComplex build(LefschetzModule base, unsigned s, std::vector<Rational> lambdas);

    const LefschetzModule& base() const noexcept { return base_; }
    unsigned n() const noexcept { return base_.n(); }
    unsigned s() const noexcept { return s_; }
    const std::vector<Rational>& lambdas() const noexcept { return lambdas_; }
    StructureType structure() const noexcept;
    unsigned top_degree() const noexcept { return 2 * base_.n() + s_; }

    const std::vector<InvariantBasisEntry>& basis(unsigned k) const;
    std::size_t chain_dim(unsigned k) const;
    /// Position of eta_I ⊗ (basic basis vector a of degree p) inside degree |I|+p.
    std::size_t index_of(EtaMask eta, unsigned basic_degree, std::size_t basic_index) const;

    const FilteredComplex& complex() const noexcept { return complex_; }
    Matrix differential_matrix(unsigned k) const { return complex_.d(static_cast<int>(k)); }
    InvariantElement differential(const InvariantElement& x) const;
    Subspace filtration_subspace(unsigned p, unsigned k) const;

    /// e ⊗ h where every monomial of e has the same length q and h ∈ H^p.
    InvariantElement tensor(const EtaPolynomial& e, unsigned p, const Vector& h) const;

    long long euler_characteristic() const;

private:
    LefschetzModule base_;
    unsigned s_ = 0;
    std::vector<Rational> lambdas_;
    std::vector<std::vector<InvariantBasisEntry>> basis_;
    FilteredComplex complex_;
};

struct CohomologyGroup {
    unsigned degree = 0;
    std::size_t dim = 0;
    Subspace representatives;
    Quotient classes;       // Ker d / Im d in this degree
};

std::vector<CohomologyGroup> cohomology(const InvariantComplex& c);

/// Binomial coefficient with C(a, b) = 0 for b < 0 or b > a.
long long binomial(long long a, long long b);

} // namespace ksseq
