#pragma once

#include "invariant_complex.hpp"
#include "lefschetz.hpp"
#include "spectral.hpp"
#include "subspace.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace ksseq {

enum class Outcome { Pass, Fail, HypothesisViolated };

const char* to_string(Outcome o);

using DimTable = std::vector<std::pair<std::string, long long>>;

struct VerificationReport {
    std::string theorem;
    Outcome outcome = Outcome::Pass;
    DimTable expected;
    DimTable actual;
    /// Named boolean side conditions (stabilization bound, vanishing differentials, ...).
    std::vector<std::pair<std::string, bool>> checks;
    std::vector<std::string> witnesses;
    std::string message;

    bool passed() const noexcept { return outcome == Outcome::Pass; }
    /// Sets outcome to Pass iff expected == actual and every check holds.
    void finalize();

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// dim E_2^{p,q} = dims[p] C(s,q), d_0 = d_1 = 0.
VerificationReport verify_E2(const InvariantComplex& c);
VerificationReport verify_E2(const InvariantComplex& c, const SpectralRun& run);

struct KernelD2 {
    Subspace actual;            // Ker d_2^{p,q} in E_2 cell coordinates
    Subspace expected;          // span of the theta-product and eta_1-product generators
    std::size_t expected_dim = 0;
};

/// Ker d_2^{p,q} for an S-type model with HLP base. Throws HypothesisViolation otherwise.
KernelD2 kernel_d2(const InvariantComplex& c, const SpectralPage& e2, unsigned p, unsigned q);
/// kernel_d2 over every cell.
VerificationReport verify_kernel_d2(const InvariantComplex& c, const SpectralRun& run);

/// Per-degree Betti numbers predicted for an S-type model; throws HypothesisViolation
/// when the base lacks HLP.
std::vector<long long> expected_dims_mainS(const LefschetzModule& base, unsigned s);
/// Binomial convolution sum_q C(s,q) dims[k-q].
std::vector<long long> expected_dims_mainC(const LefschetzModule& base, unsigned s);

VerificationReport verify_mainS(const InvariantComplex& c);
VerificationReport verify_mainS(const InvariantComplex& c, const SpectralRun& run);
VerificationReport verify_mainC(const InvariantComplex& c);
VerificationReport verify_mainC(const InvariantComplex& c, const SpectralRun& run);

/// E_infinity totals equal the independently computed cohomology.
VerificationReport verify_abutment(const InvariantComplex& c, const SpectralRun& run);

struct PrimitiveBetti {
    std::vector<long long> primitive;   // 0..n
    std::vector<long long> basic;       // 0..2n
};

/// Inverts the S-type formula. B has length 2n+s+1. Throws InconsistentInput on a
/// negative intermediate value, DimensionMismatch on a bad length.
PrimitiveBetti primitive_betti_from_deRham(const std::vector<long long>& betti, unsigned s, unsigned n);
/// Inverts the C-type convolution. B has length 2n+s+1; the result has length 2n+1.
/// Throws InconsistentInput on a negative value or a nonzero value past degree 2n.
std::vector<long long> basic_betti_from_deRham(const std::vector<long long>& betti, unsigned s);

/// Every eta_I ⊗ h. Throws HypothesisViolation unless C-type.
std::vector<InvariantElement> harmonic_basis_C(const InvariantComplex& c);

struct HarmonicBasisS {
    std::vector<InvariantElement> partA;    // theta_J ⊗ primitive
    std::vector<InvariantElement> partB;    // eta_1 eta_I ⊗ Ker L
};

/// theta_j = eta_1 - eta_j. Throws HypothesisViolation unless S-type with HLP base.
HarmonicBasisS harmonic_basis_S(const InvariantComplex& c);

/// Closedness, counts per degree and independence of classes.
VerificationReport verify_harmonic_C(const InvariantComplex& c);
VerificationReport verify_harmonic_S(const InvariantComplex& c);

/// Block star on the base: L^i b -> L^{n-i-j} b for b in a primitive basis of degree j.
/// Matrix H^p -> H^{2n-p}. Requires HLP.
Matrix base_block_star(const LefschetzModule& base, unsigned p);
/// Model star C^k -> C^{2n+s-k}:
/// eta_I ⊗ h -> (-1)^{inv(I,I^c) + (s-|I|) deg h} eta_{I^c} ⊗ star_b h.
Matrix model_star_matrix(const InvariantComplex& c, unsigned k);

/// The star images of partA classes together with partA classes of the complementary
/// degree form a basis of cohomology there, and their count equals |partB|.
VerificationReport model_star_duality(const InvariantComplex& c);

} // namespace ksseq
