#pragma once

#include "matrix.hpp"
#include "subspace.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ksseq {

/// Graded space H^0..H^{2n} with the degree-2 operator L (cup product with the
/// transverse symplectic class). L_maps[p] is dims[p+2] x dims[p]; it has zero rows
/// when p + 2 > 2n.
class LefschetzModule {
public:
    LefschetzModule() = default;
    LefschetzModule(unsigned n, std::vector<std::size_t> dims, std::vector<Matrix> L_maps,
                    std::vector<std::vector<std::string>> labels = {});

    unsigned n() const noexcept { return n_; }
    unsigned top_degree() const noexcept { return 2 * n_; }
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }
    std::size_t dim(int p) const;
    const std::vector<Matrix>& L_maps() const noexcept { return L_; }
    /// L: H^p -> H^{p+2}; a correctly shaped zero map outside the range.
    Matrix L(int p) const;
    /// L^k: H^p -> H^{p+2k}.
    Matrix L_power(int p, unsigned k) const;
    const std::vector<std::vector<std::string>>& labels() const noexcept { return labels_; }
    std::size_t total_dim() const;

    friend bool operator==(const LefschetzModule&, const LefschetzModule&) = default;

private:
    unsigned n_ = 0;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> L_;
    std::vector<std::vector<std::string>> labels_;
};

struct LefschetzReport {
    bool hlp = false;
    std::optional<unsigned> failing_degree;     // smallest k with L^k: H^{n-k} -> H^{n+k} not iso
    std::vector<std::size_t> primitive_dims;    // indexed 0..n
    std::vector<std::size_t> kernel_L_dims;     // indexed 0..2n
};

LefschetzReport check_hard_lefschetz(const LefschetzModule& m);
bool satisfies_hard_lefschetz(const LefschetzModule& m);

/// Ker(L^{n-p+1}) on H^p for p <= n; the zero subspace for p > n.
Subspace primitive_subspace(const LefschetzModule& m, unsigned p);
/// Ker(L: H^p -> H^{p+2}).
Subspace kernel_L(const LefschetzModule& m, unsigned p);

struct ClassComponent {
    unsigned power;     // v = sum L^power beta
    Vector beta;        // in H^{p - 2 power}, primitive
};

/// Lefschetz decomposition of a class v in H^p. Throws HypothesisViolation without HLP.
std::vector<ClassComponent> lefschetz_decompose_class(const LefschetzModule& m, unsigned p, const Vector& v);
/// Inverse of the decomposition: sum L^i beta_i in H^p.
Vector lefschetz_reconstruct(const LefschetzModule& m, unsigned p, const std::vector<ClassComponent>& parts);

/// Basis of H^p adapted to the Lefschetz decomposition: columns L^i b for each
/// primitive basis vector b of degree j = p - 2i, ordered by j ascending.
struct LefschetzBasisEntry {
    unsigned primitive_degree;
    unsigned power;
    std::size_t index;      // column of the primitive basis of degree primitive_degree
};
struct LefschetzBasis {
    Matrix columns;
    std::vector<LefschetzBasisEntry> entries;
};
/// Requires HLP (throws HypothesisViolation otherwise).
LefschetzBasis lefschetz_basis(const LefschetzModule& m, unsigned p);

bool check_top_degree(const LefschetzModule& m);

/// Free HLP module on the given primitive dimensions (indexed 0..n), conjugated by
/// a seeded unipotent graded automorphism.
LefschetzModule generate_hlp_module(std::uint64_t seed, unsigned n,
                                    const std::vector<std::size_t>& primitive_dims);
/// As generate_hlp_module, then zeroes one nonzero L block so HLP fails (n >= 1).
LefschetzModule generate_non_hlp_module(std::uint64_t seed, unsigned n,
                                        const std::vector<std::size_t>& primitive_dims);
/// Random dims in [0, max_dim] (dims[0] = 1) with random integer L maps.
LefschetzModule generate_random_module(std::uint64_t seed, unsigned n, std::size_t max_dim);

} // namespace ksseq
