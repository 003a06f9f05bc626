#pragma once

#include "matrix.hpp"
#include "rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ksseq {

/// Pointwise model of the transverse space R^{2n} (covectors e^1..e^{2n}) with its
/// complement R^s (covectors eta_1..eta_s). omega = sum_i e^{2i-1} ^ e^{2i},
/// J e_{2i-1} = e_{2i}, J e_{2i} = -e_{2i-1}, metric standard euclidean.
///
/// Covector k (0-based) is bit k of a monomial mask: bits 0..2n-1 are the e's,
/// bits 2n..2n+s-1 the eta's.
struct ModelFrame {
    unsigned n = 0;
    unsigned s = 0;

    unsigned transverse_dim() const noexcept { return 2 * n; }
    unsigned total_dim() const noexcept { return 2 * n + s; }
    std::uint32_t transverse_mask() const noexcept { return (std::uint32_t{1} << (2 * n)) - 1; }
    std::uint32_t eta_mask() const noexcept { return ((std::uint32_t{1} << s) - 1) << (2 * n); }

    friend bool operator==(const ModelFrame&, const ModelFrame&) = default;
};

using Monomial = std::uint32_t;

/// Homogeneous element of the exterior algebra over a ModelFrame.
class Multivector {
public:
    Multivector(ModelFrame frame, unsigned degree);

    static Multivector scalar(ModelFrame frame, const Rational& c);
    static Multivector monomial(ModelFrame frame, Monomial m, const Rational& c = 1);
    /// Monomial from 1-based covector labels; eta_i has label 2n+i. Sorts with sign.
    static Multivector from_indices(ModelFrame frame, std::vector<unsigned> labels, const Rational& c = 1);

    const ModelFrame& frame() const noexcept { return frame_; }
    unsigned degree() const noexcept { return degree_; }
    const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_transverse() const noexcept;

    Rational coefficient(Monomial m) const;
    void add_term(Monomial m, const Rational& c);

    Multivector& operator+=(const Multivector& other);
    Multivector& operator-=(const Multivector& other);
    Multivector& operator*=(const Rational& c);

    friend bool operator==(const Multivector&, const Multivector&) = default;

private:
    ModelFrame frame_;
    unsigned degree_;
    std::map<Monomial, Rational> terms_;
};

Multivector operator+(Multivector a, const Multivector& b);
Multivector operator-(Multivector a, const Multivector& b);
Multivector operator*(const Rational& c, Multivector a);

/// Human-readable form such as "e1^e2 - 1/2 e3^e4", eta_i printed as "n<i>".
std::string to_string(const Multivector& a);

/// Sign (+1/-1) of e^a ^ e^b relative to e^{a|b}; 0 when they overlap.
int wedge_sign(Monomial a, Monomial b);

/// Monomials of the given degree over the first `dim` covectors, ascending.
std::vector<Monomial> basis_monomials(unsigned dim, unsigned degree);

Vector to_coordinates(const Multivector& a, const std::vector<Monomial>& basis);
Multivector from_coordinates(ModelFrame frame, unsigned degree,
                             const std::vector<Monomial>& basis, const Vector& v);

Multivector wedge(const Multivector& a, const Multivector& b);

/// omega as a 2-form on the transverse factor.
Multivector omega(ModelFrame frame);
/// omega^n / n! = e^1 ^ ... ^ e^{2n}.
Multivector transverse_volume(ModelFrame frame);

Multivector lefschetz_L(const Multivector& a);
Multivector symplectic_star(const Multivector& a);
Multivector hodge_star_transverse(const Multivector& a);
Multivector j_action(const Multivector& a);
Multivector lambda_op(const Multivector& a);
/// Metric Hodge star on R^{2n} + R^s, oriented by eta_1^...^eta_s^omega^n/n!.
Multivector full_hodge_star(const Multivector& a);

/// Euclidean inner product induced on forms (monomials orthonormal).
Rational inner_product(const Multivector& a, const Multivector& b);

struct PrimitiveComponent {
    unsigned power;     // i in a = sum_i L^i beta_i
    Multivector beta;   // primitive, degree r - 2i
};

/// Unique Lefschetz decomposition of a homogeneous transverse form. Zero components
/// are omitted; the zero form decomposes to an empty list.
std::vector<PrimitiveComponent> primitive_decompose(const Multivector& a);

/// Matrix of a degree-preserving-shape operator on monomial coordinates, from degree
/// `from` to the operator's output degree.
template <class Op>
Matrix operator_matrix(ModelFrame frame, unsigned dim, unsigned from, unsigned to, Op op)
{
    auto src = basis_monomials(dim, from);
    auto dst = basis_monomials(dim, to);
    std::vector<Vector> cols;
    cols.reserve(src.size());
    for (auto m : src)
        cols.push_back(to_coordinates(op(Multivector::monomial(frame, m)), dst));
    return Matrix::from_columns(dst.size(), cols);
}

} // namespace ksseq
