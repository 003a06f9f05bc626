#include "invariant_complex.hpp"

#include "errors.hpp"
#include "multivector.hpp"

#include <bit>
#include <string>

namespace ksseq {

const char* to_string(StructureType t)
{
    switch (t) {
    case StructureType::S:
        return "S";
    case StructureType::C:
        return "C";
    case StructureType::Mixed:
        return "mixed";
    }
    return "?";
}

EtaPolynomial eta_monomial(EtaMask mask, const Rational& c)
{
    EtaPolynomial e;
    if (sgn(c) != 0)
        e.emplace(mask, c);
    return e;
}

EtaPolynomial eta_wedge(const EtaPolynomial& a, const EtaPolynomial& b)
{
    EtaPolynomial out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            int sign = wedge_sign(ma, mb);
            if (sign == 0)
                continue;
            Rational& slot = out[ma | mb];
            slot += sign * (ca * cb);
            if (sgn(slot) == 0)
                out.erase(ma | mb);
        }
    return out;
}

EtaPolynomial eta_difference(unsigned j)
{
    EtaPolynomial e = eta_monomial(1u, 1);
    e[EtaMask{1} << (j - 1)] -= 1;
    if (sgn(e[EtaMask{1} << (j - 1)]) == 0)
        e.erase(EtaMask{1} << (j - 1));
    return e;
}

long long binomial(long long a, long long b)
{
    if (a < 0 || b < 0 || b > a)
        return 0;
    long long r = 1;
    for (long long i = 1; i <= b; ++i)
        r = r * (a - b + i) / i;
    return r;
}

namespace {

void subsets_lex(unsigned s, unsigned q, unsigned start, EtaMask acc, std::vector<EtaMask>& out)
{
    if (q == 0) {
        out.push_back(acc);
        return;
    }
    for (unsigned i = start; i + q <= s; ++i)
        subsets_lex(s, q - 1, i + 1, acc | (EtaMask{1} << i), out);
}

} // namespace

StructureType InvariantComplex::structure() const noexcept
{
    bool all_one = true, all_zero = true;
    for (const auto& l : lambdas_) {
        all_one = all_one && l == 1;
        all_zero = all_zero && sgn(l) == 0;
    }
    if (all_one)
        return StructureType::S;
    if (all_zero)
        return StructureType::C;
    return StructureType::Mixed;
}

InvariantComplex InvariantComplex::build(LefschetzModule base, unsigned s, std::vector<Rational> lambdas)
{
    if (s == 0)
        throw DimensionMismatch("invariant complex needs s >= 1");
    if (s > 16)
        throw DimensionMismatch("invariant complex supports s <= 16");
    if (lambdas.size() != s)
        throw DimensionMismatch("expected " + std::to_string(s) + " lambdas, got " + std::to_string(lambdas.size()));

    InvariantComplex c;
    c.base_ = std::move(base);
    c.s_ = s;
    c.lambdas_ = std::move(lambdas);

    const unsigned top_basic = c.base_.top_degree();
    const unsigned top = top_basic + s;
    c.basis_.resize(top + 1);
    for (unsigned q = 0; q <= s; ++q) {
        std::vector<EtaMask> subsets;
        subsets_lex(s, q, 0, 0, subsets);
        for (unsigned k = q; k <= top_basic + q; ++k) {
            const unsigned p = k - q;
            for (auto mask : subsets)
                for (std::size_t a = 0; a < c.base_.dim(static_cast<int>(p)); ++a)
                    c.basis_[k].push_back({mask, p, a});
        }
    }

    std::vector<std::size_t> dims(top + 1);
    std::vector<std::vector<unsigned>> levels(top + 1);
    for (unsigned k = 0; k <= top; ++k) {
        dims[k] = c.basis_[k].size();
        for (const auto& e : c.basis_[k])
            levels[k].push_back(e.basic_degree);
    }

    // d(eta_I ⊗ h) = sum_m (-1)^{m-1} lambda_{i_m} eta_{I \ i_m} ⊗ L h.
    std::vector<Matrix> d(top + 1);
    for (unsigned k = 0; k <= top; ++k) {
        d[k] = Matrix(k < top ? dims[k + 1] : 0, dims[k]);
        if (k == top)
            continue;
        for (std::size_t col = 0; col < dims[k]; ++col) {
            const auto& e = c.basis_[k][col];
            if (e.eta == 0)
                continue;
            const Matrix Lp = c.base_.L(static_cast<int>(e.basic_degree));
            if (Lp.rows() == 0)
                continue;
            unsigned position = 0;
            for (unsigned i = 0; i < s; ++i) {
                const EtaMask bit = EtaMask{1} << i;
                if ((e.eta & bit) == 0)
                    continue;
                ++position;
                const Rational& lambda = c.lambdas_[i];
                if (sgn(lambda) == 0)
                    continue;
                const Rational coeff = (position % 2 == 1) ? Rational(lambda) : Rational(-lambda);
                for (std::size_t t = 0; t < Lp.rows(); ++t) {
                    const Rational& l = Lp(t, e.basic_index);
                    if (sgn(l) == 0)
                        continue;
                    const std::size_t row = c.index_of(e.eta & ~bit, e.basic_degree + 2, t);
                    d[k](row, col) += coeff * l;
                }
            }
        }
    }

    c.complex_ = FilteredComplex::from_levels(std::move(dims), std::move(d), levels, top_basic);
    return c;
}

const std::vector<InvariantBasisEntry>& InvariantComplex::basis(unsigned k) const
{
    if (k >= basis_.size())
        throw DimensionMismatch("degree " + std::to_string(k) + " beyond the top degree");
    return basis_[k];
}

std::size_t InvariantComplex::chain_dim(unsigned k) const
{
    return k < basis_.size() ? basis_[k].size() : 0;
}

std::size_t InvariantComplex::index_of(EtaMask eta, unsigned basic_degree, std::size_t basic_index) const
{
    const unsigned k = basic_degree + static_cast<unsigned>(std::popcount(eta));
    const auto& b = basis(k);
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i].eta == eta && b[i].basic_degree == basic_degree && b[i].basic_index == basic_index)
            return i;
    throw DimensionMismatch("no basis element for the requested eta/basic pair");
}

InvariantElement InvariantComplex::differential(const InvariantElement& x) const
{
    if (x.degree > top_degree() || x.coefficients.size() != chain_dim(x.degree))
        throw DimensionMismatch("element does not live in degree " + std::to_string(x.degree));
    InvariantElement y;
    y.degree = x.degree + 1;
    y.coefficients = differential_matrix(x.degree) * x.coefficients;
    return y;
}

Subspace InvariantComplex::filtration_subspace(unsigned p, unsigned k) const
{
    return complex_.F(static_cast<int>(p), static_cast<int>(k));
}

InvariantElement InvariantComplex::tensor(const EtaPolynomial& e, unsigned p, const Vector& h) const
{
    if (h.size() != base_.dim(static_cast<int>(p)))
        throw DimensionMismatch("basic vector does not live in H^" + std::to_string(p));
    int q = -1;
    for (const auto& [mask, coeff] : e) {
        const int len = std::popcount(mask);
        if (q >= 0 && len != q)
            throw DimensionMismatch("eta polynomial is not homogeneous");
        q = len;
        if ((mask >> s_) != 0)
            throw DimensionMismatch("eta polynomial uses eta_i with i > s");
    }
    InvariantElement x;
    x.degree = p + static_cast<unsigned>(q < 0 ? 0 : q);
    x.coefficients.assign(chain_dim(x.degree), Rational(0));
    for (const auto& [mask, coeff] : e)
        for (std::size_t a = 0; a < h.size(); ++a)
            if (sgn(h[a]) != 0)
                x.coefficients[index_of(mask, p, a)] += coeff * h[a];
    return x;
}

long long InvariantComplex::euler_characteristic() const
{
    long long chi = 0;
    for (unsigned k = 0; k <= top_degree(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(chain_dim(k));
    return chi;
}

std::vector<CohomologyGroup> cohomology(const InvariantComplex& c)
{
    std::vector<CohomologyGroup> out;
    const auto& fc = c.complex();
    for (int k = 0; k <= fc.top_degree(); ++k) {
        Subspace cycles = kernel_basis(fc.d(k));
        Subspace boundaries = image_of(fc.d(k - 1), Subspace::full(fc.chain_dim(k - 1)));
        CohomologyGroup g;
        g.degree = static_cast<unsigned>(k);
        g.classes = quotient(cycles, boundaries);
        g.dim = g.classes.dim;
        g.representatives = Subspace::span(g.classes.section);
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace ksseq
