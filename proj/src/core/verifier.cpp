#include "verifier.hpp"

#include "errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace ksseq {

const char* to_string(Outcome o)
{
    switch (o) {
    case Outcome::Pass:
        return "pass";
    case Outcome::Fail:
        return "fail";
    case Outcome::HypothesisViolated:
        return "hypothesis_violated";
    }
    return "?";
}

void VerificationReport::finalize()
{
    bool ok = expected == actual;
    for (const auto& [name, holds] : checks)
        ok = ok && holds;
    outcome = ok ? Outcome::Pass : Outcome::Fail;
    if (expected != actual) {
        std::map<std::string, long long> got(actual.begin(), actual.end());
        for (const auto& [key, value] : expected) {
            auto it = got.find(key);
            if (it == got.end() || it->second != value)
                witnesses.push_back(key + ": expected " + std::to_string(value) + ", got "
                                    + (it == got.end() ? std::string("nothing") : std::to_string(it->second)));
        }
    }
    for (const auto& [name, holds] : checks)
        if (!holds)
            witnesses.push_back("check failed: " + name);
}

namespace {

std::string cell_key(const char* prefix, int p, int q)
{
    return std::string(prefix) + "[" + std::to_string(p) + "," + std::to_string(q) + "]";
}

std::string degree_key(const char* prefix, unsigned k)
{
    return std::string(prefix) + "[" + std::to_string(k) + "]";
}

VerificationReport hypothesis_report(std::string theorem, std::string why)
{
    VerificationReport r;
    r.theorem = std::move(theorem);
    r.outcome = Outcome::HypothesisViolated;
    r.message = std::move(why);
    return r;
}

bool is_s_type(const InvariantComplex& c)
{
    return c.structure() == StructureType::S;
}

std::vector<long long> primitive_dims(const LefschetzReport& rep)
{
    return {rep.primitive_dims.begin(), rep.primitive_dims.end()};
}

std::vector<long long> kernel_dims(const LefschetzReport& rep)
{
    return {rep.kernel_L_dims.begin(), rep.kernel_L_dims.end()};
}

long long at(const std::vector<long long>& v, long long i)
{
    return (i < 0 || i >= static_cast<long long>(v.size())) ? 0 : v[static_cast<std::size_t>(i)];
}

/// Subsets of {2..s} as eta masks (bit 0 = eta_1 is never set).
std::vector<EtaMask> subsets_without_first(unsigned s)
{
    std::vector<EtaMask> out;
    for (EtaMask m = 0; m < (EtaMask{1} << s); m += 2)
        out.push_back(m);
    std::stable_sort(out.begin(), out.end(), [](EtaMask a, EtaMask b) {
        return std::popcount(a) < std::popcount(b);
    });
    return out;
}

EtaPolynomial theta_product(EtaMask J, unsigned s)
{
    EtaPolynomial e = eta_monomial(0);
    for (unsigned j = 2; j <= s; ++j)
        if (J & (EtaMask{1} << (j - 1)))
            e = eta_wedge(e, eta_difference(j));
    return e;
}

bool is_closed(const InvariantComplex& c, const InvariantElement& x)
{
    return is_zero(c.differential(x).coefficients);
}

/// Class coordinates of the cocycles in `elements` of degree k, as columns.
Matrix class_coordinates(const CohomologyGroup& g, const std::vector<const InvariantElement*>& elements)
{
    std::vector<Vector> cols;
    for (const auto* x : elements)
        cols.push_back(g.classes.project * x->coefficients);
    return Matrix::from_columns(g.dim, cols);
}

std::vector<const InvariantElement*> of_degree(const std::vector<InvariantElement>& xs, unsigned k)
{
    std::vector<const InvariantElement*> out;
    for (const auto& x : xs)
        if (x.degree == k)
            out.push_back(&x);
    return out;
}

void add_betti_rows(VerificationReport& r, const std::vector<long long>& expected,
                    const std::vector<long long>& actual)
{
    for (unsigned k = 0; k < expected.size(); ++k)
        r.expected.emplace_back(degree_key("b", k), expected[k]);
    for (unsigned k = 0; k < actual.size(); ++k)
        r.actual.emplace_back(degree_key("b", k), actual[k]);
}

std::vector<long long> limit_totals(const InvariantComplex& c, const SpectralRun& run)
{
    std::vector<long long> out;
    for (unsigned k = 0; k <= c.top_degree(); ++k)
        out.push_back(static_cast<long long>(run.limit().total_dim(static_cast<int>(k))));
    return out;
}

std::vector<long long> direct_cohomology(const InvariantComplex& c)
{
    auto dims = c.complex().cohomology_dims();
    return {dims.begin(), dims.end()};
}

} // namespace

VerificationReport verify_E2(const InvariantComplex& c)
{
    SpectralRun partial;
    for (unsigned r = 0; r <= 2; ++r)
        partial.pages.push_back(compute_page(c.complex(), r));
    return verify_E2(c, partial);
}

VerificationReport verify_E2(const InvariantComplex& c, const SpectralRun& run)
{
    if (run.pages.size() < 3)
        throw DimensionMismatch("verify_E2 needs pages E_0..E_2");
    VerificationReport r;
    r.theorem = "E2";
    const auto& e2 = run.pages[2];
    const unsigned s = c.s();
    for (unsigned p = 0; p <= c.base().top_degree(); ++p)
        for (unsigned q = 0; q <= s; ++q) {
            r.expected.emplace_back(cell_key("E2", static_cast<int>(p), static_cast<int>(q)),
                                    static_cast<long long>(c.base().dim(static_cast<int>(p))) * binomial(s, q));
            r.actual.emplace_back(cell_key("E2", static_cast<int>(p), static_cast<int>(q)),
                                  static_cast<long long>(e2.dim(static_cast<int>(p), static_cast<int>(q))));
        }
    r.checks.emplace_back("d0 = 0", run.pages[0].differentials_vanish());
    r.checks.emplace_back("d1 = 0", run.pages[1].differentials_vanish());
    r.finalize();
    return r;
}

KernelD2 kernel_d2(const InvariantComplex& c, const SpectralPage& e2, unsigned p, unsigned q)
{
    if (!is_s_type(c))
        throw HypothesisViolation("kernel of d_2 is described for S-type models only");
    if (!satisfies_hard_lefschetz(c.base()))
        throw HypothesisViolation("kernel of d_2 description requires the hard Lefschetz property");
    if (e2.r() != 2)
        throw DimensionMismatch("kernel_d2 expects the E_2 page");
    const SpectralCell* cell = e2.cell(static_cast<int>(p), static_cast<int>(q));
    if (cell == nullptr)
        throw DimensionMismatch("no E_2 cell at (" + std::to_string(p) + "," + std::to_string(q) + ")");

    KernelD2 out;
    out.actual = kernel_basis(cell->d_out);

    const unsigned s = c.s();
    const Matrix H = Subspace::full(c.base().dim(static_cast<int>(p))).basis();
    const Matrix K = kernel_L(c.base(), p).basis();
    std::vector<Vector> gens;
    for (EtaMask J : subsets_without_first(s)) {
        const unsigned len = static_cast<unsigned>(std::popcount(J));
        if (len == q) {
            auto theta = theta_product(J, s);
            for (std::size_t a = 0; a < H.cols(); ++a)
                gens.push_back(c.tensor(theta, p, H.column(a)).coefficients);
        }
        if (len + 1 == q) {
            auto e = eta_wedge(eta_monomial(1), theta_product(J, s));
            for (std::size_t a = 0; a < K.cols(); ++a)
                gens.push_back(c.tensor(e, p, K.column(a)).coefficients);
        }
    }
    std::vector<Vector> projected;
    for (const auto& g : gens)
        projected.push_back(cell->quotient.project * g);
    out.expected = Subspace::span(cell->dim(), projected);
    out.expected_dim = static_cast<std::size_t>(
        static_cast<long long>(c.base().dim(static_cast<int>(p))) * binomial(s - 1, q)
        + static_cast<long long>(K.cols()) * binomial(s - 1, static_cast<long long>(q) - 1));
    return out;
}

VerificationReport verify_kernel_d2(const InvariantComplex& c, const SpectralRun& run)
{
    if (!is_s_type(c))
        return hypothesis_report("kernel_d2", "model is not S-type");
    if (!satisfies_hard_lefschetz(c.base()))
        return hypothesis_report("kernel_d2", "base fails the hard Lefschetz property");
    VerificationReport r;
    r.theorem = "kernel_d2";
    const auto& e2 = run.pages.at(2);
    bool subspaces_match = true;
    for (unsigned p = 0; p <= c.base().top_degree(); ++p)
        for (unsigned q = 0; q <= c.s(); ++q) {
            auto k = kernel_d2(c, e2, p, q);
            r.expected.emplace_back(cell_key("ker_d2", static_cast<int>(p), static_cast<int>(q)),
                                    static_cast<long long>(k.expected_dim));
            r.actual.emplace_back(cell_key("ker_d2", static_cast<int>(p), static_cast<int>(q)),
                                  static_cast<long long>(k.actual.dim()));
            if (!(k.actual == k.expected)) {
                subspaces_match = false;
                r.witnesses.push_back("generators differ from kernel at " + cell_key("", static_cast<int>(p), static_cast<int>(q)));
            }
        }
    r.checks.emplace_back("generators span the kernel", subspaces_match);
    r.finalize();
    return r;
}

std::vector<long long> expected_dims_mainS(const LefschetzModule& base, unsigned s)
{
    if (s == 0)
        throw DimensionMismatch("s must be at least 1");
    auto rep = check_hard_lefschetz(base);
    if (!rep.hlp)
        throw HypothesisViolation("base fails the hard Lefschetz property");
    const auto pdim = primitive_dims(rep);
    const auto zdim = kernel_dims(rep);
    const long long top = 2 * static_cast<long long>(base.n()) + s;
    std::vector<long long> out(static_cast<std::size_t>(top + 1), 0);
    for (long long k = 0; k <= top; ++k)
        for (long long q = 0; q <= static_cast<long long>(s) - 1; ++q)
            out[static_cast<std::size_t>(k)] += binomial(s - 1, q) * (at(pdim, k - q) + at(zdim, k - q - 1));
    return out;
}

std::vector<long long> expected_dims_mainC(const LefschetzModule& base, unsigned s)
{
    const long long top = 2 * static_cast<long long>(base.n()) + s;
    std::vector<long long> dims(base.dims().begin(), base.dims().end());
    std::vector<long long> out(static_cast<std::size_t>(top + 1), 0);
    for (long long k = 0; k <= top; ++k)
        for (long long q = 0; q <= static_cast<long long>(s); ++q)
            out[static_cast<std::size_t>(k)] += binomial(s, q) * at(dims, k - q);
    return out;
}

VerificationReport verify_mainS(const InvariantComplex& c)
{
    if (!is_s_type(c))
        return hypothesis_report("mainS", "model is not S-type");
    if (!satisfies_hard_lefschetz(c.base()))
        return hypothesis_report("mainS", "base fails the hard Lefschetz property");
    return verify_mainS(c, run_to_convergence(c.complex()));
}

VerificationReport verify_mainS(const InvariantComplex& c, const SpectralRun& run)
{
    if (!is_s_type(c))
        return hypothesis_report("mainS", "model is not S-type");
    if (!satisfies_hard_lefschetz(c.base()))
        return hypothesis_report("mainS", "base fails the hard Lefschetz property");
    VerificationReport r;
    r.theorem = "mainS";
    const auto expected = expected_dims_mainS(c.base(), c.s());
    add_betti_rows(r, expected, limit_totals(c, run));
    r.checks.emplace_back("stable at page <= 3", run.stable_at <= 3);
    r.checks.emplace_back("cohomology matches", direct_cohomology(c) == expected);
    r.message = "stable at page " + std::to_string(run.stable_at);
    r.finalize();
    return r;
}

VerificationReport verify_mainC(const InvariantComplex& c)
{
    if (c.structure() != StructureType::C)
        return hypothesis_report("mainC", "model is not C-type");
    return verify_mainC(c, run_to_convergence(c.complex()));
}

VerificationReport verify_mainC(const InvariantComplex& c, const SpectralRun& run)
{
    if (c.structure() != StructureType::C)
        return hypothesis_report("mainC", "model is not C-type");
    VerificationReport r;
    r.theorem = "mainC";
    const auto expected = expected_dims_mainC(c.base(), c.s());
    add_betti_rows(r, expected, limit_totals(c, run));
    r.checks.emplace_back("stable at page <= 2", run.stable_at <= 2);
    r.checks.emplace_back("cohomology matches", direct_cohomology(c) == expected);
    r.message = "stable at page " + std::to_string(run.stable_at);
    r.finalize();
    return r;
}

VerificationReport verify_abutment(const InvariantComplex& c, const SpectralRun& run)
{
    VerificationReport r;
    r.theorem = "abutment";
    add_betti_rows(r, direct_cohomology(c), limit_totals(c, run));
    r.finalize();
    return r;
}

PrimitiveBetti primitive_betti_from_deRham(const std::vector<long long>& betti, unsigned s, unsigned n)
{
    if (s == 0)
        throw DimensionMismatch("s must be at least 1");
    if (betti.size() != 2 * n + s + 1)
        throw DimensionMismatch("expected " + std::to_string(2 * n + s + 1) + " Betti numbers, got "
                                + std::to_string(betti.size()));
    PrimitiveBetti out;
    for (unsigned k = 0; k <= n; ++k) {
        long long v = betti[k];
        for (unsigned i = 0; i < k; ++i)
            v -= binomial(s - 1, k - i) * out.primitive[i];
        if (v < 0)
            throw InconsistentInput("negative primitive Betti number in degree " + std::to_string(k),
                                    static_cast<int>(k));
        out.primitive.push_back(v);
    }
    out.basic.assign(2 * n + 1, 0);
    for (unsigned r = 0; r <= n; ++r)
        for (unsigned i = 0; 2 * i <= r; ++i)
            out.basic[r] += out.primitive[r - 2 * i];
    for (unsigned r = n + 1; r <= 2 * n; ++r)
        out.basic[r] = out.basic[2 * n - r];
    return out;
}

std::vector<long long> basic_betti_from_deRham(const std::vector<long long>& betti, unsigned s)
{
    if (s == 0)
        throw DimensionMismatch("s must be at least 1");
    if (betti.size() < s + 1 || (betti.size() - s - 1) % 2 != 0)
        throw DimensionMismatch("Betti list length must be 2n+s+1");
    const std::size_t basic_len = betti.size() - s;
    std::vector<long long> b;
    for (std::size_t k = 0; k < betti.size(); ++k) {
        long long v = betti[k];
        for (std::size_t i = 0; i < k; ++i)
            v -= binomial(s, static_cast<long long>(k - i)) * b[i];
        if (v < 0)
            throw InconsistentInput("negative basic Betti number in degree " + std::to_string(k),
                                    static_cast<int>(k));
        if (k >= basic_len && v != 0)
            throw InconsistentInput("nonzero basic Betti number in degree " + std::to_string(k)
                                    + " beyond the transverse dimension", static_cast<int>(k));
        b.push_back(v);
    }
    b.resize(basic_len);
    return b;
}

std::vector<InvariantElement> harmonic_basis_C(const InvariantComplex& c)
{
    if (c.structure() != StructureType::C)
        throw HypothesisViolation("harmonic_basis_C needs a C-type model");
    std::vector<InvariantElement> out;
    for (unsigned k = 0; k <= c.top_degree(); ++k)
        for (std::size_t i = 0; i < c.chain_dim(k); ++i) {
            InvariantElement x;
            x.degree = k;
            x.coefficients.assign(c.chain_dim(k), Rational(0));
            x.coefficients[i] = 1;
            out.push_back(std::move(x));
        }
    return out;
}

HarmonicBasisS harmonic_basis_S(const InvariantComplex& c)
{
    if (!is_s_type(c))
        throw HypothesisViolation("harmonic_basis_S needs an S-type model");
    if (!satisfies_hard_lefschetz(c.base()))
        throw HypothesisViolation("harmonic_basis_S needs the hard Lefschetz property");
    HarmonicBasisS out;
    const unsigned s = c.s();
    const auto& base = c.base();
    for (EtaMask J : subsets_without_first(s)) {
        const auto theta = theta_product(J, s);
        for (unsigned p = 0; p <= base.n(); ++p) {
            const Matrix prim = primitive_subspace(base, p).basis();
            for (std::size_t a = 0; a < prim.cols(); ++a)
                out.partA.push_back(c.tensor(theta, p, prim.column(a)));
        }
    }
    for (EtaMask I : subsets_without_first(s)) {
        const auto e = eta_monomial(I | 1u);
        for (unsigned p = 0; p <= base.top_degree(); ++p) {
            const Matrix ker = kernel_L(base, p).basis();
            for (std::size_t a = 0; a < ker.cols(); ++a)
                out.partB.push_back(c.tensor(e, p, ker.column(a)));
        }
    }
    auto by_degree = [](const InvariantElement& x, const InvariantElement& y) { return x.degree < y.degree; };
    std::stable_sort(out.partA.begin(), out.partA.end(), by_degree);
    std::stable_sort(out.partB.begin(), out.partB.end(), by_degree);
    return out;
}

VerificationReport verify_harmonic_C(const InvariantComplex& c)
{
    if (c.structure() != StructureType::C)
        return hypothesis_report("harmonic_C", "model is not C-type");
    VerificationReport r;
    r.theorem = "harmonic_C";
    const auto basis = harmonic_basis_C(c);
    const auto groups = cohomology(c);
    const auto expected = expected_dims_mainC(c.base(), c.s());
    bool closed = true, independent = true;
    for (const auto& x : basis)
        closed = closed && is_closed(c, x);
    for (unsigned k = 0; k <= c.top_degree(); ++k) {
        auto xs = of_degree(basis, k);
        r.expected.emplace_back(degree_key("count", k), expected[k]);
        r.actual.emplace_back(degree_key("count", k), static_cast<long long>(xs.size()));
        if (closed && rank(class_coordinates(groups[k], xs)) != xs.size()) {
            independent = false;
            r.witnesses.push_back("dependent classes in degree " + std::to_string(k));
        }
    }
    r.checks.emplace_back("cocycles", closed);
    r.checks.emplace_back("independent classes", closed && independent);
    r.finalize();
    return r;
}

VerificationReport verify_harmonic_S(const InvariantComplex& c)
{
    if (!is_s_type(c))
        return hypothesis_report("harmonic_S", "model is not S-type");
    auto rep = check_hard_lefschetz(c.base());
    if (!rep.hlp)
        return hypothesis_report("harmonic_S", "base fails the hard Lefschetz property");
    VerificationReport r;
    r.theorem = "harmonic_S";
    const auto h = harmonic_basis_S(c);
    const auto groups = cohomology(c);
    const auto pdim = primitive_dims(rep);
    const auto zdim = kernel_dims(rep);
    const long long s = c.s();
    bool closed = true, basis_ok = true;
    for (const auto* part : {&h.partA, &h.partB})
        for (const auto& x : *part)
            closed = closed && is_closed(c, x);
    for (unsigned k = 0; k <= c.top_degree(); ++k) {
        long long a = 0, b = 0;
        for (long long q = 0; q <= s - 1; ++q) {
            a += binomial(s - 1, q) * at(pdim, k - q);
            b += binomial(s - 1, q) * at(zdim, k - q - 1);
        }
        auto xa = of_degree(h.partA, k);
        auto xb = of_degree(h.partB, k);
        r.expected.emplace_back(degree_key("A", k), a);
        r.expected.emplace_back(degree_key("B", k), b);
        r.actual.emplace_back(degree_key("A", k), static_cast<long long>(xa.size()));
        r.actual.emplace_back(degree_key("B", k), static_cast<long long>(xb.size()));
        if (!closed)
            continue;
        auto all = xa;
        all.insert(all.end(), xb.begin(), xb.end());
        const Matrix coords = class_coordinates(groups[k], all);
        if (rank(coords) != all.size() || all.size() != groups[k].dim) {
            basis_ok = false;
            r.witnesses.push_back("classes in degree " + std::to_string(k) + " do not form a basis");
        }
    }
    r.checks.emplace_back("cocycles", closed);
    r.checks.emplace_back("classes form a basis", closed && basis_ok);
    r.finalize();
    return r;
}

Matrix base_block_star(const LefschetzModule& base, unsigned p)
{
    const unsigned n = base.n();
    if (p > 2 * n)
        throw DimensionMismatch("degree beyond the top of the base");
    const auto src = lefschetz_basis(base, p);
    const auto dst = lefschetz_basis(base, 2 * n - p);
    Matrix perm(dst.entries.size(), src.entries.size());
    for (std::size_t a = 0; a < src.entries.size(); ++a) {
        const auto& e = src.entries[a];
        const unsigned target_power = n - e.power - e.primitive_degree;
        auto it = std::find_if(dst.entries.begin(), dst.entries.end(), [&](const LefschetzBasisEntry& f) {
            return f.primitive_degree == e.primitive_degree && f.power == target_power && f.index == e.index;
        });
        if (it == dst.entries.end())
            throw HypothesisViolation("no dual Lefschetz block in degree " + std::to_string(2 * n - p));
        perm(static_cast<std::size_t>(it - dst.entries.begin()), a) = 1;
    }
    return dst.columns * perm * inverse(src.columns);
}

Matrix model_star_matrix(const InvariantComplex& c, unsigned k)
{
    const unsigned top = c.top_degree();
    if (k > top)
        throw DimensionMismatch("degree beyond the top of the model");
    const unsigned s = c.s();
    const EtaMask all = (EtaMask{1} << s) - 1;
    std::map<unsigned, Matrix> stars;
    Matrix out(c.chain_dim(top - k), c.chain_dim(k));
    const auto& basis = c.basis(k);
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const auto& e = basis[col];
        auto it = stars.find(e.basic_degree);
        if (it == stars.end())
            it = stars.emplace(e.basic_degree, base_block_star(c.base(), e.basic_degree)).first;
        const Matrix& star = it->second;
        const EtaMask comp = all & ~e.eta;
        unsigned inversions = 0;
        for (unsigned i = 0; i < s; ++i)
            if (e.eta & (EtaMask{1} << i))
                inversions += static_cast<unsigned>(std::popcount(comp & ((EtaMask{1} << i) - 1)));
        const unsigned exponent = inversions + (s - static_cast<unsigned>(std::popcount(e.eta))) * e.basic_degree;
        const int sign = exponent % 2 == 0 ? 1 : -1;
        const unsigned target_degree = 2 * c.n() - e.basic_degree;
        for (std::size_t b = 0; b < star.rows(); ++b) {
            const Rational& v = star(b, e.basic_index);
            if (sgn(v) != 0)
                out(c.index_of(comp, target_degree, b), col) += sign * v;
        }
    }
    return out;
}

VerificationReport model_star_duality(const InvariantComplex& c)
{
    if (!is_s_type(c))
        return hypothesis_report("star_duality", "model is not S-type");
    if (!satisfies_hard_lefschetz(c.base()))
        return hypothesis_report("star_duality", "base fails the hard Lefschetz property");
    VerificationReport r;
    r.theorem = "star_duality";
    const auto h = harmonic_basis_S(c);
    const auto groups = cohomology(c);
    const unsigned top = c.top_degree();
    bool closed = true, complementary = true, onto_partB = true;
    for (unsigned k = 0; k <= top; ++k) {
        const unsigned dual = top - k;
        const Matrix star = model_star_matrix(c, k);
        std::vector<InvariantElement> images;
        for (const auto* x : of_degree(h.partA, k)) {
            InvariantElement y;
            y.degree = dual;
            y.coefficients = star * x->coefficients;
            if (!is_closed(c, y)) {
                closed = false;
                r.witnesses.push_back("star of a partA element in degree " + std::to_string(k) + " is not closed");
            }
            images.push_back(std::move(y));
        }
        const auto xb = of_degree(h.partB, dual);
        r.expected.emplace_back(degree_key("star_rank", k), static_cast<long long>(xb.size()));
        if (!closed) {
            r.actual.emplace_back(degree_key("star_rank", k), -1);
            continue;
        }
        std::vector<const InvariantElement*> img_ptrs;
        for (const auto& y : images)
            img_ptrs.push_back(&y);
        const Matrix img = class_coordinates(groups[dual], img_ptrs);
        const std::size_t img_rank = rank(img);
        r.actual.emplace_back(degree_key("star_rank", k), static_cast<long long>(img_rank));

        // star(A_k) + A_{dual} spans H^{dual} with no overlap.
        const Matrix a_dual = class_coordinates(groups[dual], of_degree(h.partA, dual));
        const std::size_t joint = rank(hconcat(img, a_dual));
        if (img_rank != images.size() || joint != img_rank + a_dual.cols() || joint != groups[dual].dim) {
            complementary = false;
            r.witnesses.push_back("star images and partA classes fail to split H^" + std::to_string(dual));
        }
        const Subspace img_span = Subspace::span(img);
        const Subspace b_span = Subspace::span(class_coordinates(groups[dual], xb));
        if (!(img_span == b_span))
            onto_partB = false;
    }
    r.checks.emplace_back("star images closed", closed);
    r.checks.emplace_back("star(partA) complements partA", closed && complementary);
    r.finalize();
    r.message = onto_partB ? "star(partA) classes coincide with partB classes"
                           : "star(partA) classes differ from partB classes but complement partA";
    return r;
}

} // namespace ksseq
