#include "analysis.hpp"

#include "errors.hpp"
#include "invariant_complex.hpp"
#include "spectral.hpp"
#include "verifier.hpp"

#include <bit>
#include <cctype>
#include <chrono>
#include <optional>

namespace ksseq {

namespace {

std::vector<long long> to_ll(const std::vector<std::size_t>& v)
{
    return {v.begin(), v.end()};
}

void fill_engine(RunReport& r, const FilteredComplex& fc, const SpectralRun& run)
{
    r.filtration_length = fc.length();
    for (const auto& page : run.pages)
        r.pages.push_back(page_table(page));
    r.stable_at = run.stable_at;
    for (int k = 0; k <= fc.top_degree(); ++k)
        r.betti.push_back(static_cast<long long>(run.limit().total_dim(k)));
    r.cohomology = to_ll(fc.cohomology_dims());
}

} // namespace

RunReport analyze(const Model& model, const AnalyzeOptions& opts)
{
    const auto start = std::chrono::steady_clock::now();
    RunReport r;
    r.model_name = model.name;
    r.model_description = model.description;
    r.seed = model.seed;

    if (model.kind == ModelKind::FilteredComplex) {
        r.kind = "filtered-complex";
        const FilteredComplex fc = model.build_complex();
        const SpectralRun run = run_to_convergence(fc);
        fill_engine(r, fc, run);
        VerificationReport v;
        v.theorem = "abutment";
        for (std::size_t k = 0; k < r.betti.size(); ++k) {
            v.expected.emplace_back("b[" + std::to_string(k) + "]", r.cohomology[k]);
            v.actual.emplace_back("b[" + std::to_string(k) + "]", r.betti[k]);
        }
        v.finalize();
        r.verifications.push_back(std::move(v));
    } else {
        r.kind = "invariant";
        const InvariantComplex c = model.build_invariant();
        r.n = c.n();
        r.s = c.s();
        for (const auto& l : c.lambdas())
            r.lambdas.push_back(to_string(l));
        r.structure = to_string(c.structure());
        r.hlp = satisfies_hard_lefschetz(c.base());
        r.top_degree_one = check_top_degree(c.base());

        const SpectralRun run = run_to_convergence(c.complex());
        fill_engine(r, c.complex(), run);
        r.verifications.push_back(verify_E2(c, run));
        r.verifications.push_back(verify_abutment(c, run));
        switch (c.structure()) {
        case StructureType::S:
            r.verifications.push_back(verify_kernel_d2(c, run));
            r.verifications.push_back(verify_mainS(c, run));
            r.verifications.push_back(verify_harmonic_S(c));
            r.verifications.push_back(model_star_duality(c));
            break;
        case StructureType::C:
            r.verifications.push_back(verify_mainC(c, run));
            r.verifications.push_back(verify_harmonic_C(c));
            break;
        case StructureType::Mixed:
            break;
        }
    }
    if (opts.timing) {
        const auto elapsed = std::chrono::steady_clock::now() - start;
        r.timing_us = std::max<long long>(1, std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count());
    }
    return r;
}

StarCheckResult star_check(unsigned n, unsigned s)
{
    if (2 * n + s > 24)
        throw DimensionMismatch("star check supports 2n+s <= 24");
    StarCheckResult out;
    out.n = n;
    out.s = s;
    const ModelFrame frame{n, s};
    const unsigned tdim = 2 * n;
    const Monomial all_eta = frame.eta_mask();
    for (Monomial I = 0; I < (Monomial{1} << s); ++I) {
        const Monomial eta_I = I << tdim;
        const Monomial eta_comp = all_eta & ~eta_I;
        unsigned inversions = 0;
        for (unsigned i = 0; i < s; ++i)
            if (I & (Monomial{1} << i))
                inversions += static_cast<unsigned>(std::popcount((~I & ((Monomial{1} << s) - 1)) & ((Monomial{1} << i) - 1)));
        const unsigned q = static_cast<unsigned>(std::popcount(I));
        for (unsigned r = 0; r <= tdim; ++r)
            for (Monomial a : basis_monomials(tdim, r)) {
                ++out.cases;
                const Multivector alpha = Multivector::monomial(frame, a);
                const Multivector lhs = full_hodge_star(wedge(Multivector::monomial(frame, eta_I), alpha));
                const int sign = (inversions + (s - q) * r) % 2 == 0 ? 1 : -1;
                const Multivector rhs = wedge(Multivector::monomial(frame, eta_comp, sign), hodge_star_transverse(alpha));
                if (!(lhs == rhs) && out.counterexamples.size() < 8)
                    out.counterexamples.push_back("*(" + to_string(wedge(Multivector::monomial(frame, eta_I), alpha))
                                                  + ") = " + to_string(lhs) + " but the rule gives " + to_string(rhs));
            }
    }
    return out;
}

std::vector<IdentityCheck> operator_identities(unsigned n)
{
    const ModelFrame frame{n, 0};
    const unsigned tdim = 2 * n;
    IdentityCheck ss{"*s*s = id", n, 0, {}};
    IdentityCheck bb{"*b*b = (-1)^{r(2n-r)}", n, 0, {}};
    IdentityCheck js{"J*s = *b", n, 0, {}};
    IdentityCheck adj{"<La,b> = <a,Lambda b>", n, 0, {}};
    IdentityCheck sl2{"[Lambda,L] = (n-r) on primitive r-forms", n, 0, {}};

    auto note = [](IdentityCheck& c, const Multivector& a) {
        if (c.counterexamples.size() < 8)
            c.counterexamples.push_back(to_string(a));
    };
    for (unsigned r = 0; r <= tdim; ++r) {
        const auto mons = basis_monomials(tdim, r);
        for (Monomial m : mons) {
            const Multivector a = Multivector::monomial(frame, m);
            ++ss.cases;
            if (!(symplectic_star(symplectic_star(a)) == a))
                note(ss, a);
            ++bb.cases;
            const Rational sign = (r * (tdim - r)) % 2 == 0 ? 1 : -1;
            if (!(hodge_star_transverse(hodge_star_transverse(a)) == sign * a))
                note(bb, a);
            ++js.cases;
            if (!(j_action(symplectic_star(a)) == hodge_star_transverse(a)))
                note(js, a);
            if (r + 2 <= tdim) {
                const Multivector La = lefschetz_L(a);
                for (Monomial mb : basis_monomials(tdim, r + 2)) {
                    const Multivector b = Multivector::monomial(frame, mb);
                    ++adj.cases;
                    if (inner_product(La, b) != inner_product(a, lambda_op(b)))
                        note(adj, a);
                }
            }
        }
        // Primitive r-forms: the kernel of Lambda in degree r.
        if (r <= n) {
            const Matrix lam = operator_matrix(frame, tdim, r, r >= 2 ? r - 2 : 0, [&](const Multivector& x) {
                return r >= 2 ? lambda_op(x) : Multivector(frame, 0);
            });
            const Matrix prim = r >= 2 ? kernel_basis(lam).basis() : Matrix::identity(mons.size());
            for (std::size_t c = 0; c < prim.cols(); ++c) {
                const Multivector beta = from_coordinates(frame, r, mons, prim.column(c));
                ++sl2.cases;
                const Multivector comm = lambda_op(lefschetz_L(beta)) - lefschetz_L(lambda_op(beta));
                if (!(comm == Rational(static_cast<long>(n) - static_cast<long>(r)) * beta))
                    note(sl2, beta);
            }
        }
    }
    return {ss, bb, js, adj, sl2};
}

Multivector parse_form(unsigned n, std::string_view text)
{
    const ModelFrame frame{n, 0};
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto fail = [&](const std::string& why) -> ParseError {
        return ParseError("form", why + " at position " + std::to_string(pos));
    };

    std::optional<Multivector> result;
    bool first = true;
    skip();
    if (pos == text.size())
        throw fail("empty form");
    while (pos < text.size()) {
        int sign = 1;
        skip();
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip();
        } else if (!first) {
            throw fail("expected '+' or '-'");
        }
        first = false;

        Rational coeff = 1;
        bool have_coeff = false;
        const std::size_t num_start = pos;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
            ++pos;
        if (pos > num_start) {
            coeff = parse_rational(text.substr(num_start, pos - num_start));
            have_coeff = true;
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip();
            }
        }

        std::vector<unsigned> labels;
        while (pos < text.size() && text[pos] == 'e') {
            ++pos;
            const std::size_t d0 = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (pos == d0)
                throw fail("expected an index after 'e'");
            const unsigned label = static_cast<unsigned>(std::stoul(std::string(text.substr(d0, pos - d0))));
            if (label < 1 || label > 2 * n)
                throw fail("index e" + std::to_string(label) + " outside 1.." + std::to_string(2 * n));
            labels.push_back(label);
            skip();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip();
                if (pos >= text.size() || text[pos] != 'e')
                    throw fail("expected a covector after '^'");
            }
        }
        if (!have_coeff && labels.empty())
            throw fail("expected a coefficient or a covector");

        Multivector term = Multivector::from_indices(frame, labels, sign * coeff);
        if (!result) {
            result = term;
        } else {
            if (term.degree() != result->degree())
                throw ParseError("form", "terms of different degrees (" + std::to_string(result->degree())
                                             + " and " + std::to_string(term.degree()) + ")");
            *result += term;
        }
        skip();
    }
    return *result;
}

} // namespace ksseq
