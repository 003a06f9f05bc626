// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include "analysis.hpp"
#include "errors.hpp"
#include "invariant_complex.hpp"
#include "lefschetz.hpp"
#include "model_file.hpp"
#include "multivector.hpp"
#include "spectral.hpp"
#include "verifier.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace ksseq;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
    std::string id;
    std::string title;
    double limit_s = 0;     // 0 means no runtime bound
    bool ok = true;
    std::size_t cases = 0;
    double seconds = 0;
    std::vector<std::string> failures;

    void fail(std::string what)
    {
        ok = false;
        if (failures.size() < 5)
            failures.push_back(std::move(what));
    }
};

struct SuiteEntry {
    Model model;
    InvariantComplex complex;
    SpectralRun run;
};

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string describe(const Model& m)
{
    std::ostringstream s;
    s << m.name << " (n=" << m.base.n() << ", s=" << m.s << ")";
    return s.str();
}

std::string first_problem(const VerificationReport& r)
{
    if (!r.message.empty())
        return r.theorem + ": " + r.message;
    return r.theorem + ": " + to_string(r.outcome);
}

void print(const Criterion& c)
{
    bool within = c.limit_s <= 0 || c.seconds < c.limit_s;
    bool pass = c.ok && within;
    std::printf("%-4s %s  %s [%zu cases, %.2f s", c.id.c_str(), pass ? "PASS" : "FAIL", c.title.c_str(),
                c.cases, c.seconds);
    if (c.limit_s > 0)
        std::printf(", limit %.0f s", c.limit_s);
    std::printf("]\n");
    for (const auto& f : c.failures)
        std::printf("       %s\n", f.c_str());
    if (!within)
        std::printf("       runtime limit exceeded\n");
    std::fflush(stdout);
}

bool passed(const Criterion& c)
{
    return c.ok && (c.limit_s <= 0 || c.seconds < c.limit_s);
}

Rational random_rational(std::mt19937_64& rng)
{
    long num = static_cast<long>(rng() % 11) - 5;
    long den = static_cast<long>(rng() % 4) + 1;
    return ratio(num, den);
}

std::vector<std::size_t> primitive_dims_of(const LefschetzModule& m)
{
    std::vector<std::size_t> out(m.n() + 1);
    for (unsigned j = 0; j <= m.n(); ++j)
        out[j] = m.dims()[j] - (j >= 2 ? m.dims()[j - 2] : 0);
    return out;
}

// AC1 suite: arbitrary lambdas, checked for E2 only.
Criterion run_ac1(std::vector<SuiteEntry>& abutment_pool)
{
    Criterion c{"AC1", "E2 page: dim = dims[p] C(s,q), d0 = d1 = 0 (200 models, n<=4, s<=3)", 60};
    auto t0 = Clock::now();
    for (std::uint64_t i = 0; i < 200; ++i) {
        GenerateOptions o;
        o.seed = 1000 + i;
        o.n = static_cast<unsigned>(i % 5);
        o.s = 1 + static_cast<unsigned>((i / 5) % 3);
        o.type = i % 4 == 0 ? StructureType::S : i % 4 == 1 ? StructureType::C : StructureType::Mixed;
        auto m = generate_model(o);
        auto ic = m.build_invariant();
        auto run = run_to_convergence(ic.complex());
        auto r = verify_E2(ic, run);
        ++c.cases;
        if (!r.passed())
            c.fail(describe(m) + " " + first_problem(r));
        abutment_pool.push_back({std::move(m), std::move(ic), std::move(run)});
    }
    c.seconds = seconds_since(t0);
    return c;
}

std::vector<SuiteEntry> build_suite(StructureType type, std::uint64_t seed0)
{
    std::vector<SuiteEntry> suite;
    for (std::uint64_t i = 0; i < 100; ++i) {
        GenerateOptions o;
        o.seed = seed0 + i;
        o.n = static_cast<unsigned>(i % 5);
        o.s = 1 + static_cast<unsigned>((i / 5) % 3);
        o.type = type;
        auto m = generate_model(o);
        auto ic = m.build_invariant();
        auto run = run_to_convergence(ic.complex());
        suite.push_back({std::move(m), std::move(ic), std::move(run)});
    }
    return suite;
}

Criterion run_ac2(std::vector<SuiteEntry>& suite)
{
    Criterion c{"AC2", "S-type: stable at page <= 3, E_inf totals = predicted = direct cohomology (100 HLP models)",
                300};
    auto t0 = Clock::now();
    suite = build_suite(StructureType::S, 2000);
    for (const auto& e : suite) {
        ++c.cases;
        if (!satisfies_hard_lefschetz(e.model.base))
            c.fail(describe(e.model) + " base lacks HLP");
        auto r = verify_mainS(e.complex, e.run);
        if (!r.passed())
            c.fail(describe(e.model) + " " + first_problem(r));
        auto k = verify_kernel_d2(e.complex, e.run);
        if (!k.passed())
            c.fail(describe(e.model) + " " + first_problem(k));
    }
    c.seconds = seconds_since(t0);
    return c;
}

Criterion run_ac3(std::vector<SuiteEntry>& suite)
{
    Criterion c{"AC3", "C-type: stable at page <= 2, E_inf totals = binomial convolution (100 models)", 60};
    auto t0 = Clock::now();
    suite = build_suite(StructureType::C, 3000);
    std::size_t non_hlp = 0;
    for (const auto& e : suite) {
        ++c.cases;
        if (!satisfies_hard_lefschetz(e.model.base))
            ++non_hlp;
        auto r = verify_mainC(e.complex, e.run);
        if (!r.passed())
            c.fail(describe(e.model) + " " + first_problem(r));
    }
    if (non_hlp == 0)
        c.fail("suite contains no non-HLP base");
    c.title += " incl. " + std::to_string(non_hlp) + " non-HLP";
    c.seconds = seconds_since(t0);
    return c;
}

Criterion run_ac4(const std::vector<SuiteEntry>& s_suite, const std::vector<SuiteEntry>& c_suite)
{
    Criterion c{"AC4", "Betti recursions recover primitive / basic dims from predicted de Rham dims"};
    auto t0 = Clock::now();
    for (const auto& e : s_suite) {
        ++c.cases;
        const auto& base = e.model.base;
        auto predicted = expected_dims_mainS(base, e.model.s);
        auto rec = primitive_betti_from_deRham(predicted, e.model.s, base.n());
        auto prim = primitive_dims_of(base);
        std::vector<long long> want_prim(prim.begin(), prim.end());
        std::vector<long long> want_basic(base.dims().begin(), base.dims().end());
        if (rec.primitive != want_prim || rec.basic != want_basic)
            c.fail(describe(e.model) + " S-type recursion mismatch");
    }
    for (const auto& e : c_suite) {
        ++c.cases;
        const auto& base = e.model.base;
        auto predicted = expected_dims_mainC(base, e.model.s);
        auto rec = basic_betti_from_deRham(predicted, e.model.s);
        std::vector<long long> want(base.dims().begin(), base.dims().end());
        if (rec != want)
            c.fail(describe(e.model) + " C-type recursion mismatch");
    }
    c.seconds = seconds_since(t0);
    return c;
}

Criterion run_ac5()
{
    Criterion c{"AC5", "presets reproduce known Betti numbers"};
    auto t0 = Clock::now();
    const std::vector<std::pair<std::string, std::vector<long long>>> known = {
        {"hopf-s3", {1, 0, 0, 1}},    {"s5", {1, 0, 0, 0, 0, 1}},    {"s2xs3", {1, 0, 1, 1, 0, 1}},
        {"torus-t3", {1, 3, 3, 1}},   {"torus-t4", {1, 4, 6, 4, 1}},
    };
    for (const auto& [name, betti] : known) {
        ++c.cases;
        auto r = analyze(preset_model(name));
        if (r.betti != betti || r.cohomology != betti)
            c.fail(name + " Betti numbers differ");
        if (!r.passed())
            c.fail(name + " has a failing verification");
    }
    c.seconds = seconds_since(t0);
    return c;
}

Criterion run_ac6()
{
    Criterion c{"AC6", "star formula on every monomial and index subset, n<=2, s<=3", 30};
    auto t0 = Clock::now();
    for (unsigned n = 0; n <= 2; ++n)
        for (unsigned s = 1; s <= 3; ++s) {
            auto r = star_check(n, s);
            c.cases += r.cases;
            for (const auto& ce : r.counterexamples)
                c.fail("n=" + std::to_string(n) + " s=" + std::to_string(s) + ": " + ce);
        }
    c.seconds = seconds_since(t0);
    return c;
}

Criterion run_ac7()
{
    Criterion c{"AC7", "pointwise operator identities, exhaustive for n<=3"};
    auto t0 = Clock::now();
    for (unsigned n = 0; n <= 3; ++n)
        for (const auto& id : operator_identities(n)) {
            c.cases += id.cases;
            for (const auto& ce : id.counterexamples)
                c.fail(id.name + " n=" + std::to_string(n) + ": " + ce);
        }
    c.seconds = seconds_since(t0);
    return c;
}

Criterion run_ac8()
{
    Criterion c{"AC8", "form and class Lefschetz decompositions reconstruct exactly with primitive parts"};
    auto t0 = Clock::now();
    std::mt19937_64 rng(8);
    for (int i = 0; i < 1000; ++i) {
        ++c.cases;
        unsigned n = 1 + static_cast<unsigned>(rng() % 3);
        ModelFrame frame{n, 0};
        unsigned r = static_cast<unsigned>(rng() % (2 * n + 1));
        auto monos = basis_monomials(2 * n, r);
        Multivector a(frame, r);
        for (auto m : monos)
            if (rng() % 2)
                a.add_term(m, random_rational(rng));
        auto parts = primitive_decompose(a);
        Multivector sum(frame, r);
        for (const auto& p : parts) {
            if (!lambda_op(p.beta).is_zero() || p.beta.degree() + 2 * p.power != r)
                c.fail("form component not primitive: " + to_string(a));
            Multivector term = p.beta;
            for (unsigned k = 0; k < p.power; ++k)
                term = lefschetz_L(term);
            sum += term;
        }
        if (!(sum == a))
            c.fail("form reconstruction failed: " + to_string(a));
    }
    for (int i = 0; i < 1000; ++i) {
        ++c.cases;
        unsigned n = 1 + static_cast<unsigned>(rng() % 4);
        std::vector<std::size_t> prim(n + 1);
        for (auto& d : prim)
            d = rng() % 3;
        prim[0] = 1;
        auto m = generate_hlp_module(rng(), n, prim);
        unsigned p = static_cast<unsigned>(rng() % (2 * n + 1));
        Vector v(m.dims()[p]);
        for (auto& x : v)
            x = random_rational(rng);
        auto parts = lefschetz_decompose_class(m, p, v);
        for (const auto& part : parts) {
            unsigned j = p - 2 * part.power;
            if (!primitive_subspace(m, j).contains(part.beta))
                c.fail("class component not primitive (n=" + std::to_string(n) + ", p=" + std::to_string(p) + ")");
        }
        if (lefschetz_reconstruct(m, p, parts) != v)
            c.fail("class reconstruction failed (n=" + std::to_string(n) + ", p=" + std::to_string(p) + ")");
    }
    c.seconds = seconds_since(t0);
    return c;
}

Criterion run_ac9(const std::vector<SuiteEntry>& s_suite, const std::vector<SuiteEntry>& c_suite)
{
    Criterion c{"AC9", "harmonic bases are independent cocycles with predicted counts; star duality on S-type"};
    auto t0 = Clock::now();
    for (const auto& e : s_suite) {
        ++c.cases;
        auto h = verify_harmonic_S(e.complex);
        if (!h.passed())
            c.fail(describe(e.model) + " " + first_problem(h));
        auto d = model_star_duality(e.complex);
        if (!d.passed())
            c.fail(describe(e.model) + " " + first_problem(d));
    }
    for (const auto& e : c_suite) {
        ++c.cases;
        auto h = verify_harmonic_C(e.complex);
        if (!h.passed())
            c.fail(describe(e.model) + " " + first_problem(h));
    }
    c.seconds = seconds_since(t0);
    return c;
}

Criterion run_ac10(const std::vector<const std::vector<SuiteEntry>*>& suites)
{
    Criterion c{"AC10", "abutment on every suite complex; trivial filtration gives cohomology at E1"};
    auto t0 = Clock::now();
    for (const auto* suite : suites)
        for (const auto& e : *suite) {
            ++c.cases;
            const auto& fc = e.complex.complex();
            if (!check_abutment(fc, e.run))
                c.fail(describe(e.model) + " abutment fails");
            std::vector<Matrix> d;
            for (int k = 0; k <= fc.top_degree(); ++k)
                d.push_back(fc.d(k));
            auto trivial = FilteredComplex::trivially_filtered(fc.chain_dims(), d);
            auto e1 = compute_page(trivial, 1);
            auto h = fc.cohomology_dims();
            for (int k = 0; k <= fc.top_degree(); ++k)
                if (e1.dim(0, k) != h[static_cast<std::size_t>(k)] || e1.total_dim(k) != h[static_cast<std::size_t>(k)])
                    c.fail(describe(e.model) + " trivial filtration E1 differs in degree " + std::to_string(k));
        }
    c.seconds = seconds_since(t0);
    return c;
}

} // namespace

int main()
{
    std::vector<Criterion> results;
    auto guard = [&](const char* id, const std::function<Criterion()>& f) {
        try {
            results.push_back(f());
        } catch (const std::exception& e) {
            Criterion c{id, "aborted"};
            c.fail(std::string("exception: ") + e.what());
            results.push_back(c);
        }
        print(results.back());
    };

    std::vector<SuiteEntry> e2_suite, s_suite, c_suite;
    guard("AC1", [&] { return run_ac1(e2_suite); });
    guard("AC2", [&] { return run_ac2(s_suite); });
    guard("AC3", [&] { return run_ac3(c_suite); });
    guard("AC4", [&] { return run_ac4(s_suite, c_suite); });
    guard("AC5", [&] { return run_ac5(); });
    guard("AC6", [&] { return run_ac6(); });
    guard("AC7", [&] { return run_ac7(); });
    guard("AC8", [&] { return run_ac8(); });
    guard("AC9", [&] { return run_ac9(s_suite, c_suite); });
    guard("AC10", [&] { return run_ac10({&e2_suite, &s_suite, &c_suite}); });

    std::size_t failed = 0;
    for (const auto& c : results)
        if (!passed(c))
            ++failed;
    std::printf("%zu/%zu criteria passed\n", results.size() - failed, results.size());
    return failed == 0 ? 0 : 1;
}
