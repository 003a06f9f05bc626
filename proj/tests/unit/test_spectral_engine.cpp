#include "errors.hpp"
#include "filtered_complex.hpp"
#include "invariant_complex.hpp"
#include "spectral.hpp"

#include <doctest.h>

#include <random>

using namespace ksseq;

TEST_CASE("filtered complex validation")
{
    // d∘d != 0
    CHECK_THROWS_AS(FilteredComplex::trivially_filtered({1, 1, 1}, {Matrix{{1}}, Matrix{{1}}, Matrix(0, 1)}),
                    MalformedComplex);
    // d lowers filtration: level 1 maps to level 0
    CHECK_THROWS_AS(FilteredComplex::from_levels({1, 1}, {Matrix{{1}}, Matrix(0, 1)}, {{1}, {0}}),
                    MalformedComplex);
    CHECK_NOTHROW(FilteredComplex::from_levels({1, 1}, {Matrix{{1}}, Matrix(0, 1)}, {{0}, {1}}));
}

TEST_CASE("two-term complex with trivial filtration")
{
    auto fc = FilteredComplex::trivially_filtered({1, 1}, {Matrix{{1}}, Matrix(0, 1)});
    auto e1 = compute_page(fc, 1);
    for (const auto& cell : e1.cells())
        CHECK(cell.dim() == 0);
    auto run = run_to_convergence(fc);
    CHECK(run.stable_at == 1);
    CHECK(check_abutment(fc, run));
}

TEST_CASE("zero differential is stable at page 0")
{
    auto fc = FilteredComplex::from_levels({2, 1}, {Matrix(1, 2), Matrix(0, 1)}, {{0, 1}, {1}});
    auto run = run_to_convergence(fc);
    CHECK(run.stable_at == 0);
    for (const auto& page : run.pages) {
        CHECK(page.total_dim(0) == 2);
        CHECK(page.total_dim(1) == 1);
    }
}

TEST_CASE("invariant model pages")
{
    auto base = LefschetzModule(1, {1, 0, 1}, {Matrix{{1}}, Matrix(0, 0), Matrix(0, 1)});
    auto c = InvariantComplex::build(base, 1, {1});
    auto e0 = compute_page(c.complex(), 0);
    CHECK(e0.differentials_vanish());
    CHECK(e0.dim(0, 0) == 1);
    CHECK(e0.dim(0, 1) == 1);
    CHECK(e0.dim(2, 0) == 1);
    CHECK(e0.dim(2, 1) == 1);
    auto run = run_to_convergence(c.complex());
    CHECK(run.stable_at == 3);
    CHECK(run.limit().dim(0, 0) == 1);
    CHECK(run.limit().dim(2, 1) == 1);
    CHECK(run.limit().dim(0, 1) == 0);
    CHECK(run.limit().dim(2, 0) == 0);
    CHECK(!run.pages[2].differentials_vanish());
}

TEST_CASE("trivial filtration reproduces cohomology at E1")
{
    std::mt19937_64 rng(4);
    for (int t = 0; t < 20; ++t) {
        auto base = generate_random_module(rng(), 1 + rng() % 2, 2);
        const unsigned s = 1 + rng() % 2;
        auto c = InvariantComplex::build(base, s, std::vector<Rational>(s, Rational(1)));
        const auto& cx = c.complex();
        std::vector<Matrix> d;
        for (int k = 0; k <= cx.top_degree(); ++k)
            d.push_back(cx.d(k));
        auto trivial = FilteredComplex::trivially_filtered(cx.chain_dims(), d);
        auto e1 = compute_page(trivial, 1);
        const auto h = cx.cohomology_dims();
        for (int k = 0; k <= cx.top_degree(); ++k)
            CHECK(e1.total_dim(k) == h[static_cast<std::size_t>(k)]);
        auto run = run_to_convergence(trivial);
        CHECK(run.stable_at <= 1);
    }
}

TEST_CASE("page turning and abutment on random models")
{
    std::mt19937_64 rng(77);
    for (int t = 0; t < 40; ++t) {
        const unsigned n = rng() % 3, s = 1 + rng() % 3;
        auto base = generate_random_module(rng(), n, 2);
        std::vector<Rational> lambdas;
        for (unsigned i = 0; i < s; ++i)
            lambdas.emplace_back(static_cast<long>(rng() % 3) - 1);
        auto c = InvariantComplex::build(base, s, lambdas);
        auto run = run_to_convergence(c.complex());
        for (std::size_t r = 0; r + 1 < run.pages.size(); ++r)
            CHECK(page_turning_holds(run.pages[r], run.pages[r + 1]));
        CHECK(check_abutment(c.complex(), run));
        for (const auto& cell : run.limit().cells())
            if (cell.dim() > 0) {
                CHECK(cell.p >= 0);
                CHECK(cell.p <= static_cast<int>(2 * n));
                CHECK(cell.q >= 0);
            }
    }
}
