#include "errors.hpp"
#include "lefschetz.hpp"

#include <doctest.h>

#include <random>

using namespace ksseq;

namespace {

LefschetzModule cp(unsigned n)
{
    std::vector<std::size_t> dims(2 * n + 1, 0);
    std::vector<Matrix> L;
    for (unsigned p = 0; p <= 2 * n; p += 2)
        dims[p] = 1;
    for (unsigned p = 0; p <= 2 * n; ++p)
        L.push_back(Matrix(p + 2 <= 2 * n ? dims[p + 2] : 0, dims[p]));
    for (unsigned p = 0; p + 2 <= 2 * n; p += 2)
        L[p](0, 0) = 1;
    return LefschetzModule(n, dims, L);
}

} // namespace

TEST_CASE("module validation")
{
    CHECK_THROWS_AS(LefschetzModule(1, {1, 0, 1}, {Matrix(2, 1), Matrix(0, 0), Matrix(0, 1)}), DimensionMismatch);
    CHECK_THROWS_AS(LefschetzModule(1, {1, 0}, {}), DimensionMismatch);
}

TEST_CASE("hard Lefschetz examples")
{
    auto p1 = cp(1);
    CHECK(check_hard_lefschetz(p1).hlp);
    auto zero = LefschetzModule(1, {1, 0, 1}, {Matrix{{0}}, Matrix(0, 0), Matrix(0, 1)});
    auto rep = check_hard_lefschetz(zero);
    CHECK_FALSE(rep.hlp);
    REQUIRE(rep.failing_degree.has_value());
    CHECK(*rep.failing_degree == 1);
    auto free = generate_hlp_module(1, 2, {1, 2, 1});
    CHECK(check_hard_lefschetz(free).hlp);
    CHECK(free.dims() == std::vector<std::size_t>{1, 2, 2, 2, 1});
}

TEST_CASE("primitive subspaces")
{
    auto p1 = cp(1);
    CHECK(primitive_subspace(p1, 0) == Subspace::full(1));
    auto p2 = cp(2);
    CHECK(primitive_subspace(p2, 2) == Subspace::zero(1));
    CHECK(primitive_subspace(p2, 0) == Subspace::full(1));
    auto m = generate_hlp_module(4, 2, {1, 1, 2});
    CHECK(primitive_subspace(m, 2) == kernel_L(m, 2));
}

TEST_CASE("kernel of L")
{
    auto p1 = cp(1);
    CHECK(kernel_L(p1, 0) == Subspace::zero(1));
    CHECK(kernel_L(p1, 2) == Subspace::full(1));
    auto p2 = cp(2);
    CHECK(kernel_L(p2, 3).ambient_dim() == 0);
    CHECK(kernel_L(p2, 3).dim() == 0);
}

TEST_CASE("generated module dimensions")
{
    CHECK(generate_hlp_module(0, 0, {1}).dims() == std::vector<std::size_t>{1});
    CHECK(generate_hlp_module(0, 1, {1, 0}).dims() == std::vector<std::size_t>{1, 0, 1});
    CHECK(generate_hlp_module(0, 2, {1, 0, 1}).dims() == std::vector<std::size_t>{1, 0, 2, 0, 1});
    CHECK(generate_hlp_module(9, 3, {1, 2, 0, 1}) == generate_hlp_module(9, 3, {1, 2, 0, 1}));
}

TEST_CASE("top degree")
{
    CHECK(check_top_degree(cp(1)));
    CHECK_FALSE(check_top_degree(LefschetzModule(1, {1, 0, 0}, {Matrix(0, 1), Matrix(0, 0), Matrix(0, 0)})));
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        CHECK(check_top_degree(generate_hlp_module(seed, 3, {1, 1, 1, 1})));
}

TEST_CASE("class decomposition examples")
{
    auto m = generate_hlp_module(3, 2, {1, 0, 2});
    // primitive vector in H^2
    Vector prim = primitive_subspace(m, 2).basis().column(0);
    auto d = lefschetz_decompose_class(m, 2, prim);
    REQUIRE(d.size() == 1);
    CHECK(d[0].power == 0);
    CHECK(d[0].beta == prim);

    Vector w = primitive_subspace(m, 0).basis().column(0);
    Vector Lw = m.L(0) * w;
    auto d2 = lefschetz_decompose_class(m, 2, Lw);
    REQUIRE(d2.size() == 1);
    CHECK(d2[0].power == 1);
    CHECK(d2[0].beta == w);

    std::mt19937_64 rng(8);
    for (int t = 0; t < 50; ++t) {
        Vector v(m.dim(2));
        for (auto& x : v)
            x = static_cast<long>(rng() % 9) - 4;
        auto parts = lefschetz_decompose_class(m, 2, v);
        CHECK(lefschetz_reconstruct(m, 2, parts) == v);
        for (const auto& c : parts)
            CHECK(primitive_subspace(m, 2 - 2 * c.power).contains(c.beta));
    }
    auto bad = generate_non_hlp_module(3, 2, {1, 0, 2});
    CHECK_THROWS_AS(lefschetz_decompose_class(bad, 2, Vector(bad.dim(2))), HypothesisViolation);
}

TEST_CASE("properties of generated HLP modules")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const unsigned n = 1 + seed % 4;
        std::vector<std::size_t> pd(n + 1);
        pd[0] = 1;
        for (unsigned j = 1; j <= n; ++j)
            pd[j] = (seed + j) % 3;
        auto m = generate_hlp_module(seed, n, pd);
        auto rep = check_hard_lefschetz(m);
        REQUIRE(rep.hlp);
        for (unsigned k = 0; k <= 2 * n; ++k)
            CHECK(m.dim(k) == m.dim(2 * n - k));
        for (unsigned p = 0; p <= n; ++p) {
            CHECK(rep.primitive_dims[p] == pd[p]);
            CHECK(primitive_subspace(m, p).dim() + (p >= 2 ? m.dim(p - 2) : 0) == m.dim(p));
        }
        for (unsigned p = n; p <= 2 * n; ++p)
            CHECK(kernel_L(m, p).dim() == primitive_subspace(m, 2 * n - p).dim());
        auto bad = generate_non_hlp_module(seed, n, pd);
        CHECK_FALSE(satisfies_hard_lefschetz(bad));
    }
}
