#include "errors.hpp"
#include "multivector.hpp"

#include <doctest.h>

#include <random>

using namespace ksseq;

namespace {

Multivector e(ModelFrame f, std::vector<unsigned> labels, const Rational& c = 1)
{
    return Multivector::from_indices(f, std::move(labels), c);
}

Multivector random_form(std::mt19937_64& rng, ModelFrame f, unsigned degree)
{
    Multivector a(f, degree);
    for (auto m : basis_monomials(f.transverse_dim(), degree))
        if (rng() % 2)
            a.add_term(m, ratio(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3 + 1)));
    return a;
}

} // namespace

TEST_CASE("wedge examples")
{
    const ModelFrame f1{1, 0}, f2{2, 0};
    CHECK(wedge(e(f1, {1}), e(f1, {2})) == Multivector::monomial(f1, 0b11));
    auto a = e(f2, {1}) + e(f2, {3});
    CHECK(wedge(a, a).is_zero());
    auto lhs = wedge(e(f2, {1}) + e(f2, {3}), e(f2, {2}) + e(f2, {4}));
    auto rhs = e(f2, {1, 2}) + e(f2, {1, 4}) - e(f2, {2, 3}) + e(f2, {3, 4});
    CHECK(lhs == rhs);
    CHECK(to_string(e(f2, {2, 1})) == "-e1^e2");
    CHECK_THROWS_AS(wedge(e(f1, {1}), e(f2, {1})), FrameMismatch);
}

TEST_CASE("graded commutativity and associativity")
{
    std::mt19937_64 rng(17);
    const ModelFrame f{3, 0};
    for (int t = 0; t < 50; ++t) {
        const unsigned p = rng() % 4, q = rng() % 3, r = rng() % 2;
        auto a = random_form(rng, f, p), b = random_form(rng, f, q), c = random_form(rng, f, r);
        const Rational sign = (p * q) % 2 == 0 ? 1 : -1;
        CHECK(wedge(a, b) == sign * wedge(b, a));
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    }
}

TEST_CASE("L examples")
{
    const ModelFrame f1{1, 0}, f2{2, 0};
    CHECK(lefschetz_L(Multivector::scalar(f1, 1)) == omega(f1));
    CHECK(lefschetz_L(omega(f1)).is_zero());
    CHECK(lefschetz_L(e(f2, {1})) == e(f2, {1, 3, 4}));
}

TEST_CASE("symplectic star examples")
{
    const ModelFrame f1{1, 0}, f2{2, 0};
    CHECK(symplectic_star(Multivector::scalar(f1, 1)) == transverse_volume(f1));
    CHECK(symplectic_star(Multivector::scalar(f2, 1)) == e(f2, {1, 2, 3, 4}));
    // Literal inverse of the matrix omega(e_i,e_j); see README for the sign convention.
    CHECK(symplectic_star(e(f1, {1})) == e(f1, {1}, -1));
    CHECK(symplectic_star(e(f1, {2})) == e(f1, {2}, -1));
    CHECK(symplectic_star(transverse_volume(f1)) == Multivector::scalar(f1, 1));
    for (unsigned n = 0; n <= 3; ++n) {
        const ModelFrame f{n, 0};
        for (unsigned r = 0; r <= 2 * n; ++r)
            for (auto m : basis_monomials(2 * n, r)) {
                auto a = Multivector::monomial(f, m);
                CHECK(symplectic_star(symplectic_star(a)) == a);
            }
    }
}

TEST_CASE("basic Hodge star examples")
{
    const ModelFrame f1{1, 0};
    CHECK(hodge_star_transverse(Multivector::scalar(f1, 1)) == transverse_volume(f1));
    CHECK(hodge_star_transverse(e(f1, {1})) == e(f1, {2}));
    CHECK(hodge_star_transverse(e(f1, {2})) == e(f1, {1}, -1));
    for (unsigned n = 0; n <= 3; ++n) {
        const ModelFrame f{n, 0};
        for (unsigned r = 0; r <= 2 * n; ++r)
            for (auto m : basis_monomials(2 * n, r)) {
                auto a = Multivector::monomial(f, m);
                const Rational sign = (r * (2 * n - r)) % 2 == 0 ? 1 : -1;
                CHECK(hodge_star_transverse(hodge_star_transverse(a)) == sign * a);
                // b ^ *b a = <b,a> vol
                CHECK(wedge(a, hodge_star_transverse(a)) == transverse_volume(f));
            }
    }
}

TEST_CASE("J examples")
{
    const ModelFrame f1{1, 0}, f2{2, 0};
    CHECK(j_action(e(f1, {1})) == e(f1, {2}, -1));
    CHECK(j_action(e(f1, {2})) == e(f1, {1}));
    CHECK(j_action(omega(f2)) == omega(f2));
    std::mt19937_64 rng(2);
    for (unsigned r = 0; r <= 4; ++r) {
        auto a = random_form(rng, f2, r);
        const Rational sign = r % 2 == 0 ? 1 : -1;
        CHECK(j_action(j_action(a)) == sign * a);
        CHECK(j_action(symplectic_star(a)) == hodge_star_transverse(a));
    }
}

TEST_CASE("Lambda examples")
{
    for (unsigned n = 1; n <= 3; ++n) {
        const ModelFrame f{n, 0};
        CHECK(lambda_op(omega(f)) == Multivector::scalar(f, n));
        CHECK(lambda_op(Multivector::scalar(f, 1)).is_zero());
    }
    const ModelFrame f2{2, 0};
    CHECK(lambda_op(e(f2, {1, 3})).is_zero());
    CHECK(lambda_op(e(f2, {1, 2})) == Multivector::scalar(f2, 1));
}

TEST_CASE("primitive decomposition examples")
{
    const ModelFrame f2{2, 0};
    auto prim = e(f2, {1});
    auto d = primitive_decompose(prim);
    REQUIRE(d.size() == 1);
    CHECK(d[0].power == 0);
    CHECK(d[0].beta == prim);

    auto w = primitive_decompose(omega(f2));
    REQUIRE(w.size() == 1);
    CHECK(w[0].power == 1);
    CHECK(w[0].beta == Multivector::scalar(f2, 1));

    // e1^e2 = (e1^e2 - omega/2) + L(1/2)
    auto x = primitive_decompose(e(f2, {1, 2}));
    REQUIRE(x.size() == 2);
    CHECK(x[0].power == 0);
    CHECK(x[0].beta == e(f2, {1, 2}, ratio(1, 2)) - e(f2, {3, 4}, ratio(1, 2)));
    CHECK(x[1].power == 1);
    CHECK(x[1].beta == Multivector::scalar(f2, ratio(1, 2)));

    CHECK(primitive_decompose(Multivector(f2, 2)).empty());
}

TEST_CASE("decomposition reconstructs and components are primitive")
{
    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
        const unsigned n = 1 + rng() % 3;
        const ModelFrame f{n, 0};
        const unsigned r = rng() % (2 * n + 1);
        auto a = random_form(rng, f, r);
        Multivector acc(f, r);
        for (const auto& c : primitive_decompose(a)) {
            CHECK(lambda_op(c.beta).is_zero());
            Multivector term = c.beta;
            for (unsigned i = 0; i < c.power; ++i)
                term = lefschetz_L(term);
            acc += term;
        }
        CHECK(acc == a);
    }
}

TEST_CASE("full Hodge star examples")
{
    const ModelFrame f{1, 1};
    const Monomial eta = Monomial{1} << 2;
    // eta_1 ^ vol_T is the orientation form.
    CHECK(full_hodge_star(wedge(Multivector::monomial(f, eta), transverse_volume(f))) == Multivector::scalar(f, 1));
    CHECK(full_hodge_star(Multivector::monomial(f, eta)) == transverse_volume(f));
    CHECK(to_string(Multivector::monomial(f, eta)) == "eta1");
}
