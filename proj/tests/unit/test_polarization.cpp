#include <cmath>
#include <numbers>

#include <doctest.h>

#include "bdfkit/polarization.hpp"
#include "gen.hpp"

using namespace bdf;

namespace
{
    LambdaVector random_lambda(long m)
    {
        for (;;)
        {
            auto v = gen::integers(static_cast<size_t>(m / 2), -3, 3);
            if (m % 2 == 0)
                v.back() = 0;
            bool any = false;
            for (long x : v)
                any = any || x != 0;
            if (any)
                return LambdaVector::make(m, v);
        }
    }
}

TEST_CASE("lambda vectors")
{
    CHECK(LambdaVector::parse(7, "(-1)^3").values() == std::vector<long>{-1, -1, -1});
    CHECK(LambdaVector::parse(11, "(-1)^3,0,1").values() == std::vector<long>{-1, -1, -1, 0, 1});
    CHECK(LambdaVector::parse(8, "-1,1").values() == std::vector<long>{-1, 1, 0, 0});
    CHECK(LambdaVector::parse(5, "1").to_string() == "(1,0)");
    CHECK_THROWS_AS(LambdaVector::parse(8, "0,0,0,1"), InvalidInput);
    CHECK_THROWS_AS(LambdaVector::parse(5, "0"), InvalidInput);
    CHECK_THROWS_AS(LambdaVector::parse(5, "1,2,3"), InvalidInput);
    CHECK_THROWS_AS(LambdaVector::parse(5, "1,,2"), InvalidInput);
    auto lv = LambdaVector::make(7, {1, 2, 3});
    CHECK(lv.at(0) == 0);
    CHECK(lv.at(2) == 2);
    CHECK(lv.at(5) == -2);
    CHECK(lv.at(-1) == -1);
}

TEST_CASE("form construction oracles")
{
    auto full = build_form(LambdaVector::make(3, {1}), FormBasis::full);
    CHECK(full.matrix == IntMatrix{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}});

    auto r5 = build_form(LambdaVector::make(5, {1, 0}), FormBasis::restricted);
    CHECK(r5.rank() == 4);
    CHECK(r5.matrix.is_skew());
    CHECK(det(r5.matrix) == 1);

    auto r4 = build_form(LambdaVector::make(4, {1, 0}), FormBasis::restricted);
    CHECK(r4.matrix == IntMatrix{{0, 1}, {-1, 0}});
    CHECK(restricted_modulus(5) == cyclotomic_poly(5) * IntPolynomial::from_longs({1}));
    CHECK(restricted_modulus(8) == IntPolynomial::from_longs({1, 0, 1, 0, 1, 0, 1}));
}

TEST_CASE("invariance")
{
    for (long m = 3; m <= 12; ++m)
        for (int t = 0; t < 5; ++t)
        {
            auto lv = random_lambda(m);
            auto full = build_form(lv, FormBasis::full);
            CHECK(full.matrix.is_skew());
            CHECK(check_invariance(full, full.automorphism()));
            auto res = build_form(lv, FormBasis::restricted);
            CHECK(check_invariance(res, res.automorphism()));
        }
    CHECK(check_invariance(build_form(LambdaVector::make(7, {0, -1, 1}), FormBasis::restricted),
                           companion(restricted_modulus(7))));
    IntMatrix bad = gen::skew(4, -3, 3);
    bad(0, 1) = 5;
    bad(1, 0) = -5;
    bad(0, 2) = 1;
    bad(2, 0) = -1;
    AlternatingFormData f = build_form(LambdaVector::make(5, {1, 0}), FormBasis::restricted);
    f.matrix = bad;
    CHECK_FALSE(check_invariance(f, f.automorphism()));
}

TEST_CASE("kernel rank")
{
    CHECK(kernel_rank(build_form(LambdaVector::make(5, {1, 0}), FormBasis::restricted)).deficiency == 0);
    auto k = kernel_rank(build_form(LambdaVector::make(6, {1, 0, 0}), FormBasis::full));
    CHECK(k.deficiency >= 1);
    CHECK(static_cast<long>(k.generators.size()) == k.deficiency);
}

TEST_CASE("first Riemann relation")
{
    for (long m = 3; m <= 12; ++m)
        for (int t = 0; t < 10; ++t)
        {
            auto lv = random_lambda(m);
            CHECK(first_riemann(build_form(lv, FormBasis::restricted), standard_residues(m)));
        }
    auto lv = LambdaVector::make(8, {-1, 1, 0});
    CHECK(first_riemann(form_for_residues(lv, {1, 5}), std::vector<long>{1, 5}));
}

TEST_CASE("positive definiteness")
{
    // The printed A_7'' form is definite on the conjugate tuple of (1,2,4), i.e. on its orbit.
    auto f = form_for_residues(LambdaVector::make(7, {0, -1, 1}), {1, 2, 4});
    CHECK(gram_and_posdef(f, {3, 5, 6}).posdef == PosDef::yes);
    CHECK(gram_and_posdef(f, {1, 2, 4}).posdef == PosDef::no);
    auto g = form_for_residues(LambdaVector::make(7, {0, 1, -1}), {1, 2, 4});
    CHECK(gram_and_posdef(g, {1, 2, 4}).posdef == PosDef::yes);
    CHECK(gram_and_posdef(g, {3, 5, 6}).posdef == PosDef::no);
    CHECK_THROWS_AS(gram_and_posdef(f, {1, 2, 4}, 16, 4096), InvalidInput);
}

TEST_CASE("gram diagonal of the standard form")
{
    for (long m : {3L, 4L, 5L, 7L, 8L, 12L})
    {
        auto f = build_form(LambdaVector::make(m, {1}), FormBasis::restricted);
        auto res = standard_residues(m);
        auto gr = gram_and_posdef(f, res, 128, 4096);
        REQUIRE(gr.diagonal.size() == res.size());
        for (size_t i = 0; i < res.size(); ++i)
        {
            double expect = 2.0 * static_cast<double>(m) *
                            std::sin(2 * std::numbers::pi * static_cast<double>(res[i]) / static_cast<double>(m));
            CHECK(std::abs(gr.diagonal[i].re.midpoint() - expect) < 1e-12);
            CHECK(gr.diagonal[i].im.contains_zero());
        }
    }
}

TEST_CASE("polarization types")
{
    auto f = build_form(LambdaVector::make(5, {1, 0}), FormBasis::restricted);
    CHECK(polarization_type(f) == std::vector<Integer>{1, 1});
    AlternatingFormData twice = f;
    twice.matrix = Integer(2) * f.matrix;
    CHECK(polarization_type(twice) == std::vector<Integer>{2, 2});
    auto split = split_blocks(build_form(LambdaVector::make(8, {-1, 1, 0}), FormBasis::restricted));
    REQUIRE(split.blocks.count(8) == 1);
    auto t = polarization_type(split.blocks.at(8));
    CHECK(t.size() == 2);
    for (size_t i = 0; i + 1 < t.size(); ++i)
        CHECK(t[i + 1] % t[i] == 0);
}

TEST_CASE("negated forms flip the verdict")
{
    for (long m : {5L, 7L, 8L, 9L, 12L})
        for (int t = 0; t < 6; ++t)
        {
            auto lv = random_lambda(m);
            auto res = standard_residues(m);
            auto a = polarize(build_form(lv, FormBasis::restricted), res);
            auto b = polarize(build_form(lv.negated(), FormBasis::restricted), res);
            if (a.posdef == PosDef::yes)
                CHECK(b.posdef == PosDef::no);
            CHECK(a.invariant == b.invariant);
            CHECK(a.riemann1 == b.riemann1);
        }
}

TEST_CASE("block splitting")
{
    for (long m : {6L, 8L, 9L, 10L, 12L, 15L})
    {
        auto lv = random_lambda(m);
        auto f = build_form(lv, FormBasis::restricted);
        auto split = split_blocks(f);
        CHECK(split.cross_blocks_zero);
        long total = 0;
        for (const auto &[k, b] : split.blocks)
        {
            CHECK(m % k == 0);
            CHECK(b.rank() == totient(k));
            CHECK(b.matrix.is_skew());
            total += b.rank();
        }
        CHECK(total == f.rank());
        CHECK(split.change_of_basis.transpose() * f.matrix * split.change_of_basis == split.transformed);
    }
}

TEST_CASE("lambda search")
{
    auto s8 = search_lambda(8, {1, 5}, 1);
    CHECK(std::find(s8.begin(), s8.end(), LambdaVector::make(8, {-1, 1, 0})) != s8.end());
    auto s5 = search_lambda(5, standard_residues(5), 1);
    CHECK(std::find(s5.begin(), s5.end(), LambdaVector::make(5, {1, 0})) != s5.end());
    for (const auto &lv : s8)
    {
        CHECK(std::find(s8.begin(), s8.end(), lv.negated()) == s8.end());
        CHECK(polarize(form_for_residues(lv, {1, 5}), {1, 5}).ok());
    }
    CHECK_THROWS_AS(search_lambda(8, {1, 5}, 0), InvalidInput);
}

TEST_CASE("standard principal polarization")
{
    for (long m : {3L, 4L, 5L, 6L, 7L, 8L, 9L, 11L, 12L})
    {
        auto f = build_form(LambdaVector::make(m, {1}), FormBasis::restricted);
        auto rep = polarize(f, standard_residues(m));
        CHECK(rep.ok());
        CHECK(rep.principal());
    }
}
