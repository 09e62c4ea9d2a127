#include <doctest.h>

#include "bdfkit/torus.hpp"
#include "gen.hpp"

using namespace bdf;

namespace
{
    FiniteAbelianGroup fix_of(std::vector<std::pair<long, long>> comps)
    {
        return fixed_locus(LatticeAutomorphism::from_module(CyclotomicModule(comps)));
    }
}

TEST_CASE("character multiplicities")
{
    CHECK(character_multiplicities(Integer(-1) * IntMatrix::identity(4)) == std::map<long, long>{{2, 4}});
    CHECK(character_multiplicities(companion(cyclotomic_poly(5))) == std::map<long, long>{{5, 1}});
    IntMatrix c4 = companion(cyclotomic_poly(4));
    CHECK(character_multiplicities(IntMatrix::block_diagonal({c4, c4})) == std::map<long, long>{{4, 2}});
    CHECK_THROWS_AS(character_multiplicities(IntMatrix{{2}}), InvalidInput);
    CHECK_THROWS_AS(character_multiplicities(IntMatrix{{1, 1}, {0, 1}}), InvalidInput);
}

TEST_CASE("from_matrix recovers the module of a conjugated representation")
{
    for (int t = 0; t < 40; ++t)
    {
        std::vector<std::pair<long, long>> comps;
        for (long k : {2L, 3L, 4L, 5L, 6L, 8L})
            if (gen::integer(0, 2) == 0)
                comps.emplace_back(k, gen::integer(1, 2));
        if (comps.empty())
            comps.emplace_back(3, 1);
        CyclotomicModule mod(comps);
        auto aut = LatticeAutomorphism::from_module(mod);
        long n = aut.rep().rows();
        IntMatrix u = gen::unimodular(n);
        SNFDecomposition s = smith_normal_form(u);
        IntMatrix conj = u * aut.rep() * (s.V * s.U);
        auto back = LatticeAutomorphism::from_matrix(conj);
        CHECK(back.module() == mod);
        CHECK(back.order() == mod.order());
        CHECK(fixed_locus(back) == fixed_locus(aut));
        CHECK(aut.rep().power(aut.order()) == IntMatrix::identity(n));
    }
}

TEST_CASE("fixed loci oracles")
{
    CHECK(fix_of({{5, 1}}).to_string() == "Z/5");
    CHECK(fix_of({{3, 2}}).to_string() == "(Z/3)^2");
    CHECK(fix_of({{6, 1}}).is_trivial());
    CHECK(fix_of({{9, 1}}).to_string() == "Z/3");
    CHECK(fix_of({{2, 4}}).to_string() == "(Z/2)^4");
    CHECK(fix_of({{8, 1}}).to_string() == "Z/2");
    CHECK_THROWS_AS(LatticeAutomorphism::from_module(CyclotomicModule({{1, 2}})), InvalidInput);
}

TEST_CASE("fixed locus of a prime power order is elementary abelian")
{
    for (long m : {3L, 4L, 5L, 7L, 8L, 9L, 16L})
        for (long r = 1; r <= 3; ++r)
        {
            long p = prime_factors(m).front();
            long d = r * totient(m) / 2;
            CHECK(fix_of({{m, r}}) == FiniteAbelianGroup::elementary(p, 2 * d / totient(m)));
        }
}

TEST_CASE("fixed locus order is the product of cyclotomic values at one")
{
    for (int t = 0; t < 40; ++t)
    {
        std::vector<std::pair<long, long>> comps;
        Integer expect = 1;
        for (long k : {2L, 3L, 4L, 5L, 6L, 7L, 10L, 12L})
            if (gen::integer(0, 3) == 0)
            {
                long r = gen::integer(1, 2);
                comps.emplace_back(k, r);
                for (long i = 0; i < r; ++i)
                    expect *= abs(cyclotomic_poly(k).eval(1));
            }
        if (comps.empty())
            continue;
        CHECK(fix_of(comps).order() == expect);
    }
}

TEST_CASE("admissible orders")
{
    CHECK(admissible_orders(1).empty());
    CHECK(admissible_orders(2) == std::vector<long>{2, 3, 4, 6});
    CHECK(admissible_orders(3) == std::vector<long>{2, 3, 4, 5, 6, 8, 10, 12});
    for (long n = 2; n <= 6; ++n)
        for (long m : admissible_orders(n))
            CHECK(totient(m) <= 2 * (n - 1));
}

TEST_CASE("moduli dimensions")
{
    CyclotomicModule m32({{3, 2}});
    CHECK(moduli_dimension(ComplexStructure(m32, {{3, {1}}})) == 2);
    CHECK(moduli_dimension(ComplexStructure(CyclotomicModule({{3, 3}}), {{3, {1}}})) == 4);
    CHECK(moduli_dimension(ComplexStructure(CyclotomicModule({{2, 6}}), {})) == 6);
    CHECK(is_rigid(ComplexStructure::from_residues(7, {1, 2, 4})));
    CHECK_FALSE(is_rigid(ComplexStructure(m32, {{3, {1}}})));
    CHECK_FALSE(is_rigid(ComplexStructure(CyclotomicModule({{2, 2}}), {})));
    CHECK(moduli_dimension(ComplexStructure(CyclotomicModule({{2, 2}, {3, 2}}), {{3, {1}}})) == 3);
}

TEST_CASE("rank one structures are rigid")
{
    for (long m = 3; m <= 30; ++m)
    {
        if (totient(m) > 10)
            continue;
        for (const auto &cs : hodge_classes(m, 1))
        {
            CHECK(moduli_dimension(cs) == 0);
            CHECK(is_rigid(cs));
        }
    }
}

TEST_CASE("rigid iff zero moduli over hodge classes")
{
    for (long k = 2; k <= 12; ++k)
        for (long r = 1; r * totient(k) <= 10; ++r)
            for (const auto &cs : hodge_classes(k, r))
                CHECK(is_rigid(cs) == (moduli_dimension(cs) == 0));
}

TEST_CASE("canonical form is Galois and conjugation invariant")
{
    for (long k : {5L, 7L, 8L, 9L, 12L})
        for (long r = 1; r <= 2; ++r)
            for (const auto &cs : hodge_classes(k, r))
            {
                CHECK(cs.canonical() == cs);
                CHECK(cs.conjugate().canonical() == cs);
                for (long u = 1; u < k; ++u)
                    if (gcd(u, k) == 1)
                    {
                        CHECK(cs.galois(u).canonical() == cs);
                        CHECK(moduli_dimension(cs.galois(u)) == moduli_dimension(cs));
                    }
            }
}

TEST_CASE("hodge class counts")
{
    CHECK(hodge_classes(3, 2).size() == 2);
    CHECK(hodge_classes(7, 1).size() == 2);
    CHECK(hodge_classes(9, 1).size() == 2);
    CHECK(hodge_classes(5, 1).size() == 1);
    CHECK(hodge_classes(8, 1).size() == 2);
    CHECK(hodge_classes(24, 1).size() == 5);
    CHECK(hodge_classes(11, 1).size() == 4);
}

TEST_CASE("structure validation")
{
    CHECK_THROWS_AS(ComplexStructure::from_residues(5, {1, 4}), InvalidInput);
    CHECK_THROWS_AS(ComplexStructure::from_residues(5, {1}), InvalidInput);
    CHECK_THROWS_AS(ComplexStructure(CyclotomicModule({{3, 2}}), {{3, {3}}}), InvalidInput);
    CHECK_THROWS_AS(ComplexStructure(CyclotomicModule({{2, 3}}), {}), InvalidInput);
    auto cs = ComplexStructure::from_residues(7, {1, 2, 4});
    CHECK(cs.residues() == std::vector<long>{1, 2, 4});
    CHECK(cs.conjugate().residues() == std::vector<long>{3, 5, 6});
    CHECK(cs.dimension() == 3);
}

TEST_CASE("eigenvectors are eigenvectors of multiplication by X")
{
    auto b = eigenvector_basis(ComplexStructure::from_residues(3, {1}));
    REQUIRE(b.vectors.count(1) == 1);
    auto f3 = CyclotomicField::make(3);
    const auto &v = b.vectors.at(1);
    REQUIRE(v.size() == 2);
    // v_1 = 1 + e^-1 X + e^-2 X^2 with X^2 = -1 - X
    CHECK(v[0] == CyclotomicNumber::from_rational(f3, 1) - CyclotomicNumber::zeta_power(f3, -2));
    CHECK(v[1] == CyclotomicNumber::zeta_power(f3, -1) - CyclotomicNumber::zeta_power(f3, -2));

    for (long m : {5L, 7L, 8L, 9L, 12L})
    {
        auto f = CyclotomicField::make(m);
        for (const IntPolynomial &q : {cyclotomic_poly(m), IntPolynomial::monomial(m) - IntPolynomial::from_longs({1})})
        {
            std::vector<long> units;
            for (long j = 1; j < m; ++j)
                if (gcd(j, m) == 1)
                    units.push_back(j);
            auto basis = eigenvector_basis(m, units, q);
            long n = q.degree();
            for (long j : units)
            {
                const auto &c = basis.vectors.at(j);
                REQUIRE(static_cast<long>(c.size()) == n);
                bool nonzero = false;
                for (long i = 0; i < n; ++i)
                {
                    CyclotomicNumber shifted = i > 0 ? c[static_cast<size_t>(i - 1)] : CyclotomicNumber(f);
                    shifted -= c[static_cast<size_t>(n - 1)] * Rational(q.coeff(i));
                    CHECK(shifted == CyclotomicNumber::zeta_power(f, j) * c[static_cast<size_t>(i)]);
                    nonzero = nonzero || !c[static_cast<size_t>(i)].is_zero();
                }
                CHECK(nonzero);
            }
        }
    }
}
