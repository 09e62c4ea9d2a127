#include <map>
#include <set>

#include <doctest.h>

#include "bdfkit/bdf.hpp"
#include "bdfkit/orbits.hpp"
#include "bdfkit/torus.hpp"

using namespace bdf;

namespace
{
    std::set<std::string> labels(const std::vector<TorusFamily> &fs)
    {
        std::set<std::string> out;
        for (const auto &f : fs)
            out.insert(f.label);
        return out;
    }

    std::vector<std::string> names(const std::vector<FiniteAbelianGroup> &gs)
    {
        std::vector<std::string> out;
        for (const auto &g : gs)
            out.push_back(g.to_string());
        return out;
    }

    TorusFamily family_with(long d, long m, const std::string &label)
    {
        for (const auto &f : primary_families(d, m))
            if (f.label == label)
                return f;
        FAIL("no family " << label << " for d=" << d << " m=" << m);
        return {};
    }
}

TEST_CASE("primary families")
{
    auto f28 = primary_families(2, 8);
    CHECK(labels(f28) == std::set<std::string>{"S_8'", "S_8''"});
    for (const auto &f : f28)
        CHECK(f.rigid());
    CHECK(labels(primary_families(2, 5)) == std::set<std::string>{"S_10"});
    CHECK(primary_families(3, 7).size() == 2);
    CHECK(primary_families(4, 5).size() == 3);
    CHECK(primary_families(4, 24).size() == 5);
    CHECK(primary_families(5, 11).size() == 4);
}

TEST_CASE("composite B2 options")
{
    std::set<std::string> b24;
    for (const auto &f : composite_b2(2, 4))
        b24.insert(f.label);
    CHECK(b24.count("S_4") == 1);
    CHECK(b24.count("E_iota x E_iota") == 1);
    CHECK(b24.count("E x E_iota") == 1);

    auto b16 = composite_b2(1, 6);
    REQUIRE(b16.size() == 1);
    CHECK(b16[0].label == "E_rho");
    CHECK(b16[0].m == 6);

    std::set<std::string> b314;
    for (const auto &f : composite_b2(3, 14))
        b314.insert(f.label);
    CHECK(b314 == std::set<std::string>{"A_7'", "A_7''"});
}

TEST_CASE("family counts by dimension")
{
    CHECK(all_families(1).size() == 4);
    CHECK(all_families(2).size() == 19);
    CHECK(all_families(3).size() == 57);
}

TEST_CASE("family invariants")
{
    for (long d = 1; d <= 4; ++d)
        for (const auto &f : all_families(d))
        {
            long l = 1;
            long dim = 0;
            long p = 0;
            for (const auto &a : f.factors)
            {
                CHECK(a.k > 1);
                CHECK(f.m % a.k == 0);
                l = lcm(l, a.k);
                dim += a.dim;
                p += a.p;
            }
            CHECK(l == f.m);
            CHECK(dim == f.dim);
            CHECK(p == f.p);
            CHECK(f.rigid() == (f.p == 0));
            CHECK(f.fix == fixed_locus(LatticeAutomorphism::from_module(f.module)));
            CHECK(f.module.rank() == 2 * f.dim);
            CHECK(totient(f.m) <= 2 * d);
        }
}

TEST_CASE("rank one labels")
{
    CHECK(rank_one_label(8, {1, 3}) == "S_8'");
    CHECK(rank_one_label(8, {1, 5}) == "S_8''");
    CHECK(rank_one_label(7, {1, 2, 4}) == "A_7''");
    CHECK(rank_one_residues("A_9''", 9) == std::optional<std::vector<long>>(std::vector<long>{1, 4, 7}));
    CHECK(rank_one_residues("X_30^(2)", 15).has_value());
    CHECK_FALSE(rank_one_residues("nonsense", 7).has_value());
    for (long k : {5L, 7L, 8L, 9L, 12L, 15L, 16L, 20L, 24L, 11L, 14L, 18L, 22L, 30L})
        for (const auto &o : galois_orbits(k).orbits)
        {
            std::string l = rank_one_label(k, o.representative.residues);
            auto back = rank_one_residues(l, k);
            REQUIRE(back.has_value());
            CHECK(orbit_of(CharacterTuple::make(k, *back)) == o.representative);
        }
}

TEST_CASE("translation options")
{
    auto s = family_with(2, 2, "S");
    CHECK(s.fix.to_string() == "(Z/2)^4");
    CHECK(names(translation_options(s, 1, 2)) == std::vector<std::string>{"0", "Z/2"});

    auto e = composite_b2(1, 2).front();
    CHECK(names(translation_options(e, 2, 2)) == std::vector<std::string>{"0", "Z/2", "(Z/2)^2"});

    auto erho = family_with(1, 3, "E_rho");
    CHECK(names(translation_options(erho, 1, 3)) == std::vector<std::string>{"0", "Z/3"});

    auto s4 = family_with(2, 4, "S_4");
    CHECK(names(translation_options(s4, 1, 4)) == std::vector<std::string>{"0", "Z/2"});

    for (long d = 1; d <= 3; ++d)
        for (const auto &f : all_families(d))
            for (long b1 = 1; b1 <= 3; ++b1)
            {
                auto opts = translation_options(f, b1, f.m);
                REQUIRE_FALSE(opts.empty());
                CHECK(opts.front().is_trivial());
                for (const auto &t : opts)
                    CHECK(t.embeds_in(f.fix));
            }
}

TEST_CASE("classification")
{
    CHECK(classify(1).empty());
    auto c2 = classify(2);
    long combos = 0;
    for (const auto &f : c2)
        combos += static_cast<long>(f.tr_options.size());
    CHECK(combos == 7);
    CHECK(merge_rows(classify(3)).size() == 20);
    CHECK(merge_rows(classify(4)).size() == 60);
    CHECK_THROWS_AS(classify(0), InvalidInput);
    CHECK_THROWS_AS(classify(5), InvalidInput);
}

TEST_CASE("classification invariants and determinism")
{
    auto a = classify(3);
    auto b = classify(3);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i)
    {
        CHECK(a[i].m == b[i].m);
        CHECK(a[i].b2.label == b[i].b2.label);
        CHECK(a[i].tr_options == b[i].tr_options);
    }
    for (long n = 2; n <= 4; ++n)
        for (const auto &f : classify(n))
        {
            CHECK(totient(f.m) <= 2 * (n - 1));
            CHECK(f.b1_dim >= 1);
            CHECK(f.b1_dim + f.b2.dim == n);
            CHECK(f.b2.m == f.m);
            CHECK(f.tr_options.front().is_trivial());
            CHECK(f.p() == f.b1_dim * (f.b1_dim + 1) / 2 + f.b2.p);
        }
}

TEST_CASE("helpers")
{
    CHECK(b1_label(1) == "E");
    CHECK(b1_label(2) == "S");
    CHECK(b1_label(3) == "X");
    CHECK(groups_to_string({FiniteAbelianGroup(), FiniteAbelianGroup::elementary(2, 2)}) == "0, (Z/2)^2");
}
