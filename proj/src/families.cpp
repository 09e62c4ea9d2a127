#include "bdfkit/bdf.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <tuple>

#include "bdfkit/cycnum.hpp"

namespace bdf
{
    namespace
    {
        struct NamedOrbit
        {
            long k;
            const char *label;
            std::vector<long> residues;
        };

        // Rank-1 classes named by odd order (or by 4, 8, 12, 16, 20, 24); order 2k with k odd reuses the name.
        const std::vector<NamedOrbit> &named_orbits()
        {
            static const std::vector<NamedOrbit> table = {
                {3, "E_rho", {1}},
                {4, "E_iota", {1}},
                {5, "S_10", {1, 2}},
                {8, "S_8'", {1, 3}},
                {8, "S_8''", {1, 5}},
                {12, "S_12'", {1, 5}},
                {12, "S_12''", {1, 7}},
                {7, "A_7'", {1, 2, 3}},
                {7, "A_7''", {1, 2, 4}},
                {9, "A_9'", {1, 2, 4}},
                {9, "A_9''", {1, 4, 7}},
                {15, "X_30^(1)", {1, 2, 4, 7}},
                {15, "X_30^(2)", {1, 2, 4, 8}},
                {15, "X_30^(3)", {1, 2, 7, 11}},
                {15, "X_30^(4)", {1, 4, 7, 13}},
                {16, "X_16^(1)", {1, 3, 5, 7}},
                {16, "X_16^(2)", {1, 3, 5, 9}},
                {16, "X_16^(3)", {1, 3, 9, 11}},
                {16, "X_16^(4)", {1, 5, 9, 13}},
                {20, "X_20^(1)", {1, 3, 7, 9}},
                {20, "X_20^(2)", {1, 3, 7, 11}},
                {20, "X_20^(3)", {1, 3, 11, 13}},
                {20, "X_20^(4)", {1, 9, 13, 17}},
                {24, "X_24^(1)", {1, 5, 7, 11}},
                {24, "X_24^(2)", {1, 5, 7, 13}},
                {24, "X_24^(3)", {1, 5, 13, 17}},
                {24, "X_24^(4)", {1, 7, 13, 19}},
                {24, "X_24^(5)", {1, 11, 17, 19}},
                {11, "X_11^(1)", {1, 2, 3, 4, 5}},
                {11, "X_11^(2)", {1, 2, 3, 4, 6}},
                {11, "X_11^(3)", {1, 2, 3, 5, 7}},
                {11, "X_11^(4)", {1, 3, 4, 5, 9}},
            };
            return table;
        }

        // Order k with k = 2k', k' odd > 1: zeta_k^(k' + 2a) = -zeta_k'^a.
        long base_order(long k) { return (k % 2 == 0 && (k / 2) % 2 == 1 && k > 2) ? k / 2 : k; }

        std::vector<long> lift_residues(long k, const std::vector<long> &base)
        {
            long kb = base_order(k);
            if (kb == k)
                return base;
            std::vector<long> out;
            for (long a : base)
                out.push_back(mod(kb + 2 * a, k));
            std::sort(out.begin(), out.end());
            return out;
        }

        long family_index(long k) { return base_order(k) == 3 ? 6 : base_order(k) == 5 ? 10 : k; }

        std::string atom_label(long k, long dim, const ComplexStructure &cs, long p)
        {
            if (k == 2)
            {
                static const char *names[] = {"", "E", "S", "T", "T~"};
                return dim <= 4 ? names[dim] : "T_" + std::to_string(dim);
            }
            long r = cs.module().multiplicity(k);
            if (r == 1)
                return rank_one_label(k, cs.residues());
            long c = family_index(k);
            std::string sc = std::to_string(c);
            if (totient(k) == 2)
            {
                if (r == 2)
                    return "S_" + sc;
                if (r == 3)
                    return "A_" + sc;
                if (r == 4)
                    return "X_" + sc + "^" + std::to_string(p);
                if (r == 5)
                    return "Y_" + sc + "^" + std::to_string(p);
            }
            if (totient(k) == 4 && r == 2)
                return "X_" + sc + "^" + std::to_string(p);
            return "B_" + std::to_string(k) + cs.to_string();
        }

        bool factor_less(const TorusAtom &a, const TorusAtom &b)
        {
            return std::tie(a.dim, a.k, a.label) < std::tie(b.dim, b.k, b.label);
        }

        TorusFamily assemble(long m, std::vector<TorusAtom> factors)
        {
            std::sort(factors.begin(), factors.end(), factor_less);
            TorusFamily f;
            f.m = m;
            std::map<long, long> mult;
            for (const auto &a : factors)
            {
                f.dim += a.dim;
                f.p += a.p;
                for (auto [k, r] : a.hodge.module().components())
                    mult[k] += r;
                if (!f.label.empty())
                    f.label += " x ";
                f.label += a.label;
            }
            f.module = CyclotomicModule(std::vector<std::pair<long, long>>(mult.begin(), mult.end()));
            f.fix = fixed_locus(LatticeAutomorphism::from_module(f.module));
            f.factors = std::move(factors);
            return f;
        }

        std::vector<TorusFamily> products(long d, long m, bool primary)
        {
            std::vector<TorusAtom> pool;
            for (long k : divisors(m))
            {
                if (k < 2 || (primary && k != m))
                    continue;
                for (long dd = 1; dd <= d; ++dd)
                    for (auto &a : atoms(k, dd))
                        pool.push_back(std::move(a));
            }
            std::vector<TorusFamily> out;
            std::vector<TorusAtom> chosen;
            auto rec = [&](auto &&self, size_t start, long remaining) -> void {
                if (remaining == 0)
                {
                    long l = 1, minus_one = 0;
                    for (const auto &a : chosen)
                    {
                        l = lcm(l, a.k);
                        minus_one += a.k == 2;
                    }
                    if (l == m && minus_one <= 1)
                        out.push_back(assemble(m, chosen));
                    return;
                }
                for (size_t i = start; i < pool.size(); ++i)
                {
                    if (pool[i].dim > remaining)
                        continue;
                    chosen.push_back(pool[i]);
                    self(self, i, remaining - pool[i].dim);
                    chosen.pop_back();
                }
            };
            rec(rec, 0, d);
            std::sort(out.begin(), out.end(), [](const TorusFamily &a, const TorusFamily &b) {
                return std::make_tuple(a.label, a.types()) < std::make_tuple(b.label, b.types());
            });
            return out;
        }
    } // namespace

    std::vector<long> TorusFamily::types() const
    {
        std::vector<long> t;
        for (const auto &a : factors)
            t.push_back(a.k);
        return t;
    }

    std::string TorusFamily::types_string() const
    {
        std::string s = "(";
        for (size_t i = 0; i < factors.size(); ++i)
            s += (i ? "," : "") + std::to_string(factors[i].k);
        return s + ")";
    }

    ComplexStructure TorusFamily::hodge() const
    {
        std::map<long, std::vector<long>> nu;
        for (const auto &a : factors)
            for (const auto &[k, v] : a.hodge.nu())
            {
                auto &acc = nu[k];
                acc.resize(v.size(), 0);
                for (size_t i = 0; i < v.size(); ++i)
                    acc[i] += v[i];
            }
        return ComplexStructure(module, nu, m);
    }

    bool TorusFamily::rigid() const
    {
        return std::all_of(factors.begin(), factors.end(), [](const TorusAtom &a) { return is_rigid(a.hodge); });
    }

    std::string TorusFamily::key() const { return std::to_string(m) + " | " + label + " | " + types_string(); }

    std::string TorusFamily::name() const
    {
        std::vector<std::pair<long, std::string>> parts;
        for (const auto &a : factors)
            parts.emplace_back(a.dim, a.label);
        std::sort(parts.begin(), parts.end());
        std::string s;
        for (const auto &[d, l] : parts)
            s += (s.empty() ? "" : " x ") + l;
        return s;
    }

    std::string rank_one_label(long k, const std::vector<long> &residues)
    {
        ComplexStructure target = ComplexStructure::from_residues(k, residues).canonical();
        long kb = base_order(k);
        for (const auto &o : named_orbits())
        {
            if (o.k != kb)
                continue;
            if (ComplexStructure::from_residues(k, lift_residues(k, o.residues)).canonical() == target)
                return o.label;
        }
        std::string s = "R_" + std::to_string(k) + "(";
        for (size_t i = 0; i < residues.size(); ++i)
            s += (i ? "," : "") + std::to_string(residues[i]);
        return s + ")";
    }

    std::optional<std::vector<long>> rank_one_residues(const std::string &label, long k)
    {
        long kb = base_order(k);
        for (const auto &o : named_orbits())
            if (o.k == kb && label == o.label)
                return lift_residues(k, o.residues);
        return std::nullopt;
    }

    std::vector<TorusAtom> atoms(long k, long dim)
    {
        if (k < 2 || dim < 1)
            throw InvalidInput("atoms need k >= 2 and dim >= 1");
        std::vector<TorusAtom> out;
        if (k == 2)
        {
            ComplexStructure cs(CyclotomicModule({{2, 2 * dim}}), {});
            out.push_back(TorusAtom{2, dim, atom_label(2, dim, cs, 0), cs, moduli_dimension(cs)});
            return out;
        }
        long f = totient(k);
        if ((2 * dim) % f != 0)
            return out;
        long r = 2 * dim / f;
        for (const auto &cs : hodge_classes(k, r))
        {
            if (r >= 2 && is_rigid(cs))
                continue;
            long p = moduli_dimension(cs);
            out.push_back(TorusAtom{k, dim, atom_label(k, dim, cs, p), cs, p});
        }
        std::sort(out.begin(), out.end(), factor_less);
        return out;
    }

    std::vector<TorusFamily> primary_families(long d, long m)
    {
        if (d < 1 || m < 2)
            throw InvalidInput("primary_families needs d >= 1 and m >= 2");
        if ((2 * d) % totient(m) != 0)
            return {};
        return products(d, m, true);
    }

    std::vector<TorusFamily> composite_b2(long d2, long m)
    {
        if (d2 < 1 || m < 2)
            throw InvalidInput("composite_b2 needs d2 >= 1 and m >= 2");
        return products(d2, m, false);
    }

    std::vector<TorusFamily> all_families(long d)
    {
        std::vector<TorusFamily> out;
        for (long m : admissible_orders(d + 1))
            for (auto &f : composite_b2(d, m))
                out.push_back(std::move(f));
        return out;
    }

    std::vector<FiniteAbelianGroup> translation_options(const TorusFamily &b2, long b1_dim, long m)
    {
        if (b1_dim < 1)
            throw InvalidInput("translation_options needs b1_dim >= 1");
        FiniteAbelianGroup cyc = FiniteAbelianGroup::from_cyclic_orders({m});
        std::vector<FiniteAbelianGroup> out;
        for (const auto &t : b2.fix.subgroup_types())
        {
            bool ok = true;
            std::set<long> primes;
            for (long q : t.primes())
                primes.insert(q);
            for (long q : prime_factors(m))
                primes.insert(q);
            for (long q : primes)
                if (t.p_rank(q) + cyc.p_rank(q) > 2 * b1_dim)
                    ok = false;
            if (ok)
                out.push_back(t);
        }
        return out;
    }

    std::vector<BdFFamily> classify(long n)
    {
        if (n < 1 || n > 4)
            throw InvalidInput("classify covers dimensions 1 to 4");
        std::vector<std::future<std::vector<BdFFamily>>> jobs;
        for (long m : admissible_orders(n))
            for (long b1 = 1; b1 < n; ++b1)
                jobs.push_back(std::async(std::launch::async, [n, m, b1] {
                    std::vector<BdFFamily> part;
                    for (auto &b2 : composite_b2(n - b1, m))
                    {
                        BdFFamily f;
                        f.n = n;
                        f.m = m;
                        f.b1_dim = b1;
                        f.tr_options = translation_options(b2, b1, m);
                        f.b2 = std::move(b2);
                        part.push_back(std::move(f));
                    }
                    return part;
                }));
        std::vector<BdFFamily> out;
        for (auto &j : jobs)
            for (auto &f : j.get())
                out.push_back(std::move(f));
        std::sort(out.begin(), out.end(), [](const BdFFamily &a, const BdFFamily &b) {
            return std::make_tuple(a.m, a.b1_dim, a.b2.label, a.b2.types()) <
                   std::make_tuple(b.m, b.b1_dim, b.b2.label, b.b2.types());
        });
        return out;
    }

    std::string BdFRow::key() const { return std::to_string(m) + " | " + b1_label(b1_dim) + " | " + b2; }

    std::vector<BdFRow> merge_rows(const std::vector<BdFFamily> &families)
    {
        std::map<std::tuple<long, long, std::string>, BdFRow> rows;
        for (const auto &f : families)
        {
            auto key = std::make_tuple(f.m, f.b1_dim, f.b2.name());
            auto it = rows.find(key);
            if (it == rows.end())
            {
                BdFRow r;
                r.m = f.m;
                r.b1_dim = f.b1_dim;
                r.b2 = f.b2.name();
                r.p = f.p();
                it = rows.emplace(key, std::move(r)).first;
            }
            it->second.variants.push_back(f.b2.types_string());
            for (const auto &t : f.tr_options)
                if (std::find(it->second.tr_options.begin(), it->second.tr_options.end(), t) ==
                    it->second.tr_options.end())
                    it->second.tr_options.push_back(t);
        }
        std::vector<BdFRow> out;
        for (auto &[k, r] : rows)
        {
            std::sort(r.tr_options.begin(), r.tr_options.end());
            out.push_back(std::move(r));
        }
        return out;
    }

    std::string b1_label(long dim)
    {
        static const char *names[] = {"", "E", "S", "X"};
        return dim >= 1 && dim <= 3 ? names[dim] : "B1_" + std::to_string(dim);
    }

    std::string groups_to_string(const std::vector<FiniteAbelianGroup> &groups)
    {
        std::string s;
        for (const auto &g : groups)
            s += (s.empty() ? "" : ", ") + g.to_string();
        return s;
    }

} // namespace bdf
