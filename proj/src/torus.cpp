#include "bdfkit/torus.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bdf
{
    // ---- CyclotomicModule ----

    CyclotomicModule::CyclotomicModule(std::vector<std::pair<long, long>> components) : comps_(std::move(components))
    {
        std::sort(comps_.begin(), comps_.end());
        for (size_t i = 0; i < comps_.size(); ++i)
        {
            auto [k, r] = comps_[i];
            if (k < 1 || r < 1)
                throw InvalidInput("module components need k >= 1 and r >= 1");
            if (i > 0 && comps_[i - 1].first == k)
                throw InvalidInput("repeated eigenvalue order " + std::to_string(k) + " in module");
        }
    }

    long CyclotomicModule::multiplicity(long k) const
    {
        for (auto [kk, r] : comps_)
            if (kk == k)
                return r;
        return 0;
    }

    long CyclotomicModule::rank() const
    {
        long n = 0;
        for (auto [k, r] : comps_)
            n += r * totient(k);
        return n;
    }

    long CyclotomicModule::order() const
    {
        long m = 1;
        for (auto [k, r] : comps_)
            m = lcm(m, k);
        return m;
    }

    std::string CyclotomicModule::to_string() const
    {
        std::string s = "{";
        for (size_t i = 0; i < comps_.size(); ++i)
            s += (i ? "," : "") + std::to_string(comps_[i].first) + ":" + std::to_string(comps_[i].second);
        return s + "}";
    }

    // ---- LatticeAutomorphism ----

    LatticeAutomorphism LatticeAutomorphism::from_module(const CyclotomicModule &mod, bool allow_trivial)
    {
        if (mod.components().empty())
            throw InvalidInput("empty cyclotomic module");
        if (mod.has_trivial_part() && !allow_trivial)
            throw InvalidInput("eigenvalue order 1 is not allowed in a linear part");
        std::vector<IntMatrix> blocks;
        for (auto [k, r] : mod.components())
        {
            IntMatrix c = companion(cyclotomic_poly(k));
            for (long i = 0; i < r; ++i)
                blocks.push_back(c);
        }
        LatticeAutomorphism a;
        a.m_ = mod.order();
        a.module_ = mod;
        a.rep_ = IntMatrix::block_diagonal(blocks);
        return a;
    }

    LatticeAutomorphism LatticeAutomorphism::from_matrix(const IntMatrix &rep, bool allow_trivial)
    {
        auto mult = character_multiplicities(rep);
        CyclotomicModule mod(std::vector<std::pair<long, long>>(mult.begin(), mult.end()));
        if (mod.has_trivial_part() && !allow_trivial)
            throw InvalidInput("eigenvalue order 1 is not allowed in a linear part");
        LatticeAutomorphism a;
        a.m_ = mod.order();
        a.module_ = mod;
        a.rep_ = rep;
        return a;
    }

    std::map<long, long> character_multiplicities(const IntMatrix &m, long bound)
    {
        if (!m.is_square() || m.rows() == 0)
            throw InvalidInput("character_multiplicities: need a non-empty square matrix");
        long n = m.rows();
        IntPolynomial f = char_poly(m);
        std::map<long, long> mult;
        // phi(k) <= n forces k <= 2 n^2
        long kmax = std::max(6L, 2 * n * n);
        for (long k = 1; k <= kmax && f.degree() > 0; ++k)
        {
            if (totient(k) > f.degree())
                continue;
            IntPolynomial phi = cyclotomic_poly(k);
            while (f.degree() >= phi.degree())
            {
                auto [q, r] = f.divmod(phi);
                if (!r.is_zero())
                    break;
                f = q;
                ++mult[k];
            }
        }
        if (f.degree() > 0)
            throw InvalidInput("matrix is not of finite order: characteristic polynomial has a non-cyclotomic factor");
        long order = 1;
        for (auto [k, r] : mult)
            order = lcm(order, k);
        if (order > bound)
            throw InvalidInput("matrix order " + std::to_string(order) + " exceeds the bound " + std::to_string(bound));
        if (!(m.power(order) == IntMatrix::identity(n)))
            throw InvalidInput("matrix is not of finite order (not semisimple)");
        return mult;
    }

    FiniteAbelianGroup fixed_locus(const LatticeAutomorphism &aut)
    {
        if (aut.module().has_trivial_part())
            throw DomainError("positive-dimensional fixed locus: eigenvalue 1 present");
        const IntMatrix &rep = aut.rep();
        return cokernel(rep - IntMatrix::identity(rep.rows()));
    }

    std::vector<long> admissible_orders(long n)
    {
        if (n < 1)
            throw InvalidInput("admissible_orders: dimension must be positive");
        std::vector<long> out;
        long cap = 2 * (n - 1);
        // phi(m) >= sqrt(m / 2), so m <= 2 cap^2 covers every candidate
        long mmax = std::max(6L, 2 * cap * cap + 2);
        for (long m = 2; m <= mmax; ++m)
            if (totient(m) <= cap)
                out.push_back(m);
        return out;
    }

    std::vector<long> pair_representatives(long k)
    {
        std::vector<long> reps;
        for (long a = 1; 2 * a < k; ++a)
            if (gcd(a, k) == 1)
                reps.push_back(a);
        return reps;
    }

    // ---- ComplexStructure ----

    namespace
    {
        long index_of(const std::vector<long> &v, long x)
        {
            auto it = std::find(v.begin(), v.end(), x);
            return it == v.end() ? -1 : static_cast<long>(it - v.begin());
        }

        long inverse_mod(long u, long k)
        {
            u = mod(u, k);
            for (long v = 1; v < k; ++v)
                if (mod(u * v, k) == 1)
                    return v;
            if (k == 1)
                return 0;
            throw InvalidInput(std::to_string(u) + " is not a unit mod " + std::to_string(k));
        }

        std::vector<long> units(long m)
        {
            std::vector<long> us;
            for (long u = 1; u <= std::max(1L, m - 1); ++u)
                if (gcd(u, m) == 1)
                    us.push_back(u);
            return us;
        }
    } // namespace

    ComplexStructure::ComplexStructure(CyclotomicModule mod, std::map<long, std::vector<long>> nu, long level)
        : module_(std::move(mod)), nu_(std::move(nu))
    {
        level_ = level == 0 ? module_.order() : level;
        if (level_ % module_.order() != 0)
            throw InvalidInput("structure level must be a multiple of the module order");
        for (auto [k, r] : module_.components())
        {
            if (k == 1)
                throw InvalidInput("trivial characters carry no complex structure here");
            if (k == 2)
            {
                if (r % 2 != 0)
                    throw InvalidInput("eigenvalue -1 must have even multiplicity");
                s_ = r / 2;
                continue;
            }
            auto it = nu_.find(k);
            size_t pairs = pair_representatives(k).size();
            if (it == nu_.end() || it->second.size() != pairs)
                throw InvalidInput("Hodge type for order " + std::to_string(k) + " needs " + std::to_string(pairs) +
                                   " entries");
            for (long v : it->second)
                if (v < 0 || v > r)
                    throw InvalidInput("Hodge multiplicity out of range [0, r]");
        }
        for (const auto &[k, v] : nu_)
            if (module_.multiplicity(k) == 0 || k <= 2)
                throw InvalidInput("Hodge type given for order " + std::to_string(k) + " absent from the module");
    }

    ComplexStructure ComplexStructure::from_residues(long m, const std::vector<long> &residues)
    {
        if (m < 3)
            throw InvalidInput("complex structures by residues need m >= 3");
        std::map<long, std::set<long>> chosen; // k -> residues a mod k
        for (long j : residues)
        {
            long jj = mod(j, m);
            long k = m / gcd(jj, m);
            if (jj == 0 || k <= 2)
                throw InvalidInput("residue " + std::to_string(j) + " has real eigenvalue mod " + std::to_string(m));
            long a = jj / (m / k);
            if (!chosen[k].insert(a).second)
                throw InvalidInput("residue " + std::to_string(j) + " repeated");
        }
        std::vector<std::pair<long, long>> comps;
        std::map<long, std::vector<long>> nu;
        for (const auto &[k, as] : chosen)
        {
            auto reps = pair_representatives(k);
            std::vector<long> v(reps.size(), -1);
            for (long a : as)
            {
                long i = index_of(reps, a), ic = index_of(reps, k - a);
                long idx = i >= 0 ? i : ic;
                if (v[idx] != -1)
                    throw InvalidInput("residues " + std::to_string(a * (m / k)) + " and " +
                                       std::to_string((k - a) * (m / k)) + " are complex conjugate");
                v[idx] = i >= 0 ? 1 : 0;
            }
            if (std::count(v.begin(), v.end(), -1) != 0)
                throw InvalidInput("residues for order " + std::to_string(k) + " must pick one of each conjugate pair (" +
                                   std::to_string(reps.size()) + " needed)");
            comps.emplace_back(k, 1);
            nu[k] = v;
        }
        return ComplexStructure(CyclotomicModule(comps), nu, m);
    }

    ComplexStructure ComplexStructure::standard(const CyclotomicModule &mod)
    {
        std::map<long, std::vector<long>> nu;
        for (auto [k, r] : mod.components())
            if (k > 2)
                nu[k] = std::vector<long>(pair_representatives(k).size(), r);
        return ComplexStructure(mod, nu);
    }

    std::vector<long> ComplexStructure::residues() const
    {
        std::vector<long> out;
        for (const auto &[k, v] : nu_)
        {
            if (module_.multiplicity(k) != 1)
                continue;
            auto reps = pair_representatives(k);
            for (size_t i = 0; i < reps.size(); ++i)
                out.push_back((v[i] == 1 ? reps[i] : k - reps[i]) * (level_ / k));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    long ComplexStructure::nu_of(long k, long a) const
    {
        a = mod(a, k);
        auto it = nu_.find(k);
        if (it == nu_.end())
            throw InvalidInput("no characters of order " + std::to_string(k) + " in this structure");
        auto reps = pair_representatives(k);
        long i = index_of(reps, a);
        if (i >= 0)
            return it->second[i];
        i = index_of(reps, k - a);
        if (i < 0)
            throw InvalidInput(std::to_string(a) + " is not a unit mod " + std::to_string(k));
        return module_.multiplicity(k) - it->second[i];
    }

    ComplexStructure ComplexStructure::conjugate() const
    {
        auto nu = nu_;
        for (auto &[k, v] : nu)
        {
            long r = module_.multiplicity(k);
            for (auto &x : v)
                x = r - x;
        }
        return ComplexStructure(module_, nu, level_);
    }

    ComplexStructure ComplexStructure::galois(long u) const
    {
        if (gcd(u, level_) != 1)
            throw InvalidInput(std::to_string(u) + " is not a unit mod " + std::to_string(level_));
        auto nu = nu_;
        for (auto &[k, v] : nu)
        {
            long uinv = inverse_mod(u, k);
            auto reps = pair_representatives(k);
            for (size_t i = 0; i < reps.size(); ++i)
                v[i] = nu_of(k, uinv * reps[i]);
        }
        return ComplexStructure(module_, nu, level_);
    }

    ComplexStructure ComplexStructure::canonical() const
    {
        ComplexStructure best = *this;
        ComplexStructure conj = conjugate();
        for (long u : units(level_))
            for (const ComplexStructure *base : std::initializer_list<const ComplexStructure *>{this, &conj})
            {
                ComplexStructure c = base->galois(u);
                if (c.nu_ < best.nu_)
                    best = c;
            }
        return best;
    }

    std::string ComplexStructure::to_string() const
    {
        std::ostringstream os;
        os << "{";
        bool first = true;
        for (const auto &[k, v] : nu_)
        {
            os << (first ? "" : ", ") << k << ":[";
            for (size_t i = 0; i < v.size(); ++i)
                os << (i ? "," : "") << v[i];
            os << "]";
            first = false;
        }
        if (s_ > 0)
            os << (first ? "" : ", ") << "s=" << s_;
        os << "}";
        return os.str();
    }

    long moduli_dimension(const ComplexStructure &cs)
    {
        long p = 0;
        for (const auto &[k, v] : cs.nu())
        {
            long r = cs.module().multiplicity(k);
            for (long nu : v)
                p += 2 * nu * (r - nu);
        }
        long s = cs.real_part();
        return p + s * (s + 1) / 2;
    }

    bool is_rigid(const ComplexStructure &cs)
    {
        if (cs.real_part() > 0)
            return false;
        for (const auto &[k, v] : cs.nu())
        {
            long r = cs.module().multiplicity(k);
            for (long nu : v)
                if (nu != 0 && nu != r)
                    return false;
        }
        return true;
    }

    std::vector<ComplexStructure> hodge_classes(long k, long r)
    {
        if (k < 2 || r < 1)
            throw InvalidInput("hodge_classes needs k >= 2 and r >= 1");
        CyclotomicModule mod({{k, r}});
        if (k == 2)
        {
            if (r % 2 != 0)
                return {};
            return {ComplexStructure(mod, {})};
        }
        size_t pairs = pair_representatives(k).size();
        std::vector<long> v(pairs, 0);
        std::set<std::vector<long>> seen;
        std::vector<ComplexStructure> out;
        while (true)
        {
            ComplexStructure c = ComplexStructure(mod, {{k, v}}).canonical();
            if (seen.insert(c.nu().at(k)).second)
                out.push_back(c);
            size_t i = 0;
            while (i < pairs && ++v[i] > r)
                v[i++] = 0;
            if (i == pairs)
                break;
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // ---- eigenvectors ----

    std::vector<Integer> reduce_power(long i, const IntPolynomial &q)
    {
        if (!q.is_monic() || q.degree() < 1)
            throw InvalidInput("reduce_power: modulus must be monic of positive degree");
        auto [quot, rem] = IntPolynomial::monomial(i).divmod(q);
        std::vector<Integer> out(static_cast<size_t>(q.degree()), 0);
        for (long c = 0; c <= rem.degree(); ++c)
            out[c] = rem.coeff(c);
        return out;
    }

    EigenvectorBasis eigenvector_basis(long m, const std::vector<long> &residues, const IntPolynomial &q)
    {
        if (m < 2)
            throw InvalidInput("eigenvector_basis: m must be at least 2");
        FieldPtr field = CyclotomicField::make(m);
        long d = q.degree();
        std::vector<std::vector<Integer>> xs;
        for (long i = 0; i < m; ++i)
            xs.push_back(reduce_power(i, q));
        // X^m must reduce to 1, i.e. q | X^m - 1
        if (reduce_power(m, q) != reduce_power(0, q))
            throw InvalidInput("modulus " + q.to_string() + " does not divide X^" + std::to_string(m) + " - 1");

        EigenvectorBasis out;
        out.m = m;
        out.modulus = q;
        for (long j : residues)
        {
            long k = m / gcd(mod(j, m), m);
            auto [qq, rr] = q.divmod(cyclotomic_poly(k));
            if (!rr.is_zero())
                throw InvalidInput("zeta_" + std::to_string(m) + "^" + std::to_string(j) + " is not an eigenvalue on Z[X]/(" +
                                   q.to_string() + ")");
            std::vector<CyclotomicNumber> v(static_cast<size_t>(d), CyclotomicNumber(field));
            for (long i = 0; i < m; ++i)
                for (long c = 0; c < d; ++c)
                    if (xs[i][c] != 0)
                        v[c].add_scaled_power(Rational(xs[i][c]), -j * i);
            out.vectors.emplace(mod(j, m), std::move(v));
        }
        return out;
    }

    EigenvectorBasis eigenvector_basis(const ComplexStructure &cs)
    {
        const auto &comps = cs.module().components();
        if (comps.size() != 1 || comps[0].second != 1)
            throw InvalidInput("eigenvector_basis needs a rank-1 primary structure");
        long m = comps[0].first;
        std::vector<long> res;
        for (long j : cs.residues())
        {
            long a = j / (cs.level() / m);
            if (gcd(a, m) != 1)
                throw InvalidInput("residue " + std::to_string(a) + " is not coprime to " + std::to_string(m));
            res.push_back(a);
        }
        return eigenvector_basis(m, res, cyclotomic_poly(m));
    }

} // namespace bdf
