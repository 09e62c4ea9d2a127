#include "bdfkit/polarization.hpp"

#include <algorithm>
#include <complex>
#include <sstream>

namespace bdf
{
    // ---- LambdaVector ----

    std::vector<long> LambdaVector::expand_shorthand(const std::string &text)
    {
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c)))
                s += c;
        // strip one pair of enclosing parentheses around the whole list
        if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
        {
            int depth = 0;
            bool encloses = true;
            for (size_t i = 0; i < s.size(); ++i)
            {
                depth += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
                if (depth == 0 && i + 1 < s.size())
                    encloses = false;
            }
            if (encloses)
                s = s.substr(1, s.size() - 2);
        }
        std::vector<long> out;
        if (s.empty())
            return out;
        size_t pos = 0;
        auto parse_int = [&](const std::string &tok) {
            try
            {
                size_t used = 0;
                long v = std::stol(tok, &used);
                if (used != tok.size())
                    throw std::invalid_argument(tok);
                return v;
            }
            catch (const std::exception &)
            {
                throw InvalidInput("cannot parse integer '" + tok + "' in lambda vector '" + text + "'");
            }
        };
        while (pos <= s.size())
        {
            size_t comma = s.find(',', pos);
            std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (tok.empty())
                throw InvalidInput("empty entry in lambda vector '" + text + "'");
            long value, reps = 1;
            size_t caret = tok.find('^');
            std::string base = tok.substr(0, caret);
            if (base.size() >= 2 && base.front() == '(' && base.back() == ')')
                base = base.substr(1, base.size() - 2);
            value = parse_int(base);
            if (caret != std::string::npos)
            {
                std::string e = tok.substr(caret + 1);
                if (e.size() >= 2 && e.front() == '{' && e.back() == '}')
                    e = e.substr(1, e.size() - 2);
                reps = parse_int(e);
                if (reps < 1 || reps > 1000)
                    throw InvalidInput("repetition count out of range in '" + tok + "'");
            }
            out.insert(out.end(), static_cast<size_t>(reps), value);
            if (comma == std::string::npos)
                break;
            pos = comma + 1;
        }
        return out;
    }

    LambdaVector LambdaVector::make(long m, std::vector<long> values)
    {
        if (m < 2)
            throw InvalidInput("lambda vectors need m >= 2");
        long len = m / 2;
        if (static_cast<long>(values.size()) > len)
            throw InvalidInput("lambda vector has " + std::to_string(values.size()) + " entries, at most " +
                               std::to_string(len) + " allowed for m = " + std::to_string(m));
        values.resize(static_cast<size_t>(len), 0);
        if (m % 2 == 0 && values[len - 1] != 0)
            throw InvalidInput("lambda_{m/2} must vanish for even m");
        if (std::all_of(values.begin(), values.end(), [](long v) { return v == 0; }))
            throw InvalidInput("lambda vector is identically zero");
        LambdaVector lv;
        lv.m_ = m;
        lv.lambdas_ = std::move(values);
        return lv;
    }

    LambdaVector LambdaVector::parse(long m, const std::string &text) { return make(m, expand_shorthand(text)); }

    long LambdaVector::at(long i) const
    {
        i = mod(i, m_);
        if (i == 0)
            return 0;
        if (2 * i <= m_)
            return lambdas_[i - 1];
        return -lambdas_[m_ - i - 1];
    }

    LambdaVector LambdaVector::negated() const
    {
        LambdaVector lv = *this;
        for (auto &v : lv.lambdas_)
            v = -v;
        return lv;
    }

    std::string LambdaVector::to_string() const
    {
        std::string s = "(";
        for (size_t i = 0; i < lambdas_.size(); ++i)
            s += (i ? "," : "") + std::to_string(lambdas_[i]);
        return s + ")";
    }

    std::string to_string(FormBasis b)
    {
        switch (b)
        {
        case FormBasis::full:
            return "full";
        case FormBasis::restricted:
            return "restricted";
        case FormBasis::block:
            return "block";
        }
        return "?";
    }

    std::string to_string(PosDef p)
    {
        switch (p)
        {
        case PosDef::yes:
            return "yes";
        case PosDef::no:
            return "no";
        case PosDef::inconclusive:
            return "inconclusive";
        }
        return "?";
    }

    IntPolynomial restricted_modulus(long m)
    {
        if (m < 3)
            throw InvalidInput("restricted lattice needs m >= 3");
        std::vector<Integer> c(static_cast<size_t>(m % 2 ? m : m - 1), 0);
        for (size_t i = 0; i < c.size(); ++i)
            if (m % 2 || i % 2 == 0)
                c[i] = 1;
        return IntPolynomial(c);
    }

    AlternatingFormData build_form(const LambdaVector &lv, FormBasis basis)
    {
        long m = lv.m();
        AlternatingFormData f;
        f.m = m;
        f.basis = basis;
        IntMatrix full(m, m);
        for (long i = 0; i < m; ++i)
            for (long j = 0; j < m; ++j)
                full(i, j) = lv.at(j - i);
        switch (basis)
        {
        case FormBasis::full:
            f.modulus = IntPolynomial::monomial(m) - IntPolynomial::from_longs({1});
            f.matrix = full;
            return f;
        case FormBasis::restricted:
        {
            // the kernel contains (X^m - 1)/q, so lifts X^i, i < deg q, compute the descended form
            f.modulus = restricted_modulus(m);
            long d = f.modulus.degree();
            f.matrix = full.submatrix(0, 0, d, d);
            return f;
        }
        case FormBasis::block:
            break;
        }
        throw InvalidInput("block forms come from split_blocks, not build_form");
    }

    bool check_invariance(const AlternatingFormData &f, const IntMatrix &aut)
    {
        if (aut.rows() != f.rank() || aut.cols() != f.rank())
            throw InvalidInput("automorphism rank " + std::to_string(aut.rows()) + " does not match form rank " +
                               std::to_string(f.rank()));
        return aut.transpose() * f.matrix * aut == f.matrix;
    }

    bool check_invariance(const AlternatingFormData &f, const LatticeAutomorphism &aut)
    {
        return check_invariance(f, aut.rep());
    }

    KernelInfo kernel_rank(const AlternatingFormData &f)
    {
        KernelInfo k;
        k.generators = nullspace(f.matrix);
        k.deficiency = static_cast<long>(k.generators.size());
        return k;
    }

    namespace
    {
        // E(x, y) for vectors over Q(zeta_m)
        CyclotomicNumber pairing(const IntMatrix &e, const std::vector<CyclotomicNumber> &x,
                                 const std::vector<CyclotomicNumber> &y)
        {
            const FieldPtr &field = x.at(0).field();
            long d = e.rows();
            CyclotomicNumber acc(field);
            for (long a = 0; a < d; ++a)
            {
                if (x[a].is_zero())
                    continue;
                CyclotomicNumber w(field);
                for (long b = 0; b < d; ++b)
                    if (e(a, b) != 0)
                    {
                        CyclotomicNumber t = y[b];
                        t *= Rational(e(a, b));
                        w += t;
                    }
                acc += x[a] * w;
            }
            return acc;
        }

        std::vector<CyclotomicNumber> conj_vector(const std::vector<CyclotomicNumber> &v)
        {
            std::vector<CyclotomicNumber> out;
            out.reserve(v.size());
            for (const auto &z : v)
                out.push_back(z.conj());
            return out;
        }

        EigenvectorBasis basis_for(const AlternatingFormData &f, const std::vector<long> &residues)
        {
            if (f.modulus.degree() != f.rank())
                throw InvalidInput("form rank does not match its lattice");
            if (2 * static_cast<long>(residues.size()) != f.rank())
                throw InvalidInput("structure chooses " + std::to_string(residues.size()) +
                                   " characters but the lattice has rank " + std::to_string(f.rank()));
            for (long h : residues)
                for (long k : residues)
                    if (mod(h + k, f.m) == 0)
                        throw InvalidInput("structure contains the conjugate characters " + std::to_string(h) +
                                           " and " + std::to_string(k));
            return eigenvector_basis(f.m, residues, f.modulus);
        }

        // Exact Gram entries E(v_j, conj v_k) (before the factor -i).
        std::vector<std::vector<CyclotomicNumber>> exact_gram(const AlternatingFormData &f, const EigenvectorBasis &eb,
                                                               const std::vector<long> &residues)
        {
            std::vector<std::vector<CyclotomicNumber>> g;
            std::vector<std::vector<CyclotomicNumber>> conjs;
            for (long k : residues)
                conjs.push_back(conj_vector(eb.vectors.at(mod(k, f.m))));
            for (long j : residues)
            {
                std::vector<CyclotomicNumber> row;
                for (size_t c = 0; c < residues.size(); ++c)
                    row.push_back(pairing(f.matrix, eb.vectors.at(mod(j, f.m)), conjs[c]));
                g.push_back(std::move(row));
            }
            return g;
        }

        // Leading pivots of a Hermitian interval matrix.
        PosDef interval_pivots(std::vector<std::vector<ComplexInterval>> a, std::vector<Interval> &pivots)
        {
            size_t n = a.size();
            pivots.clear();
            for (size_t t = 0; t < n; ++t)
            {
                Interval p = a[t][t].re;
                if (p.is_negative() || p.is_point_zero())
                    return PosDef::no;
                if (!p.is_positive())
                    return PosDef::inconclusive;
                pivots.push_back(p);
                for (size_t i = t + 1; i < n; ++i)
                {
                    ComplexInterval factor{a[i][t].re / p, a[i][t].im / p};
                    for (size_t j = t + 1; j < n; ++j)
                        a[i][j] = a[i][j] - factor * a[t][j];
                }
            }
            return PosDef::yes;
        }
    } // namespace

    bool first_riemann(const AlternatingFormData &f, const std::vector<long> &residues)
    {
        auto eb = basis_for(f, residues);
        for (size_t a = 0; a < residues.size(); ++a)
            for (size_t b = a + 1; b < residues.size(); ++b)
                if (!pairing(f.matrix, eb.vectors.at(mod(residues[a], f.m)), eb.vectors.at(mod(residues[b], f.m)))
                         .is_zero())
                    return false;
        return true;
    }

    bool first_riemann(const AlternatingFormData &f, const ComplexStructure &cs)
    {
        if (cs.level() != f.m)
            throw InvalidInput("structure level differs from the form's order");
        return first_riemann(f, cs.residues());
    }

    GramResult gram_and_posdef(const AlternatingFormData &f, const std::vector<long> &residues, long bits,
                               long max_bits)
    {
        if (bits < 32 || max_bits < bits)
            throw InvalidInput("precision budget must satisfy 32 <= bits <= max_bits");
        auto eb = basis_for(f, residues);
        auto exact = exact_gram(f, eb, residues);
        size_t n = residues.size();
        GramResult res;
        for (long b = bits; b <= max_bits; b *= 2)
        {
            std::vector<std::vector<ComplexInterval>> g(n);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    g[i].push_back(embed(exact[i][j], b).times_minus_i());
            res.bits = b;
            res.diagonal.clear();
            for (size_t i = 0; i < n; ++i)
                res.diagonal.push_back(g[i][i]);
            // an exactly zero leading entry decides "no" without refinement
            if (n > 0 && exact[0][0].is_zero())
            {
                res.posdef = PosDef::no;
                return res;
            }
            res.posdef = interval_pivots(g, res.pivots);
            if (res.posdef != PosDef::inconclusive)
                return res;
        }
        return res;
    }

    std::vector<Integer> polarization_type(const AlternatingFormData &f)
    {
        auto diag = smith_normal_form(f.matrix).diagonal();
        if (static_cast<long>(diag.size()) != f.rank() || f.rank() % 2 != 0 ||
            std::any_of(diag.begin(), diag.end(), [](const Integer &z) { return z == 0; }))
            throw DomainError("polarization type needs a non-degenerate form");
        std::vector<Integer> out;
        for (size_t i = 0; i < diag.size(); i += 2)
        {
            if (diag[i] != diag[i + 1])
                throw DomainError("Smith form of an alternating matrix must pair up its divisors");
            out.push_back(diag[i]);
        }
        return out;
    }

    BlockSplit split_blocks(const AlternatingFormData &f)
    {
        if (f.basis != FormBasis::restricted)
            throw InvalidInput("split_blocks needs a form on the restricted lattice");
        const IntPolynomial &q = f.modulus;
        long d = q.degree();
        std::vector<long> ks;
        for (long k : divisors(f.m))
            if (k > 2)
            {
                auto [quot, rem] = q.divmod(cyclotomic_poly(k));
                if (rem.is_zero())
                    ks.push_back(k);
            }
        BlockSplit out;
        out.change_of_basis = IntMatrix(d, d);
        std::vector<std::pair<long, long>> ranges; // offset, size
        long col = 0;
        for (long k : ks)
        {
            IntPolynomial phi = cyclotomic_poly(k);
            IntPolynomial psi = q.exact_div(phi);
            long start = col;
            for (long i = 0; i < phi.degree(); ++i, ++col)
            {
                IntPolynomial v = psi * IntPolynomial::monomial(i);
                auto [qq, r] = v.divmod(q);
                for (long c = 0; c < d; ++c)
                    out.change_of_basis(c, col) = r.coeff(c);
            }
            ranges.emplace_back(start, phi.degree());
        }
        if (col != d)
            throw DomainError("cyclotomic factors do not fill the restricted lattice");
        out.transformed = out.change_of_basis.transpose() * f.matrix * out.change_of_basis;
        out.cross_blocks_zero = true;
        for (size_t a = 0; a < ks.size(); ++a)
            for (size_t b = 0; b < ks.size(); ++b)
                if (a != b &&
                    !out.transformed.submatrix(ranges[a].first, ranges[b].first, ranges[a].second, ranges[b].second)
                         .is_zero())
                    out.cross_blocks_zero = false;
        for (size_t a = 0; a < ks.size(); ++a)
        {
            AlternatingFormData blk;
            blk.m = f.m;
            blk.basis = FormBasis::block;
            blk.block_order = ks[a];
            blk.modulus = cyclotomic_poly(ks[a]);
            blk.matrix =
                out.transformed.submatrix(ranges[a].first, ranges[a].first, ranges[a].second, ranges[a].second);
            out.blocks.emplace(ks[a], std::move(blk));
        }
        return out;
    }

    bool PolarizationReport::principal() const
    {
        return type && std::all_of(type->begin(), type->end(), [](const Integer &z) { return z == 1; });
    }

    namespace
    {
        bool is_full_unit_tuple(long m, const std::vector<long> &residues)
        {
            if (2 * static_cast<long>(residues.size()) != totient(m))
                return false;
            return std::all_of(residues.begin(), residues.end(), [m](long j) { return gcd(j, m) == 1; });
        }
    } // namespace

    AlternatingFormData form_for_residues(const LambdaVector &lv, const std::vector<long> &residues)
    {
        AlternatingFormData r = build_form(lv, FormBasis::restricted);
        if (is_full_unit_tuple(lv.m(), residues) && r.rank() != totient(lv.m()))
            return split_blocks(r).blocks.at(lv.m());
        return r;
    }

    PolarizationReport polarize(const AlternatingFormData &f, const std::vector<long> &residues, long bits,
                                long max_bits)
    {
        PolarizationReport rep;
        rep.invariant = check_invariance(f, f.automorphism());
        rep.riemann1 = first_riemann(f, residues);
        if (!rep.riemann1)
            return rep;
        GramResult g = gram_and_posdef(f, residues, bits, max_bits);
        rep.posdef = g.posdef;
        rep.gram_diagonal = std::move(g.diagonal);
        rep.bits = g.bits;
        if (rep.ok())
            rep.type = polarization_type(f);
        return rep;
    }

    std::vector<long> standard_residues(long m)
    {
        std::vector<long> out;
        for (long j = 1; 2 * j < m; ++j)
            out.push_back(j);
        return out;
    }

    std::vector<LambdaVector> search_lambda(long m, const std::vector<long> &residues, long bound)
    {
        if (bound < 1 || bound > 3)
            throw InvalidInput("search bound must lie in [1, 3]");
        long len = m / 2;
        long free = m % 2 == 0 ? len - 1 : len;
        if (free < 1)
            return {};
        constexpr long kScreenBits = 128;

        // Forms, first-relation values and Gram matrices are linear in lambda: precompute them on
        // unit vectors, screen candidates in double precision, certify survivors with interval sums.
        struct Unit
        {
            AlternatingFormData form;
            std::vector<CyclotomicNumber> riemann; // E(v_h, v_k), h < k
            std::vector<std::vector<ComplexInterval>> gram;
            std::vector<std::vector<std::complex<double>>> approx;
        };
        std::vector<Unit> units;
        size_t n = residues.size();
        for (long i = 0; i < free; ++i)
        {
            std::vector<long> e(static_cast<size_t>(len), 0);
            e[i] = 1;
            Unit u;
            u.form = form_for_residues(LambdaVector::make(m, e), residues);
            if (!check_invariance(u.form, u.form.automorphism()))
                throw DomainError("unit lambda form is not invariant");
            auto eb = basis_for(u.form, residues);
            for (size_t a = 0; a < n; ++a)
                for (size_t b = a + 1; b < n; ++b)
                    u.riemann.push_back(pairing(u.form.matrix, eb.vectors.at(mod(residues[a], m)),
                                                eb.vectors.at(mod(residues[b], m))));
            for (auto &row : exact_gram(u.form, eb, residues))
            {
                std::vector<ComplexInterval> ri;
                std::vector<std::complex<double>> rd;
                for (auto &z : row)
                {
                    ComplexInterval ci = embed(z, kScreenBits).times_minus_i();
                    rd.emplace_back(ci.re.midpoint(), ci.im.midpoint());
                    ri.push_back(std::move(ci));
                }
                u.gram.push_back(std::move(ri));
                u.approx.push_back(std::move(rd));
            }
            units.push_back(std::move(u));
        }

        auto screen = [&](const std::vector<long> &lam) {
            std::vector<std::vector<std::complex<double>>> g(n, std::vector<std::complex<double>>(n));
            for (long i = 0; i < free; ++i)
                if (lam[i] != 0)
                    for (size_t a = 0; a < n; ++a)
                        for (size_t b = 0; b < n; ++b)
                            g[a][b] += static_cast<double>(lam[i]) * units[i].approx[a][b];
            // LDL^H with a generous tolerance; borderline pivots are left to the certified check
            for (size_t t = 0; t < n; ++t)
            {
                double p = g[t][t].real();
                if (p < -1e-9)
                    return false;
                if (p < 1e-9)
                    continue;
                for (size_t i = t + 1; i < n; ++i)
                {
                    auto fct = g[i][t] / p;
                    for (size_t j = t + 1; j < n; ++j)
                        g[i][j] -= fct * g[t][j];
                }
            }
            return true;
        };

        auto certify = [&](const std::vector<long> &lam) {
            for (size_t pr = 0; pr < units.front().riemann.size(); ++pr)
            {
                CyclotomicNumber acc(units.front().riemann[pr].field());
                for (long i = 0; i < free; ++i)
                    if (lam[i] != 0)
                        acc += units[i].riemann[pr] * Rational(lam[i]);
                if (!acc.is_zero())
                    return false;
            }
            std::vector<std::vector<ComplexInterval>> g(n);
            for (size_t a = 0; a < n; ++a)
                for (size_t b = 0; b < n; ++b)
                {
                    ComplexInterval acc{Interval::point(0, kScreenBits), Interval::point(0, kScreenBits)};
                    for (long i = 0; i < free; ++i)
                        if (lam[i] != 0)
                            acc = acc + units[i].gram[a][b].scaled(lam[i]);
                    g[a].push_back(std::move(acc));
                }
            std::vector<Interval> pivots;
            PosDef verdict = interval_pivots(std::move(g), pivots);
            if (verdict != PosDef::inconclusive)
                return verdict == PosDef::yes;
            // too close to call at screening precision: rerun the full refinement
            AlternatingFormData f = units.front().form;
            f.matrix = IntMatrix(f.rank(), f.rank());
            for (long i = 0; i < free; ++i)
                if (lam[i] != 0)
                    f.matrix = f.matrix + Integer(lam[i]) * units[i].form.matrix;
            return polarize(f, residues).ok();
        };

        std::vector<LambdaVector> found;
        std::vector<long> lam(static_cast<size_t>(free), -bound);
        while (true)
        {
            if (std::any_of(lam.begin(), lam.end(), [](long v) { return v != 0; }) && screen(lam) && certify(lam))
            {
                std::vector<long> v = lam;
                v.resize(static_cast<size_t>(len), 0);
                found.push_back(LambdaVector::make(m, v));
            }
            size_t i = 0;
            while (i < lam.size() && ++lam[i] > bound)
                lam[i++] = -bound;
            if (i == lam.size())
                break;
        }
        std::sort(found.begin(), found.end());
        return found;
    }

} // namespace bdf
