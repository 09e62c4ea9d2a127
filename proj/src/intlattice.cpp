#include "bdfkit/intlattice.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <sstream>

namespace bdf
{
    // ---- IntMatrix ----

    IntMatrix::IntMatrix(long rows, long cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows * cols), 0)
    {
        if (rows < 0 || cols < 0)
            throw InvalidInput("matrix dimensions must be non-negative");
    }

    IntMatrix::IntMatrix(long rows, long cols, std::vector<Integer> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries))
    {
        if (rows < 0 || cols < 0 || static_cast<long>(e_.size()) != rows * cols)
            throw InvalidInput("matrix entry count does not match its shape");
    }

    IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    {
        rows_ = static_cast<long>(rows.size());
        cols_ = rows_ == 0 ? 0 : static_cast<long>(rows.begin()->size());
        for (const auto &r : rows)
        {
            if (static_cast<long>(r.size()) != cols_)
                throw InvalidInput("ragged matrix literal");
            for (long v : r)
                e_.emplace_back(v);
        }
    }

    IntMatrix IntMatrix::identity(long n)
    {
        IntMatrix m(n, n);
        for (long i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    IntMatrix IntMatrix::diagonal(const std::vector<Integer> &d)
    {
        long n = static_cast<long>(d.size());
        IntMatrix m(n, n);
        for (long i = 0; i < n; ++i)
            m(i, i) = d[i];
        return m;
    }

    IntMatrix IntMatrix::block_diagonal(const std::vector<IntMatrix> &blocks)
    {
        long r = 0, c = 0;
        for (const auto &b : blocks)
        {
            r += b.rows();
            c += b.cols();
        }
        IntMatrix m(r, c);
        long r0 = 0, c0 = 0;
        for (const auto &b : blocks)
        {
            for (long i = 0; i < b.rows(); ++i)
                for (long j = 0; j < b.cols(); ++j)
                    m(r0 + i, c0 + j) = b(i, j);
            r0 += b.rows();
            c0 += b.cols();
        }
        return m;
    }

    IntMatrix IntMatrix::transpose() const
    {
        IntMatrix t(cols_, rows_);
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    IntMatrix IntMatrix::submatrix(long r0, long c0, long nr, long nc) const
    {
        if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_)
            throw InvalidInput("submatrix out of range");
        IntMatrix s(nr, nc);
        for (long i = 0; i < nr; ++i)
            for (long j = 0; j < nc; ++j)
                s(i, j) = (*this)(r0 + i, c0 + j);
        return s;
    }

    bool IntMatrix::is_zero() const
    {
        return std::all_of(e_.begin(), e_.end(), [](const Integer &z) { return z == 0; });
    }

    bool IntMatrix::is_skew() const
    {
        if (!is_square())
            return false;
        for (long i = 0; i < rows_; ++i)
        {
            if ((*this)(i, i) != 0)
                return false;
            for (long j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != -(*this)(j, i))
                    return false;
        }
        return true;
    }

    IntMatrix operator*(const IntMatrix &a, const IntMatrix &b)
    {
        if (a.cols_ != b.rows_)
            throw InvalidInput("matrix product shape mismatch");
        IntMatrix c(a.rows_, b.cols_);
        for (long i = 0; i < a.rows_; ++i)
            for (long k = 0; k < a.cols_; ++k)
            {
                const Integer &x = a(i, k);
                if (x == 0)
                    continue;
                for (long j = 0; j < b.cols_; ++j)
                    c(i, j) += x * b(k, j);
            }
        return c;
    }

    IntMatrix operator+(const IntMatrix &a, const IntMatrix &b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw InvalidInput("matrix sum shape mismatch");
        IntMatrix c = a;
        for (size_t i = 0; i < c.e_.size(); ++i)
            c.e_[i] += b.e_[i];
        return c;
    }

    IntMatrix operator-(const IntMatrix &a, const IntMatrix &b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw InvalidInput("matrix difference shape mismatch");
        IntMatrix c = a;
        for (size_t i = 0; i < c.e_.size(); ++i)
            c.e_[i] -= b.e_[i];
        return c;
    }

    IntMatrix operator*(const Integer &s, const IntMatrix &a)
    {
        IntMatrix c = a;
        for (auto &x : c.e_)
            x *= s;
        return c;
    }

    IntMatrix IntMatrix::power(long k) const
    {
        if (!is_square() || k < 0)
            throw InvalidInput("matrix power needs a square matrix and k >= 0");
        IntMatrix result = identity(rows_), base = *this;
        while (k > 0)
        {
            if (k & 1)
                result = result * base;
            base = base * base;
            k >>= 1;
        }
        return result;
    }

    std::vector<Integer> IntMatrix::apply(const std::vector<Integer> &v) const
    {
        if (static_cast<long>(v.size()) != cols_)
            throw InvalidInput("matrix-vector shape mismatch");
        std::vector<Integer> out(static_cast<size_t>(rows_), 0);
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j)
                out[i] += (*this)(i, j) * v[j];
        return out;
    }

    std::string IntMatrix::to_string() const
    {
        std::ostringstream os;
        os << "[";
        for (long i = 0; i < rows_; ++i)
        {
            if (i)
                os << "; ";
            for (long j = 0; j < cols_; ++j)
                os << (j ? ", " : "") << (*this)(i, j).get_str();
        }
        os << "]";
        return os.str();
    }

    // ---- Smith normal form ----

    std::vector<Integer> SNFDecomposition::diagonal() const
    {
        std::vector<Integer> d;
        for (long i = 0; i < std::min(D.rows(), D.cols()); ++i)
            d.push_back(D(i, i));
        return d;
    }

    namespace
    {
        void swap_rows(IntMatrix &m, long a, long b)
        {
            if (a == b)
                return;
            for (long j = 0; j < m.cols(); ++j)
                std::swap(m(a, j), m(b, j));
        }

        void swap_cols(IntMatrix &m, long a, long b)
        {
            if (a == b)
                return;
            for (long i = 0; i < m.rows(); ++i)
                std::swap(m(i, a), m(i, b));
        }

        // row[dst] += q * row[src]
        void add_row(IntMatrix &m, long dst, long src, const Integer &q)
        {
            for (long j = 0; j < m.cols(); ++j)
                if (m(src, j) != 0)
                    m(dst, j) += q * m(src, j);
        }

        void add_col(IntMatrix &m, long dst, long src, const Integer &q)
        {
            for (long i = 0; i < m.rows(); ++i)
                if (m(i, src) != 0)
                    m(i, dst) += q * m(i, src);
        }
    } // namespace

    SNFDecomposition smith_normal_form(const IntMatrix &m)
    {
        IntMatrix D = m, U = IntMatrix::identity(m.rows()), V = IntMatrix::identity(m.cols());
        long n = std::min(m.rows(), m.cols());
        for (long t = 0; t < n; ++t)
        {
            while (true)
            {
                // smallest nonzero pivot in the trailing block
                long pi = -1, pj = -1;
                Integer best;
                for (long i = t; i < D.rows(); ++i)
                    for (long j = t; j < D.cols(); ++j)
                        if (D(i, j) != 0 && (pi < 0 || abs(D(i, j)) < best))
                        {
                            best = abs(D(i, j));
                            pi = i;
                            pj = j;
                        }
                if (pi < 0)
                    return {U, D, V};
                swap_rows(D, t, pi);
                swap_rows(U, t, pi);
                swap_cols(D, t, pj);
                swap_cols(V, t, pj);

                bool clean = true;
                for (long i = t + 1; i < D.rows(); ++i)
                    if (D(i, t) != 0)
                    {
                        Integer q = D(i, t) / D(t, t);
                        add_row(D, i, t, -q);
                        add_row(U, i, t, -q);
                        clean = clean && D(i, t) == 0;
                    }
                for (long j = t + 1; j < D.cols(); ++j)
                    if (D(t, j) != 0)
                    {
                        Integer q = D(t, j) / D(t, t);
                        add_col(D, j, t, -q);
                        add_col(V, j, t, -q);
                        clean = clean && D(t, j) == 0;
                    }
                if (!clean)
                    continue;

                // divisibility: pull an offending row into row t and restart
                long bad = -1;
                for (long i = t + 1; i < D.rows() && bad < 0; ++i)
                    for (long j = t + 1; j < D.cols(); ++j)
                        if (D(i, j) % D(t, t) != 0)
                        {
                            bad = i;
                            break;
                        }
                if (bad < 0)
                    break;
                add_row(D, t, bad, 1);
                add_row(U, t, bad, 1);
            }
            if (D(t, t) < 0)
            {
                add_row(D, t, t, -2);
                add_row(U, t, t, -2);
            }
        }
        return {U, D, V};
    }

    IntMatrix companion(const IntPolynomial &p)
    {
        if (p.degree() < 1)
            throw InvalidInput("companion: polynomial must have degree >= 1");
        if (!p.is_monic())
            throw InvalidInput("companion: polynomial must be monic, got " + p.to_string());
        long n = p.degree();
        IntMatrix c(n, n);
        for (long i = 1; i < n; ++i)
            c(i, i - 1) = 1;
        for (long i = 0; i < n; ++i)
            c(i, n - 1) = -p.coeff(i);
        return c;
    }

    namespace
    {
        // Berkowitz: coefficients highest degree first
        std::vector<Integer> berkowitz(const IntMatrix &a)
        {
            long n = a.rows();
            if (n == 0)
                return {Integer(1)};
            IntMatrix sub = a.submatrix(1, 1, n - 1, n - 1);
            std::vector<Integer> p_sub = berkowitz(sub);

            std::vector<Integer> col(static_cast<size_t>(n) + 1, 0);
            col[0] = 1;
            col[1] = -a(0, 0);
            // R * sub^k * C for k = 0 .. n-2
            std::vector<Integer> v(static_cast<size_t>(n - 1));
            for (long i = 0; i < n - 1; ++i)
                v[i] = a(i + 1, 0);
            for (long k = 0; k + 2 <= n; ++k)
            {
                Integer s = 0;
                for (long i = 0; i < n - 1; ++i)
                    s += a(0, i + 1) * v[i];
                col[k + 2] = -s;
                v = sub.apply(v);
            }
            std::vector<Integer> out(static_cast<size_t>(n) + 1, 0);
            for (long i = 0; i <= n; ++i)
                for (long j = 0; j < n && j <= i; ++j)
                    out[i] += col[i - j] * p_sub[j];
            return out;
        }
    } // namespace

    IntPolynomial char_poly(const IntMatrix &m)
    {
        if (!m.is_square())
            throw InvalidInput("char_poly: matrix must be square");
        std::vector<Integer> hi_first = berkowitz(m);
        std::reverse(hi_first.begin(), hi_first.end());
        return IntPolynomial(std::move(hi_first));
    }

    Integer det(const IntMatrix &m)
    {
        if (!m.is_square())
            throw InvalidInput("det: matrix must be square");
        long n = m.rows();
        if (n == 0)
            return 1;
        // Bareiss fraction-free elimination with explicit sign tracking
        IntMatrix a = m;
        Integer prev = 1;
        int sign = 1;
        for (long k = 0; k < n - 1; ++k)
        {
            if (a(k, k) == 0)
            {
                long r = k + 1;
                while (r < n && a(r, k) == 0)
                    ++r;
                if (r == n)
                    return 0;
                swap_rows(a, k, r);
                sign = -sign;
            }
            for (long i = k + 1; i < n; ++i)
            {
                for (long j = k + 1; j < n; ++j)
                    a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
                a(i, k) = 0;
            }
            prev = a(k, k);
        }
        return sign * a(n - 1, n - 1);
    }

    FiniteAbelianGroup cokernel(const IntMatrix &m)
    {
        if (!m.is_square())
            throw InvalidInput("cokernel: matrix must be square");
        auto snf = smith_normal_form(m);
        std::vector<long> orders;
        for (const auto &d : snf.diagonal())
        {
            if (d == 0)
                throw DomainError("infinite cokernel: matrix is singular");
            orders.push_back(to_long(d));
        }
        return FiniteAbelianGroup::from_cyclic_orders(orders);
    }

    namespace
    {
        // reduced row echelon form over Q; returns pivot columns
        std::vector<long> rref(std::vector<std::vector<Rational>> &a, long cols)
        {
            std::vector<long> pivots;
            long r = 0;
            for (long c = 0; c < cols && r < static_cast<long>(a.size()); ++c)
            {
                long p = r;
                while (p < static_cast<long>(a.size()) && a[p][c] == 0)
                    ++p;
                if (p == static_cast<long>(a.size()))
                    continue;
                std::swap(a[r], a[p]);
                Rational inv = 1 / a[r][c];
                for (auto &x : a[r])
                    x *= inv;
                for (long i = 0; i < static_cast<long>(a.size()); ++i)
                    if (i != r && a[i][c] != 0)
                    {
                        Rational f = a[i][c];
                        for (long j = 0; j < cols; ++j)
                            a[i][j] -= f * a[r][j];
                    }
                pivots.push_back(c);
                ++r;
            }
            return pivots;
        }

        std::vector<std::vector<Rational>> to_rational(const IntMatrix &m)
        {
            std::vector<std::vector<Rational>> a(static_cast<size_t>(m.rows()),
                                                 std::vector<Rational>(static_cast<size_t>(m.cols())));
            for (long i = 0; i < m.rows(); ++i)
                for (long j = 0; j < m.cols(); ++j)
                    a[i][j] = m(i, j);
            return a;
        }
    } // namespace

    long rank(const IntMatrix &m)
    {
        auto a = to_rational(m);
        return static_cast<long>(rref(a, m.cols()).size());
    }

    std::vector<std::vector<Integer>> nullspace(const IntMatrix &m)
    {
        auto a = to_rational(m);
        auto pivots = rref(a, m.cols());
        std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
        for (long c : pivots)
            is_pivot[c] = true;
        std::vector<std::vector<Integer>> basis;
        for (long f = 0; f < m.cols(); ++f)
        {
            if (is_pivot[f])
                continue;
            std::vector<Rational> v(static_cast<size_t>(m.cols()), 0);
            v[f] = 1;
            for (size_t r = 0; r < pivots.size(); ++r)
                v[pivots[r]] = -a[r][f];
            Integer den = 1;
            for (const auto &x : v)
                den = lcm(den, Integer(x.get_den()));
            std::vector<Integer> iv;
            Integer g = 0;
            for (const auto &x : v)
            {
                Integer z = x.get_num() * (den / x.get_den());
                g = gcd(g, z);
                iv.push_back(z);
            }
            for (auto &z : iv)
                z /= g;
            basis.push_back(std::move(iv));
        }
        return basis;
    }

    // ---- FiniteAbelianGroup ----

    namespace
    {
        // p-primary decomposition: prime -> exponents (descending)
        std::map<long, std::vector<long>> primary_parts(const std::vector<long> &orders)
        {
            std::map<long, std::vector<long>> parts;
            for (long n : orders)
            {
                if (n < 1)
                    throw InvalidInput("cyclic group orders must be positive");
                for (long p : prime_factors(n))
                {
                    long e = 0;
                    while (n % p == 0)
                    {
                        n /= p;
                        ++e;
                    }
                    parts[p].push_back(e);
                }
            }
            for (auto &[p, es] : parts)
                std::sort(es.rbegin(), es.rend());
            return parts;
        }

        long ipow(long b, long e)
        {
            long r = 1;
            while (e-- > 0)
                r *= b;
            return r;
        }

        FiniteAbelianGroup from_parts(const std::map<long, std::vector<long>> &parts)
        {
            std::vector<long> orders;
            for (const auto &[p, es] : parts)
                for (long e : es)
                    orders.push_back(ipow(p, e));
            return FiniteAbelianGroup::from_cyclic_orders(orders);
        }

        void partitions_below(const std::vector<long> &mu, size_t i, long cap, std::vector<long> &cur,
                              std::vector<std::vector<long>> &out)
        {
            if (i == mu.size())
            {
                out.push_back(cur);
                return;
            }
            for (long e = 0; e <= std::min(cap, mu[i]); ++e)
            {
                cur.push_back(e);
                partitions_below(mu, i + 1, e, cur, out);
                cur.pop_back();
            }
        }
    } // namespace

    FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_orders(const std::vector<long> &orders)
    {
        auto parts = primary_parts(orders);
        size_t len = 0;
        for (const auto &[p, es] : parts)
            len = std::max(len, es.size());
        // the i-th largest invariant factor collects the i-th largest power of each prime
        std::vector<long> factors(len, 1);
        for (const auto &[p, es] : parts)
            for (size_t i = 0; i < es.size(); ++i)
                factors[i] *= ipow(p, es[i]);
        std::reverse(factors.begin(), factors.end());
        FiniteAbelianGroup g;
        for (long f : factors)
            if (f > 1)
                g.factors_.push_back(f);
        return g;
    }

    FiniteAbelianGroup FiniteAbelianGroup::elementary(long p, long rank)
    {
        return from_cyclic_orders(std::vector<long>(static_cast<size_t>(rank), p));
    }

    FiniteAbelianGroup FiniteAbelianGroup::parse(const std::string &text)
    {
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c)))
                s += c;
        if (s == "0" || s == "{0}" || s == "1")
            return {};
        std::vector<long> orders;
        static const std::regex term(R"(^(?:\(Z/(\d+)\)\^(\d+)|Z/(\d+)(?:\^(\d+))?)$)");
        size_t start = 0;
        while (start <= s.size())
        {
            size_t pos = s.find('x', start);
            std::string tok = s.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
            std::smatch mt;
            if (!std::regex_match(tok, mt, term))
                throw InvalidInput("cannot parse group term '" + tok + "' in '" + text + "'");
            long n = std::stol(mt[1].matched ? mt[1].str() : mt[3].str());
            long k = mt[2].matched ? std::stol(mt[2]) : (mt[4].matched ? std::stol(mt[4]) : 1);
            for (long i = 0; i < k; ++i)
                orders.push_back(n);
            if (pos == std::string::npos)
                break;
            start = pos + 1;
        }
        return from_cyclic_orders(orders);
    }

    Integer FiniteAbelianGroup::order() const
    {
        Integer o = 1;
        for (long f : factors_)
            o *= f;
        return o;
    }

    long FiniteAbelianGroup::p_rank(long p) const
    {
        return static_cast<long>(std::count_if(factors_.begin(), factors_.end(), [p](long f) { return f % p == 0; }));
    }

    std::vector<long> FiniteAbelianGroup::p_partition(long p) const
    {
        auto parts = primary_parts(factors_);
        auto it = parts.find(p);
        return it == parts.end() ? std::vector<long>{} : it->second;
    }

    std::vector<long> FiniteAbelianGroup::primes() const
    {
        std::vector<long> ps;
        for (const auto &[p, es] : primary_parts(factors_))
            ps.push_back(p);
        return ps;
    }

    bool FiniteAbelianGroup::embeds_in(const FiniteAbelianGroup &g) const
    {
        for (long p : primes())
        {
            auto lam = p_partition(p), mu = g.p_partition(p);
            if (lam.size() > mu.size())
                return false;
            for (size_t i = 0; i < lam.size(); ++i)
                if (lam[i] > mu[i])
                    return false;
        }
        return true;
    }

    std::vector<FiniteAbelianGroup> FiniteAbelianGroup::subgroup_types() const
    {
        auto parts = primary_parts(factors_);
        std::vector<std::map<long, std::vector<long>>> acc{{}};
        for (const auto &[p, mu] : parts)
        {
            std::vector<std::vector<long>> lams;
            std::vector<long> cur;
            partitions_below(mu, 0, mu.empty() ? 0 : mu[0], cur, lams);
            std::vector<std::map<long, std::vector<long>>> next;
            for (const auto &a : acc)
                for (const auto &lam : lams)
                {
                    auto b = a;
                    b[p] = lam;
                    next.push_back(std::move(b));
                }
            acc = std::move(next);
        }
        std::vector<FiniteAbelianGroup> out;
        for (const auto &a : acc)
            out.push_back(from_parts(a));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    FiniteAbelianGroup FiniteAbelianGroup::direct_sum(const FiniteAbelianGroup &o) const
    {
        std::vector<long> orders = factors_;
        orders.insert(orders.end(), o.factors_.begin(), o.factors_.end());
        return from_cyclic_orders(orders);
    }

    bool operator<(const FiniteAbelianGroup &a, const FiniteAbelianGroup &b)
    {
        Integer oa = a.order(), ob = b.order();
        if (oa != ob)
            return oa < ob;
        return a.factors_ < b.factors_;
    }

    std::string FiniteAbelianGroup::to_string() const
    {
        if (factors_.empty())
            return "0";
        // primary form, e.g. (Z/2)^2 x Z/3
        std::vector<std::string> terms;
        for (const auto &[p, es] : primary_parts(factors_))
        {
            std::map<long, long, std::greater<>> count;
            for (long e : es)
                ++count[e];
            std::vector<std::pair<long, long>> asc(count.begin(), count.end());
            std::reverse(asc.begin(), asc.end());
            for (const auto &[e, k] : asc)
            {
                std::string z = "Z/" + std::to_string(ipow(p, e));
                terms.push_back(k == 1 ? z : "(" + z + ")^" + std::to_string(k));
            }
        }
        std::string out;
        for (size_t i = 0; i < terms.size(); ++i)
            out += (i ? " x " : "") + terms[i];
        return out;
    }

} // namespace bdf
