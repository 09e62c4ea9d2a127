#include "bdfkit/cycnum.hpp"

#include <algorithm>
#include <sstream>

namespace bdf
{
    std::vector<long> divisors(long n)
    {
        if (n < 1)
            throw InvalidInput("divisors: n must be positive");
        std::vector<long> small, large;
        for (long d = 1; d * d <= n; ++d)
            if (n % d == 0)
            {
                small.push_back(d);
                if (d * d != n)
                    large.push_back(n / d);
            }
        small.insert(small.end(), large.rbegin(), large.rend());
        return small;
    }

    std::vector<long> prime_factors(long n)
    {
        if (n < 1)
            throw InvalidInput("prime_factors: n must be positive");
        std::vector<long> ps;
        for (long p = 2; p * p <= n; ++p)
            if (n % p == 0)
            {
                ps.push_back(p);
                while (n % p == 0)
                    n /= p;
            }
        if (n > 1)
            ps.push_back(n);
        return ps;
    }

    long totient(long m)
    {
        if (m < 1)
            throw InvalidInput("totient: m must be positive, got " + std::to_string(m));
        long phi = m;
        for (long p : prime_factors(m))
            phi = phi / p * (p - 1);
        return phi;
    }

    int mobius(long d)
    {
        if (d < 1)
            throw InvalidInput("mobius: d must be positive, got " + std::to_string(d));
        int sign = 1;
        for (long p = 2; p * p <= d; ++p)
            if (d % p == 0)
            {
                d /= p;
                if (d % p == 0)
                    return 0;
                sign = -sign;
            }
        return d > 1 ? -sign : sign;
    }

    // ---- IntPolynomial ----

    IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    IntPolynomial IntPolynomial::monomial(long degree, const Integer &c)
    {
        std::vector<Integer> v(static_cast<size_t>(degree) + 1, 0);
        v.back() = c;
        return IntPolynomial(std::move(v));
    }

    IntPolynomial IntPolynomial::from_longs(std::initializer_list<long> coeffs)
    {
        std::vector<Integer> v;
        for (long c : coeffs)
            v.emplace_back(c);
        return IntPolynomial(std::move(v));
    }

    void IntPolynomial::trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    const Integer &IntPolynomial::leading() const
    {
        if (coeffs_.empty())
            throw DomainError("zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    Integer IntPolynomial::coeff(long i) const
    {
        if (i < 0 || i >= static_cast<long>(coeffs_.size()))
            return 0;
        return coeffs_[i];
    }

    Integer IntPolynomial::eval(const Integer &x) const
    {
        Integer acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    IntPolynomial operator+(const IntPolynomial &a, const IntPolynomial &b)
    {
        std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            v[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i)
            v[i] += b.coeffs_[i];
        return IntPolynomial(std::move(v));
    }

    IntPolynomial operator-(const IntPolynomial &a, const IntPolynomial &b)
    {
        std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            v[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i)
            v[i] -= b.coeffs_[i];
        return IntPolynomial(std::move(v));
    }

    IntPolynomial operator*(const IntPolynomial &a, const IntPolynomial &b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return IntPolynomial(std::move(v));
    }

    std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod(const IntPolynomial &d) const
    {
        if (!d.is_monic())
            throw InvalidInput("polynomial division requires a monic divisor");
        std::vector<Integer> r = coeffs_;
        long dd = d.degree();
        long qdeg = degree() - dd;
        if (qdeg < 0)
            return {IntPolynomial(), *this};
        std::vector<Integer> q(static_cast<size_t>(qdeg) + 1, 0);
        for (long i = degree(); i >= dd; --i)
        {
            Integer c = r[i];
            if (c == 0)
                continue;
            q[i - dd] = c;
            for (long j = 0; j <= dd; ++j)
                r[i - dd + j] -= c * d.coeffs_[j];
        }
        return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
    }

    IntPolynomial IntPolynomial::exact_div(const IntPolynomial &d) const
    {
        auto [q, r] = divmod(d);
        if (!r.is_zero())
            throw DomainError(to_string() + " is not divisible by " + d.to_string());
        return q;
    }

    std::string IntPolynomial::to_string(const std::string &var) const
    {
        if (coeffs_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (long i = degree(); i >= 0; --i)
        {
            const Integer &c = coeffs_[i];
            if (c == 0)
                continue;
            Integer a = abs(c);
            if (first)
                os << (c < 0 ? "-" : "");
            else
                os << (c < 0 ? " - " : " + ");
            first = false;
            if (i == 0 || a != 1)
                os << a.get_str();
            if (i > 0)
            {
                os << var;
                if (i > 1)
                    os << "^" << i;
            }
        }
        return os.str();
    }

    IntPolynomial cyclotomic_poly(long k)
    {
        if (k < 1)
            throw InvalidInput("cyclotomic_poly: k must be positive");
        // phi_k = prod_{d | k} (X^d - 1)^mu(k/d)
        IntPolynomial num = IntPolynomial::from_longs({1});
        std::vector<IntPolynomial> den;
        for (long d : divisors(k))
        {
            IntPolynomial f = IntPolynomial::monomial(d) - IntPolynomial::from_longs({1});
            int mu = mobius(k / d);
            if (mu == 1)
                num = num * f;
            else if (mu == -1)
                den.push_back(f);
        }
        for (const auto &f : den)
            num = num.exact_div(f);
        return num;
    }

    // ---- CyclotomicField ----

    CyclotomicField::CyclotomicField(long m) : m_(m), degree_(totient(m)), phi_(cyclotomic_poly(m))
    {
        powers_.reserve(static_cast<size_t>(m));
        std::vector<Integer> cur(static_cast<size_t>(degree_), 0);
        cur[0] = 1;
        for (long j = 0; j < m; ++j)
        {
            powers_.push_back(cur);
            // multiply by zeta: shift up, then fold the top coefficient back through phi_m
            Integer top = cur.back();
            for (long i = degree_ - 1; i > 0; --i)
                cur[i] = cur[i - 1];
            cur[0] = 0;
            if (top != 0)
                for (long i = 0; i < degree_; ++i)
                    cur[i] -= top * phi_.coeffs()[i];
        }
        if (m == 1)
            powers_.assign(1, std::vector<Integer>{1});
    }

    FieldPtr CyclotomicField::make(long m)
    {
        if (m < 1)
            throw InvalidInput("cyclotomic field level must be positive, got " + std::to_string(m));
        return std::make_shared<const CyclotomicField>(m);
    }

    // ---- CyclotomicNumber ----

    CyclotomicNumber::CyclotomicNumber(FieldPtr field)
        : field_(std::move(field)), coeffs_(static_cast<size_t>(field_->degree()), Rational(0))
    {
    }

    CyclotomicNumber::CyclotomicNumber(FieldPtr field, std::vector<Rational> coeffs)
        : field_(std::move(field)), coeffs_(std::move(coeffs))
    {
        if (static_cast<long>(coeffs_.size()) != field_->degree())
            throw InvalidInput("cyclotomic number needs " + std::to_string(field_->degree()) +
                               " coordinates, got " + std::to_string(coeffs_.size()));
    }

    CyclotomicNumber CyclotomicNumber::zeta_power(FieldPtr field, long j)
    {
        CyclotomicNumber z(std::move(field));
        z.add_scaled_power(1, j);
        return z;
    }

    CyclotomicNumber CyclotomicNumber::from_rational(FieldPtr field, const Rational &q)
    {
        CyclotomicNumber z(std::move(field));
        z.coeffs_[0] = q;
        return z;
    }

    bool CyclotomicNumber::is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational &q) { return q == 0; });
    }

    void CyclotomicNumber::require_same_level(const CyclotomicNumber &o) const
    {
        if (level() != o.level())
            throw InvalidInput("level mismatch: Q(zeta_" + std::to_string(level()) + ") vs Q(zeta_" +
                               std::to_string(o.level()) + ")");
    }

    void CyclotomicNumber::add_scaled_power(const Rational &s, long j)
    {
        if (s == 0)
            return;
        const auto &p = field_->power(j);
        for (size_t i = 0; i < coeffs_.size(); ++i)
            if (p[i] != 0)
                coeffs_[i] += s * p[i];
    }

    CyclotomicNumber CyclotomicNumber::conj() const
    {
        CyclotomicNumber r(field_);
        for (size_t i = 0; i < coeffs_.size(); ++i)
            r.add_scaled_power(coeffs_[i], -static_cast<long>(i));
        return r;
    }

    CyclotomicNumber &CyclotomicNumber::operator+=(const CyclotomicNumber &o)
    {
        require_same_level(o);
        for (size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        return *this;
    }

    CyclotomicNumber &CyclotomicNumber::operator-=(const CyclotomicNumber &o)
    {
        require_same_level(o);
        for (size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] -= o.coeffs_[i];
        return *this;
    }

    CyclotomicNumber &CyclotomicNumber::operator*=(const Rational &s)
    {
        for (auto &c : coeffs_)
            c *= s;
        return *this;
    }

    CyclotomicNumber operator*(const CyclotomicNumber &a, const CyclotomicNumber &b)
    {
        a.require_same_level(b);
        size_t n = a.coeffs_.size();
        std::vector<Rational> prod(2 * n - 1, Rational(0));
        for (size_t i = 0; i < n; ++i)
        {
            if (a.coeffs_[i] == 0)
                continue;
            for (size_t j = 0; j < n; ++j)
                if (b.coeffs_[j] != 0)
                    prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        CyclotomicNumber r(a.field_);
        for (size_t i = 0; i < prod.size(); ++i)
            r.add_scaled_power(prod[i], static_cast<long>(i));
        return r;
    }

    CyclotomicNumber operator-(const CyclotomicNumber &a)
    {
        CyclotomicNumber r = a;
        for (auto &c : r.coeffs_)
            c = -c;
        return r;
    }

    bool operator==(const CyclotomicNumber &a, const CyclotomicNumber &b)
    {
        return a.level() == b.level() && a.coeffs_ == b.coeffs_;
    }

    std::string CyclotomicNumber::to_string() const
    {
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < coeffs_.size(); ++i)
        {
            const Rational &c = coeffs_[i];
            if (c == 0)
                continue;
            if (!first)
                os << (c < 0 ? " - " : " + ");
            else if (c < 0)
                os << "-";
            first = false;
            Rational a = abs(c);
            bool unit = (a == 1);
            if (i == 0 || !unit)
                os << a.get_str();
            if (i > 0)
            {
                if (!unit)
                    os << "*";
                os << "z" << level();
                if (i > 1)
                    os << "^" << i;
            }
        }
        return first ? "0" : os.str();
    }

    CyclotomicNumber cyc_arith(const CyclotomicNumber &a, const CyclotomicNumber &b, CycOp op)
    {
        if (a.level() != b.level())
            throw InvalidInput("cyc_arith: level mismatch (" + std::to_string(a.level()) + " vs " +
                               std::to_string(b.level()) + ")");
        switch (op)
        {
        case CycOp::add:
            return a + b;
        case CycOp::sub:
            return a - b;
        case CycOp::mul:
            return a * b;
        case CycOp::conj:
            return a.conj();
        }
        throw InvalidInput("cyc_arith: unknown operation");
    }

    ComplexInterval embed(const CyclotomicNumber &z, long bits)
    {
        if (bits < 32)
            throw InvalidInput("embed: precision must be at least 32 bits");
        ComplexInterval acc{Interval::point(0, bits), Interval::point(0, bits)};
        const auto &c = z.coeffs();
        for (size_t i = 0; i < c.size(); ++i)
        {
            if (c[i] == 0)
                continue;
            acc = acc + root_of_unity(static_cast<long>(i), z.level(), bits).scaled(c[i]);
        }
        return acc;
    }

    // ---- counting ----

    namespace
    {
        void check_count_args(long m, long r)
        {
            if (m < 2 || r < 1)
                throw InvalidInput("order counts need m >= 2 and r >= 1");
        }

        Integer ipow(long base, long e)
        {
            Integer out;
            mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
            return out;
        }
    } // namespace

    Integer order_count_paper(long m, long r)
    {
        check_count_args(m, r);
        long phi = totient(m);
        Integer total = 0;
        for (long k = 0; k < r; ++k)
            total += Integer(phi) * ipow(m - phi, k) * ipow(m, r - k - 1);
        return total;
    }

    Integer order_count_oracle(long m, long r)
    {
        check_count_args(m, r);
        Integer total = 0;
        for (long d : divisors(m))
        {
            int mu = mobius(d);
            if (mu != 0)
                total += mu * ipow(m / d, r);
        }
        return total;
    }

    Integer order_count_bruteforce(long m, long r)
    {
        check_count_args(m, r);
        Integer size = ipow(m, r);
        if (size > 50000000)
            throw InvalidInput("order_count_bruteforce: (Z/m)^r too large to enumerate");
        std::vector<long> x(static_cast<size_t>(r), 0);
        long count = 0;
        while (true)
        {
            long g = m;
            for (long v : x)
                g = gcd(g, v);
            if (g == 1)
                ++count;
            size_t i = 0;
            while (i < x.size() && ++x[i] == m)
                x[i++] = 0;
            if (i == x.size())
                break;
        }
        return count;
    }

} // namespace bdf
