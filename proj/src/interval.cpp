#include "bdfkit/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace bdf
{
    namespace
    {
        mpfr_prec_t prec_of(long bits)
        {
            if (bits < MPFR_PREC_MIN || bits > 1L << 24)
                throw InvalidInput("precision out of range: " + std::to_string(bits));
            return static_cast<mpfr_prec_t>(bits);
        }

        long join_bits(const Interval &a, const Interval &b) { return std::max(a.bits(), b.bits()); }

        // min/max over four candidate products, each rounded in the requested direction
        void product_bound(mpfr_t out, const Interval &a, const Interval &b, mpfr_rnd_t rnd, bool want_min)
        {
            mpfr_t t;
            mpfr_init2(t, mpfr_get_prec(out));
            const mpfr_t *as[2] = {&a.lo(), &a.hi()};
            const mpfr_t *bs[2] = {&b.lo(), &b.hi()};
            bool first = true;
            for (auto *x : as)
                for (auto *y : bs)
                {
                    mpfr_mul(t, *x, *y, rnd);
                    if (first || (want_min ? mpfr_less_p(t, out) : mpfr_greater_p(t, out)))
                        mpfr_set(out, t, MPFR_RNDN); // same precision: exact
                    first = false;
                }
            mpfr_clear(t);
        }
    } // namespace

    Interval::Interval(long bits)
    {
        mpfr_init2(lo_, prec_of(bits));
        mpfr_init2(hi_, prec_of(bits));
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }

    Interval::Interval(const Interval &o)
    {
        mpfr_init2(lo_, mpfr_get_prec(o.lo_));
        mpfr_init2(hi_, mpfr_get_prec(o.hi_));
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }

    Interval::Interval(Interval &&o) noexcept : Interval(o.bits())
    {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }

    Interval &Interval::operator=(const Interval &o)
    {
        if (this != &o)
        {
            mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
            mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
            mpfr_set(lo_, o.lo_, MPFR_RNDD);
            mpfr_set(hi_, o.hi_, MPFR_RNDU);
        }
        return *this;
    }

    Interval &Interval::operator=(Interval &&o) noexcept
    {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        return *this;
    }

    Interval::~Interval()
    {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    Interval Interval::point(const Rational &q, long bits)
    {
        Interval r(bits);
        mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
        return r;
    }

    Interval Interval::point(long v, long bits)
    {
        Interval r(bits);
        mpfr_set_si(r.lo_, v, MPFR_RNDD);
        mpfr_set_si(r.hi_, v, MPFR_RNDU);
        return r;
    }

    Interval Interval::ball(const mpfr_t center, const mpfr_t radius, long bits)
    {
        Interval r(bits);
        mpfr_t rad;
        mpfr_init2(rad, mpfr_get_prec(radius));
        mpfr_abs(rad, radius, MPFR_RNDU);
        mpfr_sub(r.lo_, center, rad, MPFR_RNDD);
        mpfr_add(r.hi_, center, rad, MPFR_RNDU);
        mpfr_clear(rad);
        return r;
    }

    bool Interval::contains(const mpfr_t x) const
    {
        return mpfr_lessequal_p(lo_, x) && mpfr_lessequal_p(x, hi_);
    }

    bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
    bool Interval::is_positive() const { return mpfr_sgn(lo_) > 0; }
    bool Interval::is_negative() const { return mpfr_sgn(hi_) < 0; }
    bool Interval::is_point_zero() const { return mpfr_zero_p(lo_) && mpfr_zero_p(hi_); }

    double Interval::width() const
    {
        mpfr_t w;
        mpfr_init2(w, mpfr_get_prec(lo_) + 2);
        mpfr_sub(w, hi_, lo_, MPFR_RNDU);
        double d = mpfr_get_d(w, MPFR_RNDU);
        mpfr_clear(w);
        return d;
    }

    double Interval::midpoint() const
    {
        mpfr_t w;
        mpfr_init2(w, mpfr_get_prec(lo_) + 2);
        mpfr_add(w, hi_, lo_, MPFR_RNDN);
        mpfr_div_2ui(w, w, 1, MPFR_RNDN);
        double d = mpfr_get_d(w, MPFR_RNDN);
        mpfr_clear(w);
        return d;
    }

    Interval operator+(const Interval &a, const Interval &b)
    {
        Interval r(join_bits(a, b));
        mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }

    Interval operator-(const Interval &a, const Interval &b)
    {
        Interval r(join_bits(a, b));
        mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
        return r;
    }

    Interval operator-(const Interval &a)
    {
        Interval r(a.bits());
        mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
        return r;
    }

    Interval operator*(const Interval &a, const Interval &b)
    {
        Interval r(join_bits(a, b));
        product_bound(r.lo_, a, b, MPFR_RNDD, true);
        product_bound(r.hi_, a, b, MPFR_RNDU, false);
        return r;
    }

    Interval operator/(const Interval &a, const Interval &b)
    {
        if (b.contains_zero())
            throw DomainError("interval division by an interval containing zero");
        long bits = join_bits(a, b);
        Interval inv(bits);
        mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
        mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
        return a * inv;
    }

    Interval Interval::scaled(const Rational &q) const
    {
        return *this * point(q, bits());
    }

    std::string Interval::to_string(int digits) const
    {
        std::vector<char> buf(static_cast<size_t>(digits) + 64);
        std::string out = "[";
        mpfr_snprintf(buf.data(), buf.size(), "%.*RDe", digits, lo_);
        out += buf.data();
        out += ", ";
        mpfr_snprintf(buf.data(), buf.size(), "%.*RUe", digits, hi_);
        out += buf.data();
        return out + "]";
    }

    bool intervals_intersect(const Interval &a, const Interval &b)
    {
        return mpfr_lessequal_p(a.lo(), b.hi()) && mpfr_lessequal_p(b.lo(), a.hi());
    }

    bool ComplexInterval::intersects(const ComplexInterval &o) const
    {
        return intervals_intersect(re, o.re) && intervals_intersect(im, o.im);
    }

    std::string ComplexInterval::to_string(int digits) const
    {
        return re.to_string(digits) + " + i*" + im.to_string(digits);
    }

} // namespace bdf

namespace bdf
{
    ComplexInterval root_of_unity(long j, long m, long bits)
    {
        if (m < 1)
            throw InvalidInput("root_of_unity: order must be positive");
        j = mod(j, m);
        // exact cases keep degenerate boxes degenerate
        if (j == 0)
            return {Interval::point(1, bits), Interval::point(0, bits)};
        if (2 * j == m)
            return {Interval::point(-1, bits), Interval::point(0, bits)};
        if (4 * j == m)
            return {Interval::point(0, bits), Interval::point(1, bits)};
        if (4 * j == 3 * m)
            return {Interval::point(0, bits), Interval::point(-1, bits)};

        long work = bits + 32;
        mpfr_t lo, hi, mid, rad, c, s, slack;
        mpfr_inits2(work, lo, hi, mid, rad, c, s, slack, static_cast<mpfr_ptr>(nullptr));

        // angle 2*pi*j/m enclosed in [lo, hi]
        mpfr_const_pi(lo, MPFR_RNDD);
        mpfr_const_pi(hi, MPFR_RNDU);
        mpfr_mul_si(lo, lo, 2 * j, MPFR_RNDD);
        mpfr_mul_si(hi, hi, 2 * j, MPFR_RNDU);
        mpfr_div_si(lo, lo, m, MPFR_RNDD);
        mpfr_div_si(hi, hi, m, MPFR_RNDU);

        // sin and cos are 1-Lipschitz, so a ball around the midpoint suffices
        mpfr_add(mid, lo, hi, MPFR_RNDN);
        mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
        mpfr_sub(rad, hi, lo, MPFR_RNDU);
        mpfr_sin_cos(s, c, mid, MPFR_RNDN);
        mpfr_set_ui_2exp(slack, 1, -(work - 4), MPFR_RNDU);
        mpfr_add(rad, rad, slack, MPFR_RNDU);

        ComplexInterval out{Interval::ball(c, rad, bits), Interval::ball(s, rad, bits)};
        mpfr_clears(lo, hi, mid, rad, c, s, slack, static_cast<mpfr_ptr>(nullptr));
        return out;
    }
} // namespace bdf
