#pragma once

// Outward-rounded interval arithmetic on MPFR (dyadic) endpoints.

#include <string>

#include <mpfr.h>

#include "bdfkit/arith.hpp"

namespace bdf
{
    class Interval
    {
    public:
        explicit Interval(long bits = 128);
        Interval(const Interval &o);
        Interval(Interval &&o) noexcept;
        Interval &operator=(const Interval &o);
        Interval &operator=(Interval &&o) noexcept;
        ~Interval();

        static Interval point(const Rational &q, long bits);
        static Interval point(long v, long bits);
        // [c - r, c + r] with c rounded to nearest and r rounded up
        static Interval ball(const mpfr_t center, const mpfr_t radius, long bits);

        long bits() const { return static_cast<long>(mpfr_get_prec(lo_)); }
        const mpfr_t &lo() const { return lo_; }
        const mpfr_t &hi() const { return hi_; }

        bool contains(const mpfr_t x) const;
        bool contains_zero() const;
        bool is_positive() const; // lo > 0
        bool is_negative() const; // hi < 0
        bool is_point_zero() const;
        // Upper bound on hi - lo.
        double width() const;
        double midpoint() const;

        friend Interval operator+(const Interval &a, const Interval &b);
        friend Interval operator-(const Interval &a, const Interval &b);
        friend Interval operator*(const Interval &a, const Interval &b);
        friend Interval operator-(const Interval &a);
        // Requires 0 not in b.
        friend Interval operator/(const Interval &a, const Interval &b);
        Interval scaled(const Rational &q) const;

        std::string to_string(int digits = 20) const;

    private:
        mpfr_t lo_;
        mpfr_t hi_;
    };

    struct ComplexInterval
    {
        Interval re;
        Interval im;

        explicit ComplexInterval(long bits = 128) : re(bits), im(bits) {}
        ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

        ComplexInterval times_minus_i() const { return {im, -re}; }
        ComplexInterval conj() const { return {re, -im}; }
        ComplexInterval scaled(const Rational &q) const { return {re.scaled(q), im.scaled(q)}; }
        bool intersects(const ComplexInterval &o) const;

        friend ComplexInterval operator+(const ComplexInterval &a, const ComplexInterval &b)
        {
            return {a.re + b.re, a.im + b.im};
        }
        friend ComplexInterval operator-(const ComplexInterval &a, const ComplexInterval &b)
        {
            return {a.re - b.re, a.im - b.im};
        }
        friend ComplexInterval operator*(const ComplexInterval &a, const ComplexInterval &b)
        {
            return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
        }

        std::string to_string(int digits = 20) const;
    };

    bool intervals_intersect(const Interval &a, const Interval &b);

    // Certified enclosure of exp(2 pi i j / m).
    ComplexInterval root_of_unity(long j, long m, long bits);

} // namespace bdf
