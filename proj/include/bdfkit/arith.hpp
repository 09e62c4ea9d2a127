#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bdf
{
    using Integer = mpz_class;
    using Rational = mpq_class; // GMP keeps mpq_class canonical: lowest terms, positive denominator

    // Raised for malformed user input (CLI exit code 2).
    class InvalidInput : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // A mathematically well-formed request whose answer does not exist,
    // e.g. the cokernel of a singular matrix.
    class DomainError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // Missing or corrupt fixture files.
    class ConfigurationError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    inline std::string to_string(const Integer &z) { return z.get_str(); }
    inline std::string to_string(const Rational &q) { return q.get_str(); }

    // Narrowing for values that are known to be small (orders, ranks).
    inline long to_long(const Integer &z)
    {
        if (!z.fits_slong_p())
            throw DomainError("integer " + z.get_str() + " does not fit in a machine word");
        return z.get_si();
    }

    inline long gcd(long a, long b)
    {
        a = a < 0 ? -a : a;
        b = b < 0 ? -b : b;
        while (b != 0)
        {
            long t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    inline long lcm(long a, long b) { return a / gcd(a, b) * b; }

    // Non-negative remainder.
    inline long mod(long a, long m)
    {
        long r = a % m;
        return r < 0 ? r + m : r;
    }

    std::vector<long> divisors(long n);
    std::vector<long> prime_factors(long n); // distinct, ascending

} // namespace bdf
