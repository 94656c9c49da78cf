#ifndef FACERING_FIELD_HPP
#define FACERING_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace facering {

/// Default prime for finite-field computations, large enough that random
/// matrices over it are nonsingular with high probability.
inline constexpr std::int64_t kDefaultPrime = 32003;

/// Element of the prime field F_p. Each value carries its modulus, so
/// polynomials over different primes cannot be mixed silently: binary
/// operations throw std::invalid_argument on modulus mismatch.
class Fp {
  public:
    Fp() : v_(0), p_(kDefaultPrime) {}

    Fp(std::int64_t value, std::int64_t p) : p_(p)
    {
        if (p < 2) throw std::invalid_argument("modulus must be >= 2");
        v_ = value % p;
        if (v_ < 0) v_ += p;
    }

    std::int64_t value() const { return v_; }
    std::int64_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }

    /// Representative in (-p/2, p/2]; keeps printed coefficients short.
    std::int64_t symmetric_value() const { return v_ > p_ / 2 ? v_ - p_ : v_; }

    friend Fp operator+(Fp a, Fp b)
    {
        check(a, b);
        return Fp(a.v_ + b.v_, a.p_);
    }
    friend Fp operator-(Fp a, Fp b)
    {
        check(a, b);
        return Fp(a.v_ - b.v_, a.p_);
    }
    friend Fp operator*(Fp a, Fp b)
    {
        check(a, b);
        return Fp(mulmod(a.v_, b.v_, a.p_), a.p_);
    }
    Fp operator-() const { return Fp(-v_, p_); }

    Fp inverse() const
    {
        if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
        // Extended Euclid; p is prime so gcd(v, p) = 1.
        std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t t = a - q * b;
            a = b, b = t;
            t = x0 - q * x1;
            x0 = x1, x1 = t;
        }
        if (a != 1) throw std::domain_error("modulus is not prime");
        return Fp(x0, p_);
    }

    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }

    friend bool operator==(Fp a, Fp b)
    {
        check(a, b);
        return a.v_ == b.v_;
    }

    std::string to_string() const { return std::to_string(symmetric_value()); }

  private:
    static void check(Fp a, Fp b)
    {
        if (a.p_ != b.p_) throw std::invalid_argument("mixed moduli in F_p arithmetic");
    }
    static std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p)
    {
        return static_cast<std::int64_t>(
            static_cast<boost::multiprecision::int128_t>(a) * b % p);
    }

    std::int64_t v_;
    std::int64_t p_;
};

using Rational = boost::multiprecision::cpp_rational;

// Field adapters. Polynomial code is templated over the coefficient
// field and reaches arithmetic through these, so a new field only needs
// the five functions below.

inline bool is_zero(const Fp& a) { return a.is_zero(); }
inline bool is_zero(const Rational& a) { return a == 0; }

inline Fp inv(const Fp& a) { return a.inverse(); }
inline Rational inv(const Rational& a)
{
    if (a == 0) throw std::domain_error("inverse of zero rational");
    return 1 / a;
}

/// Multiplicative identity with the same field parameters as the sample.
inline Fp one_like(const Fp& sample) { return Fp(1, sample.modulus()); }
inline Rational one_like(const Rational&) { return Rational(1); }

inline Fp zero_like(const Fp& sample) { return Fp(0, sample.modulus()); }
inline Rational zero_like(const Rational&) { return Rational(0); }

/// Integer embedded into the field of the sample element.
inline Fp from_int(const Fp& sample, std::int64_t n) { return Fp(n, sample.modulus()); }
inline Rational from_int(const Rational&, std::int64_t n) { return Rational(n); }

inline std::string scalar_to_string(const Fp& a) { return a.to_string(); }
inline std::string scalar_to_string(const Rational& a) { return a.str(); }

}  // namespace facering

#endif
