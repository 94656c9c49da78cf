#ifndef FACERING_RNG_HPP
#define FACERING_RNG_HPP

#include <cstdint>
#include <random>
#include <stdexcept>

#include "field.hpp"

namespace facering {

/// Deterministic random source. Wraps std::mt19937_64, whose output
/// stream is fixed by the standard, and derives bounded values by
/// modulo reduction rather than std::uniform_int_distribution, whose
/// mapping is implementation defined. Same seed, same results, on any
/// platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform-enough value in [0, bound); bound must be positive. The
    /// modulo bias is negligible for the small bounds used here.
    std::uint64_t below(std::uint64_t bound)
    {
        if (bound == 0) throw std::invalid_argument("bound must be positive");
        return eng_() % bound;
    }

    /// Random element of F_p.
    Fp field_element(std::int64_t p)
    {
        return Fp(static_cast<std::int64_t>(below(static_cast<std::uint64_t>(p))), p);
    }

    /// Random nonzero element of F_p.
    Fp nonzero_field_element(std::int64_t p)
    {
        return Fp(1 + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(p - 1))), p);
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace facering

#endif
