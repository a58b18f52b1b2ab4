#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace holant {

using Rat = mpq_class;

/// An element of the cyclotomic field Q(z8), z8 = exp(i*pi/4), written as
///
///     c0 + c1*a + c2*a^2 + c3*a^3        (a = z8, a^4 = -1)
///
/// with exact rational coordinates.  The representation is unique, so
/// equality is coordinate-wise.  Note a^2 = i and a - a^3 = sqrt(2).
/// Values are immutable in spirit: every operation returns a fresh value.
class Cyc8 {
public:
    Cyc8() = default;
    Cyc8(long n) { v_[0] = n; }
    Cyc8(const Rat& r) {
        v_[0] = r;
        v_[0].canonicalize();
    }
    Cyc8(Rat c0, Rat c1, Rat c2, Rat c3)
        : v_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {
        for (Rat& c : v_) c.canonicalize();
    }

    /// a^k for any integer k (reduced mod 8).
    static Cyc8 alpha_pow(long k);
    static Cyc8 alpha() { return alpha_pow(1); }
    static Cyc8 i() { return alpha_pow(2); }
    static Cyc8 sqrt2();

    const Rat& coeff(int k) const { return v_[k]; }

    bool is_zero() const;
    bool is_rational() const;
    /// Fixed under complex conjugation (a -> a^-1).
    bool is_real() const;

    bool operator==(const Cyc8& o) const { return v_ == o.v_; }
    bool operator!=(const Cyc8& o) const { return v_ != o.v_; }

    Cyc8 operator+(const Cyc8& o) const;
    Cyc8 operator-(const Cyc8& o) const;
    Cyc8 operator-() const;
    Cyc8 operator*(const Cyc8& o) const;
    /// Exact field division; throws DivisionByZero for a zero divisor.
    Cyc8 operator/(const Cyc8& o) const;
    Cyc8& operator+=(const Cyc8& o) { return *this = *this + o; }
    Cyc8& operator-=(const Cyc8& o) { return *this = *this - o; }
    Cyc8& operator*=(const Cyc8& o) { return *this = *this * o; }
    Cyc8& operator/=(const Cyc8& o) { return *this = *this / o; }

    /// Galois automorphism a -> a^k, k odd.
    Cyc8 galois(int k) const;
    /// Complex conjugate (a -> a^7 = -a^3).
    Cyc8 conj() const { return galois(7); }
    /// Multiplicative inverse via the norm over the conjugate orbit.
    Cyc8 inverse() const;

    /// If *this == a^k for some k in 0..7, returns k.
    std::optional<int> log_alpha() const;

    /// A square root in Q(z8), if one exists in the field.
    std::optional<Cyc8> sqrt() const;

    /// Floating-point image under z8 = (1+i)/sqrt(2).
    std::complex<double> approx() const;

private:
    std::array<Rat, 4> v_{};
};

inline Cyc8 operator*(long n, const Cyc8& c) { return Cyc8(n) * c; }

}  // namespace holant
