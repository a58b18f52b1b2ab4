#include "holant/cyc8.hpp"

#include <cmath>
#include <utility>

#include "holant/errors.hpp"

namespace holant {

Cyc8 Cyc8::alpha_pow(long k) {
    long m = ((k % 8) + 8) % 8;
    Cyc8 r;
    r.v_[m % 4] = (m < 4) ? 1 : -1;
    return r;
}

Cyc8 Cyc8::sqrt2() {
    Cyc8 r;
    r.v_[1] = 1;
    r.v_[3] = -1;
    return r;
}

bool Cyc8::is_zero() const {
    return v_[0] == 0 && v_[1] == 0 && v_[2] == 0 && v_[3] == 0;
}

bool Cyc8::is_rational() const { return v_[1] == 0 && v_[2] == 0 && v_[3] == 0; }

bool Cyc8::is_real() const {
    // conj maps (c0,c1,c2,c3) to (c0,-c3,-c2,-c1).
    return v_[2] == 0 && v_[1] == -v_[3];
}

Cyc8 Cyc8::operator+(const Cyc8& o) const {
    Cyc8 r;
    for (int k = 0; k < 4; ++k) r.v_[k] = v_[k] + o.v_[k];
    return r;
}

Cyc8 Cyc8::operator-(const Cyc8& o) const {
    Cyc8 r;
    for (int k = 0; k < 4; ++k) r.v_[k] = v_[k] - o.v_[k];
    return r;
}

Cyc8 Cyc8::operator-() const {
    Cyc8 r;
    for (int k = 0; k < 4; ++k) r.v_[k] = -v_[k];
    return r;
}

Cyc8 Cyc8::operator*(const Cyc8& o) const {
    Cyc8 r;
    for (int j = 0; j < 4; ++j) {
        if (v_[j] == 0) continue;
        for (int k = 0; k < 4; ++k) {
            if (o.v_[k] == 0) continue;
            Rat term = v_[j] * o.v_[k];
            int e = j + k;
            if (e >= 4) {
                e -= 4;
                term = -term;
            }
            r.v_[e] += term;
        }
    }
    return r;
}

Cyc8 Cyc8::galois(int k) const {
    Cyc8 r;
    for (int j = 0; j < 4; ++j) {
        if (v_[j] == 0) continue;
        int e = (j * k) % 8;
        if (e < 4)
            r.v_[e] += v_[j];
        else
            r.v_[e - 4] -= v_[j];
    }
    return r;
}

Cyc8 Cyc8::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Cyc8 t = galois(3) * galois(5) * galois(7);
    Cyc8 n = *this * t;  // field norm, lands in Q
    // n is rational and nonzero by construction.
    Rat inv_n = Rat(1) / n.v_[0];
    Cyc8 r;
    for (int k = 0; k < 4; ++k) r.v_[k] = t.v_[k] * inv_n;
    return r;
}

Cyc8 Cyc8::operator/(const Cyc8& o) const { return *this * o.inverse(); }

std::optional<int> Cyc8::log_alpha() const {
    int found = -1;
    for (int k = 0; k < 4; ++k) {
        if (v_[k] == 0) continue;
        if (found >= 0) return std::nullopt;
        found = k;
    }
    if (found < 0) return std::nullopt;
    if (v_[found] == 1) return found;
    if (v_[found] == -1) return found + 4;
    return std::nullopt;
}

namespace {

// Rational square root: both numerator and denominator must be perfect
// squares of the canonical form.
std::optional<Rat> rat_sqrt(const Rat& x) {
    if (x < 0) return std::nullopt;
    mpz_class num = x.get_num(), den = x.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rat r(rn, rd);
    r.canonicalize();
    return r;
}

struct Qi {  // element x + i*y of Q(i)
    Rat x, y;
};

std::optional<Qi> qi_sqrt(const Qi& z) {
    if (z.y == 0) {
        if (auto u = rat_sqrt(z.x)) return Qi{*u, 0};
        if (auto v = rat_sqrt(-z.x)) return Qi{0, *v};
        return std::nullopt;
    }
    // (u+iv)^2 = x+iy with v = y/(2u) forces u^2 = (x + sqrt(x^2+y^2))/2.
    auto s = rat_sqrt(z.x * z.x + z.y * z.y);
    if (!s) return std::nullopt;
    auto u = rat_sqrt((z.x + *s) / 2);
    if (!u || *u == 0) return std::nullopt;
    return Qi{*u, z.y / (2 * *u)};
}

Cyc8 from_qi_pair(const Qi& w0, const Qi& w1) {
    // w0 + w1*a over the Q(i) basis {1, a}.
    return Cyc8(w0.x, w1.x, w0.y, w1.y);
}

}  // namespace

std::optional<Cyc8> Cyc8::sqrt() const {
    // Split over Q(i): this = z0 + z1*a with z0 = c0 + c2*i, z1 = c1 + c3*i.
    Qi z0{v_[0], v_[2]}, z1{v_[1], v_[3]};
    auto check = [&](const Cyc8& w) -> std::optional<Cyc8> {
        if (w * w == *this) return w;
        return std::nullopt;
    };
    if (z1.x == 0 && z1.y == 0) {
        if (auto w0 = qi_sqrt(z0))
            if (auto r = check(from_qi_pair(*w0, Qi{0, 0}))) return r;
        // pure a-multiple root: (w1*a)^2 = i*w1^2
        Qi mi{z0.y, -z0.x};  // -i * z0
        if (auto w1 = qi_sqrt(mi))
            if (auto r = check(from_qi_pair(Qi{0, 0}, *w1))) return r;
        return std::nullopt;
    }
    // General case: q = w0^2 solves q^2 - z0*q + i*z1^2/4 = 0.
    Qi z0sq{z0.x * z0.x - z0.y * z0.y, 2 * z0.x * z0.y};
    Qi z1sq{z1.x * z1.x - z1.y * z1.y, 2 * z1.x * z1.y};
    Qi disc{z0sq.x + z1sq.y, z0sq.y - z1sq.x};  // z0^2 - i*z1^2
    auto d = qi_sqrt(disc);
    if (!d) return std::nullopt;
    for (int sign : {1, -1}) {
        Qi q{(z0.x + sign * d->x) / 2, (z0.y + sign * d->y) / 2};
        auto w0 = qi_sqrt(q);
        if (!w0 || (w0->x == 0 && w0->y == 0)) continue;
        // w1 = z1 / (2*w0) in Q(i)
        Rat nrm = 2 * (w0->x * w0->x + w0->y * w0->y);
        Qi w1{(z1.x * w0->x + z1.y * w0->y) / nrm, (z1.y * w0->x - z1.x * w0->y) / nrm};
        if (auto r = check(from_qi_pair(*w0, w1))) return r;
    }
    return std::nullopt;
}

std::complex<double> Cyc8::approx() const {
    const double s = std::sqrt(0.5);
    std::complex<double> a(s, s), a3(-s, s);
    return std::complex<double>(v_[0].get_d(), v_[2].get_d()) + v_[1].get_d() * a +
           v_[3].get_d() * a3;
}

}  // namespace holant
