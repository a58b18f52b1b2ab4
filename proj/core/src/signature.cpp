#include "holant/signature.hpp"

#include <bit>

#include "holant/errors.hpp"

namespace holant {

Mat2 mat2_identity() { return mat2_diag(Cyc8(1), Cyc8(1)); }

Mat2 mat2_diag(const Cyc8& d0, const Cyc8& d1) {
    Mat2 m;
    m[0][0] = d0;
    m[1][1] = d1;
    return m;
}

Mat2 mat2_inverse(const Mat2& m) {
    Cyc8 det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Cyc8 inv = det.inverse();
    Mat2 r;
    r[0][0] = m[1][1] * inv;
    r[0][1] = -m[0][1] * inv;
    r[1][0] = -m[1][0] * inv;
    r[1][1] = m[0][0] * inv;
    return r;
}

std::string asn_to_string(std::uint64_t bits, int n) {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
        if (asn_get(bits, n, i)) s[i] = '1';
    return s;
}

Signature Signature::from_dense(int arity, const std::vector<Cyc8>& values,
                                std::string name) {
    Signature f(arity, std::move(name));
    for (std::uint64_t x = 0; x < values.size(); ++x)
        if (!values[x].is_zero()) f.entries_.emplace(x, values[x]);
    return f;
}

Signature Signature::from_symmetric(const std::vector<Cyc8>& by_weight, std::string name) {
    int n = static_cast<int>(by_weight.size()) - 1;
    if (n < 0 || n > 63) throw Error("symmetric notation limited to arity 0..63");
    Signature f(n, std::move(name));
    mpz_class total = 0;
    for (int w = 0; w <= n; ++w) {
        if (by_weight[w].is_zero()) continue;
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), n, w);
        total += b;
    }
    if (total > (1 << 22)) throw TooLarge("symmetric signature support too large");
    for (int w = 0; w <= n; ++w) {
        if (by_weight[w].is_zero()) continue;
        if (w == 0) {
            f.entries_.emplace(0, by_weight[0]);
            continue;
        }
        // Gosper's hack over all n-bit masks of popcount w.
        std::uint64_t limit = std::uint64_t{1} << n;
        for (std::uint64_t x = (std::uint64_t{1} << w) - 1; x < limit;) {
            f.entries_.emplace(x, by_weight[w]);
            std::uint64_t c = x & -x;
            std::uint64_t r = x + c;
            x = (((r ^ x) >> 2) / c) | r;
        }
    }
    return f;
}

Signature Signature::with_name(std::string name) const {
    Signature f = *this;
    f.name_ = std::move(name);
    return f;
}

std::vector<std::uint64_t> Signature::support() const {
    std::vector<std::uint64_t> s;
    s.reserve(entries_.size());
    for (const auto& [bits, v] : entries_) s.push_back(bits);
    return s;
}

Cyc8 Signature::value(std::uint64_t bits) const {
    auto it = entries_.find(bits);
    return it == entries_.end() ? Cyc8() : it->second;
}

void Signature::set(std::uint64_t bits, const Cyc8& v) {
    if (v.is_zero())
        entries_.erase(bits);
    else
        entries_[bits] = v;
}

Signature Signature::pin(int var, int bit) const {
    Signature g(arity_ - 1);
    int n = arity_;
    int low = n - 1 - var;  // count of variables after var
    std::uint64_t lo_mask = (low == 0) ? 0 : (std::uint64_t{1} << low) - 1;
    for (const auto& [x, v] : entries_) {
        if (asn_get(x, n, var) != bit) continue;
        std::uint64_t hi = (var == 0) ? 0 : (x >> (low + 1)) << low;
        g.entries_.emplace(hi | (x & lo_mask), v);
    }
    return g;
}

Signature Signature::transformed(const std::vector<Mat2>& mats) const {
    Signature cur = *this;
    for (int i = 0; i < arity_; ++i) {
        const Mat2& m = mats[i];
        if (m == mat2_identity()) continue;
        Signature next(arity_);
        for (const auto& [x, v] : cur.entries_) {
            int xb = asn_get(x, arity_, i);
            for (int yb = 0; yb < 2; ++yb) {
                const Cyc8& coef = m[yb][xb];
                if (coef.is_zero()) continue;
                std::uint64_t y = asn_with(x, arity_, i, yb);
                Cyc8 acc = next.value(y) + coef * v;
                next.set(y, acc);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

Signature Signature::transformed_all(const Mat2& m) const {
    return transformed(std::vector<Mat2>(arity_, m));
}

Signature Signature::scaled_at_var(int var, long alpha_exp) const {
    Signature g(arity_, name_);
    Cyc8 w = Cyc8::alpha_pow(alpha_exp);
    for (const auto& [x, v] : entries_)
        g.entries_.emplace(x, asn_get(x, arity_, var) ? v * w : v);
    return g;
}

Signature Signature::scaled(const Cyc8& c) const {
    Signature g(arity_, name_);
    if (c.is_zero()) return g;
    for (const auto& [x, v] : entries_) g.entries_.emplace(x, v * c);
    return g;
}

Signature Signature::permuted(const std::vector<int>& perm) const {
    // Old variable i becomes variable perm[i] of the result.
    Signature g(arity_);
    for (const auto& [x, v] : entries_) {
        std::uint64_t y = 0;
        for (int i = 0; i < arity_; ++i)
            if (asn_get(x, arity_, i)) y = asn_with(y, arity_, perm[i], 1);
        g.entries_.emplace(y, v);
    }
    return g;
}

std::optional<Cyc8> Signature::proportional_to(const Signature& g) const {
    if (arity_ != g.arity_) return std::nullopt;
    if (entries_.size() != g.entries_.size()) return std::nullopt;
    if (entries_.empty()) return Cyc8(1);
    auto it = entries_.begin();
    auto jt = g.entries_.begin();
    Cyc8 c = it->second / jt->second;
    for (; it != entries_.end(); ++it, ++jt) {
        if (it->first != jt->first) return std::nullopt;
        if (it->second != c * jt->second) return std::nullopt;
    }
    return c;
}

Signature Signature::tensor(const Signature& g) const {
    Signature r(arity_ + g.arity_);
    for (const auto& [x, v] : entries_)
        for (const auto& [y, w] : g.entries_)
            r.entries_.emplace((x << g.arity_) | y, v * w);
    return r;
}

}  // namespace holant
