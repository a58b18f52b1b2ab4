#include "holant/affine.hpp"

#include <algorithm>
#include <bit>

#include "holant/errors.hpp"

namespace holant {

std::uint64_t AffineSupport::point(std::uint64_t t) const {
    std::uint64_t x = 0;
    for (int i = 0; i < n; ++i) {
        int bit = (std::popcount(a_row[i] & t) + b[i]) & 1;
        if (bit) x = asn_with(x, n, i, 1);
    }
    return x;
}

std::uint64_t AffineSupport::free_values(std::uint64_t x) const {
    std::uint64_t t = 0;
    for (int j = 0; j < rank; ++j)
        if (asn_get(x, n, perm[j])) t |= std::uint64_t{1} << j;
    return t;
}

AffineSupport affine_support_of(const Signature& f) {
    if (f.is_zero()) throw EmptySupport();
    const int n = f.arity();
    AffineSupport s;
    s.n = n;

    // Translate the support by its least point and run a GF(2) elimination
    // over the translates.  With MSB-first packing, the leading set bit of
    // a vector is its lowest variable index, so reduced row echelon form
    // with leading-bit pivots realizes the lowest-index free-variable
    // choice.
    const std::uint64_t p0 = f.entries().begin()->first;
    std::vector<std::uint64_t> basis;  // RREF rows, ordered by pivot
    for (const auto& [x, v] : f.entries()) {
        std::uint64_t w = x ^ p0;
        for (std::uint64_t bv : basis) {
            std::uint64_t hi = std::uint64_t{1} << (63 - std::countl_zero(bv));
            if (w & hi) w ^= bv;
        }
        if (w == 0) continue;
        std::uint64_t hi = std::uint64_t{1} << (63 - std::countl_zero(w));
        for (std::uint64_t& bv : basis)
            if (bv & hi) bv ^= w;
        basis.push_back(w);
    }
    std::sort(basis.begin(), basis.end(), std::greater<>());  // ascending pivot index

    const int r = static_cast<int>(basis.size());
    if (f.support_size() != (std::uint64_t{1} << r))
        throw NotAffine("support size " + std::to_string(f.support_size()) +
                        " is not 2^rank");
    s.rank = r;

    std::vector<int> pivots(r);
    for (int k = 0; k < r; ++k)
        pivots[k] = n - 1 - (63 - std::countl_zero(basis[k]));

    s.perm = pivots;
    std::vector<char> is_free(n, 0);
    for (int p : pivots) is_free[p] = 1;
    for (int i = 0; i < n; ++i)
        if (!is_free[i]) s.perm.push_back(i);

    s.a_row.assign(n, 0);
    s.b.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        std::uint64_t row = 0;
        for (int k = 0; k < r; ++k)
            if (asn_get(basis[k], n, i)) row |= std::uint64_t{1} << k;
        s.a_row[i] = row;
        int bb = asn_get(p0, n, i);
        for (int k = 0; k < r; ++k)
            if ((row >> k) & 1) bb ^= asn_get(p0, n, pivots[k]);
        s.b[i] = bb;
    }
    return s;
}

bool Bundle::opposite() const {
    return members.size() % 2 == 0 && plus_count() % 2 == 1;
}

int Bundle::plus_count() const {
    int c = 0;
    for (int sg : signs) c += (sg == 0);
    return c;
}

const Bundle* BundleTable::find(std::uint64_t name) const {
    for (const auto& b : bundles)
        if (b.name == name) return &b;
    return nullptr;
}

BundleTable bundles_of(const Signature& f) { return bundles_of(f, affine_support_of(f)); }

BundleTable bundles_of(const Signature& f, const AffineSupport& s) {
    (void)f;
    BundleTable t;
    t.rank = s.rank;
    std::map<std::uint64_t, std::size_t> index;
    for (int i = 0; i < s.n; ++i) {
        if (s.a_row[i] == 0) {
            t.constants.emplace_back(i, s.b[i]);
            continue;
        }
        auto it = index.find(s.a_row[i]);
        if (it == index.end()) {
            index.emplace(s.a_row[i], t.bundles.size());
            t.bundles.push_back(Bundle{s.a_row[i], {}, {}});
            it = index.find(s.a_row[i]);
        }
        Bundle& b = t.bundles[it->second];
        b.members.push_back(i);
        b.signs.push_back(s.b[i]);
    }
    return t;
}

std::vector<Cyc8> compressed_of(const Signature& f) {
    return compressed_of(f, affine_support_of(f));
}

std::vector<Cyc8> compressed_of(const Signature& f, const AffineSupport& s) {
    std::vector<Cyc8> table(std::uint64_t{1} << s.rank);
    for (std::uint64_t t = 0; t < table.size(); ++t) table[t] = f.value(s.point(t));
    return table;
}

int AlphaForm::exponent(std::uint64_t t) const {
    int e = 0;
    for (const auto& [mask, c] : coeffs)
        if ((mask & t) == mask) e += c;
    return e & 7;
}

AlphaForm fit_alpha_form(const Signature& f) {
    return fit_alpha_form(f, affine_support_of(f));
}

AlphaForm fit_alpha_form(const Signature& f, const AffineSupport& s) {
    AlphaForm form;
    form.support = s;
    form.lambda = f.value(s.point(0));  // value at the lex-least support point

    const std::uint64_t size = std::uint64_t{1} << s.rank;
    std::vector<int> e(size);
    Cyc8 inv_lambda = form.lambda.inverse();
    for (std::uint64_t t = 0; t < size; ++t) {
        auto k = (f.value(s.point(t)) * inv_lambda).log_alpha();
        if (!k)
            throw NotUnimodular("value at free assignment " + std::to_string(t) +
                                " is not lambda times a power of alpha");
        e[t] = *k;
    }

    // Moebius inversion over the subset lattice of free-variable slots:
    // c_S = sum_{T subseteq S} (-1)^{|S \ T|} e(1_T)  (mod 8).
    for (std::uint64_t mask = 1; mask < size; ++mask) {
        int c = 0;
        std::uint64_t sub = mask;
        int bits = std::popcount(mask);
        while (true) {
            int sign = ((bits - std::popcount(sub)) % 2 == 0) ? 1 : -1;
            c += sign * e[sub];
            if (sub == 0) break;
            sub = (sub - 1) & mask;
        }
        c = ((c % 8) + 8) % 8;
        if (c != 0) form.coeffs.emplace(mask, c);
    }

    for (std::uint64_t t = 0; t < size; ++t)
        if (form.exponent(t) != e[t])
            throw NotUnimodular("no multilinear Z_8 exponent reproduces the values");
    return form;
}

Signature essential_of(const Signature& f) {
    AffineSupport s = affine_support_of(f);
    BundleTable bt = bundles_of(f, s);
    std::vector<Cyc8> comp = compressed_of(f, s);
    const int m = bt.essential_arity();
    Signature g(m);
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << s.rank); ++t) {
        std::uint64_t x = 0;
        for (int k = 0; k < m; ++k)
            if (std::popcount(bt.bundles[k].name & t) & 1) x = asn_with(x, m, k, 1);
        if (!comp[t].is_zero()) g.set(x, comp[t]);
    }
    return g;
}

}  // namespace holant
