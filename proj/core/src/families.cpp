#include "holant/families.hpp"

#include <bit>

#include "holant/affine.hpp"
#include "holant/errors.hpp"
#include "holant/factorize.hpp"

namespace holant {

bool in_product_type(const Signature& f) {
    if (f.is_zero()) return true;
    for (const TensorFactor& fac : tensor_factorize(f)) {
        if (fac.sig.arity() <= 1) continue;
        if (fac.sig.support_size() != 2) return false;
        auto it = fac.sig.entries().begin();
        std::uint64_t a = it->first;
        std::uint64_t b = std::next(it)->first;
        std::uint64_t all = (fac.sig.arity() == 64)
                                ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << fac.sig.arity()) - 1;
        if ((a ^ b) != all) return false;  // not an antipodal pair
    }
    return true;
}

namespace {

bool affine_coeffs_ok(const AlphaForm& form) {
    for (const auto& [mask, c] : form.coeffs) {
        int deg = std::popcount(mask);
        if (deg == 1 && c % 2 != 0) return false;
        if (deg == 2 && c % 4 != 0) return false;
        if (deg >= 3 && c != 0) return false;
    }
    return true;
}

}  // namespace

bool in_affine(const Signature& f) {
    if (f.is_zero()) return true;
    try {
        return affine_coeffs_ok(fit_alpha_form(f));
    } catch (const NotAffine&) {
        return false;
    } catch (const NotUnimodular&) {
        return false;
    }
}

bool in_alpha_affine(const Signature& f) {
    return in_affine(f.transformed_all(mat2_diag(Cyc8(1), Cyc8::alpha_pow(-1))));
}

bool in_matching_type(const Signature& f) {
    for (const auto& [x, v] : f.entries())
        if (std::popcount(x) > 1) return false;
    return true;
}

bool in_local_affine_def(const Signature& f) {
    if (f.is_zero()) return true;
    const int n = f.arity();
    for (const auto& [sigma, val] : f.entries()) {
        Signature g = f;
        for (int i = 0; i < n; ++i)
            if (asn_get(sigma, n, i)) g = g.scaled_at_var(i, 1);
        if (!in_affine(g)) return false;
    }
    return true;
}

LocalAffineCheck in_local_affine(const Signature& f) {
    if (f.is_zero()) return {true, ""};
    AlphaForm form;
    try {
        form = fit_alpha_form(f);
    } catch (const NotAffine&) {
        return {false, "support not affine"};
    } catch (const NotUnimodular&) {
        return {false, "values not unimodular over alpha"};
    }

    auto subset_name = [&](std::uint64_t mask) {
        std::string s;
        for (int j = 0; j < form.support.rank; ++j)
            if ((mask >> j) & 1) s += (s.empty() ? "" : ",") + std::to_string(j + 1);
        return "{" + s + "}";
    };

    // f^2 affine with the degree-3 part homogeneous.
    for (const auto& [mask, c] : form.coeffs) {
        int deg = std::popcount(mask);
        if (deg == 2 && c % 2 != 0)
            return {false, "quadratic coefficient odd at " + subset_name(mask)};
        if (deg == 3 && c % 4 != 0)
            return {false, "cubic coefficient not divisible by 4 at " + subset_name(mask)};
        if (deg >= 4 && c != 0)
            return {false, "exponent has a monomial of degree " + std::to_string(deg)};
    }

    const AffineSupport& s = form.support;
    const int r = s.rank;

    // Homogeneous equations: column products of A of every degree 1..4
    // vanish mod 2.
    for (int deg = 1; deg <= 4 && deg <= r; ++deg) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
            if (std::popcount(mask) != deg) continue;
            int sum = 0;
            for (int i = 0; i < s.n; ++i)
                if ((s.a_row[i] & mask) == mask) sum ^= 1;
            if (sum != 0)
                return {false,
                        "homogeneous degree-" + std::to_string(deg) + " sum odd at " +
                            subset_name(mask)};
        }
    }

    // Inhomogeneous equations: b-weighted products match the reduced
    // exponent coefficients (c_S, c_S/2, c_S/4 mod 2 by degree).
    for (int deg = 1; deg <= 3 && deg <= r; ++deg) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
            if (std::popcount(mask) != deg) continue;
            int sum = 0;
            for (int i = 0; i < s.n; ++i)
                if (s.b[i] && (s.a_row[i] & mask) == mask) sum ^= 1;
            int c = form.coeff(mask);
            int want = (deg == 1) ? (c & 1) : (deg == 2) ? ((c >> 1) & 1) : ((c >> 2) & 1);
            if (sum != want)
                return {false,
                        "inhomogeneous degree-" + std::to_string(deg) + " sum at " +
                            subset_name(mask) + " differs from the exponent coefficient"};
        }
    }
    return {true, ""};
}

namespace {

Signature combine(const Signature& t0, const Signature& t1, const Cyc8& c0, const Cyc8& c1) {
    Signature out(t0.arity());
    for (const auto& [y, v] : t0.entries()) out.set(y, c0 * v);
    for (const auto& [y, v] : t1.entries()) out.set(y, out.value(y) + c1 * v);
    return out;
}

Cyc8 rank2_value(const TwoTermDecomposition& d, std::uint64_t x, int n) {
    Cyc8 a = d.w1, b = d.w2;
    for (int i = 0; i < n; ++i) {
        a *= d.u[i][asn_get(x, n, i)];
        b *= d.v[i][asn_get(x, n, i)];
    }
    return a + b;
}

// Checks f == w1*U + w2*V everywhere: on supp(f) and on the support boxes
// of the two rank-1 tensors.  Gives up (false) when a box is too large to
// enumerate.
bool verify_two_term(const Signature& f, const TwoTermDecomposition& d) {
    const int n = f.arity();
    for (const auto& [x, val] : f.entries())
        if (rank2_value(d, x, n) != val) return false;
    for (const auto& vecs : {d.u, d.v}) {
        double box = 1;
        for (int i = 0; i < n; ++i)
            box *= (!vecs[i][0].is_zero() && !vecs[i][1].is_zero()) ? 2 : 1;
        if (box > (1 << 20)) return false;
        std::vector<std::uint64_t> pts{0};
        for (int i = 0; i < n; ++i) {
            std::vector<std::uint64_t> next;
            for (std::uint64_t p : pts)
                for (int b = 0; b < 2; ++b)
                    if (!vecs[i][b].is_zero()) next.push_back(b ? asn_with(p, n, i, 1) : p);
            pts = std::move(next);
        }
        for (std::uint64_t p : pts)
            if (rank2_value(d, p, n) != f.value(p)) return false;
    }
    return true;
}

}  // namespace

std::optional<TwoTermDecomposition> two_term_decompose(const Signature& f) {
    const int n = f.arity();
    if (n < 3 || f.is_zero()) return std::nullopt;
    Signature t0 = f.pin(0, 0), t1 = f.pin(0, 1);
    if (t0.is_zero() || t1.is_zero()) return std::nullopt;  // rank 1 in variable 0

    // A combination c0*T0 + c1*T1 proportional to a pure tensor power kills
    // every 2x2 minor of the variable-1-versus-rest reshaping of the slice.
    // Both target combinations do so, hence any nonzero minor form has
    // exactly those two projective roots.
    const int m = n - 1;
    std::vector<std::uint64_t> cols;
    {
        std::map<std::uint64_t, char> seen;
        std::uint64_t col_mask = (std::uint64_t{1} << (m - 1)) - 1;
        for (const Signature* t : {&t0, &t1})
            for (const auto& [y, v] : t->entries()) seen.emplace(y & col_mask, 0);
        for (const auto& [c, _] : seen) cols.push_back(c);
    }
    auto slice_val = [&](const Signature& t, int row, std::uint64_t col) {
        return t.value((std::uint64_t(row) << (m - 1)) | col);
    };

    Cyc8 qa, qb, qc;  // minor form qa*c0^2 + qb*c0*c1 + qc*c1^2
    bool have_form = false;
    for (std::size_t i = 0; i < cols.size() && !have_form; ++i) {
        for (std::size_t j = i + 1; j < cols.size() && !have_form; ++j) {
            Cyc8 a00 = slice_val(t0, 0, cols[i]), a01 = slice_val(t0, 0, cols[j]);
            Cyc8 a10 = slice_val(t0, 1, cols[i]), a11 = slice_val(t0, 1, cols[j]);
            Cyc8 b00 = slice_val(t1, 0, cols[i]), b01 = slice_val(t1, 0, cols[j]);
            Cyc8 b10 = slice_val(t1, 1, cols[i]), b11 = slice_val(t1, 1, cols[j]);
            qa = a00 * a11 - a01 * a10;
            qc = b00 * b11 - b01 * b10;
            qb = a00 * b11 + b00 * a11 - a01 * b10 - b01 * a10;
            have_form = !qa.is_zero() || !qb.is_zero() || !qc.is_zero();
        }
    }
    if (!have_form) return std::nullopt;

    std::vector<std::pair<Cyc8, Cyc8>> roots;  // projective (c0 : c1)
    if (qa.is_zero()) {
        if (qb.is_zero()) return std::nullopt;  // double root at (1:0)
        roots.emplace_back(Cyc8(1), Cyc8(0));
        roots.emplace_back(-qc / qb, Cyc8(1));
    } else {
        Cyc8 disc = qb * qb - Cyc8(4) * qa * qc;
        if (disc.is_zero()) return std::nullopt;
        auto sq = disc.sqrt();
        if (!sq) return std::nullopt;  // roots live outside Q(z8)
        Cyc8 two_a = Cyc8(2) * qa;
        roots.emplace_back((-qb + *sq) / two_a, Cyc8(1));
        roots.emplace_back((-qb - *sq) / two_a, Cyc8(1));
    }

    std::vector<UnaryProduct> parts;
    for (auto& [c0, c1] : roots) {
        Signature comb = combine(t0, t1, c0, c1);
        if (comb.is_zero()) return std::nullopt;
        auto up = separate_unary_product(comb);
        if (!up) return std::nullopt;
        parts.push_back(std::move(*up));
    }

    // f = u0 (x) P0 + v0 (x) P1 with P0, P1 the separated tensors; recover
    // u0, v0 by an exact 2x2 solve at two independent assignments.
    auto tensor_at = [&](const UnaryProduct& p, std::uint64_t y) {
        Cyc8 v = p.scale;
        for (int i = 0; i < m; ++i) v *= p.unaries[i][asn_get(y, m, i)];
        return v;
    };
    std::vector<std::uint64_t> probe;
    for (const auto& [y, v] : t0.entries()) probe.push_back(y);
    for (const auto& [y, v] : t1.entries()) probe.push_back(y);
    std::array<Cyc8, 2> u0{}, v0{};
    bool solved = false;
    for (std::size_t i = 0; i < probe.size() && !solved; ++i) {
        for (std::size_t j = i + 1; j < probe.size() && !solved; ++j) {
            Cyc8 p11 = tensor_at(parts[0], probe[i]), p12 = tensor_at(parts[1], probe[i]);
            Cyc8 p21 = tensor_at(parts[0], probe[j]), p22 = tensor_at(parts[1], probe[j]);
            Cyc8 det = p11 * p22 - p12 * p21;
            if (det.is_zero()) continue;
            for (int row = 0; row < 2; ++row) {
                const Signature& tb = row == 0 ? t0 : t1;
                Cyc8 r1 = tb.value(probe[i]), r2 = tb.value(probe[j]);
                u0[row] = (r1 * p22 - p12 * r2) / det;
                v0[row] = (p11 * r2 - r1 * p21) / det;
            }
            solved = true;
        }
    }
    if (!solved) return std::nullopt;

    TwoTermDecomposition out;
    out.w1 = parts[0].scale;
    out.w2 = parts[1].scale;
    out.u.push_back(u0);
    out.v.push_back(v0);
    for (int i = 0; i < m; ++i) {
        out.u.push_back(parts[0].unaries[i]);
        out.v.push_back(parts[1].unaries[i]);
    }
    auto normalize = [](std::array<Cyc8, 2>& vec, Cyc8& w) {
        Cyc8 lead = vec[0].is_zero() ? vec[1] : vec[0];
        if (lead.is_zero()) return false;
        vec[0] = vec[0] / lead;
        vec[1] = vec[1] / lead;
        w *= lead;
        return true;
    };
    for (std::size_t i = 0; i < out.u.size(); ++i) {
        if (!normalize(out.u[i], out.w1)) return std::nullopt;
        if (!normalize(out.v[i], out.w2)) return std::nullopt;
    }
    for (int i = 0; i < n; ++i)
        if (out.u[i] == out.v[i]) return std::nullopt;  // parallel pair: decomposable
    if (!verify_two_term(f, out)) return std::nullopt;
    return out;
}

}  // namespace holant
