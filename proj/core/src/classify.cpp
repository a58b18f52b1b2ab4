#include "holant/classify.hpp"

#include "holant/errors.hpp"
#include "holant/factorize.hpp"

namespace holant {

std::string label_name(const ClassVerdict& v) {
    switch (v.label) {
        case VerdictLabel::TractableP: return "TractableP";
        case VerdictLabel::TractableA: return "TractableA";
        case VerdictLabel::TractableAalpha: return "TractableAalpha";
        case VerdictLabel::TractableL: return "TractableL";
        case VerdictLabel::TractableHolantStar: {
            switch (v.star->family) {
                case HolantStarFamily::T: return "TractableHolantStar T";
                case HolantStarFamily::HP: return "TractableHolantStar HP";
                case HolantStarFamily::ZP: return "TractableHolantStar ZP";
                case HolantStarFamily::ZM: return "TractableHolantStar ZM";
            }
            return "TractableHolantStar";
        }
        case VerdictLabel::SharpPHard: return "SharpPHard";
    }
    return "?";
}

namespace {

std::vector<Signature> all_factors(const std::vector<Signature>& fs) {
    std::vector<Signature> out;
    for (const Signature& f : fs) {
        if (f.is_zero()) continue;  // a zero signature never constrains tractability
        for (TensorFactor& t : tensor_factorize(f))
            if (t.sig.arity() > 0) out.push_back(std::move(t.sig));
    }
    return out;
}

bool all_in_product(const std::vector<Signature>& factors, const Mat2& inv) {
    for (const Signature& g : factors)
        if (!in_product_type(g.transformed_all(inv))) return false;
    return true;
}

Mat2 z_matrix(bool variant) {
    Mat2 z;
    z[0][0] = Cyc8(1);
    z[0][1] = Cyc8(1);
    z[1][0] = variant ? -Cyc8::i() : Cyc8::i();
    z[1][1] = variant ? Cyc8::i() : -Cyc8::i();
    return z;
}

}  // namespace

std::optional<HolantStarWitness> holant_star_tractable(const std::vector<Signature>& fs) {
    std::vector<Signature> factors = all_factors(fs);

    bool all_small = true;
    for (const Signature& g : factors)
        if (g.arity() > 2) all_small = false;
    if (all_small) return HolantStarWitness{HolantStarFamily::T, std::nullopt};

    // Orthogonal-transform branch.  The identity is tried first; otherwise
    // the candidate column pair comes from the rank-2 structure of one
    // non-decomposable factor of arity >= 3.  Column scaling is immaterial
    // (diagonal transforms preserve the product family), so orthogonality
    // reduces to a zero inner product and nonzero column norms.
    if (all_in_product(factors, mat2_identity()))
        return HolantStarWitness{HolantStarFamily::HP, mat2_identity()};
    for (const Signature& g : factors) {
        if (g.arity() < 3) continue;
        auto dec = two_term_decompose(g);
        if (dec) {
            const auto& u = dec->u[0];
            const auto& v = dec->v[0];
            Cyc8 dot = u[0] * v[0] + u[1] * v[1];
            Cyc8 nu = u[0] * u[0] + u[1] * u[1];
            Cyc8 nv = v[0] * v[0] + v[1] * v[1];
            if (dot.is_zero() && !nu.is_zero() && !nv.is_zero()) {
                Mat2 h;
                h[0][0] = u[0];
                h[1][0] = u[1];
                h[0][1] = v[0];
                h[1][1] = v[1];
                if (all_in_product(factors, mat2_inverse(h)))
                    return HolantStarWitness{HolantStarFamily::HP, h};
            }
        }
        break;  // the first candidate pins the transform up to column ops
    }

    for (bool variant : {false, true}) {
        Mat2 z = z_matrix(variant);
        Mat2 zi = mat2_inverse(z);
        if (all_in_product(factors, zi)) return HolantStarWitness{HolantStarFamily::ZP, z};
    }
    for (bool variant : {false, true}) {
        Mat2 z = z_matrix(variant);
        Mat2 zi = mat2_inverse(z);
        bool ok = true;
        for (const Signature& g : factors)
            if (!in_matching_type(g.transformed_all(zi))) {
                ok = false;
                break;
            }
        if (ok) return HolantStarWitness{HolantStarFamily::ZM, z};
    }
    return std::nullopt;
}

ClassVerdict classify_csp2c(const std::vector<Signature>& fs) {
    const std::size_t n = fs.size();
    std::vector<bool> in_p(n), in_a(n), in_aa(n);
    std::vector<LocalAffineCheck> in_l(n);
    for (std::size_t k = 0; k < n; ++k) {
        in_p[k] = in_product_type(fs[k]);
        in_a[k] = in_affine(fs[k]);
        in_aa[k] = in_alpha_affine(fs[k]);
        in_l[k] = in_local_affine(fs[k]);
    }
    auto id_of = [&](std::size_t k) {
        return fs[k].name().empty() ? "#" + std::to_string(k) : fs[k].name();
    };

    struct Family {
        VerdictLabel label;
        const char* name;
    };
    static const Family order[] = {
        {VerdictLabel::TractableP, "product"},
        {VerdictLabel::TractableA, "affine"},
        {VerdictLabel::TractableAalpha, "alpha-affine"},
        {VerdictLabel::TractableL, "local-affine"},
    };
    for (const Family& fam : order) {
        bool all = true;
        for (std::size_t k = 0; k < n && all; ++k) {
            switch (fam.label) {
                case VerdictLabel::TractableP: all = in_p[k]; break;
                case VerdictLabel::TractableA: all = in_a[k]; break;
                case VerdictLabel::TractableAalpha: all = in_aa[k]; break;
                default: all = in_l[k].ok; break;
            }
        }
        if (!all) continue;
        ClassVerdict v{fam.label, std::nullopt, {}};
        for (std::size_t k = 0; k < n; ++k)
            v.certificates.push_back(id_of(k) + ": in " + fam.name + " family");
        return v;
    }

    ClassVerdict hard{VerdictLabel::SharpPHard, std::nullopt, {}};
    for (std::size_t k = 0; k < n; ++k) {
        std::string line = id_of(k) + ": product=" + (in_p[k] ? "yes" : "no") +
                           " affine=" + (in_a[k] ? "yes" : "no") +
                           " alpha-affine=" + (in_aa[k] ? "yes" : "no") +
                           " local-affine=" + (in_l[k].ok ? "yes" : "no");
        if (!in_l[k].ok && !in_l[k].equation.empty())
            line += " (" + in_l[k].equation + ")";
        hard.certificates.push_back(line);
    }
    return hard;
}

ClassVerdict classify_holant_c(const std::vector<Signature>& fs) {
    for (std::size_t k = 0; k < fs.size(); ++k)
        for (const auto& [x, v] : fs[k].entries())
            if (!v.is_real())
                throw NotRealValued("signature " +
                                    (fs[k].name().empty() ? "#" + std::to_string(k)
                                                          : fs[k].name()) +
                                    " has a non-real value");

    if (auto star = holant_star_tractable(fs)) {
        ClassVerdict v{VerdictLabel::TractableHolantStar, star, {}};
        for (std::size_t k = 0; k < fs.size(); ++k) {
            std::string id = fs[k].name().empty() ? "#" + std::to_string(k) : fs[k].name();
            v.certificates.push_back(id + ": factors pass the " + label_name(v) + " test");
        }
        return v;
    }
    return classify_csp2c(fs);
}

}  // namespace holant
