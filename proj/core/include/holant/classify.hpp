#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holant/families.hpp"
#include "holant/signature.hpp"

namespace holant {

enum class VerdictLabel {
    TractableP,
    TractableA,
    TractableAalpha,
    TractableL,
    TractableHolantStar,
    SharpPHard,
};

enum class HolantStarFamily { T, HP, ZP, ZM };

struct HolantStarWitness {
    HolantStarFamily family;
    /// The orthogonal column pair for HP, or the Z matrix used for ZP/ZM.
    std::optional<Mat2> transform;
};

/// Classification outcome with per-signature evidence.  A tractable
/// verdict's certificates re-check: every input signature passes the
/// named membership test (after the witness transform, if any).
struct ClassVerdict {
    VerdictLabel label;
    std::optional<HolantStarWitness> star;
    std::vector<std::string> certificates;  ///< one line per input signature

    bool tractable() const { return label != VerdictLabel::SharpPHard; }
};

std::string label_name(const ClassVerdict& v);

/// Tractability for all-unary-augmented Holant on the non-decomposable
/// factors of F: arity <= 2 everywhere, an orthogonal transform into the
/// product family, or one of the two fixed Z transforms into the product
/// or matching family.  The orthogonal candidate is recovered exactly in
/// Q(z8) from a two-term decomposition; candidates whose data falls
/// outside the ring report absent.
std::optional<HolantStarWitness> holant_star_tractable(const std::vector<Signature>& fs);

/// Even-occurrence counting-CSP dichotomy: first containment among the
/// product, affine, alpha-affine and local-affine families, else hard.
ClassVerdict classify_csp2c(const std::vector<Signature>& fs);

/// Real-valued Holant-with-pinning dichotomy: tractable iff the set is
/// tractable for the unary-augmented problem or for the even-occurrence
/// CSP.  Throws NotRealValued when some value is not real.
ClassVerdict classify_holant_c(const std::vector<Signature>& fs);

}  // namespace holant
