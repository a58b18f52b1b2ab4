#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holant/signature.hpp"

namespace holant {

/// Product type: every non-decomposable tensor factor is unary or a
/// generalized equality (support contained in an antipodal pair).
bool in_product_type(const Signature& f);

/// Affine: affine support and compressed values lambda * i^(L + 2Q), i.e.
/// the alpha-exponent has even linear coefficients, quadratic coefficients
/// divisible by 4 and nothing of degree 3 or higher.
bool in_affine(const Signature& f);

/// Image of the affine family under diag(1, alpha) on every variable.
bool in_alpha_affine(const Signature& f);

/// Matching type: support contained in Hamming weight <= 1.
bool in_matching_type(const Signature& f);

/// Local affine, tested literally: for every support point sigma, the
/// entrywise multiplication by alpha^(sigma . x) lands in the affine
/// family.  The identically zero signature qualifies.
bool in_local_affine_def(const Signature& f);

/// Result of the structural local-affine test; `equation` names the first
/// failing condition when ok == false.
struct LocalAffineCheck {
    bool ok = false;
    std::string equation;
};

/// Local affine, tested through the normal form and the mod-2 equation
/// system on (A, b): the squared signature must be affine with the cubic
/// part homogeneous, all column products of A of degree 1..4 must vanish,
/// and the b-weighted products of degree 1..3 must match the reduced
/// exponent coefficients.
LocalAffineCheck in_local_affine(const Signature& f);

/// f = w1 * u_1 x ... x u_n + w2 * v_1 x ... x v_n with u_i, v_i
/// non-parallel.  Unaries are scaled to leading coefficient 1.
struct TwoTermDecomposition {
    Cyc8 w1, w2;
    std::vector<std::array<Cyc8, 2>> u, v;
};

/// Extracts the rank-2 structure of a non-decomposable signature of arity
/// >= 3 when it exists over Q(z8); absent otherwise (including when the
/// pencil roots live outside the field).
std::optional<TwoTermDecomposition> two_term_decompose(const Signature& f);

}  // namespace holant
