#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "holant/signature.hpp"

namespace holant {

/// Presentation of an affine support as x_i = sum_j A[i][j] x_{f_j} + b_i
/// (mod 2), where f_0 < f_1 < ... < f_{r-1} are the free variables chosen
/// with lowest-index pivot preference.
///
/// Row masks are little-endian over free-variable slots: bit j of
/// `a_row[i]` is the coefficient of free variable slot j in variable i.
struct AffineSupport {
    int n = 0;
    int rank = 0;
    std::vector<int> perm;            ///< free variables first, then the rest ascending
    std::vector<std::uint64_t> a_row; ///< one coefficient mask per variable
    std::vector<int> b;               ///< affine shift per variable (0/1)

    std::vector<int> free_vars() const {
        return {perm.begin(), perm.begin() + rank};
    }
    /// The support point whose free-variable values are the bits of `t`
    /// (slot j at bit j), packed as a signature assignment.
    std::uint64_t point(std::uint64_t t) const;
    /// Free-variable values of a support point.
    std::uint64_t free_values(std::uint64_t x) const;
};

/// Verifies that supp(f) is an affine subspace and presents it.
/// Throws EmptySupport for the zero signature, NotAffine otherwise on failure.
AffineSupport affine_support_of(const Signature& f);

struct Bundle {
    std::uint64_t name = 0;  ///< nonzero combination of free-variable slots
    std::vector<int> members;
    std::vector<int> signs;  ///< parallel to members; 0 = "+", 1 = "-"
    bool odd() const { return members.size() % 2 == 1; }
    /// Even bundles split into consistent (even number of "+") and
    /// opposite (odd number of "+") types.
    bool opposite() const;
    int plus_count() const;
};

/// Variables grouped by the linear combination of free variables they
/// equal (up to complement) on the support.  Variables that are constant
/// on the support have the zero combination and are listed separately.
struct BundleTable {
    int rank = 0;
    std::vector<Bundle> bundles;              ///< ordered by first member index
    std::vector<std::pair<int, int>> constants;  ///< (variable, fixed bit)
    int essential_arity() const { return static_cast<int>(bundles.size()); }
    const Bundle* find(std::uint64_t name) const;
};

BundleTable bundles_of(const Signature& f);
BundleTable bundles_of(const Signature& f, const AffineSupport& s);

/// Values of f at the 2^r support points, indexed by packed free-variable
/// assignment (slot j at bit j).
std::vector<Cyc8> compressed_of(const Signature& f);
std::vector<Cyc8> compressed_of(const Signature& f, const AffineSupport& s);

/// Normal form f = lambda * chi_supp * alpha^(sum_S c_S prod_{j in S} x_j)
/// over the free variables, with coefficients in Z_8.  The coefficient of
/// the monomial over slot set S (nonzero mask) is `coeffs.at(S)`; missing
/// masks are zero.  lambda is the value at the lexicographically least
/// support point, so the constant coefficient vanishes.
struct AlphaForm {
    Cyc8 lambda;
    AffineSupport support;
    std::map<std::uint64_t, int> coeffs;

    int coeff(std::uint64_t mask) const {
        auto it = coeffs.find(mask);
        return it == coeffs.end() ? 0 : it->second;
    }
    /// Exponent at a free assignment, mod 8.
    int exponent(std::uint64_t t) const;
    Cyc8 eval(std::uint64_t t) const { return lambda * Cyc8::alpha_pow(exponent(t)); }
};

/// Fits the multilinear Z_8 exponent by Moebius inversion over subsets and
/// re-verifies every support point.  Throws NotUnimodular when some value
/// ratio is not a power of alpha; propagates NotAffine / EmptySupport.
AlphaForm fit_alpha_form(const Signature& f);
AlphaForm fit_alpha_form(const Signature& f, const AffineSupport& s);

/// Essential function: one variable per non-empty bundle (in bundle
/// order), equal to the bundle name on the support, with the compressed
/// values unchanged.
Signature essential_of(const Signature& f);

}  // namespace holant
