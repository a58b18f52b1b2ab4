#pragma once

#include <string>

#include "holant/grid.hpp"

namespace holant {

/// Polynomial-time Holant for a closed grid of affine-family signatures:
/// one global quadratic exponent of i over the edge variables under the
/// joint support constraints, evaluated as an exact Gauss sum.
/// Throws NotInClass naming the first offending vertex.
Cyc8 solve_affine_grid(const SignatureGrid& g);

/// Polynomial-time Holant for product-family signatures: factorize each
/// vertex, then run union-find with parity over the edge variables; each
/// component contributes a two-term sum.
Cyc8 solve_product_grid(const SignatureGrid& g);

/// Polynomial-time Holant for local-affine signatures: solve the global
/// GF(2) support system; on a particular solution, twist every endpoint of
/// a 1-edge by diag(1, alpha) and insert the compensating binary vertex
/// [1,0,-i], which lands the whole grid in the affine family.
Cyc8 solve_local_affine_grid(const SignatureGrid& g);

enum class SolveMethod { Product, Affine, AlphaAffine, LocalAffine, Brute };
std::string method_name(SolveMethod m);

struct SolveOutcome {
    Cyc8 value;
    SolveMethod method;
};

/// Classifies the grid's signatures and dispatches to the matching
/// polynomial-time solver, falling back to brute force under the edge cap.
SolveOutcome solve_auto(const SignatureGrid& g, int max_brute_edges = kDefaultBruteCap,
                        bool force_brute = false);

}  // namespace holant
