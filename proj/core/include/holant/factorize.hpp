#pragma once

#include <vector>

#include "holant/signature.hpp"

namespace holant {

/// One tensor factor together with the original variable indices it
/// covers (ascending).
struct TensorFactor {
    Signature sig;
    std::vector<int> vars;
};

/// Finest factorization of a nonzero signature into non-decomposable
/// factors over disjoint variable blocks.  The product of the factors
/// (arranged on their variable blocks) equals f exactly; any global
/// scalar is folded into the first factor.  A non-decomposable f comes
/// back as a singleton list.
std::vector<TensorFactor> tensor_factorize(const Signature& f);

/// If t is an outer product of unary vectors, returns them (each scaled
/// so its first nonzero coordinate is 1) plus the leading scalar.
struct UnaryProduct {
    Cyc8 scale;
    std::vector<std::array<Cyc8, 2>> unaries;
};
std::optional<UnaryProduct> separate_unary_product(const Signature& t);

}  // namespace holant
