#pragma once

#include <vector>

#include "holant/affine.hpp"
#include "holant/grid.hpp"
#include "holant/signature.hpp"

namespace holant {
namespace corpus {

/// (=_n): support {0^n, 1^n}, both values 1.
Signature gen_equality(int n);
/// Delta_0 = [1,0] or Delta_1 = [0,1].
Signature gen_delta(int bit);

/// The arity 2^r - 1 indicator of the subspace whose coordinates run over
/// all nonzero linear combinations of r free bits; variables are indexed
/// by the combination, in lexicographic order.  r in 1..6.
Signature gen_f_chain(int r);

/// The arity-14 signature supported on {w wbar : w in the dual Hamming
/// code}, with value -1 exactly where the three free variables are all 1.
/// Variables: the seven code coordinates, then their complements.
Signature gen_f7_alpha_pm();

/// Replaces variable `var` by three equal copies through an attached
/// (=_4); the three new ports sit at var's position.
Signature triple_variable(const Signature& f, int var);

/// Joins two same-sign variables of one bundle by a self-loop, removing
/// them.  Throws BundleViolation when the pair is not same-sign same-
/// bundle or the bundle would empty.
Signature collate_pair(const Signature& f, int var_a, int var_b);

enum class BundleSign { PlusPlus, PlusMinus };

/// Expands every variable of a signature with singleton bundles into a
/// two-variable bundle of the requested type; variable i becomes ports
/// 2i (the "+" copy) and 2i+1.  Values are inherited through the gadget.
Signature retype(const Signature& f, BundleSign sign);

/// The doubling gadget: two copies of f with each variable pair fed into
/// one (=_4); the result has support {interleaved x,x} with value f(x)^2.
Signature square_doubled(const Signature& f);

struct Figure1Replay {
    Signature derived;   ///< the composed arity-14 gadget signature
    Signature direct;    ///< (++) retype of the essential function of f7^alpha
    bool proportional;   ///< derived == c * direct for some nonzero c
};

/// Builds the nine-edge gadget joining one f7^alpha(+-) with three
/// all-ones rank-2 chain signatures retyped (+-), contracts it, and
/// compares against the directly constructed (++) form.
Figure1Replay replay_figure1();

}  // namespace corpus
}  // namespace holant
