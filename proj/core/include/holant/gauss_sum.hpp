#pragma once

#include <cstdint>
#include <vector>

#include "holant/cyc8.hpp"
#include "holant/gf2.hpp"

namespace holant {

/// A quadratic exponent of i over k Boolean variables together with a
/// scalar prefactor:
///
///     prefactor * i^( c + sum_j l_j x_j + sum_{j<k} 2 q_{jk} x_j x_k )
///
/// with c and the l_j mod 4 and the quadratic coefficients mod 2 (they
/// only ever appear doubled).  This shape is closed under substituting a
/// GF(2) parity for a variable, which is what the evaluator does.
class QuadExponent {
public:
    explicit QuadExponent(int nvars = 0);

    int nvars() const { return n_; }
    const Cyc8& prefactor() const { return pre_; }

    void scale(const Cyc8& c) { pre_ *= c; }
    void add_const(int c) { cst_ = (cst_ + c) & 3; }
    void add_linear(int var, int c) { lin_[var] = (lin_[var] + c) & 3; }
    /// Toggles the doubled quadratic monomial 2 x_j x_k (j != k);
    /// j == k folds to the linear term 2 x_j.
    void add_quad(int j, int k);

    /// Exponent value at a packed point (variable v at bit v), mod 4.
    int exponent_at(const Gf2Vec& x) const;

    /// Substitutes x_j = parity(forms[j]) for every variable, producing an
    /// exponent over the forms' parameter space.  forms[j] is a GF(2)
    /// linear form: parameter mask plus a constant bit.
    struct LinForm {
        Gf2Vec mask;
        bool constant = false;
    };
    QuadExponent substituted(const std::vector<LinForm>& forms, int new_nvars) const;

    /// Sum of prefactor * i^exponent over all k-bit points, by variable
    /// elimination (lowest index first; parity constraints produced along
    /// the way are substituted immediately).
    Cyc8 eliminate_all() const;

private:
    void substitute_var(int var, const LinForm& form);
    void add_parity_times(int c, const LinForm& form);

    int n_ = 0;
    int cst_ = 0;
    Cyc8 pre_ = Cyc8(1);
    std::vector<int> lin_;
    std::vector<Gf2Vec> quad_;       // symmetric adjacency over doubled monomials
    std::vector<char> active_;
};

/// Exact value of  sum over { x : constraints } of  prefactor * i^e(x),
/// computed by parametrizing the solution set and eliminating parameters.
/// An inconsistent system yields 0.
Cyc8 gauss_sum_eval(const QuadExponent& e, const Gf2System& constraints);

}  // namespace holant
