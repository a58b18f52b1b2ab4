#include "holant/gauss_sum.hpp"

#include <bit>

namespace holant {

namespace {

std::vector<int> bits_of(const Gf2Vec& v) {
    std::vector<int> out;
    for (std::size_t w = 0; w < v.size(); ++w) {
        std::uint64_t word = v[w];
        while (word) {
            int b = std::countr_zero(word);
            out.push_back(static_cast<int>(w * 64 + b));
            word &= word - 1;
        }
    }
    return out;
}

}  // namespace

QuadExponent::QuadExponent(int nvars)
    : n_(nvars), lin_(nvars, 0), quad_(nvars, gf2_zero(nvars)), active_(nvars, 1) {}

void QuadExponent::add_quad(int j, int k) {
    if (j == k) {
        add_linear(j, 2);
        return;
    }
    gf2_flip(quad_[j], k);
    gf2_flip(quad_[k], j);
}

int QuadExponent::exponent_at(const Gf2Vec& x) const {
    int e = cst_;
    for (int j = 0; j < n_; ++j) {
        if (!gf2_get(x, j)) continue;
        e += lin_[j];
        for (int k : bits_of(quad_[j]))
            if (k > j && gf2_get(x, k)) e += 2;
    }
    return e & 3;
}

void QuadExponent::add_parity_times(int c, const LinForm& form) {
    // c * parity(eps + sum t_a)  ==  c*eps + (c + 2*c*eps) * sum t_a
    //                               + 2*c * sum_{a<b} t_a t_b   (mod 4)
    c &= 3;
    if (c == 0) return;
    int eps = form.constant ? 1 : 0;
    add_const(c * eps);
    std::vector<int> vars = bits_of(form.mask);
    int lin_c = (c + 2 * c * eps) & 3;
    for (int a : vars) add_linear(a, lin_c);
    if (c & 1)
        for (std::size_t i = 0; i < vars.size(); ++i)
            for (std::size_t j = i + 1; j < vars.size(); ++j) add_quad(vars[i], vars[j]);
}

QuadExponent QuadExponent::substituted(const std::vector<LinForm>& forms,
                                       int new_nvars) const {
    QuadExponent out(new_nvars);
    out.pre_ = pre_;
    out.cst_ = cst_;
    for (int j = 0; j < n_; ++j)
        if (lin_[j]) out.add_parity_times(lin_[j], forms[j]);
    for (int j = 0; j < n_; ++j) {
        for (int k : bits_of(quad_[j])) {
            if (k <= j) continue;
            // 2 * m_j * m_k expanded over the two forms (mod 4)
            const LinForm& fj = forms[j];
            const LinForm& fk = forms[k];
            if (fj.constant && fk.constant) out.add_const(2);
            std::vector<int> tj = bits_of(fj.mask), tk = bits_of(fk.mask);
            if (fj.constant)
                for (int b : tk) out.add_linear(b, 2);
            if (fk.constant)
                for (int a : tj) out.add_linear(a, 2);
            for (int a : tj)
                for (int b : tk) out.add_quad(a, b);  // a == b folds to 2*t_a
        }
    }
    return out;
}

void QuadExponent::substitute_var(int var, const LinForm& form) {
    int c = lin_[var];
    lin_[var] = 0;
    std::vector<int> partners = bits_of(quad_[var]);
    for (int b : partners) {
        gf2_flip(quad_[var], b);
        gf2_flip(quad_[b], var);
    }
    active_[var] = 0;
    if (c) add_parity_times(c, form);
    for (int b : partners) {
        // 2 * parity(form) * t_b
        if (form.constant) add_linear(b, 2);
        for (int a : bits_of(form.mask)) add_quad(a, b);
    }
}

Cyc8 QuadExponent::eliminate_all() const {
    QuadExponent w = *this;
    Cyc8 acc = w.pre_;
    for (int v = 0; v < w.n_; ++v) {
        if (!w.active_[v]) continue;
        int c = w.lin_[v] & 3;
        std::vector<int> partners = bits_of(w.quad_[v]);
        // detach v
        w.lin_[v] = 0;
        for (int b : partners) {
            gf2_flip(w.quad_[v], b);
            gf2_flip(w.quad_[b], v);
        }
        w.active_[v] = 0;

        if (c % 2 == 0) {
            bool eps = (c == 2);
            if (partners.empty()) {
                if (eps) return Cyc8(0);
                acc *= Cyc8(2);
                continue;
            }
            // factor 2 with the parity constraint sum(partners) = eps;
            // substitute it into the lowest partner
            acc *= Cyc8(2);
            int a = partners.front();
            LinForm form;
            form.mask = gf2_zero(w.n_);
            for (std::size_t i = 1; i < partners.size(); ++i)
                gf2_flip(form.mask, partners[i]);
            form.constant = eps;
            w.substitute_var(a, form);
        } else {
            // sum over v gives sqrt(2) * alpha^{+-1} and a residual linear
            // term on the exponent of i
            int k;
            if (c == 1) {
                acc *= Cyc8::sqrt2() * Cyc8::alpha();
                k = 3;
            } else {
                acc *= Cyc8::sqrt2() * Cyc8::alpha_pow(7);
                k = 1;
            }
            if (!partners.empty()) {
                LinForm form;
                form.mask = gf2_zero(w.n_);
                for (int b : partners) gf2_flip(form.mask, b);
                form.constant = false;
                w.add_parity_times(k, form);
            }
        }
    }
    return acc * Cyc8::alpha_pow(2 * w.cst_);
}

Cyc8 gauss_sum_eval(const QuadExponent& e, const Gf2System& constraints) {
    auto sol = constraints.solve();
    if (!sol) return Cyc8(0);
    const int p = static_cast<int>(sol->basis.size());
    std::vector<QuadExponent::LinForm> forms(e.nvars());
    for (int j = 0; j < e.nvars(); ++j) {
        forms[j].mask = gf2_zero(p);
        for (int l = 0; l < p; ++l)
            if (gf2_get(sol->basis[l], j)) gf2_flip(forms[j].mask, l);
        forms[j].constant = gf2_get(sol->particular, j);
    }
    return e.substituted(forms, p).eliminate_all();
}

}  // namespace holant
