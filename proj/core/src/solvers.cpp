#include "holant/solvers.hpp"

#include <algorithm>
#include <bit>

#include "holant/affine.hpp"
#include "holant/errors.hpp"
#include "holant/factorize.hpp"
#include "holant/families.hpp"
#include "holant/gauss_sum.hpp"
#include "holant/gf2.hpp"

namespace holant {

namespace {

void require_closed(const SignatureGrid& g) {
    validate_grid(g);
    if (!g.dangling.empty()) throw MalformedGrid("solver requires a closed grid");
}

// Joint support constraints of one vertex over the edge variables.
// Ports of one vertex sharing an edge (self-loops) collapse through the
// xor accumulation in add_equation.
void add_support_rows(Gf2System& sys, const AffineSupport& s,
                      const std::vector<int>& port_var) {
    for (int i = 0; i < s.n; ++i) {
        bool is_free = false;
        for (int k = 0; k < s.rank && !is_free; ++k) is_free = (s.perm[k] == i);
        if (is_free) continue;
        std::vector<int> vars;
        vars.push_back(port_var[i]);
        for (int k = 0; k < s.rank; ++k)
            if ((s.a_row[i] >> k) & 1) vars.push_back(port_var[s.perm[k]]);
        sys.add_equation(vars, s.b[i]);
    }
}

}  // namespace

Cyc8 solve_affine_grid(const SignatureGrid& g) {
    require_closed(g);
    GridWiring w = grid_wiring(g);
    const int ne = w.num_edge_vars;
    QuadExponent qe(ne);
    Gf2System sys(ne);

    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        const Signature& f = g.vertices[v];
        if (f.is_zero()) return Cyc8(0);
        if (f.arity() == 0) {
            qe.scale(f.value(0));
            continue;
        }
        AlphaForm form;
        try {
            form = fit_alpha_form(f);
        } catch (const Error&) {
            throw NotInClass("vertex " + std::to_string(v) + " is not in the affine family");
        }
        add_support_rows(sys, form.support, w.port_var[v]);
        qe.scale(form.lambda);
        for (const auto& [mask, c] : form.coeffs) {
            // Collapse repeated edge variables (x^2 = x) before adding.
            std::vector<int> vars;
            for (int k = 0; k < form.support.rank; ++k)
                if ((mask >> k) & 1) vars.push_back(w.port_var[v][form.support.perm[k]]);
            std::vector<int> distinct;
            for (int e : vars)
                if (std::find(distinct.begin(), distinct.end(), e) == distinct.end())
                    distinct.push_back(e);

            if (distinct.size() == 1) {
                if (c % 2 != 0)
                    throw NotInClass("vertex " + std::to_string(v) +
                                     " is not in the affine family");
                qe.add_linear(distinct[0], (c / 2) & 3);
            } else if (distinct.size() == 2) {
                if (c % 4 != 0)
                    throw NotInClass("vertex " + std::to_string(v) +
                                     " is not in the affine family");
                if ((c / 4) % 2 != 0) qe.add_quad(distinct[0], distinct[1]);
            } else {
                if (c != 0)
                    throw NotInClass("vertex " + std::to_string(v) +
                                     " is not in the affine family");
            }
        }
    }
    return gauss_sum_eval(qe, sys);
}

Cyc8 solve_product_grid(const SignatureGrid& g) {
    require_closed(g);
    GridWiring w = grid_wiring(g);
    const int ne = w.num_edge_vars;

    // union-find with parity over edge variables
    std::vector<int> parent(ne), rel(ne, 0);
    std::vector<char> dead(ne, 0);
    for (int i = 0; i < ne; ++i) parent[i] = i;
    auto find = [&](int a) {
        int root = a, par = 0;
        while (parent[root] != root) {
            par ^= rel[root];
            root = parent[root];
        }
        // path compression
        int cur = a, cpar = 0;
        while (parent[cur] != root) {
            int nxt = parent[cur];
            int nrel = rel[cur];
            parent[cur] = root;
            rel[cur] = par ^ cpar;
            cpar ^= nrel;
            cur = nxt;
        }
        return std::pair<int, int>(root, par);
    };
    auto unite = [&](int a, int b, int par) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) {
            if ((pa ^ pb) != par) dead[ra] = 1;
            return;
        }
        parent[rb] = ra;
        rel[rb] = pa ^ pb ^ par;
        dead[ra] |= dead[rb];
    };

    struct EqFactor {
        int var;       // edge variable of its first port
        int base_bit;  // support bit of the first port
        Cyc8 w0, w1;   // values on the two antipodal points
    };
    struct UnaryFactor {
        int var;
        Cyc8 u0, u1;
    };
    std::vector<EqFactor> eqs;
    std::vector<UnaryFactor> unaries;
    Cyc8 acc(1);

    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        const Signature& f = g.vertices[v];
        if (f.is_zero()) return Cyc8(0);
        if (!in_product_type(f))
            throw NotInClass("vertex " + std::to_string(v) + " is not in the product family");
        if (f.arity() == 0) {
            acc *= f.value(0);
            continue;
        }
        for (const TensorFactor& fac : tensor_factorize(f)) {
            if (fac.sig.arity() == 0) {
                acc *= fac.sig.value(0);
                continue;
            }
            std::vector<int> evars(fac.vars.size());
            for (std::size_t j = 0; j < fac.vars.size(); ++j)
                evars[j] = w.port_var[v][fac.vars[j]];
            if (fac.sig.arity() == 1) {
                unaries.push_back({evars[0], fac.sig.value(0), fac.sig.value(1)});
                continue;
            }
            auto it = fac.sig.entries().begin();
            std::uint64_t a = it->first;
            const int m = fac.sig.arity();
            EqFactor ef{evars[0], asn_get(a, m, 0), it->second, std::next(it)->second};
            for (int p = 1; p < m; ++p)
                unite(evars[0], evars[p], ef.base_bit ^ asn_get(a, m, p));
            eqs.push_back(ef);
        }
    }

    // Component sums: two states per live component.
    std::vector<Cyc8> prod0(ne, Cyc8(1)), prod1(ne, Cyc8(1));
    for (const EqFactor& e : eqs) {
        auto [root, par] = find(e.var);
        int idx0 = par ^ e.base_bit;  // which antipodal point state 0 selects
        prod0[root] *= idx0 ? e.w1 : e.w0;
        prod1[root] *= idx0 ? e.w0 : e.w1;
    }
    for (const UnaryFactor& u : unaries) {
        auto [root, par] = find(u.var);
        prod0[root] *= par ? u.u1 : u.u0;
        prod1[root] *= par ? u.u0 : u.u1;
    }
    for (int i = 0; i < ne; ++i) {
        auto [root, par] = find(i);
        if (root != i) continue;
        if (dead[root]) return Cyc8(0);
        acc *= prod0[root] + prod1[root];
    }
    return acc;
}

Cyc8 solve_local_affine_grid(const SignatureGrid& g) {
    require_closed(g);
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        if (g.vertices[v].is_zero()) return Cyc8(0);
        if (!in_local_affine(g.vertices[v]).ok)
            throw NotInClass("vertex " + std::to_string(v) +
                             " is not in the local-affine family");
    }
    GridWiring w = grid_wiring(g);
    Gf2System sys(w.num_edge_vars);
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        const Signature& f = g.vertices[v];
        if (f.arity() == 0) continue;
        add_support_rows(sys, affine_support_of(f), w.port_var[v]);
    }
    auto sol = sys.solve();
    if (!sol) return Cyc8(0);  // no assignment is on every support

    // Twist the endpoints of every 1-edge of the particular solution and
    // insert the compensating binary vertex; by local affineness every
    // twisted vertex is affine.
    SignatureGrid t;
    t.vertices = g.vertices;
    Signature comp(2);
    comp.set(0b00, Cyc8(1));
    comp.set(0b11, Cyc8::alpha_pow(-2));
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto& [a, b] = g.edges[e];
        if (!gf2_get(sol->particular, static_cast<int>(e))) {
            t.edges.push_back({a, b});
            continue;
        }
        t.vertices[a.vertex] = t.vertices[a.vertex].scaled_at_var(a.port, 1);
        t.vertices[b.vertex] = t.vertices[b.vertex].scaled_at_var(b.port, 1);
        int c = t.add_vertex(comp);
        t.edges.push_back({a, Port{c, 0}});
        t.edges.push_back({Port{c, 1}, b});
    }
    return solve_affine_grid(t);
}

std::string method_name(SolveMethod m) {
    switch (m) {
        case SolveMethod::Product: return "product";
        case SolveMethod::Affine: return "affine";
        case SolveMethod::AlphaAffine: return "alpha-affine";
        case SolveMethod::LocalAffine: return "local-affine";
        case SolveMethod::Brute: return "brute";
    }
    return "?";
}

SolveOutcome solve_auto(const SignatureGrid& g, int max_brute_edges, bool force_brute) {
    require_closed(g);
    if (force_brute) return {holant_brute(g, max_brute_edges), SolveMethod::Brute};

    bool all_p = true, all_a = true, all_aa = true, all_l = true;
    for (const Signature& f : g.vertices) {
        if (all_p) all_p = in_product_type(f);
        if (all_a) all_a = in_affine(f);
        if (all_aa) all_aa = in_alpha_affine(f);
        if (all_l) all_l = in_local_affine(f).ok;
    }
    if (all_p) return {solve_product_grid(g), SolveMethod::Product};
    if (all_a) return {solve_affine_grid(g), SolveMethod::Affine};
    if (all_aa) {
        // Undo the diag(1, alpha) twist on every vertex; each edge then
        // needs the compensating binary vertex [1,0,i].
        SignatureGrid t;
        Mat2 undo = mat2_diag(Cyc8(1), Cyc8::alpha_pow(-1));
        for (const Signature& f : g.vertices) t.add_vertex(f.transformed_all(undo));
        Signature comp(2);
        comp.set(0b00, Cyc8(1));
        comp.set(0b11, Cyc8::i());
        for (const auto& [a, b] : g.edges) {
            int c = t.add_vertex(comp);
            t.edges.push_back({a, Port{c, 0}});
            t.edges.push_back({Port{c, 1}, b});
        }
        return {solve_affine_grid(t), SolveMethod::AlphaAffine};
    }
    if (all_l) return {solve_local_affine_grid(g), SolveMethod::LocalAffine};
    return {holant_brute(g, max_brute_edges), SolveMethod::Brute};
}

}  // namespace holant
