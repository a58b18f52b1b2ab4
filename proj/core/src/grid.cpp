#include "holant/grid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "holant/errors.hpp"

namespace holant {

namespace {

std::string port_str(const Port& p) {
    return std::to_string(p.vertex) + "." + std::to_string(p.port);
}

}  // namespace

void validate_grid(const SignatureGrid& g) {
    std::vector<std::vector<int>> seen(g.vertices.size());
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        seen[v].assign(g.vertices[v].arity(), 0);
    auto touch = [&](const Port& p) {
        if (p.vertex < 0 || p.vertex >= static_cast<int>(g.vertices.size()))
            throw MalformedGrid("port " + port_str(p) + ": vertex out of range");
        if (p.port < 0 || p.port >= g.vertices[p.vertex].arity())
            throw MalformedGrid("port " + port_str(p) + ": port index out of range");
        if (++seen[p.vertex][p.port] > 1)
            throw MalformedGrid("port " + port_str(p) + " used more than once");
    };
    for (const auto& [a, b] : g.edges) {
        if (a == b) throw MalformedGrid("edge joins port " + port_str(a) + " to itself");
        touch(a);
        touch(b);
    }
    for (const Port& p : g.dangling) touch(p);
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        for (int p = 0; p < g.vertices[v].arity(); ++p)
            if (seen[v][p] == 0)
                throw MalformedGrid("port " + port_str(Port{static_cast<int>(v), p}) +
                                    " is not covered by any edge or dangling entry");
}

GridWiring grid_wiring(const SignatureGrid& g) {
    GridWiring w;
    w.port_var.resize(g.vertices.size());
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        w.port_var[v].assign(g.vertices[v].arity(), -1);
    int next = 0;
    for (const auto& [a, b] : g.edges) {
        w.port_var[a.vertex][a.port] = next;
        w.port_var[b.vertex][b.port] = next;
        ++next;
    }
    w.num_edge_vars = next;
    for (const Port& p : g.dangling) w.port_var[p.vertex][p.port] = next++;
    w.num_dangling = static_cast<int>(g.dangling.size());
    return w;
}

namespace {

struct Contractor {
    const SignatureGrid& grid;
    const GridWiring& wiring;
    std::vector<int> order;          // vertices, sparsest support first
    std::vector<signed char> value;  // per variable: -1 unassigned, else 0/1
    Signature result;                // accumulates dangling-keyed sums

    void dfs(std::size_t k, const Cyc8& partial) {
        if (k == order.size()) {
            std::uint64_t key = 0;
            int nd = static_cast<int>(grid.dangling.size());
            for (int d = 0; d < nd; ++d) {
                const Port& p = grid.dangling[d];
                if (value[wiring.port_var[p.vertex][p.port]] == 1)
                    key = asn_with(key, nd, d, 1);
            }
            result.set(key, result.value(key) + partial);
            return;
        }
        int v = order[k];
        const Signature& f = grid.vertices[v];
        const auto& pv = wiring.port_var[v];
        if (f.arity() == 0) {
            dfs(k + 1, partial * f.value(0));
            return;
        }
        for (const auto& [x, val] : f.entries()) {
            std::vector<std::pair<int, signed char>> assigned;
            bool ok = true;
            for (int p = 0; p < f.arity() && ok; ++p) {
                int var = pv[p];
                signed char bit = static_cast<signed char>(asn_get(x, f.arity(), p));
                if (value[var] < 0) {
                    value[var] = bit;
                    assigned.push_back({var, bit});
                } else if (value[var] != bit) {
                    ok = false;
                }
            }
            if (ok) dfs(k + 1, partial * val);
            for (auto& [var, bit] : assigned) value[var] = -1;
        }
    }
};

Signature contract(const SignatureGrid& g, int max_edges) {
    validate_grid(g);
    if (static_cast<int>(g.edges.size()) > max_edges)
        throw TooLarge("grid has " + std::to_string(g.edges.size()) +
                       " edges, above the brute-force cap of " + std::to_string(max_edges));
    GridWiring w = grid_wiring(g);

    Contractor c{g, w, {}, {}, Signature(static_cast<int>(g.dangling.size()))};
    c.order.resize(g.vertices.size());
    std::iota(c.order.begin(), c.order.end(), 0);
    std::stable_sort(c.order.begin(), c.order.end(), [&](int a, int b) {
        return g.vertices[a].support_size() < g.vertices[b].support_size();
    });
    c.value.assign(w.num_edge_vars + w.num_dangling, -1);
    c.dfs(0, Cyc8(1));
    return c.result;
}

}  // namespace

Cyc8 holant_brute(const SignatureGrid& g, int max_edges) {
    if (!g.dangling.empty())
        throw MalformedGrid("holant of a grid with dangling ports; compose it instead");
    return contract(g, max_edges).value(0);
}

Signature compose_gadget(const SignatureGrid& g, int max_edges) {
    return contract(g, max_edges);
}

}  // namespace holant
