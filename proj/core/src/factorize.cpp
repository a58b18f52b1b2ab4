#include "holant/factorize.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "holant/affine.hpp"
#include "holant/errors.hpp"

namespace holant {

namespace {

// Assignment-bit mask (MSB-first packing) for a set of local variables.
std::uint64_t var_bit(int n, int i) { return std::uint64_t{1} << (n - 1 - i); }

bool is_prime(std::size_t m) {
    if (m < 2) return false;
    for (std::size_t d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

struct SplitTest {
    bool ok = false;
    // When !ok, a pair of support points witnessing the failure; the block
    // must absorb some variable where they differ outside the tried set.
    std::uint64_t wit_a = 0, wit_b = 0;
};

// Tests whether g factors across (B, complement); bmask is over assignment
// bits.  On success the two restrictions (with the least support point
// filling the other side) multiply back to g exactly.
SplitTest try_split(const Signature& g, std::uint64_t bmask) {
    SplitTest res;
    const auto& sup = g.entries();
    const std::uint64_t p0 = sup.begin()->first;

    std::unordered_map<std::uint64_t, std::unordered_set<std::uint64_t>> by_b;
    std::unordered_map<std::uint64_t, std::uint64_t> rep_b;
    std::unordered_set<std::uint64_t> all_r;
    for (const auto& [x, v] : sup) {
        by_b[x & bmask].insert(x & ~bmask);
        rep_b.try_emplace(x & bmask, x);
        all_r.insert(x & ~bmask);
    }
    if (by_b.size() * all_r.size() != sup.size()) {
        // Cartesian failure: some B-pattern misses an R-pattern.
        for (const auto& [pb, rset] : by_b) {
            if (rset.size() == all_r.size()) continue;
            std::uint64_t q = rep_b[pb];
            for (const auto& [x, v] : sup) {
                if (!rset.count(x & ~bmask)) {
                    res.wit_a = x;
                    res.wit_b = q;
                    return res;
                }
            }
        }
        res.wit_a = res.wit_b = p0;  // unreachable
        return res;
    }
    const Cyc8 g0 = sup.begin()->second;
    for (const auto& [x, v] : sup) {
        Cyc8 lhs = v * g0;
        Cyc8 rhs = g.value((x & bmask) | (p0 & ~bmask)) * g.value((p0 & bmask) | (x & ~bmask));
        if (lhs != rhs) {
            // Value-coupling failure relative to the base point.
            res.wit_a = x;
            res.wit_b = p0;
            return res;
        }
    }
    res.ok = true;
    return res;
}

// Units are disjoint variable groups known to refine the factor blocks
// (single variables in general; support components when the support is
// affine).  Finds the minimal successful union containing unit 0 by
// breadth-first growth, branching on witness variables.
std::uint64_t grow_block(const Signature& g, const std::vector<std::uint64_t>& unit_mask) {
    const std::size_t m = unit_mask.size();
    const std::uint64_t full = (m == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
    std::set<std::pair<int, std::uint64_t>> frontier;
    std::unordered_set<std::uint64_t> seen;
    frontier.insert({1, 1});
    seen.insert(1);
    std::size_t budget = 200000;
    while (!frontier.empty()) {
        auto [sz, units] = *frontier.begin();
        frontier.erase(frontier.begin());
        std::uint64_t bmask = 0;
        for (std::size_t u = 0; u < m; ++u)
            if ((units >> u) & 1) bmask |= unit_mask[u];
        SplitTest t = try_split(g, bmask);
        if (t.ok) return units;
        std::uint64_t diff = (t.wit_a ^ t.wit_b) & ~bmask;
        for (std::size_t u = 0; u < m; ++u) {
            if ((units >> u) & 1) continue;
            if ((unit_mask[u] & diff) == 0) continue;
            std::uint64_t next = units | (std::uint64_t{1} << u);
            if (seen.insert(next).second) frontier.insert({sz + 1, next});
        }
        if (seen.size() > budget)
            throw TooLarge("tensor factorization search exceeded its state budget");
    }
    return full;  // the full split always succeeds; defensive
}

// Support components when the support is affine: connected components of
// variables linked through the reduced-basis vectors of the translated
// support.  These are exactly the finest box partition of the support.
std::optional<std::vector<std::uint64_t>> affine_units(const Signature& g) {
    AffineSupport s;
    try {
        s = affine_support_of(g);
    } catch (const NotAffine&) {
        return std::nullopt;
    }
    const int n = g.arity();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (int k = 0; k < s.rank; ++k) {
        int first = -1;
        for (int i = 0; i < n; ++i) {
            if (!((s.a_row[i] >> k) & 1)) continue;
            if (first < 0)
                first = i;
            else
                parent[find(i)] = find(first);
        }
    }
    std::unordered_map<int, std::uint64_t> comp;
    std::vector<int> order;
    for (int i = 0; i < n; ++i) {
        int root = find(i);
        if (!comp.count(root)) order.push_back(root);
        comp[root] |= var_bit(n, i);
    }
    std::vector<std::uint64_t> units;
    units.reserve(order.size());
    for (int root : order) units.push_back(comp[root]);
    return units;
}

Signature restrict_to(const Signature& g, std::uint64_t bmask, const std::vector<int>& keep,
                      const Cyc8& divide_by) {
    const int n = g.arity();
    const std::uint64_t p0 = g.entries().begin()->first;
    Signature out(static_cast<int>(keep.size()));
    std::unordered_set<std::uint64_t> done;
    for (const auto& [x, v] : g.entries()) {
        std::uint64_t fill = (x & bmask) | (p0 & ~bmask);
        if (!done.insert(fill).second) continue;
        std::uint64_t y = 0;
        for (std::size_t j = 0; j < keep.size(); ++j)
            if (asn_get(fill, n, keep[j])) y = asn_with(y, static_cast<int>(keep.size()),
                                                        static_cast<int>(j), 1);
        Cyc8 val = g.value(fill) / divide_by;
        if (!val.is_zero()) out.set(y, val);
    }
    return out;
}

}  // namespace

std::optional<UnaryProduct> separate_unary_product(const Signature& t) {
    if (t.is_zero()) return std::nullopt;
    UnaryProduct out;
    Signature g = t;
    while (g.arity() > 0) {
        Signature s0 = g.pin(0, 0), s1 = g.pin(0, 1);
        std::array<Cyc8, 2> u;
        if (s0.is_zero()) {
            u = {Cyc8(0), Cyc8(1)};
            g = std::move(s1);
        } else if (s1.is_zero()) {
            u = {Cyc8(1), Cyc8(0)};
            g = std::move(s0);
        } else {
            auto c = s1.proportional_to(s0);
            if (!c) return std::nullopt;
            u = {Cyc8(1), *c};
            g = std::move(s0);
        }
        out.unaries.push_back(u);
    }
    out.scale = g.value(0);
    return out;
}

std::vector<TensorFactor> tensor_factorize(const Signature& f) {
    if (f.is_zero()) throw EmptySupport();
    std::vector<TensorFactor> factors;
    Cyc8 scalar(1);

    std::vector<std::pair<Signature, std::vector<int>>> work;
    {
        std::vector<int> vars(f.arity());
        for (int i = 0; i < f.arity(); ++i) vars[i] = i;
        work.emplace_back(f, std::move(vars));
    }

    while (!work.empty()) {
        auto [g, vars] = std::move(work.back());
        work.pop_back();

        if (g.arity() == 0) {
            scalar *= g.value(0);
            continue;
        }

        // Peel unary factors (variables that separate alone).
        bool peeled = true;
        while (peeled && g.arity() > 1) {
            peeled = false;
            for (int i = 0; i < g.arity(); ++i) {
                Signature s0 = g.pin(i, 0), s1 = g.pin(i, 1);
                Signature unary(1);
                if (s0.is_zero()) {
                    unary.set(1, Cyc8(1));
                    g = std::move(s1);
                } else if (s1.is_zero()) {
                    unary.set(0, Cyc8(1));
                    g = std::move(s0);
                } else {
                    auto c = s1.proportional_to(s0);
                    if (!c) continue;
                    unary.set(0, Cyc8(1));
                    unary.set(1, *c);
                    g = std::move(s0);
                }
                factors.push_back({std::move(unary), {vars[i]}});
                vars.erase(vars.begin() + i);
                peeled = true;
                break;
            }
        }
        if (g.arity() <= 1) {
            if (g.arity() == 0)
                scalar *= g.value(0);
            else
                factors.push_back({std::move(g), std::move(vars)});
            continue;
        }
        if (is_prime(g.support_size())) {  // no box split can exist
            factors.push_back({std::move(g), std::move(vars)});
            continue;
        }

        std::vector<std::uint64_t> units;
        if (auto au = affine_units(g)) {
            units = std::move(*au);
        } else {
            units.resize(g.arity());
            for (int i = 0; i < g.arity(); ++i) units[i] = var_bit(g.arity(), i);
        }
        if (units.size() == 1) {
            factors.push_back({std::move(g), std::move(vars)});
            continue;
        }

        std::uint64_t block_units = grow_block(g, units);
        std::uint64_t full = (units.size() == 64)
                                 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << units.size()) - 1;
        if (block_units == full) {
            factors.push_back({std::move(g), std::move(vars)});
            continue;
        }

        std::uint64_t bmask = 0;
        for (std::size_t u = 0; u < units.size(); ++u)
            if ((block_units >> u) & 1) bmask |= units[u];
        std::vector<int> in_b, in_r, vars_b, vars_r;
        for (int i = 0; i < g.arity(); ++i) {
            if (bmask & var_bit(g.arity(), i)) {
                in_b.push_back(i);
                vars_b.push_back(vars[i]);
            } else {
                in_r.push_back(i);
                vars_r.push_back(vars[i]);
            }
        }
        Signature gb = restrict_to(g, bmask, in_b, Cyc8(1));
        Signature gr = restrict_to(g, ~bmask, in_r, g.entries().begin()->second);
        factors.push_back({std::move(gb), std::move(vars_b)});  // minimal, non-decomposable
        work.emplace_back(std::move(gr), std::move(vars_r));
    }

    std::sort(factors.begin(), factors.end(),
              [](const TensorFactor& a, const TensorFactor& b) { return a.vars < b.vars; });
    if (factors.empty()) {
        Signature s0(0);
        s0.set(0, scalar);
        factors.push_back({std::move(s0), {}});
    } else if (!(scalar == Cyc8(1))) {
        factors.front().sig = factors.front().sig.scaled(scalar);
    }
    return factors;
}

}  // namespace holant
