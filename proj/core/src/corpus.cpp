#include "holant/corpus.hpp"

#include <bit>
#include <string>

#include "holant/errors.hpp"

namespace holant {
namespace corpus {

namespace {

// Gadget contractions in this module are tree-like and sparse, so they run
// with a generous edge cap independent of the brute-force default.
constexpr int kGadgetCap = 1 << 12;

AffineSupport support_or_violation(const Signature& f) {
    try {
        return affine_support_of(f);
    } catch (const Error& e) {
        throw BundleViolation(std::string("bundle operation needs affine support: ") +
                              e.what());
    }
}

}  // namespace

Signature gen_equality(int n) {
    if (n < 1 || n > kMaxArity) throw Error("equality arity out of range");
    Signature f(n, "eq" + std::to_string(n));
    f.set(0, Cyc8(1));
    f.set(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, Cyc8(1));
    return f;
}

Signature gen_delta(int bit) {
    Signature f(1, bit ? "delta1" : "delta0");
    f.set(bit ? 1 : 0, Cyc8(1));
    return f;
}

Signature gen_f_chain(int r) {
    if (r < 1 || r > 6) throw Error("chain parameter out of range 1..6");
    const int n = (1 << r) - 1;
    Signature f(n, "f" + std::to_string(n));
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << r); ++y) {
        std::uint64_t x = 0;
        for (int i = 0; i < n; ++i)
            if (std::popcount((std::uint64_t(i) + 1) & y) & 1) x = asn_with(x, n, i, 1);
        f.set(x, Cyc8(1));
    }
    return f;
}

Signature gen_f7_alpha_pm() {
    static const int H[3][7] = {
        {0, 0, 0, 1, 1, 1, 1},
        {0, 1, 1, 0, 0, 1, 1},
        {1, 0, 1, 0, 1, 0, 1},
    };
    Signature f(14, "f7a_pm");
    for (int y1 = 0; y1 < 2; ++y1)
        for (int y2 = 0; y2 < 2; ++y2)
            for (int y3 = 0; y3 < 2; ++y3) {
                std::uint64_t x = 0;
                for (int i = 0; i < 7; ++i) {
                    int w = (y1 * H[0][i] + y2 * H[1][i] + y3 * H[2][i]) & 1;
                    if (w) x = asn_with(x, 14, i, 1);
                    if (!w) x = asn_with(x, 14, 7 + i, 1);
                }
                f.set(x, (y1 && y2 && y3) ? Cyc8(-1) : Cyc8(1));
            }
    return f;
}

Signature triple_variable(const Signature& f, int var) {
    if (var < 0 || var >= f.arity()) throw BundleViolation("variable index out of range");
    support_or_violation(f);
    SignatureGrid g;
    int vf = g.add_vertex(f);
    int ve = g.add_vertex(gen_equality(4));
    g.connect(vf, var, ve, 0);
    for (int p = 0; p < var; ++p) g.dangle(vf, p);
    for (int p = 1; p <= 3; ++p) g.dangle(ve, p);
    for (int p = var + 1; p < f.arity(); ++p) g.dangle(vf, p);
    return compose_gadget(g, kGadgetCap);
}

Signature collate_pair(const Signature& f, int var_a, int var_b) {
    if (var_a == var_b || var_a < 0 || var_b < 0 || var_a >= f.arity() ||
        var_b >= f.arity())
        throw BundleViolation("collation needs two distinct variables");
    AffineSupport s = support_or_violation(f);
    if (s.a_row[var_a] == 0 || s.a_row[var_a] != s.a_row[var_b])
        throw BundleViolation("variables belong to different bundles");
    if (s.b[var_a] != s.b[var_b]) throw BundleViolation("variables have opposite signs");
    int members = 0;
    for (int i = 0; i < s.n; ++i)
        if (s.a_row[i] == s.a_row[var_a]) ++members;
    if (members < 3) throw BundleViolation("bundle would become empty");

    SignatureGrid g;
    int vf = g.add_vertex(f);
    g.connect(vf, var_a, vf, var_b);
    for (int p = 0; p < f.arity(); ++p)
        if (p != var_a && p != var_b) g.dangle(vf, p);
    return compose_gadget(g, kGadgetCap);
}

Signature retype(const Signature& f, BundleSign sign) {
    AffineSupport s = support_or_violation(f);
    BundleTable bt = bundles_of(f, s);
    if (!bt.constants.empty() || bt.essential_arity() != f.arity())
        throw BundleViolation("retype needs singleton bundles");

    // distributor: port 0 in, ports 1 and 2 the expanded pair
    Signature dist(3);
    if (sign == BundleSign::PlusPlus) {
        dist.set(0b000, Cyc8(1));
        dist.set(0b111, Cyc8(1));
    } else {
        dist.set(0b001, Cyc8(1));
        dist.set(0b110, Cyc8(1));
    }

    SignatureGrid g;
    int vf = g.add_vertex(f);
    for (int i = 0; i < f.arity(); ++i) {
        int vd = g.add_vertex(dist);
        g.connect(vf, i, vd, 0);
        g.dangle(vd, 1);
        g.dangle(vd, 2);
    }
    return compose_gadget(g, kGadgetCap);
}

Signature square_doubled(const Signature& f) {
    SignatureGrid g;
    int v0 = g.add_vertex(f);
    int v1 = g.add_vertex(f);
    for (int i = 0; i < f.arity(); ++i) {
        int ve = g.add_vertex(gen_equality(4));
        g.connect(v0, i, ve, 0);
        g.connect(v1, i, ve, 1);
        g.dangle(ve, 2);
        g.dangle(ve, 3);
    }
    return compose_gadget(g, kGadgetCap);
}

namespace {

// Lookup of the "+" and "-" ports of each two-member bundle by name.
struct PairPorts {
    int plus = -1;
    int minus = -1;
};

std::map<std::uint64_t, PairPorts> pair_ports(const Signature& f) {
    std::map<std::uint64_t, PairPorts> out;
    for (const Bundle& b : bundles_of(f).bundles) {
        if (b.members.size() != 2) throw Error("expected two-member bundles");
        PairPorts p;
        for (std::size_t j = 0; j < 2; ++j)
            (b.signs[j] == 0 ? p.plus : p.minus) = b.members[j];
        if (p.plus < 0 || p.minus < 0) throw Error("expected a (+-) bundle");
        out.emplace(b.name, p);
    }
    return out;
}

}  // namespace

Figure1Replay replay_figure1() {
    Signature h = gen_f7_alpha_pm();
    Signature g3 = retype(gen_f_chain(2), BundleSign::PlusMinus);

    auto hp = pair_ports(h);
    auto gp = pair_ports(g3);
    // free-slot masks: x1, x2, x3 are 1, 2, 4; sums are xors of those
    const std::uint64_t X1 = 1, X2 = 2, X3 = 4;
    const std::uint64_t U1 = 1, U2 = 2, U12 = 3;

    SignatureGrid grid;
    int vh = grid.add_vertex(h);
    int v1 = grid.add_vertex(g3);
    int v2 = grid.add_vertex(g3);
    int v3 = grid.add_vertex(g3);

    // the nine merges: six bundle identifications, one more "-" pair, one
    // "+" pair and one final "-" pair among the sum bundles
    grid.connect(v1, gp[U1].minus, vh, hp[X1].minus);
    grid.connect(v1, gp[U2].minus, vh, hp[X2 ^ X3].minus);
    grid.connect(v2, gp[U1].minus, vh, hp[X2].minus);
    grid.connect(v2, gp[U2].minus, vh, hp[X1 ^ X3].minus);
    grid.connect(v3, gp[U1].minus, vh, hp[X3].minus);
    grid.connect(v3, gp[U2].minus, vh, hp[X1 ^ X2].minus);
    grid.connect(v1, gp[U12].minus, vh, hp[X1 ^ X2 ^ X3].minus);
    grid.connect(v1, gp[U12].plus, v2, gp[U12].plus);
    grid.connect(v2, gp[U12].minus, v3, gp[U12].minus);

    // external pairs, ordered by the bundle order of h's variables
    struct Partner {
        int vertex;
        std::uint64_t bundle;
    };
    std::map<std::uint64_t, Partner> partner = {
        {X1, {v1, U1}},          {X2, {v2, U1}},
        {X1 ^ X2, {v3, U2}},     {X3, {v3, U1}},
        {X1 ^ X3, {v2, U2}},     {X2 ^ X3, {v1, U2}},
        {X1 ^ X2 ^ X3, {v3, U12}},
    };
    for (const Bundle& b : bundles_of(h).bundles) {
        grid.dangle(vh, hp[b.name].plus);
        const Partner& pr = partner.at(b.name);
        grid.dangle(pr.vertex, gp[pr.bundle].plus);
    }

    Figure1Replay out;
    out.derived = compose_gadget(grid, kGadgetCap);
    out.direct = retype(essential_of(h), BundleSign::PlusPlus);
    out.proportional = out.derived.proportional_to(out.direct).has_value();
    return out;
}

}  // namespace corpus
}  // namespace holant
