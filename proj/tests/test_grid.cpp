#include <doctest.h>

#include "holant/corpus.hpp"
#include "holant/errors.hpp"
#include "holant/grid.hpp"
#include "test_support.hpp"

using namespace holant;
using namespace holant::corpus;

TEST_CASE("grid validation") {
    SUBCASE("a two-vertex two-edge cycle is valid") {
        SignatureGrid g;
        int a = g.add_vertex(gen_equality(2));
        int b = g.add_vertex(gen_equality(2));
        g.connect(a, 0, b, 0);
        g.connect(a, 1, b, 1);
        CHECK_NOTHROW(validate_grid(g));
    }
    SUBCASE("a port used twice is malformed") {
        SignatureGrid g;
        int a = g.add_vertex(gen_equality(2));
        int b = g.add_vertex(gen_equality(2));
        g.connect(a, 0, b, 0);
        g.connect(a, 0, b, 1);
        CHECK_THROWS_AS(validate_grid(g), MalformedGrid);
    }
    SUBCASE("a dangling port out of range is malformed") {
        SignatureGrid g;
        int a = g.add_vertex(gen_equality(2));
        g.connect(a, 0, a, 1);
        g.dangle(a, 7);
        CHECK_THROWS_AS(validate_grid(g), MalformedGrid);
    }
    SUBCASE("an uncovered port is malformed") {
        SignatureGrid g;
        g.add_vertex(gen_equality(2));
        CHECK_THROWS_AS(validate_grid(g), MalformedGrid);
    }
}

TEST_CASE("brute-force holant values") {
    SUBCASE("two equalities joined by four parallel edges") {
        SignatureGrid g;
        int a = g.add_vertex(gen_equality(4));
        int b = g.add_vertex(gen_equality(4));
        for (int p = 0; p < 4; ++p) g.connect(a, p, b, p);
        CHECK(holant_brute(g) == Cyc8(2));
    }
    SUBCASE("pinned path") {
        SignatureGrid g;
        int d1 = g.add_vertex(gen_delta(1));
        int e = g.add_vertex(gen_equality(2));
        int d2 = g.add_vertex(gen_delta(1));
        g.connect(d1, 0, e, 0);
        g.connect(e, 1, d2, 0);
        CHECK(holant_brute(g) == Cyc8(1));
    }
    SUBCASE("edge cap is enforced") {
        SignatureGrid g;
        int a = g.add_vertex(gen_equality(4));
        int b = g.add_vertex(gen_equality(4));
        for (int p = 0; p < 4; ++p) g.connect(a, p, b, p);
        CHECK_THROWS_AS(holant_brute(g, 3), TooLarge);
    }
    SUBCASE("self-loops") {
        SignatureGrid h;
        int b = h.add_vertex(gen_equality(2));
        h.connect(b, 0, b, 0);
        CHECK_THROWS_AS(holant_brute(h), MalformedGrid);  // edge joins a port to itself
        SignatureGrid k;
        int c = k.add_vertex(gen_equality(2));
        k.connect(c, 0, c, 1);
        CHECK(holant_brute(k) == Cyc8(2));  // proper self-loop traces the equality
    }
    SUBCASE("grids with dangling ports cannot be evaluated directly") {
        SignatureGrid g;
        int a = g.add_vertex(gen_equality(2));
        g.dangle(a, 0);
        g.dangle(a, 1);
        CHECK_THROWS_AS(holant_brute(g), MalformedGrid);
    }
}

TEST_CASE("gadget composition") {
    SUBCASE("equality with a self-loop becomes binary equality") {
        SignatureGrid g;
        int a = g.add_vertex(gen_equality(4));
        g.connect(a, 0, a, 1);
        g.dangle(a, 2);
        g.dangle(a, 3);
        Signature s = compose_gadget(g);
        CHECK(s == gen_equality(2).with_name(""));
    }
    SUBCASE("pinning one port of equality") {
        SignatureGrid g;
        int a = g.add_vertex(gen_equality(4));
        int d = g.add_vertex(gen_delta(1));
        g.connect(a, 0, d, 0);
        for (int p = 1; p < 4; ++p) g.dangle(a, p);
        Signature s = compose_gadget(g);
        CHECK(s.support() == std::vector<std::uint64_t>{0b111});
        CHECK(s.value(0b111) == Cyc8(1));
    }
    SUBCASE("closing the code signature with delta0 everywhere gives 1") {
        SignatureGrid g;
        int h = g.add_vertex(gen_f7_alpha_pm());
        for (int p = 0; p < 14; ++p) {
            int d = g.add_vertex(gen_delta(0));
            g.connect(h, p, d, 0);
        }
        // only the all-zero first half survives, i.e. the w = 0 codeword
        // has its complement half all ones, so the value is 0 here
        CHECK(holant_brute(g) == Cyc8(0));
    }
}

TEST_CASE("holographic invariance on an edge") {
    testsup::Rng rng(2222);
    for (int it = 0; it < 20; ++it) {
        std::vector<Signature> pool = {gen_equality(2), gen_equality(3), gen_delta(1)};
        SignatureGrid g = testsup::random_closed_grid(rng, pool, 6);
        Cyc8 base = holant_brute(g, 32);

        Mat2 m;
        do {
            m[0][0] = testsup::random_cyc8(rng);
            m[0][1] = testsup::random_cyc8(rng);
            m[1][0] = testsup::random_cyc8(rng);
            m[1][1] = testsup::random_cyc8(rng);
        } while ((m[0][0] * m[1][1] - m[0][1] * m[1][0]).is_zero());
        Mat2 mi = mat2_inverse(m);
        Signature ms(2), mis(2);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                std::uint64_t x = static_cast<std::uint64_t>((r << 1) | c);
                ms.set(x, m[r][c]);
                mis.set(x, mi[r][c]);
            }

        SignatureGrid h = g;
        auto [a, b] = h.edges.back();
        h.edges.pop_back();
        int vm = h.add_vertex(ms);
        int vi = h.add_vertex(mis);
        h.connect(a.vertex, a.port, vm, 0);
        h.connect(vm, 1, vi, 0);
        h.connect(vi, 1, b.vertex, b.port);
        CHECK(holant_brute(h, 34) == base);
    }
}

TEST_CASE("composition associativity") {
    // contract a sub-gadget, substitute it back, compare
    SignatureGrid sub;
    int e4 = sub.add_vertex(gen_equality(4));
    int d1 = sub.add_vertex(gen_delta(1));
    sub.connect(e4, 3, d1, 0);
    sub.dangle(e4, 0);
    sub.dangle(e4, 1);
    sub.dangle(e4, 2);
    Signature derived = compose_gadget(sub);

    SignatureGrid whole;
    int a = whole.add_vertex(gen_equality(4));
    int d = whole.add_vertex(gen_delta(1));
    int b = whole.add_vertex(gen_equality(3));
    whole.connect(a, 3, d, 0);
    whole.connect(a, 0, b, 0);
    whole.connect(a, 1, b, 1);
    whole.connect(a, 2, b, 2);

    SignatureGrid stitched;
    int s = stitched.add_vertex(derived);
    int b2 = stitched.add_vertex(gen_equality(3));
    stitched.connect(s, 0, b2, 0);
    stitched.connect(s, 1, b2, 1);
    stitched.connect(s, 2, b2, 2);

    CHECK(holant_brute(whole) == holant_brute(stitched));
}

TEST_CASE("scalar multiplicativity") {
    SignatureGrid g;
    int a = g.add_vertex(gen_equality(2));
    int b = g.add_vertex(gen_equality(2));
    g.connect(a, 0, b, 0);
    g.connect(a, 1, b, 1);
    Cyc8 base = holant_brute(g);
    Cyc8 c = Cyc8(3) * Cyc8::alpha();
    g.vertices[0] = g.vertices[0].scaled(c);
    CHECK(holant_brute(g) == c * base);
}
