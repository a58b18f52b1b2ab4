#include <doctest.h>

#include "holant/corpus.hpp"
#include "holant/signature.hpp"
#include "test_support.hpp"

using namespace holant;

TEST_CASE("support basics") {
    Signature d0 = corpus::gen_delta(0);
    CHECK(d0.support() == std::vector<std::uint64_t>{0});
    Signature eq4 = corpus::gen_equality(4);
    CHECK(eq4.support() == std::vector<std::uint64_t>{0b0000, 0b1111});
    Signature f7a = corpus::gen_f7_alpha_pm();
    CHECK(f7a.arity() == 14);
    CHECK(f7a.support_size() == 8);
}

TEST_CASE("pin") {
    Signature eq2 = corpus::gen_equality(2);
    Signature p = eq2.pin(0, 1);
    CHECK(p.arity() == 1);
    CHECK(p.value(1) == Cyc8(1));
    CHECK(p.value(0) == Cyc8(0));

    // pinning delta0 to 1 leaves the zero arity-0 signature
    Signature z = corpus::gen_delta(0).pin(0, 1);
    CHECK(z.arity() == 0);
    CHECK(z.is_zero());

    // middle-variable pin keeps surrounding variable order
    Signature f(3);
    f.set(0b011, Cyc8(5));
    f.set(0b111, Cyc8(7));
    Signature q = f.pin(1, 1);
    CHECK(q.value(0b01) == Cyc8(5));
    CHECK(q.value(0b11) == Cyc8(7));
}

TEST_CASE("transforms") {
    testsup::Rng rng(11);
    Signature f = testsup::random_sparse_signature(rng, 4, 6);
    SUBCASE("identity is a no-op") {
        CHECK(f.transformed_all(mat2_identity()) == f);
    }
    SUBCASE("diagonal scales the weight-1 entry") {
        Signature u(1);
        u.set(0, Cyc8(1));
        u.set(1, Cyc8(1));
        Signature t = u.transformed_all(mat2_diag(Cyc8(1), Cyc8::alpha()));
        CHECK(t.value(0) == Cyc8(1));
        CHECK(t.value(1) == Cyc8::alpha());
    }
    SUBCASE("transform then inverse returns the original") {
        for (int it = 0; it < 25; ++it) {
            Mat2 m;
            do {
                m[0][0] = testsup::random_cyc8(rng);
                m[0][1] = testsup::random_cyc8(rng);
                m[1][0] = testsup::random_cyc8(rng);
                m[1][1] = testsup::random_cyc8(rng);
            } while ((m[0][0] * m[1][1] - m[0][1] * m[1][0]).is_zero());
            Signature g = testsup::random_sparse_signature(rng, 3, 5);
            CHECK(g.transformed_all(m).transformed_all(mat2_inverse(m)) == g);
        }
    }
}

TEST_CASE("proportionality") {
    testsup::Rng rng(5);
    Signature g = testsup::random_sparse_signature(rng, 5, 8);
    Cyc8 c = Cyc8(2) * Cyc8::i();
    auto r = g.scaled(c).proportional_to(g);
    REQUIRE(r.has_value());
    CHECK(*r == c);
    CHECK(g.proportional_to(g).has_value());

    Signature eq2 = corpus::gen_equality(2);
    Signature other(2);
    other.set(0b00, Cyc8(1));
    CHECK_FALSE(eq2.proportional_to(other).has_value());  // supports differ
}

TEST_CASE("permutation round-trip") {
    testsup::Rng rng(17);
    for (int it = 0; it < 30; ++it) {
        Signature f = testsup::random_sparse_signature(rng, 6, 10);
        std::vector<int> perm = {3, 0, 5, 1, 4, 2};
        std::vector<int> inv(6);
        for (int i = 0; i < 6; ++i) inv[perm[i]] = i;
        CHECK(f.permuted(perm).permuted(inv) == f);
    }
}

TEST_CASE("symmetric shorthand") {
    Signature eq3 = Signature::from_symmetric({Cyc8(1), Cyc8(0), Cyc8(0), Cyc8(1)});
    CHECK(eq3 == corpus::gen_equality(3).with_name(""));
    Signature neq = Signature::from_symmetric({Cyc8(0), Cyc8(1), Cyc8(0)});
    CHECK(neq.support() == std::vector<std::uint64_t>{0b01, 0b10});
}
