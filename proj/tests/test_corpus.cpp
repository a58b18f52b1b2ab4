#include <doctest.h>

#include "holant/corpus.hpp"
#include "holant/errors.hpp"
#include "holant/families.hpp"
#include "holant/text_io.hpp"
#include "test_support.hpp"

using namespace holant;
using namespace holant::corpus;

TEST_CASE("equality generator") {
    CHECK(gen_equality(1).support() == std::vector<std::uint64_t>{0, 1});
    CHECK(gen_equality(2).support() == std::vector<std::uint64_t>{0b00, 0b11});
    CHECK(in_local_affine_def(gen_equality(4)));
}

TEST_CASE("chain generator") {
    CHECK(gen_f_chain(1) == Signature::from_symmetric({Cyc8(1), Cyc8(1)}));
    Signature f7 = gen_f_chain(3);
    CHECK(f7.arity() == 7);
    CHECK(f7.support_size() == 8);
    for (std::uint64_t x : f7.support())
        if (x != 0) CHECK(std::popcount(x) == 4);
}

TEST_CASE("code-structure facts") {
    Signature f = gen_f7_alpha_pm();
    auto sup = f.support();
    REQUIRE(sup.size() == 8);
    int minus_count = 0;
    for (std::uint64_t x : sup) {
        CHECK(std::popcount(x) == 7);
        if (f.value(x) == Cyc8(-1)) ++minus_count;
        CHECK((f.value(x) == Cyc8(1) || f.value(x) == Cyc8(-1)));
    }
    CHECK(minus_count == 1);
    // any two distinct support points share exactly three common ones
    for (std::size_t i = 0; i < sup.size(); ++i)
        for (std::size_t j = i + 1; j < sup.size(); ++j)
            CHECK(std::popcount(sup[i] & sup[j]) == 3);
}

TEST_CASE("triple") {
    Signature t = triple_variable(gen_delta(1), 0);
    CHECK(t.arity() == 3);
    CHECK(t.support() == std::vector<std::uint64_t>{0b111});
    // tripling a middle variable keeps the surrounding order
    Signature f = gen_equality(2);
    Signature t2 = triple_variable(f, 1);
    CHECK(t2.arity() == 4);
    CHECK(t2.support() == std::vector<std::uint64_t>{0b0000, 0b1111});
}

TEST_CASE("collation") {
    Signature eq4 = gen_equality(4);
    Signature c = collate_pair(eq4, 1, 2);
    CHECK(c == gen_equality(2).with_name(""));
    // removing the pair may not empty the bundle
    CHECK_THROWS_AS(collate_pair(gen_equality(2), 0, 1), BundleViolation);
    // opposite signs are not collatable
    Signature pm = retype(gen_f_chain(1), BundleSign::PlusMinus);
    CHECK_THROWS_AS(collate_pair(pm, 0, 1), BundleViolation);
}

TEST_CASE("retype") {
    SUBCASE("(+-) on the rank-3 alpha-weighted essential function") {
        Signature ess = essential_of(gen_f7_alpha_pm());
        Signature pm = retype(ess, BundleSign::PlusMinus);
        CHECK(pm.arity() == 14);
        BundleTable t = bundles_of(pm);
        CHECK(t.essential_arity() == 7);
        for (const Bundle& b : t.bundles) {
            CHECK(b.members.size() == 2);
            CHECK(b.opposite());
        }
        // the values carry over: one -1, seven +1
        int minus = 0;
        for (const auto& [x, v] : pm.entries()) minus += (v == Cyc8(-1));
        CHECK(minus == 1);
    }
    SUBCASE("(++) on a multi-member bundle is rejected") {
        CHECK_THROWS_AS(retype(gen_equality(2), BundleSign::PlusPlus), BundleViolation);
    }
}

TEST_CASE("square doubling") {
    SUBCASE("[1, alpha] squares to [1,0,0,i]") {
        Signature f(1);
        f.set(0, Cyc8(1));
        f.set(1, Cyc8::alpha());
        Signature s = square_doubled(f);
        CHECK(s.arity() == 2);
        CHECK(s.value(0b00) == Cyc8(1));
        CHECK(s.value(0b11) == Cyc8::i());
        CHECK(s.support_size() == 2);
    }
    SUBCASE("delta0 doubles to the single 00 point") {
        Signature s = square_doubled(gen_delta(0));
        CHECK(s.support() == std::vector<std::uint64_t>{0b00});
        CHECK(s.value(0b00) == Cyc8(1));
    }
    SUBCASE("binary equality doubles to quaternary") {
        CHECK(square_doubled(gen_equality(2)) == gen_equality(4).with_name(""));
    }
    SUBCASE("doubling lands in the affine family whenever the form exists") {
        testsup::Rng rng(321);
        for (int it = 0; it < 50; ++it) {
            int r = testsup::uniform(rng, 0, 3);
            int n = testsup::uniform(rng, std::max(r, 1), 5);
            Signature f = testsup::random_normal_form_signature(rng, r, n);
            CHECK(in_affine(square_doubled(f)));
        }
    }
}

TEST_CASE("figure-1 replay") {
    Figure1Replay r = replay_figure1();
    CHECK(r.proportional);
    CHECK(r.derived.arity() == 14);

    BundleTable t = bundles_of(r.derived);
    CHECK(t.essential_arity() == 7);
    for (const Bundle& b : t.bundles) {
        CHECK(b.members.size() == 2);
        CHECK_FALSE(b.opposite());  // all (++) pairs
        CHECK(b.plus_count() == 2);
    }

    // compressed values are the single -1 pattern of the free cube
    auto c = compressed_of(r.derived);
    REQUIRE(c.size() == 8);
    for (std::uint64_t u = 0; u < 8; ++u)
        CHECK(c[u] == (u == 7 ? Cyc8(-1) : Cyc8(1)));

    // closing all 14 external ports with delta0 leaves the all-zero value 1
    SignatureGrid g;
    int v = g.add_vertex(r.derived);
    for (int p = 0; p < 14; ++p) {
        int d = g.add_vertex(gen_delta(0));
        g.connect(v, p, d, 0);
    }
    CHECK(holant_brute(g, 32) == Cyc8(1));
}

TEST_CASE("generated signatures round-trip through the file format") {
    for (const Signature& f :
         {gen_equality(4), gen_delta(0), gen_delta(1), gen_f_chain(3), gen_f_chain(5),
          gen_f7_alpha_pm()}) {
        Signature back = parse_signature_text(signature_to_text(f));
        CHECK(back == f);
        CHECK(back.name() == f.name());
    }
}
