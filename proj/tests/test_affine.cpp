#include <doctest.h>

#include "holant/affine.hpp"
#include "holant/corpus.hpp"
#include "holant/errors.hpp"
#include "test_support.hpp"

using namespace holant;

TEST_CASE("affine support of equality") {
    AffineSupport s = affine_support_of(corpus::gen_equality(2));
    CHECK(s.rank == 1);
    CHECK(s.free_vars() == std::vector<int>{0});
    CHECK(s.a_row[1] == 1);
    CHECK(s.b[1] == 0);
}

TEST_CASE("non-affine support is rejected") {
    Signature f(2);
    f.set(0b01, Cyc8(1));
    f.set(0b10, Cyc8(1));
    f.set(0b11, Cyc8(1));
    CHECK_THROWS_AS(affine_support_of(f), NotAffine);
    CHECK_THROWS_AS(affine_support_of(Signature(3)), EmptySupport);
}

TEST_CASE("hamming-code signature support structure") {
    Signature f = corpus::gen_f7_alpha_pm();
    AffineSupport s = affine_support_of(f);
    CHECK(s.n == 14);
    CHECK(s.rank == 3);
    CHECK(s.free_vars() == std::vector<int>{0, 1, 3});
    for (std::uint64_t x : f.support()) CHECK(std::popcount(x) == 7);
}

TEST_CASE("bundle table examples") {
    SUBCASE("the rank-2 arity-5 example") {
        // f(x1(++), x2(+), (x1+x2)(--)): variables 0,1 equal x1; 2 equals
        // x2; 3,4 equal x1+x2+1.
        Signature f(5);
        for (int x1 = 0; x1 < 2; ++x1)
            for (int x2 = 0; x2 < 2; ++x2) {
                std::uint64_t x = 0;
                if (x1) x = asn_with(x, 5, 0, 1), x = asn_with(x, 5, 1, 1);
                if (x2) x = asn_with(x, 5, 2, 1);
                if (!(x1 ^ x2)) x = asn_with(x, 5, 3, 1), x = asn_with(x, 5, 4, 1);
                f.set(x, Cyc8(1));
            }
        BundleTable t = bundles_of(f);
        CHECK(t.rank == 2);
        CHECK(t.essential_arity() == 3);
        REQUIRE(t.bundles.size() == 3);
        CHECK(t.bundles[0].members == std::vector<int>{0, 1});
        CHECK(t.bundles[0].signs == std::vector<int>{0, 0});
        CHECK(t.bundles[1].members == std::vector<int>{2});
        CHECK(t.bundles[2].members == std::vector<int>{3, 4});
        CHECK(t.bundles[2].signs == std::vector<int>{1, 1});
        CHECK_FALSE(t.bundles[0].opposite());
        CHECK(t.bundles[1].odd());
        CHECK_FALSE(t.bundles[2].opposite());
    }
    SUBCASE("equality is one consistent even bundle") {
        BundleTable t = bundles_of(corpus::gen_equality(4));
        REQUIRE(t.bundles.size() == 1);
        CHECK(t.bundles[0].members.size() == 4);
        CHECK_FALSE(t.bundles[0].odd());
        CHECK_FALSE(t.bundles[0].opposite());
    }
    SUBCASE("the code signature has seven opposite bundles") {
        BundleTable t = bundles_of(corpus::gen_f7_alpha_pm());
        CHECK(t.essential_arity() == 7);
        for (const Bundle& b : t.bundles) {
            CHECK(b.members.size() == 2);
            CHECK(b.opposite());
        }
    }
}

TEST_CASE("compressed function") {
    SUBCASE("equality compresses to all ones") {
        auto c = compressed_of(corpus::gen_equality(4));
        REQUIRE(c.size() == 2);
        CHECK(c[0] == Cyc8(1));
        CHECK(c[1] == Cyc8(1));
    }
    SUBCASE("code signature compresses to a single -1") {
        auto c = compressed_of(corpus::gen_f7_alpha_pm());
        REQUIRE(c.size() == 8);
        for (std::uint64_t t = 0; t < 8; ++t)
            CHECK(c[t] == (t == 7 ? Cyc8(-1) : Cyc8(1)));
    }
    SUBCASE("delta compresses to a single value") {
        auto c = compressed_of(corpus::gen_delta(1));
        REQUIRE(c.size() == 1);
        CHECK(c[0] == Cyc8(1));
    }
}

TEST_CASE("alpha-exponent normal form") {
    SUBCASE("[1, alpha]") {
        Signature f(1);
        f.set(0, Cyc8(1));
        f.set(1, Cyc8::alpha());
        AlphaForm form = fit_alpha_form(f);
        CHECK(form.lambda == Cyc8(1));
        CHECK(form.coeff(1) == 1);
    }
    SUBCASE("code signature is a pure cubic") {
        AlphaForm form = fit_alpha_form(corpus::gen_f7_alpha_pm());
        CHECK(form.lambda == Cyc8(1));
        CHECK(form.coeffs.size() == 1);
        CHECK(form.coeff(0b111) == 4);
    }
    SUBCASE("non-unimodular ratio is rejected") {
        Signature f(1);
        f.set(0, Cyc8(1));
        f.set(1, Cyc8(1) + Cyc8::i());
        CHECK_THROWS_AS(fit_alpha_form(f), NotUnimodular);
    }
}

TEST_CASE("normal form reproduces every entry") {
    testsup::Rng rng(31);
    for (int it = 0; it < 200; ++it) {
        int r = testsup::uniform(rng, 0, 3);
        int n = testsup::uniform(rng, std::max(r, 1), 8);
        Signature f = testsup::random_normal_form_signature(rng, r, n);
        CHECK(f.support_size() == (std::size_t{1} << r));
        AlphaForm form = fit_alpha_form(f);
        for (std::uint64_t t = 0; t < (std::uint64_t{1} << form.support.rank); ++t)
            CHECK(form.eval(t) == f.value(form.support.point(t)));
    }
}

TEST_CASE("pinning reduces the rank by one") {
    Signature f15 = corpus::gen_f_chain(4);
    for (int var : {0, 4, 14}) {
        Signature p = f15.pin(var, 1);
        BundleTable t = bundles_of(p);
        CHECK(t.rank == 3);
        CHECK(t.essential_arity() == 7);
        for (const Bundle& b : t.bundles) {
            CHECK(b.members.size() == 2);
            CHECK(b.opposite());  // every bundle is a (+-) pair
        }
    }
    testsup::Rng rng(77);
    for (int it = 0; it < 50; ++it) {
        int r = testsup::uniform(rng, 1, 3);
        int n = testsup::uniform(rng, std::max(2, r), 7);
        Signature f = testsup::random_normal_form_signature(rng, r, n);
        AffineSupport s = affine_support_of(f);
        int var = testsup::uniform(rng, 0, n - 1);
        if (s.a_row[var] == 0) continue;  // constant variables sit in no bundle
        for (int bit = 0; bit < 2; ++bit) {
            Signature p = f.pin(var, bit);
            if (p.is_zero()) continue;
            CHECK(affine_support_of(p).rank == r - 1);
        }
    }
}

TEST_CASE("essential function") {
    Signature e = essential_of(corpus::gen_f7_alpha_pm());
    CHECK(e.arity() == 7);
    CHECK(e.support_size() == 8);
    // the essential function keeps the compressed values
    auto c = compressed_of(e);
    for (std::uint64_t t = 0; t < 8; ++t)
        CHECK(c[t] == (t == 7 ? Cyc8(-1) : Cyc8(1)));
}
