#include <doctest.h>

#include "holant/classify.hpp"
#include "holant/corpus.hpp"
#include "holant/errors.hpp"
#include "test_support.hpp"

using namespace holant;
using namespace holant::corpus;

TEST_CASE("holant-star tractable branches") {
    SUBCASE("all binary is T") {
        auto w = holant_star_tractable({gen_equality(2), gen_delta(0)});
        REQUIRE(w.has_value());
        CHECK(w->family == HolantStarFamily::T);
    }
    SUBCASE("generalized equality is HP with the identity") {
        auto w = holant_star_tractable({gen_equality(3)});
        REQUIRE(w.has_value());
        CHECK(w->family == HolantStarFamily::HP);
    }
    SUBCASE("rotated equality is HP with a recovered transform") {
        Mat2 h;  // orthogonal up to scale: [[1,1],[1,-1]] / sqrt(2)
        h[0][0] = Cyc8(1);
        h[0][1] = Cyc8(1);
        h[1][0] = Cyc8(1);
        h[1][1] = Cyc8(-1);
        Signature f = gen_equality(3).transformed_all(h);
        auto w = holant_star_tractable({f});
        REQUIRE(w.has_value());
        CHECK(w->family == HolantStarFamily::HP);
    }
    SUBCASE("Z-transformed matchings are ZM") {
        Mat2 z;
        z[0][0] = Cyc8(1);
        z[0][1] = Cyc8(1);
        z[1][0] = Cyc8::i();
        z[1][1] = -Cyc8::i();
        Signature m(3);  // support of weight <= 1
        m.set(0b000, Cyc8(2));
        m.set(0b100, Cyc8(1));
        m.set(0b010, Cyc8(1));
        m.set(0b001, Cyc8(1));
        Signature f = m.transformed_all(z);
        auto w = holant_star_tractable({f});
        REQUIRE(w.has_value());
        CHECK(w->family == HolantStarFamily::ZM);
    }
    SUBCASE("the code signature is not Holant-star tractable") {
        CHECK_FALSE(holant_star_tractable({gen_f7_alpha_pm()}).has_value());
    }
}

TEST_CASE("csp2c classification") {
    SUBCASE("equality alone is product type") {
        ClassVerdict v = classify_csp2c({gen_equality(2)});
        CHECK(v.label == VerdictLabel::TractableP);
    }
    SUBCASE("the flagship local-affine set") {
        std::vector<Signature> fs = {gen_delta(0), gen_delta(1), gen_equality(4),
                                     gen_f_chain(5), gen_f7_alpha_pm()};
        ClassVerdict v = classify_csp2c(fs);
        CHECK(v.label == VerdictLabel::TractableL);
        CHECK(v.certificates.size() == 5);
        // the certificate re-checks: every member passes the named test
        for (const Signature& f : fs) CHECK(in_local_affine(f).ok);
    }
    SUBCASE("the hard pair") {
        ClassVerdict v = classify_csp2c({gen_f_chain(4), gen_f7_alpha_pm()});
        CHECK(v.label == VerdictLabel::SharpPHard);
    }
    SUBCASE("affine sets are labeled affine") {
        ClassVerdict v = classify_csp2c({gen_equality(3), gen_f_chain(5)});
        CHECK(v.label == VerdictLabel::TractableA);
    }
}

TEST_CASE("holantc classification") {
    SUBCASE("binary-only sets ride the Holant-star branch") {
        Signature neq = Signature::from_symmetric({Cyc8(0), Cyc8(1), Cyc8(0)});
        ClassVerdict v = classify_holant_c({neq, gen_equality(2)});
        CHECK(v.label == VerdictLabel::TractableHolantStar);
        CHECK(v.star->family == HolantStarFamily::T);
    }
    SUBCASE("the local-affine pair is tractable") {
        ClassVerdict v = classify_holant_c({gen_f7_alpha_pm(), gen_f_chain(5)});
        CHECK(v.label == VerdictLabel::TractableL);
    }
    SUBCASE("non-real input is refused") {
        Signature f(1);
        f.set(0, Cyc8(1));
        f.set(1, Cyc8::alpha());
        CHECK_THROWS_AS(classify_holant_c({f}), NotRealValued);
    }
    SUBCASE("a hard real set") {
        ClassVerdict v = classify_holant_c({gen_f_chain(4), gen_f7_alpha_pm()});
        CHECK(v.label == VerdictLabel::SharpPHard);
    }
}

TEST_CASE("verdicts are scaling and permutation invariant") {
    testsup::Rng rng(31415);
    for (int it = 0; it < 40; ++it) {
        std::vector<Signature> fs;
        int count = testsup::uniform(rng, 1, 3);
        for (int k = 0; k < count; ++k) {
            if (testsup::uniform(rng, 0, 1))
                fs.push_back(testsup::random_normal_form_signature(
                    rng, testsup::uniform(rng, 0, 3), testsup::uniform(rng, 1, 6)));
            else
                fs.push_back(
                    testsup::random_sparse_signature(rng, testsup::uniform(rng, 1, 5), 6));
        }
        ClassVerdict base = classify_csp2c(fs);
        std::vector<Signature> scrambled;
        for (Signature& f : fs) {
            std::vector<int> perm(f.arity());
            for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
            std::shuffle(perm.begin(), perm.end(), rng);
            scrambled.push_back(f.scaled(testsup::random_nonzero_cyc8(rng)).permuted(perm));
        }
        CHECK(classify_csp2c(scrambled).label == base.label);
    }
}
