#include <doctest.h>

#include "holant/corpus.hpp"
#include "holant/factorize.hpp"
#include "test_support.hpp"

using namespace holant;

namespace {

// Reassembles the factor list into a full signature for comparison.
Signature product_of(const std::vector<TensorFactor>& factors, int arity) {
    Signature out(arity);
    out.set(0, Cyc8(1));
    for (const TensorFactor& t : factors) {
        Signature next(arity);
        for (const auto& [x, v] : out.entries()) {
            for (const auto& [y, w] : t.sig.entries()) {
                std::uint64_t z = x;
                for (std::size_t j = 0; j < t.vars.size(); ++j)
                    if (asn_get(y, t.sig.arity(), static_cast<int>(j)))
                        z = asn_with(z, arity, t.vars[j], 1);
                next.set(z, next.value(z) + v * w);
            }
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("single support point splits into deltas") {
    Signature f(2);
    f.set(0b00, Cyc8(1));
    auto factors = tensor_factorize(f);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].sig.value(0) == Cyc8(1));
    CHECK(factors[1].sig.value(0) == Cyc8(1));
    CHECK(factors[0].vars == std::vector<int>{0});
}

TEST_CASE("equality is non-decomposable") {
    for (int n : {2, 3, 4, 6}) {
        auto factors = tensor_factorize(corpus::gen_equality(n));
        REQUIRE(factors.size() == 1);
        CHECK(factors[0].sig.arity() == n);
    }
}

TEST_CASE("products are recovered exactly") {
    testsup::Rng rng(42);
    for (int it = 0; it < 120; ++it) {
        Signature g = testsup::random_sparse_signature(rng, 2, 3);
        Signature h = testsup::random_sparse_signature(rng, 3, 5);
        Signature f = g.tensor(h);
        if (f.is_zero()) continue;
        auto factors = tensor_factorize(f);
        CHECK(product_of(factors, f.arity()) == f);
        // factors proportional to the inputs when both are non-decomposable
        if (factors.size() == 2 && tensor_factorize(g).size() == 1 &&
            tensor_factorize(h).size() == 1) {
            CHECK(factors[0].sig.proportional_to(g).has_value());
            CHECK(factors[1].sig.proportional_to(h).has_value());
        }
    }
}

TEST_CASE("interleaved blocks are separated") {
    testsup::Rng rng(43);
    for (int it = 0; it < 60; ++it) {
        Signature f = testsup::random_product_signature(rng, 7);
        if (f.is_zero()) continue;
        auto factors = tensor_factorize(f);
        CHECK(product_of(factors, f.arity()) == f);
        for (const TensorFactor& t : factors)
            CHECK(tensor_factorize(t.sig).size() == 1);
    }
}

TEST_CASE("value coupling blocks a support split") {
    // full 2x2 support with values i^(2 x y): the support is a box but the
    // values do not factor
    Signature f(2);
    f.set(0b00, Cyc8(1));
    f.set(0b01, Cyc8(1));
    f.set(0b10, Cyc8(1));
    f.set(0b11, Cyc8(-1));
    auto factors = tensor_factorize(f);
    REQUIRE(factors.size() == 1);

    // same support with multiplicative values splits
    Signature g(2);
    g.set(0b00, Cyc8(1));
    g.set(0b01, Cyc8(2));
    g.set(0b10, Cyc8(3));
    g.set(0b11, Cyc8(6));
    CHECK(tensor_factorize(g).size() == 2);
}

TEST_CASE("separate_unary_product") {
    testsup::Rng rng(44);
    for (int it = 0; it < 80; ++it) {
        Signature f(0);
        f.set(0, testsup::random_nonzero_cyc8(rng));
        int n = testsup::uniform(rng, 1, 5);
        for (int i = 0; i < n; ++i) {
            Signature u(1);
            u.set(0, testsup::random_cyc8(rng));
            u.set(1, testsup::random_cyc8(rng));
            if (u.is_zero()) u.set(1, Cyc8(1));
            f = f.tensor(u);
        }
        if (f.is_zero()) continue;
        auto up = separate_unary_product(f);
        REQUIRE(up.has_value());
        for (const auto& [x, v] : f.entries()) {
            Cyc8 acc = up->scale;
            for (int i = 0; i < n; ++i) acc *= up->unaries[i][asn_get(x, n, i)];
            CHECK(acc == v);
        }
    }
    CHECK_FALSE(separate_unary_product(corpus::gen_equality(2)).has_value());
}
