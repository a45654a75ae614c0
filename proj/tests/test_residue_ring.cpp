#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "crtkit/error.hpp"
#include "crtkit/number_theory.hpp"
#include "crtkit/residue_ring.hpp"

using namespace crtkit;

namespace {

ResidueElement elem(long long modulus, long long value) {
    return ResidueElement{ResidueRing{Int(modulus)}, Int(value)};
}

}  // namespace

TEST_CASE("residue ring arithmetic examples") {
    CHECK(ring_add(elem(15, 8), elem(15, 9)) == elem(15, 2));
    CHECK(ring_sub(elem(15, 8), elem(15, 8)) == elem(15, 0));
    CHECK(ring_mul(elem(7, 3), elem(7, 5)) == elem(7, 1));
    CHECK(ring_neg(elem(7, 3)) == elem(7, 4));
    CHECK_THROWS_AS(ring_add(elem(15, 1), elem(7, 1)), Error);
    CHECK_THROWS_AS(ResidueRing{Int(0)}, Error);
}

TEST_CASE("subtraction annihilation across whole rings") {
    // v - v = 0 for every element of several concrete rings.
    for (long long m : {1, 2, 7, 15, 36}) {
        for (long long v = 0; v < m; ++v) {
            ResidueElement x = elem(m, v);
            CHECK(ring_sub(x, x) == elem(m, 0));
            CHECK(ring_add(x, ring_neg(x)) == elem(m, 0));
        }
    }
}

TEST_CASE("sigma examples") {
    auto t = sigma({Int(3), Int(5)}, Int(8));
    REQUIRE(t.size() == 2);
    CHECK(t[0].value() == Int(2));
    CHECK(t[1].value() == Int(3));

    auto z = sigma({Int(3), Int(5), Int(7)}, Int(0));
    for (const auto& c : z) CHECK(c.value().is_zero());

    auto w = sigma({Int(3), Int(5), Int(7)}, Int(23));
    CHECK(w[0].value() == Int(2));
    CHECK(w[1].value() == Int(3));
    CHECK(w[2].value() == Int(2));

    CHECK_THROWS_AS(sigma({Int(3), Int(5)}, Int(15)), Error);
    CHECK_THROWS_AS(sigma({Int(3), Int(5)}, Int(-1)), Error);
}

TEST_CASE("sigma_inverse examples") {
    CHECK(sigma_inverse({Int(3), Int(5)}, {Int(2), Int(3)}) == Int(8));
    CHECK(sigma_inverse({Int(3), Int(5), Int(7)}, {Int(0), Int(0), Int(0)}) == Int(0));
    CHECK(sigma_inverse({Int(3), Int(5), Int(7)}, {Int(2), Int(3), Int(2)}) == Int(23));
    CHECK_THROWS_AS(sigma_inverse({Int(4), Int(6)}, {Int(1), Int(1)}), Error);
    CHECK_THROWS_AS(sigma_inverse({Int(3), Int(5)}, {Int(3), Int(0)}), Error);
}

TEST_CASE("sigma roundtrip is the identity, exhaustively") {
    for (std::vector<Int> moduli :
         {std::vector<Int>{Int(3), Int(5)}, std::vector<Int>{Int(4), Int(9), Int(25)},
          std::vector<Int>{Int(2), Int(3), Int(5), Int(7), Int(11)}}) {
        Int m = 1;
        for (const Int& mi : moduli) m *= mi;
        REQUIRE(m <= Int(10000));
        for (Int x = 0; x < m; x += 1) {
            auto tuple = sigma(moduli, x);
            std::vector<Int> values;
            for (const auto& c : tuple) values.push_back(c.value());
            CHECK(sigma_inverse(moduli, values) == x);
        }
    }
}

TEST_CASE("product ring componentwise operations") {
    ProductRing pr{{ResidueRing{Int(3)}, ResidueRing{Int(5)}}};
    auto a = pr.element({Int(2), Int(4)});
    auto b = pr.element({Int(2), Int(3)});
    auto sum = pr.add(a, b);
    CHECK(sum[0].value() == Int(1));
    CHECK(sum[1].value() == Int(2));
    auto prod = pr.mul(a, b);
    CHECK(prod[0].value() == Int(1));
    CHECK(prod[1].value() == Int(2));
    CHECK_THROWS_AS(pr.element({Int(1)}), Error);
}

TEST_CASE("verify_ring_iso accepts the theorem cases") {
    IsoReport r = verify_ring_iso({Int(3), Int(5)});
    CHECK(r.checked == 15);
    CHECK(r.ok());

    CHECK(verify_ring_iso({Int(1)}).ok());  // one-element ring, trivially true
    CHECK(verify_ring_iso({Int(3), Int(5), Int(7)}).ok());
    CHECK(verify_ring_iso({Int(4), Int(9), Int(25)}).ok());
    // 2310 elements: homomorphism laws are sampled with a fixed seed.
    CHECK(verify_ring_iso({Int(2), Int(3), Int(5), Int(7), Int(11)}).ok());
}

TEST_CASE("verify_ring_iso rejects bad hypotheses") {
    try {
        verify_ring_iso({Int(4), Int(6)});
        FAIL("expected not_pairwise_coprime");
    } catch (const Error& e) {
        CHECK(e.code() == std::string(errc::not_pairwise_coprime));
    }
    IsoCheckOptions tight;
    tight.exhaustive_bound = 10;
    try {
        verify_ring_iso({Int(3), Int(5)}, tight);
        FAIL("expected bound_exceeded");
    } catch (const Error& e) {
        CHECK(e.code() == std::string(errc::bound_exceeded));
    }
}

TEST_CASE("verify_unit_group_iso examples") {
    IsoReport r35 = verify_unit_group_iso(Int(3), Int(5));
    CHECK(r35.ok());
    CHECK(r35.checked == 8);  // phi(15) = 8 units

    IsoReport r23 = verify_unit_group_iso(Int(2), Int(3));
    CHECK(r23.ok());
    CHECK(r23.checked == 2);  // phi(6) = 2

    IsoReport r89 = verify_unit_group_iso(Int(8), Int(9));
    CHECK(r89.ok());
    CHECK(r89.checked == euler_phi(Int(72)).to_uint64());

    try {
        verify_unit_group_iso(Int(4), Int(6));
        FAIL("expected hypothesis_violated");
    } catch (const Error& e) {
        CHECK(e.code() == std::string(errc::hypothesis_violated));
    }
    CHECK_THROWS_AS(verify_unit_group_iso(Int(1), Int(5)), Error);
}

TEST_CASE("unit counts multiply: phi(pq) = phi(p) phi(q)") {
    std::pair<long long, long long> cases[] = {{3, 5}, {5, 7}, {8, 9}, {4, 9}, {25, 4}};
    for (auto [p, q] : cases) {
        IsoReport r = verify_unit_group_iso(Int(p), Int(q));
        CHECK(r.ok());
        CHECK(Int(static_cast<unsigned long long>(r.checked)) ==
              euler_phi(Int(p)) * euler_phi(Int(q)));
        CHECK(Int(static_cast<unsigned long long>(r.checked)) == euler_phi(Int(p * q)));
    }
}

TEST_CASE("homomorphism laws hold exhaustively for small m") {
    // m <= 1000 runs every pair; spot-check the report against manual sums.
    IsoReport r = verify_ring_iso({Int(4), Int(9)});
    CHECK(r.checked == 36);
    CHECK(r.additive);
    CHECK(r.multiplicative);
    CHECK(r.bijective);
}
