#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crtkit/equiv.hpp"
#include "crtkit/error.hpp"

using namespace crtkit;

namespace {

const FiniteSet four{4};

// alpha = {{0,1},{2,3}}, beta = {{0,2},{1,3}}: the running 4-element example.
EquivRelation alpha() { return EquivRelation::from_partition(four, {{0, 1}, {2, 3}}); }
EquivRelation beta() { return EquivRelation::from_partition(four, {{0, 2}, {1, 3}}); }

}  // namespace

TEST_CASE("from_partition validation and canonical ids") {
    EquivRelation a = alpha();
    CHECK(a.class_of(0) == 0);
    CHECK(a.class_of(1) == 0);
    CHECK(a.class_of(2) == 2);
    CHECK(a.class_of(3) == 2);
    CHECK(a.class_count() == 2);

    EquivRelation singletons = EquivRelation::from_partition(four, {{0}, {1}, {2}, {3}});
    CHECK(singletons == EquivRelation::identity(four));

    CHECK_THROWS_AS(EquivRelation::from_partition(four, {{0, 1}, {1, 2}, {3}}), Error);
    CHECK_THROWS_AS(EquivRelation::from_partition(four, {{0, 1}, {3}}), Error);
    CHECK_THROWS_AS(EquivRelation::from_partition(four, {{0, 1, 2, 4}}), Error);
    CHECK_THROWS_AS(EquivRelation::from_partition(four, {{}, {0, 1, 2, 3}}), Error);
}

TEST_CASE("canonicalization is order-invariant") {
    EquivRelation a = EquivRelation::from_partition(four, {{3, 2}, {1, 0}});
    CHECK(a == alpha());
    EquivRelation b = EquivRelation::from_partition(four, {{2, 0}, {3, 1}});
    CHECK(b == beta());
}

TEST_CASE("intersect") {
    CHECK(intersect(alpha(), beta()) == EquivRelation::identity(four));
    CHECK(intersect(alpha(), alpha()) == alpha());
    CHECK(intersect(alpha(), EquivRelation::full(four)) == alpha());
    CHECK_THROWS_AS(intersect(alpha(), EquivRelation::identity(FiniteSet{3})), Error);
}

TEST_CASE("compose") {
    BinRelation c = compose(alpha(), beta());
    CHECK(c == BinRelation::full(four));
    CHECK(c.pair_count() == 16);

    CHECK(compose(EquivRelation::identity(four), beta()) == BinRelation::of(beta()));

    FiniteSet two{2};
    EquivRelation id2 = EquivRelation::identity(two);
    BinRelation cc = compose(id2, id2);
    CHECK(cc.pair_count() == 2);
    CHECK(cc.contains(0, 0));
    CHECK(cc.contains(1, 1));
    CHECK_FALSE(cc == BinRelation::full(two));
}

TEST_CASE("compose contains both relations and is reflexive") {
    auto relations = all_equiv_relations(four);
    for (const auto& a : relations) {
        for (const auto& b : relations) {
            BinRelation c = compose(a, b);
            for (std::size_t x = 0; x < 4; ++x) {
                CHECK(c.contains(x, x));
                for (std::size_t y = 0; y < 4; ++y) {
                    if (a.same_class(x, y)) CHECK(c.contains(x, y));
                    if (b.same_class(x, y)) CHECK(c.contains(x, y));
                }
            }
        }
    }
}

TEST_CASE("sigma_classes") {
    CHECK(sigma_classes(alpha(), beta(), 3) == std::pair<std::size_t, std::size_t>{2, 1});
    CHECK(sigma_classes(alpha(), beta(), 0) == std::pair<std::size_t, std::size_t>{0, 0});
    EquivRelation id = EquivRelation::identity(four);
    for (std::size_t x = 0; x < 4; ++x)
        CHECK(sigma_classes(id, id, x) == std::pair<std::size_t, std::size_t>{x, x});
    CHECK_THROWS_AS(sigma_classes(alpha(), beta(), 4), Error);
}

TEST_CASE("kernel_of_sigma") {
    CHECK(kernel_of_sigma(alpha(), beta()) == EquivRelation::identity(four));
    CHECK(kernel_of_sigma(alpha(), alpha()) == alpha());
    CHECK(kernel_of_sigma(EquivRelation::full(four), beta()) == beta());
}

TEST_CASE("sigma_onto") {
    CHECK(sigma_onto(alpha(), beta()));

    FiniteSet two{2};
    EquivRelation id2 = EquivRelation::identity(two);
    CHECK_FALSE(sigma_onto(id2, id2));  // 4 target pairs, 2 elements

    FiniteSet empty{0};
    EquivRelation e = EquivRelation::identity(empty);
    CHECK(sigma_onto(e, e));  // vacuously onto
    CHECK(compose(e, e) == BinRelation::full(empty));
}

TEST_CASE("partition enumeration matches Bell numbers") {
    const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203};
    for (std::size_t n = 0; n <= 6; ++n) {
        CHECK(all_equiv_relations(FiniteSet{n}).size() == bell[n]);
    }
}

TEST_CASE("kernel and onto criteria, exhaustive for n <= 5") {
    for (std::size_t n = 0; n <= 5; ++n) {
        FiniteSet base{n};
        auto relations = all_equiv_relations(base);
        BinRelation everything = BinRelation::full(base);
        for (const auto& a : relations) {
            for (const auto& b : relations) {
                CHECK(kernel_of_sigma(a, b) == intersect(a, b));
                CHECK(sigma_onto(a, b) == (compose(a, b) == everything));
            }
        }
    }
}

TEST_CASE("verify_theorem5 reports") {
    Theorem5Report r3 = verify_theorem5(3);
    CHECK(r3.pairs_checked == 25);
    CHECK(r3.ok());

    Theorem5Report r0 = verify_theorem5(0);
    CHECK(r0.pairs_checked == 1);
    CHECK(r0.ok());

    Theorem5Report r4 = verify_theorem5(4);
    CHECK(r4.pairs_checked == 225);
    CHECK(r4.ok());

    try {
        verify_theorem5(7);
        FAIL("expected bound_exceeded");
    } catch (const Error& e) {
        CHECK(e.code() == std::string(errc::bound_exceeded));
    }
}
