#include "qmeas/diagbox.hpp"
#include "qmeas/error.hpp"
#include "qmeas/rng.hpp"

#include "doctest.h"
#include "support.hpp"

#include <vector>

using namespace qmeas;

namespace {

Box box2(long alo, long ad, long ahi, long blo, long bd, long bhi) {
    return Box({RInterval(Scalar(alo, ad), Scalar(ahi, ad)),
                RInterval(Scalar(blo, bd), Scalar(bhi, bd))});
}

} // namespace

TEST_CASE("intervals live inside the unit segment") {
    RInterval half(Scalar(0), Scalar(1, 2));
    CHECK(half.length() == Scalar(1, 2));
    CHECK(half.contains(Scalar(1, 4)));
    CHECK(!half.contains(Scalar(3, 4)));
    CHECK_THROWS_WITH_AS(RInterval(Scalar(-1, 2), Scalar(1)), "interval endpoints must lie in [0,1]", Error);
    CHECK_THROWS_WITH_AS(RInterval(Scalar(0), Scalar(3, 2)), "interval endpoints must lie in [0,1]", Error);
    CHECK_THROWS_WITH_AS(RInterval(Scalar(1, 2), Scalar(1, 4)), "interval endpoints must be ordered", Error);
}

TEST_CASE("box validation and membership") {
    CHECK_THROWS_WITH_AS(Box({}), "a box needs at least one side", Error);
    Box b = box2(0, 2, 1, 1, 2, 2); // [0,1/2] x [1/2,1]
    std::vector<Scalar> inside{Scalar(1, 4), Scalar(3, 4)};
    std::vector<Scalar> outside{Scalar(3, 4), Scalar(3, 4)};
    CHECK(b.contains(inside));
    CHECK(!b.contains(outside));
    std::vector<Scalar> wrong{Scalar(0)};
    CHECK_THROWS_WITH_AS(b.contains(wrong), "point dimension mismatch", Error);
    CHECK_THROWS_WITH_AS(BoxUnion(0, {}), "dimension must be at least 1", Error);
    CHECK_THROWS_WITH_AS(BoxUnion(3, {b}), "box dimension mismatch", Error);
}

TEST_CASE("interval union length merges overlaps") {
    CHECK(interval_union_length({RInterval(Scalar(0), Scalar(1, 2))}) == Scalar(1, 2));
    CHECK(interval_union_length({RInterval(Scalar(0), Scalar(1, 2)),
                                 RInterval(Scalar(1, 4), Scalar(3, 4))}) == Scalar(3, 4));
    CHECK(interval_union_length({}) == Scalar(0));
    // Touching endpoints merge; duplicates collapse.
    CHECK(interval_union_length({RInterval(Scalar(1, 2), Scalar(1)),
                                 RInterval(Scalar(0), Scalar(1, 2)),
                                 RInterval(Scalar(0), Scalar(1, 2))}) == Scalar(1));
}

TEST_CASE("diagonal trace of a single box") {
    CHECK(diagonal_trace(box2(0, 2, 1, 0, 2, 1))->length() == Scalar(1, 2));
    CHECK(diagonal_trace(box2(0, 2, 1, 1, 2, 2))->length() == Scalar(0)); // single point 1/2
    CHECK(!diagonal_trace(box2(0, 4, 1, 3, 4, 4)).has_value()); // [0,1/4] x [3/4,1] misses it
}

TEST_CASE("diagonal length on worked examples") {
    CHECK(diag_length(BoxUnion(2, {box2(0, 2, 1, 0, 2, 1)})) == Scalar(1, 2));
    CHECK(diag_length(BoxUnion(2, {box2(0, 2, 1, 1, 2, 2)})) == Scalar(0));
    Box three({RInterval(Scalar(1, 4), Scalar(1)), RInterval(Scalar(0), Scalar(3, 4)),
               RInterval(Scalar(1, 2), Scalar(1))});
    CHECK(diag_length(BoxUnion(3, {three})) == Scalar(1, 4)); // trace [1/2, 3/4]
    CHECK(diag_length(BoxUnion(4, {})) == Scalar(0));
    for (unsigned d = 1; d <= 4; ++d) CHECK(diag_length(BoxUnion::full_cube(d)) == Scalar(1));
}

TEST_CASE("diagonal length is monotone and additive on disjoint traces") {
    SeededRng rng(41);
    for (int rep = 0; rep < 40; ++rep) {
        unsigned dim = 1 + static_cast<unsigned>(rng.below(4));
        BoxUnion t = testsupport::random_box_union(rng, dim, 5);
        std::vector<Box> more = t.boxes();
        std::vector<RInterval> sides;
        for (unsigned j = 0; j < dim; ++j) sides.push_back(testsupport::random_interval(rng));
        more.emplace_back(std::move(sides));
        CHECK(diag_length(t) <= diag_length(BoxUnion(dim, more)));
    }
    // Disjoint traces add up: cubes [0,1/4]^2 and [1/2,3/4]^2.
    BoxUnion pair(2, {box2(0, 4, 1, 0, 4, 1), box2(2, 4, 3, 2, 4, 3)});
    CHECK(diag_length(pair) ==
          diag_length(BoxUnion(2, {pair.boxes()[0]})) + diag_length(BoxUnion(2, {pair.boxes()[1]})));
}

TEST_CASE("diagonal length matches the midpoint-subdivision oracle") {
    SeededRng rng(42);
    for (int rep = 0; rep < 60; ++rep) {
        unsigned dim = 1 + static_cast<unsigned>(rng.below(4));
        BoxUnion t = testsupport::random_box_union(rng, dim, 6);
        CHECK(diag_length(t) == testsupport::oracle_diag_length(t));
    }
}

TEST_CASE("cube cover detection") {
    CHECK(BoxUnion::full_cube(2).covers_cube());
    // Two half-slabs cover; drop one and they no longer do.
    Box left = box2(0, 2, 1, 0, 1, 1);
    Box right = box2(1, 2, 2, 0, 1, 1);
    CHECK(BoxUnion(2, {left, right}).covers_cube());
    CHECK(!BoxUnion(2, {left}).covers_cube());
    CHECK(!BoxUnion(2, {}).covers_cube());
}

TEST_CASE("marginal slices of the full-mass model have Lebesgue length") {
    BoxUnion cube = BoxUnion::full_cube(2);
    std::vector<RInterval> third{RInterval(Scalar(0), Scalar(1, 3))};
    CHECK(marginal_slice_length(cube, 0, third) == Scalar(1, 3));
    CHECK(marginal_slice_length(cube, 1, third) == Scalar(1, 3));
    CHECK(marginal_slice_length(cube, 0, {}) == Scalar(0));
    CHECK(marginal_slice_length(cube, 1, {RInterval(Scalar(0), Scalar(1))}) == Scalar(1));

    CHECK_THROWS_WITH_AS(marginal_slice_length(cube, 2, third), "slot out of range", Error);
    BoxUnion partial(2, {box2(0, 2, 1, 0, 1, 1)});
    CHECK_THROWS_WITH_AS(marginal_slice_length(partial, 0, third),
                         "marginal defined for the full-mass model", Error);
}

TEST_CASE("marginal slices equal the interval union length in every slot") {
    SeededRng rng(43);
    for (unsigned d = 1; d <= 4; ++d) {
        BoxUnion cube = BoxUnion::full_cube(d);
        for (unsigned slot = 0; slot < d; ++slot)
            for (int rep = 0; rep < 20; ++rep) {
                std::vector<RInterval> s;
                unsigned parts = static_cast<unsigned>(rng.below(4));
                for (unsigned i = 0; i < parts; ++i) s.push_back(testsupport::random_interval(rng));
                CHECK(marginal_slice_length(cube, slot, s) == interval_union_length(s));
            }
    }
}
