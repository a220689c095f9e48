#include "qmeas/error.hpp"
#include "qmeas/rng.hpp"
#include "qmeas/space.hpp"

#include "doctest.h"

#include <vector>

using namespace qmeas;

namespace {

SpacePtr abc() { return make_space({"a", "b", "c"}); }

} // namespace

TEST_CASE("scalar parsing accepts canonical rational text") {
    CHECK(Scalar::parse("3/2").str() == "3/2");
    CHECK(Scalar::parse("-1").str() == "-1");
    CHECK(Scalar::parse("0").str() == "0");
    CHECK(Scalar::parse("4/6").str() == "2/3"); // reduced
    CHECK(Scalar::parse("-4/6").str() == "-2/3");
    CHECK(Scalar::parse("007").str() == "7");
}

TEST_CASE("scalar parsing rejects everything else") {
    for (const char* bad : {"", "1.5", "1/0", "abc", "1/-2", "+1", " 1", "1 ", "1/", "/2", "--1", "1e3"})
        CHECK_THROWS_AS(Scalar::parse(bad), Error);
}

TEST_CASE("scalar arithmetic is exact") {
    CHECK(Scalar(1, 2) + Scalar(1, 3) == Scalar(5, 6));
    CHECK(Scalar(1, 2) * Scalar(2, 3) == Scalar(1, 3));
    CHECK(Scalar(1, 2) / Scalar(1, 4) == Scalar(2));
    CHECK(Scalar(1, -2) == Scalar(-1, 2)); // canonical sign
    CHECK(Scalar(2, 4) == Scalar(1, 2));
    CHECK(Scalar(-3, 4).abs() == Scalar(3, 4));
    CHECK(Scalar(-3, 4).sign() == -1);
    CHECK(Scalar().is_zero());
    CHECK(Scalar(1, 3) < Scalar(1, 2));
    CHECK_THROWS_AS(Scalar(1, 0), Error);
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), Error);
}

TEST_CASE("spaces validate their atom lists") {
    CHECK(abc()->size() == 3);
    CHECK(abc()->subset_count() == 8);
    CHECK(abc()->full_mask() == 7);
    CHECK_THROWS_AS(make_space({}), Error);
    CHECK_THROWS_AS(make_space({"a", "a"}), Error);
    CHECK_THROWS_AS(make_space(std::vector<std::string>(17, "x")), Error);
}

TEST_CASE("measurable sets round-trip through canonical keys") {
    SpacePtr sp = abc();
    CHECK(MSet::from_key(sp, "").is_empty());
    CHECK(MSet::from_key(sp, "0,2").bits() == 0b101);
    CHECK(MSet::of(sp, {0, 2}).key() == "0,2");
    CHECK(MSet::empty(sp).key() == "");
    CHECK(MSet::full(sp).key() == "0,1,2");
    CHECK(MSet::of(sp, {1}).cardinality() == 1);
    CHECK(MSet::of(sp, {0, 2}).members() == std::vector<unsigned>{0, 2});
    CHECK(MSet::of(sp, {0, 2}).contains(2));
    CHECK(!MSet::of(sp, {0, 2}).contains(1));
    for (const char* bad : {"2,1", "0,0", "5", "x", ",", "0,", "01"})
        CHECK_THROWS_AS(MSet::from_key(sp, bad), Error);
}

TEST_CASE("set algebra matches Boolean semantics") {
    SpacePtr sp = abc();
    CHECK(set_union(MSet::of(sp, {0}), MSet::of(sp, {1})) == MSet::of(sp, {0, 1}));
    CHECK(set_intersection(MSet::of(sp, {0, 1}), MSet::of(sp, {1, 2})) == MSet::of(sp, {1}));
    CHECK(set_complement(MSet::empty(sp)) == MSet::full(sp));
    CHECK(set_difference(MSet::of(sp, {0, 1}), MSet::of(sp, {1, 2})) == MSet::of(sp, {0}));
    SpacePtr other = make_space({"x", "y"});
    CHECK_THROWS_AS(set_union(MSet::of(sp, {0}), MSet::of(other, {1})), Error);
}

TEST_CASE("set algebra laws hold on random samples") {
    SpacePtr sp = make_space({"a", "b", "c", "d", "e"});
    SeededRng rng(42);
    for (int i = 0; i < 50; ++i) {
        MSet a(sp, static_cast<std::uint32_t>(rng.below(sp->subset_count())));
        MSet b(sp, static_cast<std::uint32_t>(rng.below(sp->subset_count())));
        CHECK(set_complement(set_union(a, b)) ==
              set_intersection(set_complement(a), set_complement(b)));
        CHECK(set_union(a, set_intersection(a, b)) == a);
        CHECK(set_intersection(a, set_union(a, b)) == a);
    }
}

TEST_CASE("disjointness predicates") {
    SpacePtr sp = abc();
    CHECK(disjoint(MSet::of(sp, {0}), MSet::of(sp, {1})));
    CHECK(!disjoint(MSet::of(sp, {0, 1}), MSet::of(sp, {1})));
    std::vector<MSet> good{MSet::of(sp, {0}), MSet::of(sp, {1}), MSet::empty(sp)};
    CHECK(pairwise_disjoint(good));
    std::vector<MSet> bad{MSet::of(sp, {0, 1}), MSet::of(sp, {1})};
    CHECK(!pairwise_disjoint(bad));
}

TEST_CASE("disjoint tuple stream counts and order") {
    SpacePtr one = make_space({"a"});
    DisjointTuples stream(one, 1);
    CHECK(stream.size() == 2);
    std::vector<std::vector<std::uint32_t>> seen;
    for (const auto& masks : stream) seen.push_back(masks);
    CHECK(seen == std::vector<std::vector<std::uint32_t>>{{0}, {1}});

    CHECK(DisjointTuples(make_space({"a", "b"}), 2).size() == 9);
    CHECK(DisjointTuples(abc(), 3).size() == 64);
}

TEST_CASE("disjoint tuple streams are complete and pairwise disjoint") {
    for (unsigned k = 1; k <= 6; ++k) {
        std::vector<std::string> atoms;
        for (unsigned i = 0; i < k; ++i) atoms.push_back(std::string(1, static_cast<char>('a' + i)));
        SpacePtr sp = make_space(atoms);
        for (unsigned m = 1; m <= 4; ++m) {
            DisjointTuples stream(sp, m);
            std::uint64_t expected = 1;
            for (unsigned i = 0; i < k; ++i) expected *= m + 1;
            std::uint64_t count = 0;
            for (const auto& masks : stream) {
                ++count;
                std::uint32_t joint = 0;
                for (std::uint32_t mask : masks) {
                    CHECK((joint & mask) == 0);
                    joint |= mask;
                }
            }
            CHECK(count == expected);
            CHECK(stream.size() == expected);
        }
    }
}

TEST_CASE("random access agrees with iteration order") {
    SpacePtr sp = abc();
    DisjointTuples stream(sp, 2);
    std::uint64_t index = 0;
    for (const auto& masks : stream) {
        std::vector<MSet> direct = stream.at(index);
        REQUIRE(direct.size() == masks.size());
        for (std::size_t i = 0; i < masks.size(); ++i) CHECK(direct[i].bits() == masks[i]);
        ++index;
    }
    CHECK(index == stream.size());
}

TEST_CASE("tuple stream guards") {
    SpacePtr sp = abc();
    CHECK_THROWS_AS(DisjointTuples(sp, 0), Error);
    CHECK_THROWS_AS(DisjointTuples(sp, 9), Error);
    SpacePtr big = make_space([] {
        std::vector<std::string> atoms;
        for (int i = 0; i < 16; ++i) atoms.push_back(std::string(1, static_cast<char>('a' + i)));
        return atoms;
    }());
    CHECK_THROWS_WITH_AS(DisjointTuples(big, 3), "enumeration too large", Error);
}

TEST_CASE("seeded rng is reproducible and rejects empty ranges") {
    SeededRng a(5), b(5);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    SeededRng c = SeededRng::for_trial(5, 0);
    SeededRng d = SeededRng::for_trial(5, 1);
    CHECK(c.next() != d.next()); // decorrelated trials
    SeededRng e(7);
    for (int i = 0; i < 200; ++i) {
        long v = e.int_in(-3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
    }
    CHECK_THROWS_AS(e.below(0), Error);
    Scalar r = e.rational(9);
    CHECK(r.abs() <= Scalar(9));
}
