#include <doctest.h>

#include "helpers.hpp"
#include "nilorb/classify.hpp"
#include "nilorb/linalg.hpp"
#include "nilorb/quiver.hpp"

using namespace nilorb;
using namespace nilorb::testing;

TEST_SUITE_BEGIN("classify");

TEST_CASE("rank profile on the examples") {
    BlockData b11({1, 1});
    Mat zero(2, 2);
    RankProfile rp = rank_profile(zero, b11);
    CHECK(rp.a(b11) == std::vector<int>{1, 2});
    for (auto& row : rp.r)
        for (int v : row) CHECK(v == 0);

    Mat e21(2, 2);
    e21(1, 0) = 1;
    RankProfile r1 = rank_profile(e21, b11);
    CHECK(r1.a(b11) == std::vector<int>{0, 1});
    CHECK(r1.b(b11) == std::vector<std::vector<int>>{{0, 1}, {1, 2}});

    Mat e12(2, 2);
    e12(0, 1) = 1;
    RankProfile r2 = rank_profile(e12, b11);
    CHECK(r2.a(b11) == std::vector<int>{1, 1});
    CHECK(r2.b(b11) == std::vector<std::vector<int>>{{1, 2}, {1, 2}});

    Mat notsq(3, 3);
    notsq(1, 0) = 1;
    notsq(2, 1) = 1;  // squares to e31, not 2-nilpotent
    CHECK_THROWS_AS(rank_profile(notsq, BlockData({2, 1})), DomainError);
}

TEST_CASE("profile monotonicity and invariance") {
    Rng rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        int n = int(rng.uniform(2, 6));
        BlockData blocks = random_blocks(n, rng);
        Mat m = sample(SampleKind::Nilpotent, blocks, 2, 5000 + rep);
        RankProfile rp = rank_profile(m, blocks);
        for (int k = 0; k <= blocks.p(); ++k)
            for (int l = 0; l <= blocks.p(); ++l) {
                if (k > 0) CHECK(rp.r[k][l] <= rp.r[k - 1][l]);
                if (l > 0) CHECK(rp.r[k][l] >= rp.r[k][l - 1]);
            }
        CHECK(rp.r[blocks.p()][blocks.p()] == 0);
        Mat g = sample(SampleKind::Parabolic, blocks, 2, 6000 + rep);
        CHECK(rank_profile(g * m * *inverse(g), blocks).r == rp.r);
    }
}

TEST_CASE("classification of the small examples") {
    BlockData b11({1, 1});
    Eolp z = classify(Mat(2, 2), b11);
    CHECK(z.dots == std::vector<int>{1, 1});

    Mat e21(2, 2);
    e21(1, 0) = 1;
    Eolp a = classify(e21, b11);
    CHECK(a.arrow(2, 1) == 1);  // arrow 1 -> 2

    // Inside block 1 of (2,1): N e1 = e2 gives a loop at vertex 1.
    BlockData b21({2, 1});
    Mat loop(3, 3);
    loop(1, 0) = 1;
    Eolp e = classify(loop, b21);
    CHECK(e.arrow(1, 1) == 1);
    CHECK(e.dot(2) == 1);
}

TEST_CASE("representative matrices on the examples") {
    BlockData b11({1, 1});
    Eolp dots = Eolp::empty(2);
    dots.dot(1) = dots.dot(2) = 1;
    CHECK(representative_matrix(dots, b11).is_zero());

    Eolp a12 = Eolp::empty(2);
    a12.arrow(2, 1) = 1;
    Mat m = representative_matrix(a12, b11);
    CHECK(m(1, 0) == 1);
    CHECK(m(0, 1) == 0);

    Eolp a21 = Eolp::empty(2);
    a21.arrow(1, 2) = 1;
    Mat m2 = representative_matrix(a21, b11);
    CHECK(m2(0, 1) == 1);

    Eolp bad = Eolp::empty(2);
    bad.arrow(1, 1) = 1;
    CHECK_THROWS_AS(representative_matrix(bad, b11), DomainError);
}

TEST_CASE("classify round trips over all enumerated patterns up to n = 6") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& bs : all_compositions(n)) {
            BlockData blocks(bs);
            for (const Eolp& e : enumerate_eolps(blocks)) {
                Mat m = representative_matrix(e, blocks);
                CHECK((m * m).is_zero());
                CHECK(classify(m, blocks) == e);
            }
        }
}

TEST_CASE("classification is constant on orbits") {
    Rng rng(77);
    for (int rep = 0; rep < 200; ++rep) {
        int n = int(rng.uniform(2, 6));
        BlockData blocks = random_blocks(n, rng);
        Mat m = sample(SampleKind::Nilpotent, blocks, 2, 7000 + rep);
        Mat g = sample(SampleKind::Parabolic, blocks, 2, 8000 + rep);
        CHECK(classify(g * m * *inverse(g), blocks) == classify(m, blocks));
    }
}

TEST_CASE("profile invariants agree with the delta formulas") {
    Rng rng(99);
    for (int rep = 0; rep < 40; ++rep) {
        int n = int(rng.uniform(2, 5));
        BlockData blocks = random_blocks(n, rng);
        Mat m = sample(SampleKind::Nilpotent, blocks, 2, 9000 + rep);
        RankProfile rp = rank_profile(m, blocks);
        InvariantVector iv = invariant_vector(to_multiplicities(classify(m, blocks)), blocks.p());
        CHECK(rp.a(blocks) == iv.a);
        CHECK(rp.b(blocks) == iv.b);
    }
}

TEST_SUITE_END();
