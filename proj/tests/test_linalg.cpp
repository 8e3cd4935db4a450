#include <doctest.h>

#include "helpers.hpp"
#include "nilorb/linalg.hpp"
#include "nilorb/sampling.hpp"

using namespace nilorb;
using namespace nilorb::testing;

TEST_SUITE_BEGIN("linalg");

TEST_CASE("rational parsing and printing") {
    CHECK(rat_from_string("3/6") == Rat(1, 2));
    CHECK(rat_from_string("-4/2") == Rat(-2));
    CHECK(rat_to_string(Rat(-1, 3)) == "-1/3");
    CHECK(rat_to_string(Rat(7)) == "7");
    CHECK_THROWS_AS(rat_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(rat_from_string("x"), ParseError);
}

TEST_CASE("rank basics") {
    CHECK(rank(Mat(3, 3)) == 0);
    CHECK(rank(Mat::identity(3)) == 3);
    Mat m(2, 2);
    m(0, 1) = 1;
    CHECK(rank(m) == 1);
}

TEST_CASE("rank is submultiplicative on products") {
    for (uint64_t s = 0; s < 20; ++s) {
        Rng rng(900 + s);
        Mat a(4, 4), b(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                a(i, j) = rng.small_rat();
                b(i, j) = rng.small_rat();
            }
        CHECK(rank(a * b) <= std::min(rank(a), rank(b)));
    }
}

TEST_CASE("corner submatrix") {
    Mat m(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = 3 * i + j;
    CHECK(corner_submatrix(m, 3, 3) == m);
    Mat c = corner_submatrix(m, 1, 1);
    CHECK(c.rows() == 1);
    CHECK(c(0, 0) == m(2, 0));
    CHECK(corner_submatrix(m, 0, 2).rows() == 0);
    CHECK_THROWS_AS(corner_submatrix(m, 4, 1), DomainError);
}

TEST_CASE("nilpotency degree") {
    CHECK(nilpotency_degree(Mat(3, 3)) == 1);
    Mat e21(2, 2);
    e21(1, 0) = 1;
    CHECK(nilpotency_degree(e21) == 2);
    CHECK(!nilpotency_degree(Mat::identity(2)).has_value());
    CHECK_THROWS_AS(nilpotency_degree(Mat(2, 3)), DomainError);
}

TEST_CASE("solve and null space are canonical") {
    Mat a(2, 3);
    a(0, 0) = 1;
    a(0, 2) = 2;
    a(1, 1) = 1;
    auto x = solve(a, {Rat(3), Rat(5)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 3);
    CHECK((*x)[1] == 5);
    CHECK((*x)[2] == 0);  // free variable pinned to zero
    Mat k = null_space(a);
    CHECK(k.cols() == 1);
    CHECK(k(0, 0) == -2);
    CHECK(k(2, 0) == 1);
    CHECK(!solve(Mat(2, 2), {Rat(1), Rat(0)}).has_value());
}

TEST_CASE("intersection and preimage of spans") {
    // span(e1, e2) intersect span(e2, e3) = span(e2)
    Mat a(3, 2), b(3, 2);
    a(0, 0) = 1;
    a(1, 1) = 1;
    b(1, 0) = 1;
    b(2, 1) = 1;
    Mat c = intersect_spans(a, b);
    REQUIRE(c.cols() == 1);
    CHECK(c(1, 0) != 0);
    CHECK(c(0, 0) == 0);
    CHECK(c(2, 0) == 0);

    Mat f(2, 2);
    f(0, 0) = 1;  // projection onto e1
    Mat s(2, 1);
    s(0, 0) = 1;
    CHECK(preimage_of_span(f, s).cols() == 2);  // everything maps into span(e1)
}

TEST_CASE("samples respect their contracts") {
    BlockData b21({2, 1});
    Mat g = sample(SampleKind::Parabolic, b21, 2, 7);
    CHECK(det(g) != 0);
    CHECK(g(2, 0) == 0);
    CHECK(g(2, 1) == 0);

    BlockData b11({1, 1});
    Mat u = sample(SampleKind::Unipotent, b11, 2, 7);
    CHECK(u(0, 0) == 1);
    CHECK(u(1, 1) == 1);
    CHECK(u(1, 0) == 0);

    for (uint64_t s = 0; s < 25; ++s) {
        Mat n = sample_nilpotent(4, 2, s);
        auto d = nilpotency_degree(n);
        REQUIRE(d.has_value());
        CHECK(*d <= 2);
    }
    CHECK_THROWS_AS(sample_nilpotent(3, 5, 1), DomainError);
}

TEST_CASE("sampling is deterministic in the seed") {
    BlockData b(std::vector<int>{1, 2, 1});
    for (auto kind : {SampleKind::Parabolic, SampleKind::Unipotent, SampleKind::Nilpotent}) {
        CHECK(sample(kind, b, 3, 42) == sample(kind, b, 3, 42));
        CHECK(sample(kind, b, 3, 42) != sample(kind, b, 3, 43));
    }
}

TEST_SUITE_END();
