#include <set>

#include "doctest.h"
#include "kpn/cube.hpp"
#include "kpn/smith.hpp"

using namespace kpn;

namespace {
CubeCell word(std::initializer_list<int> letters) {
    CubeCell c;
    int i = 0;
    for (int l : letters) {
        if (l == 2)
            c.free_mask |= 1u << i;
        else if (l == 1)
            c.ones_mask |= 1u << i;
        ++i;
    }
    return c;
}
}  // namespace

TEST_CASE("cell_faces pinned examples") {
    // (Free) -> -(Fix0) + (Fix1)
    auto f1 = cell_faces(word({2}));
    REQUIRE(f1.size() == 2);
    CHECK(f1[0].first == word({0}));
    CHECK(f1[0].second == -1);
    CHECK(f1[1].first == word({1}));
    CHECK(f1[1].second == 1);

    // (Free,Free) -> -(Fix0,Free) + (Fix1,Free) + (Free,Fix0) - (Free,Fix1)
    auto f2 = cell_faces(word({2, 2}));
    REQUIRE(f2.size() == 4);
    CHECK(f2[0].first == word({0, 2}));
    CHECK(f2[0].second == -1);
    CHECK(f2[1].first == word({1, 2}));
    CHECK(f2[1].second == 1);
    CHECK(f2[2].first == word({2, 0}));
    CHECK(f2[2].second == 1);
    CHECK(f2[3].first == word({2, 1}));
    CHECK(f2[3].second == -1);

    CHECK(cell_faces(word({0, 1})).empty());
}

TEST_CASE("coboundary matrix pinned examples") {
    auto m = coboundary_matrix(1, 0);
    REQUIRE(m.rows == 1);
    REQUIRE(m.cols == 2);
    CellTable verts(1, 0);
    int i0 = verts.index(word({0})), i1 = verts.index(word({1}));
    CHECK(m.get(0, i0) == -1);
    CHECK(m.get(0, i1) == 1);

    auto m2 = coboundary_matrix(2, 1);
    REQUIRE(m2.rows == 1);
    REQUIRE(m2.cols == 4);
    long long sum = 0;
    for (int j = 0; j < 4; ++j) {
        long long v = m2.get(0, j);
        CHECK(v != 0);
        CHECK(std::abs(v) == 1);
        sum += v;
    }
    CHECK(sum == 0);
}

TEST_CASE("boundary of boundary vanishes for p <= 6") {
    for (int p = 2; p <= 6; ++p)
        for (int k = 0; k + 2 <= p; ++k) {
            auto d1 = coboundary_matrix(p, k);
            auto d2 = coboundary_matrix(p, k + 1);
            CHECK(d2.multiply(d1).is_zero());
        }
}

TEST_CASE("psi vertex counts leading ones") {
    CHECK(psi_vertex({1, 1, 0}) == 2);
    CHECK(psi_vertex({0, 0, 0, 0}) == 0);
    CHECK(psi_vertex({1, 1, 1, 1, 1}) == 5);
    CHECK(psi_vertex({}) == 0);
    CHECK(psi_vertex({0, 1, 1}) == 0);
}

TEST_CASE("cube_image_simplex pinned examples") {
    // full cube of I^m -> {0..m}
    for (int m = 1; m <= 4; ++m) {
        auto s = cube_image_simplex(CubeCell::top(m), m);
        REQUIRE(static_cast<int>(s.size()) == m + 1);
        for (int i = 0; i <= m; ++i) CHECK(s[i] == i);
    }
    // (Free,Free,Fix0) in I^3 -> {0,1,2}
    CHECK(cube_image_simplex(word({2, 2, 0}), 3) == std::vector<int>{0, 1, 2});
    // (Fix0,Free,Free) in I^3 -> {0}
    CHECK(cube_image_simplex(word({0, 2, 2}), 3) == std::vector<int>{0});
}

TEST_CASE("image size bounded by dim + 1") {
    for (int p = 0; p <= 5; ++p)
        for (int k = 0; k <= p; ++k) {
            CellTable cells(p, k);
            for (int i = 0; i < cells.size(); ++i) {
                auto s = cube_image_simplex(cells.cell(i), p);
                CHECK(static_cast<int>(s.size()) <= k + 1);
            }
        }
}

TEST_CASE("cell table is a bijective index") {
    for (int p = 0; p <= 5; ++p) {
        int total = 0;
        for (int k = 0; k <= p; ++k) {
            CellTable t(p, k);
            total += t.size();
            std::set<uint32_t> seen;
            for (int i = 0; i < t.size(); ++i) {
                CHECK(t.index(t.cell(i)) == i);
                CHECK(seen.insert(t.cell(i).code()).second);
                CHECK(t.cell(i).dim() == k);
            }
        }
        int pow3 = 1;
        for (int i = 0; i < p; ++i) pow3 *= 3;
        CHECK(total == pow3);  // 3^p cells in I^p
    }
}
