#include <random>

#include "doctest.h"
#include "kpn/model.hpp"
#include "kpn/errors.hpp"

using namespace kpn;

namespace {

BaseCochain one_triangle(const BaseComplex& K, CoeffGroup g) {
    BaseCochain z(2, g);
    z.set(K.index({0, 1, 2}), 1);
    return z;
}

BaseCochain random_base_cochain(const BaseComplex& K, int deg, CoeffGroup g, std::mt19937& rng) {
    BaseCochain c(deg, g);
    for (int id = 0; id < K.count(deg); ++id) c.set(id, static_cast<long long>(rng() % 7));
    return c;
}

ModelCochain random_model_cochain(const TwistedComplex& Y, int deg, CoeffGroup ring,
                                  std::mt19937& rng) {
    ModelCochain c;
    c.degree = deg;
    c.ring = ring;
    for (size_t i = 0; i < Y.basis(deg).size(); ++i)
        c.set(static_cast<int>(i), static_cast<long long>(rng() % ring.modulus));
    return c;
}

}  // namespace

TEST_CASE("pinned faces of small generators") {
    auto K = boundary_of_simplex(3);
    EmContext L(CoeffGroup::mod(2), 1);
    auto z = one_triangle(K, CoeffGroup::mod(2));
    ModelOptions opt;
    opt.max_degree = 3;
    TwistedComplex Y(&K, &L, z, opt);

    // (sigma^1, tau^0): boundary = (sigma_0, tau) - (sigma_1, tau)
    int e = K.index({0, 1});
    CubeId unit = L.unit();
    int col = Y.index_of(1, 1, e, unit);
    REQUIRE(col >= 0);
    const auto& d1 = Y.boundary(1);
    CHECK(d1.get(Y.index_of(0, 0, K.index({1}), unit), col) == 1);   // drops vertex 0
    CHECK(d1.get(Y.index_of(0, 0, K.index({0}), unit), col) == -1);  // drops vertex 1
    CHECK(d1.nnz() >= 2);

    // (sigma^0, tau^q): fiber boundary only; cubes of dim 1 have zero boundary
    int v = K.index({0});
    for (CubeId t : L.basis(1)) {
        int c1 = Y.index_of(1, 0, v, t);
        bool allzero = true;
        for (const auto& [k, val] : d1.entries)
            if (static_cast<int>(k & 0xffffffffu) == c1) allzero = false;
        CHECK(allzero);
    }
}

TEST_CASE("untwisted model equals the tensor product complex") {
    auto K = boundary_of_simplex(3);
    EmContext L(CoeffGroup::mod(2), 1);
    BaseCochain z0(2, CoeffGroup::mod(2));
    ModelOptions opt;
    opt.max_degree = 3;
    TwistedComplex Y(&K, &L, z0, opt);
    // with z = 0 every twisted face has a degenerate kappa factor for p-i >= 1,
    // so the boundary is the tensor-product differential: compare against the
    // cap route with a(0) = 0
    auto a0 = twisting_cochain(K, z0, L);
    CHECK(a0.is_zero());
    for (int m = 1; m <= 3; ++m) CHECK(Y.cap_boundary(m, a0) == Y.boundary(m));
}

TEST_CASE("point base reduces to the fiber complex") {
    auto pt = point_complex();
    EmContext L(CoeffGroup::mod(2), 1);
    BaseCochain z0(2, CoeffGroup::mod(2));
    ModelOptions opt;
    opt.max_degree = 3;
    TwistedComplex Y(&pt, &L, z0, opt);
    for (int m = 0; m <= 3; ++m) CHECK(Y.basis(m).size() == L.basis(m).size());
    for (int m = 1; m <= 3; ++m) {
        const auto& dm = Y.boundary(m);
        const auto& em = L.boundary_matrix(m);
        CHECK(dm == em);
    }
}

TEST_CASE("degree-2 basis count on the sphere") {
    auto K = boundary_of_simplex(3);
    EmContext L(CoeffGroup::mod(2), 1);
    BaseCochain z0(2, CoeffGroup::mod(2));
    ModelOptions opt;
    opt.max_degree = 2;
    TwistedComplex Y(&K, &L, z0, opt);
    CHECK(Y.basis(2).size() == 30);  // 4*5 + 6*1 + 4*1
}

TEST_CASE("twisted complex squares to zero and matches the cap route") {
    std::mt19937 rng(5);
    for (long long mod : {2, 3}) {
        auto K = boundary_of_simplex(3);
        EmContext L(CoeffGroup::mod(mod), 1);
        auto g = CoeffGroup::mod(mod);
        for (int trial = 0; trial < 2; ++trial) {
            auto z = (trial == 0) ? one_triangle(K, g) : random_base_cochain(K, 2, g, rng);
            ModelOptions opt;
            opt.max_degree = 3;
            TwistedComplex Y(&K, &L, z, opt);
            for (int m = 1; m < 3; ++m)
                CHECK(Y.boundary(m).multiply(Y.boundary(m + 1)).is_zero());
            auto a = twisting_cochain(K, z, L);
            for (int m = 1; m <= 3; ++m) CHECK(Y.cap_boundary(m, a) == Y.boundary(m));
        }
    }
}

TEST_CASE("negative control: corrupted sign breaks the route equality") {
    auto K = boundary_of_simplex(3);
    EmContext L(CoeffGroup::mod(2), 1);
    auto z = one_triangle(K, CoeffGroup::mod(2));
    ModelOptions opt;
    opt.max_degree = 2;
    opt.corrupt_sign = true;
    TwistedComplex Y(&K, &L, z, opt);
    auto a = twisting_cochain(K, z, L);
    CHECK(!(Y.cap_boundary(2, a) == Y.boundary(2)));  // counterexample in degree n+1
}

TEST_CASE("model homology: point base gives the fiber homology") {
    auto pt = point_complex();
    EmContext L(CoeffGroup::mod(3), 1);
    BaseCochain z0(2, CoeffGroup::mod(3));
    auto h = model_homology(pt, z0, L, 2, HomCoeff::integers());
    CHECK(h[0].betti == 1);
    CHECK(h[1].betti == 0);
    CHECK(h[1].torsion == std::vector<long long>{3});
    CHECK(h[2].betti == 0);
    CHECK(h[2].torsion.empty());
}

TEST_CASE("model homology oracles on the sphere (low degrees)") {
    auto K = boundary_of_simplex(3);
    EmContext L(CoeffGroup::mod(2), 1);
    // untwisted: Kunneth for S^2 x K(Z/2,1): H_0 = Z, H_1 = Z/2, H_2 = Z
    BaseCochain z0(2, CoeffGroup::mod(2));
    auto h = model_homology(K, z0, L, 2, HomCoeff::integers());
    CHECK(h[0].betti == 1);
    CHECK(h[0].torsion.empty());
    CHECK(h[1].betti == 0);
    CHECK(h[1].torsion == std::vector<long long>{2});
    CHECK(h[2].betti == 1);
    CHECK(h[2].torsion.empty());
    // twisted: F_2 dims 1, 0, 1
    auto z = one_triangle(K, CoeffGroup::mod(2));
    auto ht = model_homology(K, z, L, 2, HomCoeff::field(2));
    CHECK(ht[0].betti == 1);
    CHECK(ht[1].betti == 0);
    CHECK(ht[2].betti == 1);
}

TEST_CASE("cup product: unit, pinned square, Leibniz and associativity mod 3") {
    auto K = boundary_of_simplex(3);
    EmContext L(CoeffGroup::mod(3), 1);
    auto z = one_triangle(K, CoeffGroup::mod(3));
    ModelOptions opt;
    opt.max_degree = 3;
    TwistedComplex Y(&K, &L, z, opt);
    auto ring = CoeffGroup::mod(3);
    auto one = cochain_unit(Y, ring);
    std::mt19937 rng(7);
    for (int t = 0; t < 40; ++t) {
        int s = 1 + static_cast<int>(rng() % 2);
        auto x = random_model_cochain(Y, s, ring, rng);
        auto y = random_model_cochain(Y, 1, ring, rng);
        CHECK(cup_product(Y, one, x) == x);
        CHECK(cup_product(Y, x, one) == x);
        if (s + 1 <= 2) {
            auto lhs = model_coboundary(Y, cup_product(Y, x, y));
            auto rhs = model_cochain_add(
                cup_product(Y, model_coboundary(Y, x), y),
                model_cochain_scaled(cup_product(Y, x, model_coboundary(Y, y)),
                                     (s % 2) ? -1 : 1));
            CHECK(lhs == rhs);
        }
        auto w = random_model_cochain(Y, 1, ring, rng);
        if (s + 2 <= 3)
            CHECK(cup_product(Y, cup_product(Y, x, y), w) ==
                  cup_product(Y, x, cup_product(Y, y, w)));
    }
}

TEST_CASE("polynomial generator at the point base") {
    auto pt = point_complex();
    EmContext L(CoeffGroup::mod(2), 1);
    BaseCochain z0(2, CoeffGroup::mod(2));
    ModelOptions opt;
    opt.max_degree = 4;
    TwistedComplex Y(&pt, &L, z0, opt);
    auto f2 = CoeffGroup::mod(2);
    ModelCochain x;
    x.degree = 1;
    x.ring = f2;
    REQUIRE(Y.basis(1).size() == 1);
    x.set(0, 1);
    auto xx = cup_product(Y, x, x);
    auto xxx = cup_product(Y, xx, x);
    CHECK(model_coboundary(Y, x).is_zero());
    CHECK(model_coboundary(Y, xx).is_zero());
    CHECK(model_coboundary(Y, xxx).is_zero());
    // the pinned evaluation: square with edges (Fix0,Free)->1, (Free,Fix1)->1
    CubeCell c1{2, 0}, c2{1, 2};
    EmCubeData sq = L.canonicalize(2, {{c1.code(), 1}, {c2.code(), 1}});
    auto tid = L.lookup(sq);
    REQUIRE(tid.has_value());
    int idx = Y.index_of(2, 0, 0, *tid);
    REQUIRE(idx >= 0);
    CHECK(xx.value(idx) == 1);
    // classes survive in cohomology: not coboundaries mod 2
    ModpImageMembership im2(Y.boundary(2).transposed(), 2);
    ModpImageMembership im3(Y.boundary(3).transposed(), 2);
    auto vec = [&](const ModelCochain& c, int deg) {
        std::vector<long long> v(Y.basis(deg).size(), 0);
        for (auto [i, val] : c.values) v[i] = val;
        return v;
    };
    CHECK(!im2.contains(vec(xx, 2)));
    CHECK(!im3.contains(vec(xxx, 3)));
    // mod-2 commutativity of classes in low degrees
    std::mt19937 rng(11);
    for (int t = 0; t < 20; ++t) {
        auto a = random_model_cochain(Y, 1, f2, rng);
        auto b = random_model_cochain(Y, 1, f2, rng);
        if (!model_coboundary(Y, a).is_zero() || !model_coboundary(Y, b).is_zero()) continue;
        auto ab = cup_product(Y, a, b);
        auto ba = cup_product(Y, b, a);
        CHECK(im2.contains(vec(model_cochain_sub(ab, ba), 2)));
    }
}

TEST_CASE("phi is a chain isomorphism carrying the gauged model to the original") {
    std::mt19937 rng(13);
    for (long long mod : {2, 3}) {
        auto K = boundary_of_simplex(3);
        EmContext L(CoeffGroup::mod(mod), 1);
        auto g = CoeffGroup::mod(mod);
        auto z = one_triangle(K, g);
        auto c = random_base_cochain(K, 1, g, rng);
        auto zbar = cochain_add(z, coboundary(K, c));
        ModelOptions opt;
        opt.max_degree = 3;
        TwistedComplex Yz(&K, &L, z, opt);
        TwistedComplex Yzbar(&K, &L, zbar, opt);
        auto u = u_element(K, c, z, L);
        // d_z o phi = phi o d_zbar, degree by degree
        for (int m = 1; m <= 3; ++m) {
            auto phi_m = Yz.phi_matrix(u, m);
            auto phi_m1 = Yz.phi_matrix(u, m - 1);
            CHECK(Yz.boundary(m).multiply(phi_m) == phi_m1.multiply(Yzbar.boundary(m)));
        }
        // unimodular in every degree
        for (int m = 0; m <= 3; ++m) {
            auto s = smith_normal_form(Yz.phi_matrix(u, m));
            CHECK(s.rank == static_cast<int>(Yz.basis(m).size()));
            for (long long f : s.factors) CHECK(f == 1);
        }
        // u = 0 gives the identity
        AlgebraElement zero(&K, &L);
        for (int m = 0; m <= 2; ++m) {
            auto id = Yz.phi_matrix(zero, m);
            for (const auto& [k, v] : id.entries) {
                CHECK(static_cast<int>(k >> 32) == static_cast<int>(k & 0xffffffffu));
                CHECK(v == 1);
            }
            CHECK(id.nnz() == Yz.basis(m).size());
        }
    }
}

TEST_CASE("gauge invariance of homology groups") {
    std::mt19937 rng(17);
    auto K = boundary_of_simplex(3);
    EmContext L(CoeffGroup::mod(2), 1);
    auto g = CoeffGroup::mod(2);
    auto z = one_triangle(K, g);
    auto c = random_base_cochain(K, 1, g, rng);
    auto zbar = cochain_add(z, coboundary(K, c));
    auto h1 = model_homology(K, z, L, 2, HomCoeff::integers());
    auto h2 = model_homology(K, zbar, L, 2, HomCoeff::integers());
    for (int m = 0; m <= 2; ++m) {
        CHECK(h1[m].betti == h2[m].betti);
        CHECK(h1[m].torsion == h2[m].torsion);
    }
}

TEST_CASE("cocycle action on homology: identity and additivity laws") {
    auto K = boundary_of_simplex(3);
    EmContext L(CoeffGroup::mod(2), 1);
    auto g = CoeffGroup::mod(2);
    auto z = one_triangle(K, g);
    ModelOptions opt;
    opt.max_degree = 3;
    TwistedComplex Y(&K, &L, z, opt);
    std::mt19937 rng(19);

    auto check_identity_on_H = [&](const AlgebraElement& u, int max_m) {
        for (int m = 0; m <= max_m; ++m) {
            auto phi = Y.phi_matrix(u, m);
            auto kerbasis = integer_kernel_basis(Y.boundary(m));
            IntegerImageMembership img(Y.boundary(m + 1));
            for (const auto& k : kerbasis) {
                auto pk = phi.apply(k);
                std::vector<long long> diff(k.size());
                for (size_t i = 0; i < k.size(); ++i) diff[i] = pk[i] - k[i];
                CHECK(img.contains(diff));
            }
        }
    };

    // u(0, z) acts as the identity on homology
    check_identity_on_H(u_element(K, BaseCochain(1, g), z, L), 2);
    // u(delta b, z) acts as the identity on homology
    auto b = random_base_cochain(K, 0, g, rng);
    check_identity_on_H(u_element(K, coboundary(K, b), z, L), 2);

    // additivity: the action of c1 then c2 equals the action of c1 + c2
    auto random_cocycle1 = [&]() {
        while (true) {
            auto c = random_base_cochain(K, 1, g, rng);
            if (is_cocycle(K, c)) return c;
        }
    };
    for (int t = 0; t < 3; ++t) {
        auto c1 = random_cocycle1();
        auto c2 = random_cocycle1();
        auto u1 = u_element(K, c1, z, L);
        auto u2 = u_element(K, c2, z, L);
        auto u12 = u_element(K, cochain_add(c1, c2), z, L);
        for (int m = 0; m <= 2; ++m) {
            auto comp = Y.phi_matrix(u1, m).multiply(Y.phi_matrix(u2, m));
            auto direct = Y.phi_matrix(u12, m);
            auto kerbasis = integer_kernel_basis(Y.boundary(m));
            IntegerImageMembership img(Y.boundary(m + 1));
            for (const auto& k : kerbasis) {
                auto a1 = comp.apply(k);
                auto a2 = direct.apply(k);
                std::vector<long long> diff(k.size());
                for (size_t i = 0; i < k.size(); ++i) diff[i] = a1[i] - a2[i];
                CHECK(img.contains(diff));
            }
        }
    }
}

TEST_CASE("untwisted field dims match the Kunneth table") {
    auto K = boundary_of_simplex(3);
    EmContext L(CoeffGroup::mod(2), 1);
    BaseCochain z0(2, CoeffGroup::mod(2));
    auto h = model_homology(K, z0, L, 3, HomCoeff::field(2));
    std::vector<long long> dims;
    for (auto& g : h) dims.push_back(g.betti);
    CHECK(dims == std::vector<long long>{1, 1, 2, 2});
}

TEST_CASE("homology action matrices form a group action") {
    std::mt19937 rng(23);
    for (long long p : {2, 3}) {
        auto K = boundary_of_simplex(3);
        EmContext L(CoeffGroup::mod(p), 1);
        auto g = CoeffGroup::mod(p);
        BaseCochain z(2, g);
        z.set(K.index({0, 1, 2}), 1);
        ModelOptions opt;
        opt.max_degree = 3;
        TwistedComplex Y(&K, &L, z, opt);

        auto random_cocycle1 = [&]() {
            while (true) {
                BaseCochain c(1, g);
                for (int id = 0; id < K.count(1); ++id)
                    c.set(id, static_cast<long long>(rng() % p));
                if (is_cocycle(K, c)) return c;
            }
        };
        auto matmul = [&](const std::vector<std::vector<long long>>& A,
                          const std::vector<std::vector<long long>>& B) {
            size_t n = A.size();
            std::vector<std::vector<long long>> C(n, std::vector<long long>(n, 0));
            for (size_t i = 0; i < n; ++i)
                for (size_t k = 0; k < n; ++k)
                    if (A[i][k])
                        for (size_t j = 0; j < n; ++j)
                            C[i][j] = (C[i][j] + A[i][k] * B[k][j]) % p;
            return C;
        };
        auto is_identity = [&](const std::vector<std::vector<long long>>& A) {
            for (size_t i = 0; i < A.size(); ++i)
                for (size_t j = 0; j < A.size(); ++j)
                    if (A[i][j] % p != (i == j ? 1 : 0)) return false;
            return true;
        };

        for (int m = 0; m <= 2; ++m) {
            // trivial cocycles act trivially
            CHECK(is_identity(homology_action_matrix(Y, BaseCochain(1, g), m, p)));
            BaseCochain b(0, g);
            for (int id = 0; id < K.count(0); ++id) b.set(id, static_cast<long long>(rng() % p));
            CHECK(is_identity(homology_action_matrix(Y, coboundary(K, b), m, p)));

            auto c1 = random_cocycle1();
            auto c2 = random_cocycle1();
            auto A1 = homology_action_matrix(Y, c1, m, p);
            auto A2 = homology_action_matrix(Y, c2, m, p);
            auto A12 = homology_action_matrix(Y, cochain_add(c1, c2), m, p);
            CHECK(matmul(A1, A2) == A12);
            // the action depends only on the class of c
            BaseCochain b2(0, g);
            b2.set(0, 1);
            auto Ac = homology_action_matrix(Y, cochain_add(c1, coboundary(K, b2)), m, p);
            CHECK(Ac == A1);
        }
    }
}

TEST_CASE("the twisted face of a top pair lands on the obstruction value") {
    // on (sigma^{n+1}, unit): the first zero-face is (front vertex, [z(sigma)])
    auto K = boundary_of_simplex(3);
    EmContext L(CoeffGroup::mod(5), 1);
    auto g = CoeffGroup::mod(5);
    BaseCochain z(2, g);
    z.set(K.index({0, 1, 2}), 3);
    ModelOptions opt;
    opt.max_degree = 2;
    TwistedComplex Y(&K, &L, z, opt);
    TwistedGen top{2, K.index({0, 1, 2}), L.unit()};
    auto f = Y.face(2, top, 1, 0);
    CHECK(f.p == 0);
    CHECK(f.sigma == K.index({0}));
    REQUIRE(f.tau.p == 1);
    REQUIRE(f.tau.values.size() == 1);
    CHECK(f.tau.values[0].second == 3);
}

TEST_CASE("contractible base: every twist is gauge-trivial") {
    // over the full tetrahedron any cocycle is a coboundary, so the twisted
    // homology must equal the fiber homology
    auto K = full_simplex(3);
    EmContext L(CoeffGroup::mod(2), 1);
    auto g = CoeffGroup::mod(2);
    std::mt19937 rng(31);
    BaseCochain c(1, g);
    for (int id = 0; id < K.count(1); ++id) c.set(id, static_cast<long long>(rng() % 2));
    auto z = coboundary(K, c);
    REQUIRE(is_cocycle(K, z));
    REQUIRE(cohomologous(K, z, BaseCochain(2, g)).has_value());
    auto h = model_homology(K, z, L, 2, HomCoeff::integers());
    CHECK(h[0].betti == 1);
    CHECK(h[0].torsion.empty());
    CHECK(h[1].betti == 0);
    CHECK(h[1].torsion == std::vector<long long>{2});
    CHECK(h[2].betti == 0);
    CHECK(h[2].torsion.empty());
}

TEST_CASE("n = 2 model over the 3-sphere: squares to zero, routes agree") {
    auto K = boundary_of_simplex(4);
    std::mt19937 rng(53);
    for (long long mod : {2, 3}) {
        EmContext L(CoeffGroup::mod(mod), 2);
        auto g = CoeffGroup::mod(mod);
        BaseCochain z(3, g);
        z.set(K.index({0, 1, 2, 3}), 1);
        ModelOptions opt;
        opt.max_degree = 3;
        TwistedComplex Y(&K, &L, z, opt);
        for (int m = 1; m < 3; ++m)
            CHECK(Y.boundary(m).multiply(Y.boundary(m + 1)).is_zero());
        auto a = twisting_cochain(K, z, L);
        for (int m = 1; m <= 3; ++m) CHECK(Y.cap_boundary(m, a) == Y.boundary(m));
    }
}

TEST_CASE("n = 2 untwisted homology over the 2-sphere matches the Kunneth table") {
    // the only 3-cocycle on the 2-sphere is zero, so the model is forced to be
    // the tensor product; its homology combines H(S^2) with the fiber table
    auto K = boundary_of_simplex(3);
    EmContext L(CoeffGroup::mod(2), 2);
    BaseCochain z0(3, CoeffGroup::mod(2));
    auto got = model_homology(K, z0, L, 2, HomCoeff::integers());
    EmContext Lo(CoeffGroup::mod(2), 2);
    auto fiber = Lo.homology(2, HomCoeff::integers());
    CHECK(fiber[0].betti == 1);
    CHECK(fiber[1].betti == 0);
    CHECK(fiber[1].torsion.empty());
    CHECK(fiber[2].torsion == std::vector<long long>{2});
    // H_m(S^2 x F) = H_m(F) + H_{m-2}(F), Tor-free in this range
    CHECK(got[0].betti == 1);
    CHECK(got[0].torsion.empty());
    CHECK(got[1].betti == 0);
    CHECK(got[1].torsion.empty());
    CHECK(got[2].betti == 1);
    CHECK(got[2].torsion == std::vector<long long>{2});
}
