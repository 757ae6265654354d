#include "gaugenet/finalg.hpp"

#include <doctest.h>

using namespace gnet;

namespace {

AlgebraObject obj(std::vector<std::pair<int, int>> blocks) {
    AlgebraObject a;
    for (auto [N, n] : blocks)
        a.blocks.push_back({N, n});
    return a;
}

// Independent admissibility oracle: build the canonical block embedding as
// matrices and check (a) the identity maps to the identity and (b) the
// characters of lambda_1 and lambda_2 . phi_B agree on block identities
// (character equality decides unitary equivalence of *-representations).
bool oracle_admissible(const AlgebraObject& a1, const AlgebraObject& a2,
                       const Eigen::MatrixXi& d) {
    int k1 = a1.block_count(), k2 = a2.block_count();
    auto embed = [&](int j, const BlockElement& x) {
        int Nj = a2.blocks[j].N;
        Mat m = Mat::Zero(Nj, Nj);
        int off = 0;
        for (int i = 0; i < k1; ++i)
            for (int s = 0; s < d(i, j); ++s) {
                if (off + a1.blocks[i].N > Nj)
                    return Mat();  // overfull column
                m.block(off, off, a1.blocks[i].N, a1.blocks[i].N) = x[i];
                off += a1.blocks[i].N;
            }
        return m;
    };
    BlockElement one = identity_element(a1);
    for (int j = 0; j < k2; ++j) {
        Mat m = embed(j, one);
        if (m.size() == 0 ||
            (m - Mat::Identity(a2.blocks[j].N, a2.blocks[j].N)).cwiseAbs().maxCoeff() > 0)
            return false;  // not unital
    }
    if (a1.hilbert_dim() != a2.hilbert_dim())
        return false;
    for (int i = 0; i < k1; ++i) {
        BlockElement e;
        for (int k = 0; k < k1; ++k)
            e.push_back(k == i ? Mat::Identity(a1.blocks[k].N, a1.blocks[k].N).eval()
                               : Mat::Zero(a1.blocks[k].N, a1.blocks[k].N).eval());
        BlockElement img;
        for (int j = 0; j < k2; ++j)
            img.push_back(embed(j, e));
        cd lhs = represent(a1, e).trace();
        cd rhs = represent(a2, img).trace();
        if (std::abs(lhs - rhs) > 0)
            return false;  // representations not equivalent
    }
    return true;
}

std::vector<Eigen::MatrixXi> all_candidate_matrices(const AlgebraObject& a1,
                                                    const AlgebraObject& a2) {
    int k1 = a1.block_count(), k2 = a2.block_count();
    std::vector<Eigen::MatrixXi> out;
    Eigen::MatrixXi d = Eigen::MatrixXi::Zero(k1, k2);
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == k1 * k2) {
            out.push_back(d);
            return;
        }
        int i = idx / k2, j = idx % k2;
        int bound = a2.blocks[j].N / a1.blocks[i].N;
        for (int v = 0; v <= bound; ++v) {
            d(i, j) = v;
            self(self, idx + 1);
        }
        d(i, j) = 0;
    };
    rec(rec, 0);
    return out;
}

}  // namespace

TEST_CASE("identity embedding M_N -> M_N has a unique diagram") {
    for (int N : {1, 2, 3}) {
        auto a = obj({{N, 1}});
        auto list = enumerate_bratteli(a, a);
        REQUIRE(list.size() == 1);
        CHECK(list[0].d(0, 0) == 1);
    }
}

TEST_CASE("C -> C + M2 with trivially acting C has a unique diagram") {
    auto a1 = obj({{1, 2}});          // C acting on C + C
    auto a2 = obj({{1, 0}, {2, 1}});  // the C summand acts as zero on H2 = C^2
    auto list = enumerate_bratteli(a1, a2);
    REQUIRE(list.size() == 1);
    CHECK(list[0].d(0, 0) == 1);
    CHECK(list[0].d(0, 1) == 2);

    // phi(z) = z + z 1_2
    Morphism m = canonical_morphism(list[0]);
    BlockElement z{Mat::Constant(1, 1, cd(2.5, 0.5))};
    BlockElement img = apply_morphism(m, z);
    CHECK(std::abs(img[0](0, 0) - cd(2.5, 0.5)) == 0.0);
    CHECK((img[1] - cd(2.5, 0.5) * Mat::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("C + M2 -> M3: one admissible of two algebra-level diagrams") {
    auto a1 = obj({{1, 1}, {2, 1}});
    auto a2 = obj({{3, 1}});
    auto list = enumerate_bratteli(a1, a2);
    REQUIRE(list.size() == 1);
    CHECK(list[0].d(0, 0) == 1);
    CHECK(list[0].d(1, 0) == 1);

    // with trivial Hilbert spaces the equivariance constraint disappears and
    // the kernel variant (z, a) -> z 1_3 is admissible as well
    auto alg_only = enumerate_bratteli(obj({{1, 0}, {2, 0}}), obj({{3, 0}}));
    CHECK(alg_only.size() == 2);
}

TEST_CASE("M2 + M3 -> M5 + M3 is forced to (a, b) -> (a + b, b)") {
    auto list = enumerate_bratteli(obj({{2, 0}, {3, 0}}), obj({{5, 0}, {3, 0}}));
    REQUIRE(list.size() == 1);
    CHECK(list[0].d(0, 0) == 1);
    CHECK(list[0].d(1, 0) == 1);
    CHECK(list[0].d(0, 1) == 0);
    CHECK(list[0].d(1, 1) == 1);
}

TEST_CASE("M2 -> M4 with trivial Hilbert spaces: 1_2 (x) a") {
    auto list = enumerate_bratteli(obj({{2, 0}}), obj({{4, 0}}));
    REQUIRE(list.size() == 1);
    CHECK(list[0].d(0, 0) == 2);

    Morphism m = canonical_morphism(list[0]);
    Rng rng(3);
    BlockElement a = random_element(m.source, rng);
    BlockElement img = apply_morphism(m, a);
    CHECK((img[0] - kron(Mat::Identity(2, 2), a[0])).cwiseAbs().maxCoeff() == 0.0);

    // diag(1,2) -> diag(1,2,1,2) under the same embedding read copy-wise
    BlockElement diag{Mat::Zero(2, 2)};
    diag[0](0, 0) = 1;
    diag[0](1, 1) = 2;
    Mat want = Mat::Zero(4, 4);
    want.diagonal() << 1, 2, 1, 2;
    CHECK((apply_morphism(m, diag)[0] - want).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("exhaustive small-case oracle agreement") {
    std::vector<std::pair<AlgebraObject, AlgebraObject>> cases = {
        {obj({{1, 1}}), obj({{1, 1}})},
        {obj({{1, 2}}), obj({{1, 0}, {2, 1}})},
        {obj({{1, 1}, {2, 1}}), obj({{3, 1}})},
        {obj({{1, 0}, {2, 0}}), obj({{3, 0}})},
        {obj({{2, 0}}), obj({{4, 0}})},
        {obj({{1, 1}, {1, 1}}), obj({{2, 1}})},
        {obj({{1, 1}, {1, 1}}), obj({{1, 1}, {1, 1}})},
        {obj({{1, 1}}), obj({{1, 1}, {2, 0}})},
        {obj({{2, 1}}), obj({{2, 1}, {2, 0}})},
        {obj({{1, 3}}), obj({{1, 1}, {2, 1}})},
    };
    for (const auto& [a1, a2] : cases) {
        auto found = enumerate_bratteli(a1, a2);
        std::vector<Eigen::MatrixXi> expected;
        for (const auto& d : all_candidate_matrices(a1, a2))
            if (oracle_admissible(a1, a2, d))
                expected.push_back(d);
        REQUIRE(found.size() == expected.size());
        for (const auto& d : expected) {
            bool present = false;
            for (const auto& b : found)
                present = present || (b.d.array() == d.array()).all();
            CHECK(present);
        }
    }
}

TEST_CASE("apply_morphism: homomorphism and adjoint properties") {
    auto a1 = obj({{1, 1}, {2, 1}});
    auto a2 = obj({{3, 1}});
    Rng rng(17);
    Morphism m = random_morphism(enumerate_bratteli(a1, a2)[0], rng);
    BlockElement x = random_element(a1, rng), y = random_element(a1, rng);
    BlockElement xy, xdag;
    for (std::size_t i = 0; i < x.size(); ++i) {
        xy.push_back(x[i] * y[i]);
        xdag.push_back(x[i].adjoint());
    }
    auto px = apply_morphism(m, x), py = apply_morphism(m, y), pxy = apply_morphism(m, xy);
    for (std::size_t j = 0; j < pxy.size(); ++j) {
        CHECK((pxy[j] - px[j] * py[j]).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((apply_morphism(m, xdag)[j] - px[j].adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    }
    BlockElement bad{Mat::Zero(2, 2), Mat::Zero(2, 2)};
    CHECK_THROWS_AS(apply_morphism(m, bad), std::invalid_argument);
}

TEST_CASE("equivariance of random morphisms") {
    std::vector<std::pair<AlgebraObject, AlgebraObject>> cases = {
        {obj({{2, 1}}), obj({{2, 1}})},
        {obj({{1, 2}}), obj({{1, 0}, {2, 1}})},
        {obj({{1, 1}, {2, 1}}), obj({{3, 1}})},
        {obj({{1, 3}}), obj({{1, 1}, {2, 1}})},
        {obj({{2, 2}}), obj({{2, 1}, {2, 1}, {3, 0}})},
    };
    Rng rng(99);
    for (const auto& [a1, a2] : cases)
        for (const auto& b : enumerate_bratteli(a1, a2)) {
            Morphism m = random_morphism(b, rng);
            CHECK(is_unitary(m.L, 1e-12));
            CHECK(equivariance_defect(m, rng) < 1e-10);
            CHECK(canonical_morphism(b).diagram == b);
        }
}

TEST_CASE("composition: diagram product, equivariance, associativity") {
    auto A = obj({{1, 3}});
    auto B = obj({{1, 1}, {2, 1}});
    auto C = obj({{3, 1}});
    auto D = obj({{3, 1}, {3, 0}});
    auto bAB = enumerate_bratteli(A, B);
    auto bBC = enumerate_bratteli(B, C);
    auto bCD = enumerate_bratteli(C, D);
    REQUIRE(bAB.size() == 1);
    REQUIRE(bBC.size() == 1);
    REQUIRE(bCD.size() == 1);

    Rng rng(7);
    Morphism m1 = random_morphism(bAB[0], rng);
    Morphism m2 = random_morphism(bBC[0], rng);
    Morphism m3 = random_morphism(bCD[0], rng);

    // multiplicity matrices multiply: C -> C+M2 -> M3 lands at z -> z 1_3
    Morphism c21 = compose(m2, m1);
    CHECK(c21.diagram.d(0, 0) == 3);
    CHECK(equivariance_defect(c21, rng) < 1e-10);
    CHECK((c21.L - m2.L * m1.L).cwiseAbs().maxCoeff() < 1e-13);

    Morphism left = compose(m3, compose(m2, m1));
    Morphism right = compose(compose(m3, m2), m1);
    CHECK(morphism_equal(left, right, 1e-10));

    CHECK(morphism_equal(compose(m1, identity_morphism(A)), m1, 1e-12));
    CHECK(morphism_equal(compose(identity_morphism(B), m1), m1, 1e-12));

    CHECK_THROWS_AS(compose(m1, m2), std::invalid_argument);
}

TEST_CASE("hom_descriptor group dimensions") {
    auto e0 = hom_descriptor(obj({{2, 1}}), obj({{2, 1}}));
    REQUIRE(e0.size() == 1);
    CHECK(e0[0].aut_dim == 5);  // dim U(2) + dim U(1)
    CHECK(e0[0].orbit_dim == 0);
    CHECK(e0[0].central_redundancy == 1);

    auto e1 = hom_descriptor(obj({{2, 0}}), obj({{4, 0}}));
    REQUIRE(e1.size() == 1);
    CHECK(e1[0].aut_dim == 0);
    CHECK(e1[0].orbit_dim == 12);  // U(4)/U(2)

    auto e2 = hom_descriptor(obj({{2, 0}}), obj({{2, 0}}));
    REQUIRE(e2.size() == 1);
    CHECK(e2[0].orbit_dim == 3);  // U(2)/U(1)
}

TEST_CASE("automorphism structure") {
    auto spin = automorphisms(obj({{3, 1}}));
    REQUIRE(spin.continuous.size() == 1);
    CHECK(spin.continuous[0].N == 3);
    CHECK_FALSE(spin.continuous[0].kernel);
    CHECK(spin.continuous_dim() == 10);  // U(3) x U(1)
    CHECK(spin.tilde_permutations.empty());
    CHECK(spin.kernel_permutations.empty());

    auto twins = automorphisms(obj({{2, 0}, {2, 0}}));
    CHECK(twins.continuous_dim() == 6);  // PU(2) x PU(2)
    REQUIRE(twins.kernel_permutations.size() == 1);
    CHECK(twins.kernel_permutations[0] == std::vector<int>{0, 1});

    auto sm = automorphisms(obj({{1, 1}, {2, 1}, {3, 1}}));
    CHECK(sm.continuous_dim() == (1 + 1) + (4 + 1) + (9 + 1));
    CHECK(sm.tilde_permutations.empty());
    CHECK(sm.kernel_permutations.empty());
}
