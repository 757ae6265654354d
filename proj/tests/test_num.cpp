#include "gaugenet/num.hpp"

#include <doctest.h>

using namespace gnet;

TEST_CASE("haar unitaries are unitary and deterministic") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Eigen::Index n = 1 + seed % 16;
        Mat u = haar_unitary(n, seed);
        Mat r = u.adjoint() * u - Mat::Identity(n, n);
        CHECK(r.cwiseAbs().maxCoeff() < 1e-12);
    }
    CHECK((haar_unitary(3, 42) - haar_unitary(3, 42)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((haar_unitary(3, 42) - haar_unitary(3, 43)).cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("haar at n = 1 is a unimodular scalar") {
    Mat u = haar_unitary(1, 7);
    CHECK(std::abs(std::abs(u(0, 0)) - 1.0) < 1e-14);
    CHECK_THROWS_AS(haar_unitary(0, 1), std::invalid_argument);
}

// Weyl integration on U(2): E|tr U|^2 = (1/2) (1/2pi)^2 int |e^{i a}+e^{i b}|^2
// |e^{i a}-e^{i b}|^2 da db, evaluated by the trapezoid rule (periodic, so
// spectrally accurate). The Haar sample mean must agree within 5 sigma.
TEST_CASE("haar moment E|tr U|^2 = 1 at n = 2") {
    int q = 256;
    double quad = 0;
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            double a = 2 * M_PI * i / q, b = 2 * M_PI * j / q;
            cd ta = std::exp(cd(0, a)) + std::exp(cd(0, b));
            cd tb = std::exp(cd(0, a)) - std::exp(cd(0, b));
            quad += std::norm(ta) * std::norm(tb);
        }
    quad *= 0.5 / (static_cast<double>(q) * q);
    CHECK(quad == doctest::Approx(1.0).epsilon(1e-10));

    Rng rng(2024);
    int samples = 10000;
    double mean = 0, m2 = 0;
    for (int s = 0; s < samples; ++s) {
        double v = std::norm(haar_unitary(2, rng).trace());
        mean += v;
        m2 += v * v;
    }
    mean /= samples;
    m2 /= samples;
    double sigma = std::sqrt((m2 - mean * mean) / samples);
    CHECK(std::abs(mean - quad) < 5 * sigma);
}

TEST_CASE("kron basics") {
    Mat i2 = Mat::Identity(2, 2), i3 = Mat::Identity(3, 3);
    CHECK((kron(i2, i3) - Mat::Identity(6, 6)).cwiseAbs().maxCoeff() == 0.0);

    Mat d(2, 2);
    d << 1, 0, 0, 2;
    Mat k = kron(d, i2);
    Mat want = Mat::Zero(4, 4);
    want.diagonal() << 1, 1, 2, 2;
    CHECK((k - want).cwiseAbs().maxCoeff() == 0.0);

    Rng rng(5);
    Mat a(2, 2), b(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            a(i, j) = cd(rng.normal(), rng.normal());
            b(i, j) = cd(rng.normal(), rng.normal());
        }
    CHECK(std::abs(kron(a, b).trace() - a.trace() * b.trace()) < 1e-12);
}

TEST_CASE("eig_hermitian on fixed matrices") {
    auto id = eig_hermitian(Mat::Identity(3, 3));
    for (int k = 0; k < 3; ++k)
        CHECK(id.values(k) == doctest::Approx(1.0));

    Mat d = Mat::Zero(3, 3);
    d.diagonal() << 3, 1, 2;
    auto eg = eig_hermitian(d);
    CHECK(eg.values(0) == doctest::Approx(1.0));
    CHECK(eg.values(1) == doctest::Approx(2.0));
    CHECK(eg.values(2) == doctest::Approx(3.0));

    Mat bad(2, 2);
    bad << 0, 1, 0, 0;
    CHECK_THROWS_AS(eig_hermitian(bad), contract_error);
}

TEST_CASE("eig_hermitian reconstruction and trace identity") {
    Rng rng(11);
    for (int trial = 0; trial < 3; ++trial) {
        int n = 32;
        Mat g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                g(i, j) = cd(rng.normal(), rng.normal());
        Mat h = 0.5 * (g + g.adjoint());
        auto eg = eig_hermitian(h);
        Mat rec = eg.vectors * eg.values.asDiagonal().toDenseMatrix().cast<cd>() *
                  eg.vectors.adjoint();
        CHECK((rec - h).cwiseAbs().maxCoeff() < 1e-9);
        CHECK(std::abs(eg.values.sum() - h.trace().real()) < 1e-10);
    }
}

TEST_CASE("clifford generators satisfy the defining relations exactly") {
    for (int d : {2, 3, 4}) {
        CliffordSet cs = clifford(d);
        Eigen::Index s = cs.spinor_dim();
        CHECK(s == (1 << (d / 2)));
        for (int mu = 0; mu < d; ++mu) {
            CHECK((cs.c[mu] - cs.c[mu].adjoint()).cwiseAbs().maxCoeff() == 0.0);
            for (int nu = 0; nu < d; ++nu) {
                Mat anti = cs.c[mu] * cs.c[nu] + cs.c[nu] * cs.c[mu];
                Mat want = (mu == nu) ? (2.0 * Mat::Identity(s, s)).eval() : Mat::Zero(s, s).eval();
                CHECK((anti - want).cwiseAbs().maxCoeff() == 0.0);
            }
        }
    }
    CHECK_THROWS_AS(clifford(5), std::invalid_argument);
}

TEST_CASE("clifford d = 4: trace normalization and grading") {
    CliffordSet cs = clifford(4);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            cd tr = (cs.c[mu] * cs.c[nu]).trace();
            CHECK(std::abs(tr - cd(mu == nu ? 4.0 : 0.0)) == 0.0);
        }
    const Mat& g = cs.grading;
    CHECK((g - g.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((g * g - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);
    for (int mu = 0; mu < 4; ++mu)
        CHECK((g * cs.c[mu] * g + cs.c[mu]).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("lie basis: orthonormal, anti-Hermitian, complete") {
    auto b1 = lie_basis(1);
    REQUIRE(b1.size() == 1);
    CHECK(std::abs(b1[0](0, 0) - cd(0, 1)) == 0.0);

    for (int n : {2, 3}) {
        auto basis = lie_basis(n);
        REQUIRE(basis.size() == static_cast<std::size_t>(n * n));
        for (std::size_t a = 0; a < basis.size(); ++a) {
            CHECK((basis[a] + basis[a].adjoint()).cwiseAbs().maxCoeff() < 1e-15);
            for (std::size_t b = 0; b < basis.size(); ++b) {
                cd ip = (basis[a].adjoint() * basis[b]).trace();
                CHECK(std::abs(ip - cd(a == b ? 1.0 : 0.0)) < 1e-15);
            }
        }
        Mat sum = Mat::Zero(n, n);
        for (const auto& x : basis)
            sum += x * x.adjoint();
        CHECK((sum - double(n) * Mat::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-13);
    }
}
