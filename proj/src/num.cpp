#include "gaugenet/num.hpp"

namespace gnet {

Mat haar_unitary(Eigen::Index n, Rng& rng) {
    if (n < 1)
        throw std::invalid_argument("haar_unitary: dimension must be >= 1");
    Mat g(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            g(i, j) = cd(rng.normal(), rng.normal()) / std::sqrt(2.0);
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < n; ++k) {
        cd d = r(k, k);
        double a = std::abs(d);
        q.col(k) *= (a == 0.0) ? cd(1, 0) : d / a;
    }
    return q;
}

Mat haar_unitary(Eigen::Index n, std::uint64_t seed) {
    Rng rng(seed);
    return haar_unitary(n, rng);
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

EighResult eig_hermitian(const Mat& m) {
    if (!is_hermitian(m, 1e-10))
        throw contract_error("eig_hermitian: input is not Hermitian to 1e-10");
    Eigen::SelfAdjointEigenSolver<Mat> es(m);
    if (es.info() != Eigen::Success)
        throw contract_error("eig_hermitian: eigensolver failed");
    return {es.eigenvalues(), es.eigenvectors()};
}

namespace {

Mat pauli(int k) {
    Mat s(2, 2);
    switch (k) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, cd(0, -1), cd(0, 1), 0; break;
    default: s << 1, 0, 0, -1; break;
    }
    return s;
}

}  // namespace

CliffordSet clifford(int d) {
    CliffordSet cs;
    cs.dim = d;
    Mat id2 = Mat::Identity(2, 2);
    switch (d) {
    case 2:
        cs.c = {pauli(1), pauli(2)};
        break;
    case 3:
        cs.c = {pauli(1), pauli(2), pauli(3)};
        break;
    case 4:
        cs.c = {kron(pauli(1), pauli(1)), kron(pauli(1), pauli(2)),
                kron(pauli(1), pauli(3)), kron(pauli(2), id2)};
        break;
    default:
        throw std::invalid_argument("clifford: only d in {2,3,4} supported");
    }
    if (d % 2 == 0) {
        // product of all generators, phase-fixed to be Hermitian and involutive
        Mat p = cs.c[0];
        for (int k = 1; k < d; ++k)
            p = p * cs.c[k];
        // p^2 = (-1)^{d(d-1)/2} I; multiply by i^{d(d-1)/2} to square to +I
        int half = (d * (d - 1) / 2) % 4;
        cd phase = std::pow(cd(0, 1), half);
        cs.grading = phase * p;
    }
    return cs;
}

std::vector<Mat> lie_basis(Eigen::Index n) {
    if (n < 1)
        throw std::invalid_argument("lie_basis: dimension must be >= 1");
    std::vector<Mat> basis;
    basis.reserve(static_cast<std::size_t>(n * n));
    const cd I(0, 1);
    for (Eigen::Index k = 0; k < n; ++k) {
        Mat x = Mat::Zero(n, n);
        x(k, k) = I;
        basis.push_back(x);
    }
    const double s = 1.0 / std::sqrt(2.0);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = j + 1; k < n; ++k) {
            Mat x = Mat::Zero(n, n);
            x(j, k) = s;
            x(k, j) = -s;
            basis.push_back(x);
            Mat y = Mat::Zero(n, n);
            y(j, k) = I * s;
            y(k, j) = I * s;
            basis.push_back(y);
        }
    return basis;
}

}  // namespace gnet
