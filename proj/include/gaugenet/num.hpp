#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace gnet {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Violation of a numerical contract (Hermiticity, closure, tolerance).
// Distinct from std::invalid_argument so the CLI can map exit codes.
struct contract_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Deterministic RNG: mt19937_64 with an explicit Box-Muller normal so the
// stream does not depend on the standard library's distribution internals.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform() {
        // 53-bit mantissa, in [0,1)
        return (gen_() >> 11) * (1.0 / 9007199254740992.0);
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0.0)
            u1 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    std::uint64_t integer(std::uint64_t bound) { return gen_() % bound; }

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

inline bool is_hermitian(const Mat& m, double tol = 1e-12) {
    return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

inline bool is_unitary(const Mat& m, double tol = 1e-12) {
    if (m.rows() != m.cols())
        return false;
    Mat r = m.adjoint() * m - Mat::Identity(m.cols(), m.cols());
    return r.cwiseAbs().maxCoeff() <= tol;
}

/// Haar-distributed unitary via Ginibre + QR, with the diagonal of R made
/// real positive so the distribution is exactly Haar.
Mat haar_unitary(Eigen::Index n, Rng& rng);
Mat haar_unitary(Eigen::Index n, std::uint64_t seed);

Mat kron(const Mat& a, const Mat& b);

struct EighResult {
    Eigen::VectorXd values;  // ascending
    Mat vectors;             // columns
};

/// Eigendecomposition of a Hermitian matrix. Throws contract_error if the
/// input fails the 1e-10 Hermiticity check.
EighResult eig_hermitian(const Mat& m);

// Euclidean Clifford generators: c_mu c_nu + c_nu c_mu = 2 delta I, each c_mu
// Hermitian. For even d the grading anticommutes with every c_mu and squares
// to the identity.
struct CliffordSet {
    int dim = 0;
    std::vector<Mat> c;
    Mat grading;  // empty for odd dim

    Eigen::Index spinor_dim() const { return c.empty() ? 0 : c[0].rows(); }
};

CliffordSet clifford(int d);  // d in {2,3,4}

/// Anti-Hermitian basis of u(n), orthonormal under <X,Y> = tr(X^dag Y).
std::vector<Mat> lie_basis(Eigen::Index n);

}  // namespace gnet
