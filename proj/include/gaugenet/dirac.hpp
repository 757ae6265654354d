#pragma once

#include "gaugenet/quiver.hpp"

namespace gnet {

/// One gamma matrix per edge: gamma_e = i c(theta^e) with theta^e the dual
/// covector of the outgoing frame at s(e). For axis-aligned lattice edges
/// this is i c_mu. Reversed edges use the adjoint.
std::vector<Mat> edge_gammas(const EmbeddedQuiver& eq, const CliffordSet& cs);

struct LatticeDirac {
    Mat matrix;  // Hermitian, dim = spinor_dim * sum_v dim H_v
    int spinor_dim = 0;
    std::vector<int> block_offset;  // per vertex
    std::vector<int> hdim;          // per vertex
};

/// Hopping terms (1/2l_e) gamma_e (x) L_e plus the grading term
/// grading (x) D_v on the diagonal (even dimension only).
LatticeDirac assemble(const EmbeddedQuiver& eq, const QuiverRep& rep, const CliffordSet& cs);

Vec apply(const LatticeDirac& ld, const Vec& psi);

/// Ascending eigenvalues; dense solve, capped at dimension 4096.
Eigen::VectorXd spectrum(const LatticeDirac& ld);

/// Block-diagonal unitary (U(g) psi)_v = lambda_v(g_v) psi_v on spinor (x) H.
Mat gauge_unitary(const QuiverRep& rep, const GaugeTransform& g, const CliffordSet& cs);

}  // namespace gnet
