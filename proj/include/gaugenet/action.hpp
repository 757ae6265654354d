#pragma once

#include "gaugenet/dirac.hpp"

#include <functional>

namespace gnet {

// Term-by-term evaluation of l^4 Tr(D^4)/dim S. The Wilson part collects all
// link-dependent closed 4-hop walks, the constant part the telescoping ones;
// the Higgs terms come from 2-hop walks with two finite-Dirac insertions and
// from the quartic diagonal term.
struct ActionBreakdown {
    double total = 0;
    double wilson = 0;
    double higgs_hopping = 0;
    double higgs_mass = 0;
    double higgs_quartic = 0;
    double constant = 0;
    double total_unnormalized = 0;  // l^4 Tr(D^4) without the spinor-trace normalization
    int spinor_dim = 0;
};

/// Normalized spectral action (l^4 / dim S) Tr(D^4) by dense multiplication.
double spectral_action_exact(const LatticeDirac& ld, double l);
double spectral_action_exact_unnormalized(const LatticeDirac& ld, double l);

ActionBreakdown spectral_action_closed(const EmbeddedQuiver& eq, const QuiverRep& rep,
                                       const CliffordSet& cs);

/// Plaquette sum -1/4 sum_p (tr W_p + tr W_p^dag).
double wilson_action(const QuiverRep& rep, const EmbeddedQuiver& eq);

/// <psi, D psi>
cd fermionic_action(const LatticeDirac& ld, const Vec& psi);

/// d = 3 magnetic term of the Kogut-Susskind Hamiltonian: the plaquette sum
/// of the spectral action (the exact trace differs from it by a constant).
double ks_magnetic(const QuiverRep& rep, const EmbeddedQuiver& eq);

using GaugeField = std::function<Mat(const Eigen::VectorXd&, int)>;          // A_mu(x)
using CurvatureField = std::function<Mat(const Eigen::VectorXd&, int, int)>; // F_{mu nu}(x)
using HiggsField = std::function<Mat(const Eigen::VectorXd&)>;               // Phi(x)
using HiggsGradient = std::function<Mat(const Eigen::VectorXd&, int)>;       // d_mu Phi(x)

struct ContinuumFixture {
    int d = 2;
    int N = 1;
    double box = 1.0;
    GaugeField A;        // null for Higgs-only fixtures
    CurvatureField F;    // analytic curvature of A
    HiggsField phi;      // null for gauge-only fixtures
    HiggsGradient dphi;  // analytic gradient of phi
};

/// Lattice fields sampled from the fixture: L_e = exp(i l A_mu(x_{s(e)})),
/// D_v = Phi(x_v).
QuiverRep field_rep(const EmbeddedQuiver& eq, const ContinuumFixture& fx);

struct ContinuumRow {
    double l = 0;
    double lattice = 0;
    double continuum = 0;
    double rel_error = 0;
};
struct ContinuumStudy {
    std::vector<ContinuumRow> rows;
    double fitted_order = 0;  // least-squares slope of log(error) vs log(l)
};

/// Compares the lattice action difference against the continuum functional
/// integrated by midpoint quadrature on a 4x refined grid, per level L in
/// `levels` with spacing l = box/L.
ContinuumStudy continuum_study(const ContinuumFixture& fx, const std::vector<int>& levels);

struct MCParams {
    int N = 1;
    double beta = 1.0;
    int sweeps = 1000;
    int therm = 200;
    double eps = 0.5;
    int bins = 50;
    std::uint64_t seed = 1;
};

struct MCResult {
    double mean_plaquette = 0;
    double jackknife_error = 0;
    double acceptance = 0;
    double final_eps = 0;
    std::vector<double> series;  // per-sweep average plaquette, post-thermalization
    std::vector<Mat> links;      // final configuration
};

/// Metropolis over U(N) links with proposal U <- exp(eps X) U, X Gaussian in
/// the lie_basis span, and Boltzmann weight exp(beta/N sum_p Re tr W_p).
/// Step size is adapted to 0.3-0.6 acceptance during thermalization only.
MCResult metropolis(const EmbeddedQuiver& eq, const MCParams& params);

}  // namespace gnet
