#include "gaugenet/action.hpp"

#include <cmath>

namespace gnet {

double spectral_action_exact_unnormalized(const LatticeDirac& ld, double l) {
    if (ld.matrix.rows() > 4096)
        throw std::invalid_argument("spectral_action_exact: operator dimension exceeds 4096");
    Mat d2 = ld.matrix * ld.matrix;
    return std::pow(l, 4) * d2.squaredNorm();  // tr(D^4) = ||D^2||_F^2, D Hermitian
}

double spectral_action_exact(const LatticeDirac& ld, double l) {
    return spectral_action_exact_unnormalized(ld, l) / ld.spinor_dim;
}

namespace {

struct Step {
    int edge = 0;
    bool rev = false;
    int to = 0;
};

struct WalkTables {
    std::vector<std::vector<Step>> out;  // per vertex
    std::vector<Mat> gam, gam_rev;
    std::vector<Mat> lnk, lnk_rev;
    std::vector<double> wgt;  // 1/(2 l_e)

    const Mat& gamma(const Step& s) const { return s.rev ? gam_rev[s.edge] : gam[s.edge]; }
    const Mat& link(const Step& s) const { return s.rev ? lnk_rev[s.edge] : lnk[s.edge]; }
    double weight(const Step& s) const { return wgt[s.edge]; }
};

WalkTables make_tables(const EmbeddedQuiver& eq, const QuiverRep& rep, const CliffordSet& cs) {
    WalkTables t;
    t.out.resize(eq.graph.vertex_count);
    t.gam = edge_gammas(eq, cs);
    for (std::size_t e = 0; e < eq.graph.edges.size(); ++e) {
        t.gam_rev.push_back(t.gam[e].adjoint());
        t.lnk.push_back(rep.morphisms[e].L);
        t.lnk_rev.push_back(rep.morphisms[e].L.adjoint());
        t.wgt.push_back(1.0 / (2.0 * eq.length[e]));
        int s = eq.graph.edges[e].s, tt = eq.graph.edges[e].t;
        t.out[s].push_back({static_cast<int>(e), false, tt});
        t.out[tt].push_back({static_cast<int>(e), true, s});
    }
    return t;
}

bool reverses(const Step& a, const Step& b) { return a.edge == b.edge && a.rev != b.rev; }

// the four hops undo each other immediately, so the link trace is dim H for
// any unitary assignment
bool telescoping(const Step& b1, const Step& b2, const Step& b3, const Step& b4) {
    return (reverses(b1, b2) && reverses(b3, b4)) || (reverses(b2, b3) && reverses(b1, b4));
}

}  // namespace

ActionBreakdown spectral_action_closed(const EmbeddedQuiver& eq, const QuiverRep& rep,
                                       const CliffordSet& cs) {
    rep.validate();
    if (rep.graph.edges.size() != eq.graph.edges.size())
        throw std::invalid_argument("spectral_action_closed: quiver mismatch");
    WalkTables t = make_tables(eq, rep, cs);
    const double l = eq.spacing;
    const int dimS = static_cast<int>(cs.spinor_dim());

    cd wilson = 0, constant = 0;
    for (int v0 = 0; v0 < eq.graph.vertex_count; ++v0)
        for (const Step& b1 : t.out[v0]) {
            Mat g1 = t.gamma(b1);
            Mat l1 = t.link(b1);
            for (const Step& b2 : t.out[b1.to]) {
                Mat g2 = t.gamma(b2) * g1;
                Mat l2 = t.link(b2) * l1;
                for (const Step& b3 : t.out[b2.to]) {
                    Mat g3 = t.gamma(b3) * g2;
                    Mat l3 = t.link(b3) * l2;
                    for (const Step& b4 : t.out[b3.to]) {
                        if (b4.to != v0)
                            continue;
                        cd gtr = (t.gamma(b4) * g3).trace();
                        if (std::abs(gtr) < 1e-14)
                            continue;
                        cd ltr = (t.link(b4) * l3).trace();
                        double w =
                            t.weight(b1) * t.weight(b2) * t.weight(b3) * t.weight(b4);
                        cd term = w * gtr * ltr;
                        if (telescoping(b1, b2, b3, b4))
                            constant += term;
                        else
                            wilson += term;
                    }
                }
            }
        }

    bool any_higgs = false;
    for (const auto& dv : rep.dirac)
        any_higgs = any_higgs || (dv.size() > 0 && dv.cwiseAbs().maxCoeff() > 0.0);
    cd mass = 0, hopping = 0;
    double quartic_raw = 0;
    if (any_higgs) {
        if (cs.grading.size() == 0)
            throw std::invalid_argument(
                "spectral_action_closed: finite Dirac blocks need an even-dimensional grading");
        const Mat& gr = cs.grading;
        for (int u = 0; u < eq.graph.vertex_count; ++u)
            for (const Step& b : t.out[u])
                for (const Step& a : t.out[b.to]) {
                    if (a.to != u)
                        continue;
                    double w = t.weight(a) * t.weight(b);
                    const Mat& du = rep.dirac[u];
                    const Mat& dw = rep.dirac[b.to];
                    cd g_mass = (t.gamma(a) * t.gamma(b)).trace();
                    if (std::abs(g_mass) > 1e-14)
                        mass += 4.0 * w * g_mass * (t.link(a) * t.link(b) * du * du).trace();
                    cd g_hop = (t.gamma(a) * gr * t.gamma(b) * gr).trace();
                    if (std::abs(g_hop) > 1e-14)
                        hopping += 2.0 * w * g_hop * (t.link(a) * dw * t.link(b) * du).trace();
                }
        for (int v = 0; v < eq.graph.vertex_count; ++v)
            if (rep.dirac[v].size() > 0)
                quartic_raw += dimS * (rep.dirac[v] * rep.dirac[v] * rep.dirac[v] * rep.dirac[v])
                                          .trace()
                                          .real();
    }

    const double scale = std::pow(l, 4) / dimS;
    ActionBreakdown bd;
    bd.spinor_dim = dimS;
    bd.wilson = scale * wilson.real();
    bd.constant = scale * constant.real();
    bd.higgs_mass = scale * mass.real();
    bd.higgs_hopping = scale * hopping.real();
    bd.higgs_quartic = scale * quartic_raw;
    bd.total = bd.wilson + bd.constant + bd.higgs_mass + bd.higgs_hopping + bd.higgs_quartic;
    bd.total_unnormalized = bd.total * dimS;
    return bd;
}

double wilson_action(const QuiverRep& rep, const EmbeddedQuiver& eq) {
    double sum = 0;
    for (const auto& p : eq.plaquettes)
        sum += plaquette_holonomy(rep, p).trace().real();
    return -0.5 * sum;  // -1/4 (tr W + tr W^dag) = -1/2 Re tr W
}

cd fermionic_action(const LatticeDirac& ld, const Vec& psi) {
    if (psi.size() != ld.matrix.rows())
        throw std::invalid_argument("fermionic_action: vector length mismatch");
    return psi.dot(ld.matrix * psi);
}

double ks_magnetic(const QuiverRep& rep, const EmbeddedQuiver& eq) {
    if (eq.dim != 3)
        throw std::invalid_argument("ks_magnetic: requires a three-dimensional lattice");
    for (const auto& dv : rep.dirac)
        if (dv.size() > 0 && dv.cwiseAbs().maxCoeff() > 0.0)
            throw std::invalid_argument("ks_magnetic: finite Dirac blocks must vanish");
    return wilson_action(rep, eq);
}

QuiverRep field_rep(const EmbeddedQuiver& eq, const ContinuumFixture& fx) {
    std::vector<Mat> links;
    Mat id = Mat::Identity(fx.N, fx.N);
    for (std::size_t e = 0; e < eq.graph.edges.size(); ++e) {
        if (!fx.A) {
            links.push_back(id);
            continue;
        }
        const Eigen::VectorXd& x = eq.position[eq.graph.edges[e].s];
        Mat a = fx.A(x, eq.axis[e]);
        if (fx.N == 1) {
            links.push_back(Mat::Constant(1, 1, std::exp(cd(0, eq.spacing) * a(0, 0))));
        } else {
            auto eg = eig_hermitian(a);
            Mat ph = Mat::Zero(fx.N, fx.N);
            for (int k = 0; k < fx.N; ++k)
                ph(k, k) = std::exp(cd(0, eq.spacing * eg.values(k)));
            links.push_back(eg.vectors * ph * eg.vectors.adjoint());
        }
    }
    QuiverRep rep = spin_rep(eq.graph, fx.N, links);
    if (fx.phi)
        for (int v = 0; v < eq.graph.vertex_count; ++v)
            rep.dirac[v] = fx.phi(eq.position[v]);
    return rep;
}

namespace {

// midpoint rule on a grid with `steps` points per axis over [0, box)^d
double midpoint_integral(int d, double box, int steps,
                         const std::function<double(const Eigen::VectorXd&)>& f) {
    long long total = 1;
    for (int k = 0; k < d; ++k)
        total *= steps;
    double h = box / steps;
    double sum = 0;
    std::vector<int> idx(d, 0);
    Eigen::VectorXd x(d);
    for (long long i = 0; i < total; ++i) {
        long long r = i;
        for (int k = d - 1; k >= 0; --k) {
            idx[k] = static_cast<int>(r % steps);
            r /= steps;
        }
        for (int k = 0; k < d; ++k)
            x(k) = (idx[k] + 0.5) * h;
        sum += f(x);
    }
    return sum * std::pow(h, d);
}

}  // namespace

ContinuumStudy continuum_study(const ContinuumFixture& fx, const std::vector<int>& levels) {
    if (fx.A && fx.phi)
        throw std::invalid_argument("continuum_study: one of A, phi per fixture");
    CliffordSet cs = clifford(fx.d);
    ContinuumStudy st;
    for (int L : levels) {
        double l = fx.box / L;
        EmbeddedQuiver eq = build_lattice(fx.d, L, l, true);
        QuiverRep rep = field_rep(eq, fx);
        ContinuumRow row;
        row.l = l;
        double power = std::pow(l, 4 - fx.d);
        if (fx.A) {
            QuiverRep unit = spin_rep_identity(eq.graph, fx.N);
            row.lattice = (wilson_action(rep, eq) - wilson_action(unit, eq)) / power;
            row.continuum = 0.25 * midpoint_integral(fx.d, fx.box, 4 * L, [&](const auto& x) {
                double s = 0;
                for (int mu = 0; mu < fx.d; ++mu)
                    for (int nu = mu + 1; nu < fx.d; ++nu) {
                        Mat f = fx.F(x, mu, nu);
                        s += (f * f).trace().real();
                    }
                return s;
            });
        } else {
            ActionBreakdown bd = spectral_action_closed(eq, rep, cs);
            double mass_ref = 0;
            for (std::size_t e = 0; e < eq.graph.edges.size(); ++e) {
                const Mat& ds = rep.dirac[eq.graph.edges[e].s];
                const Mat& dt = rep.dirac[eq.graph.edges[e].t];
                mass_ref += 0.5 * l * l * ((ds * ds).trace().real() + (dt * dt).trace().real());
            }
            row.lattice = (bd.higgs_mass + bd.higgs_hopping - mass_ref) / power;
            row.continuum = 0.5 * midpoint_integral(fx.d, fx.box, 4 * L, [&](const auto& x) {
                double s = 0;
                for (int mu = 0; mu < fx.d; ++mu) {
                    Mat g = fx.dphi(x, mu);
                    s += (g * g).trace().real();
                }
                return s;
            });
        }
        row.rel_error = row.continuum == 0.0
                            ? std::abs(row.lattice)
                            : std::abs(row.lattice - row.continuum) / std::abs(row.continuum);
        st.rows.push_back(row);
    }
    // least-squares order fit: log err = p log l + c
    int n = static_cast<int>(st.rows.size());
    if (n >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (const auto& r : st.rows) {
            double x = std::log(r.l), y = std::log(std::max(r.rel_error, 1e-300));
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        st.fitted_order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    }
    return st;
}

namespace {

double plaquette_trace(const std::vector<Mat>& links, const Plaquette& p) {
    return (links[p.e[3]].adjoint() * links[p.e[2]].adjoint() * links[p.e[1]] * links[p.e[0]])
        .trace()
        .real();
}

Mat group_step(int N, double eps, Rng& rng, const std::vector<Mat>& basis) {
    if (N == 1)
        return Mat::Constant(1, 1, std::exp(cd(0, eps * rng.normal())));
    Mat x = Mat::Zero(N, N);
    for (const auto& b : basis)
        x += rng.normal() * b;
    // exp(eps x), x anti-Hermitian
    auto eg = eig_hermitian(cd(0, -1) * x);
    Mat ph = Mat::Zero(N, N);
    for (int k = 0; k < N; ++k)
        ph(k, k) = std::exp(cd(0, eps * eg.values(k)));
    return eg.vectors * ph * eg.vectors.adjoint();
}

Mat reunitarize(const Mat& u) {
    if (u.rows() == 1)
        return Mat::Constant(1, 1, u(0, 0) / std::abs(u(0, 0)));
    auto eg = eig_hermitian(u.adjoint() * u);
    Mat inv_sqrt = Mat::Zero(u.rows(), u.cols());
    for (int k = 0; k < u.rows(); ++k)
        inv_sqrt(k, k) = 1.0 / std::sqrt(eg.values(k));
    return u * (eg.vectors * inv_sqrt * eg.vectors.adjoint());
}

}  // namespace

MCResult metropolis(const EmbeddedQuiver& eq, const MCParams& params) {
    if (params.N < 1 || params.sweeps < 0 || params.therm < 0)
        throw std::invalid_argument("metropolis: invalid parameters");
    const int N = params.N;
    const int ne = static_cast<int>(eq.graph.edges.size());
    const int np = static_cast<int>(eq.plaquettes.size());
    if (np == 0)
        throw std::invalid_argument("metropolis: lattice has no plaquettes");

    std::vector<std::vector<int>> incident(ne);
    for (int p = 0; p < np; ++p)
        for (int k = 0; k < 4; ++k)
            incident[eq.plaquettes[p].e[k]].push_back(p);

    Rng rng(params.seed);
    auto basis = lie_basis(N);
    std::vector<Mat> links(ne, Mat::Identity(N, N));

    double eps = params.eps;
    long long accepted = 0, proposed = 0;
    MCResult res;

    for (int sweep = 0; sweep < params.therm + params.sweeps; ++sweep) {
        bool therm = sweep < params.therm;
        long long acc_sweep = 0;
        for (int e = 0; e < ne; ++e) {
            double before = 0;
            for (int p : incident[e])
                before += plaquette_trace(links, eq.plaquettes[p]);
            Mat old = links[e];
            links[e] = group_step(N, eps, rng, basis) * old;
            double after = 0;
            for (int p : incident[e])
                after += plaquette_trace(links, eq.plaquettes[p]);
            // energy E = -(1/N) sum_p Re tr W_p, target exp(-beta E)
            double delta_e = -(after - before) / N;
            ++proposed;
            if (rng.uniform() < std::exp(-params.beta * delta_e)) {
                ++accepted;
                ++acc_sweep;
            } else {
                links[e] = old;
            }
        }
        for (auto& u : links)
            u = reunitarize(u);
        if (therm) {
            double rate = static_cast<double>(acc_sweep) / ne;
            if (rate > 0.6)
                eps *= 1.1;
            else if (rate < 0.3)
                eps /= 1.1;
            eps = std::clamp(eps, 1e-3, 2.0);
        } else {
            double plaq = 0;
            for (const auto& p : eq.plaquettes)
                plaq += plaquette_trace(links, p);
            res.series.push_back(plaq / (np * N));
        }
    }

    res.acceptance = proposed > 0 ? static_cast<double>(accepted) / proposed : 0.0;
    res.final_eps = eps;
    res.links = std::move(links);

    int B = std::min<int>(params.bins, static_cast<int>(res.series.size()));
    if (B >= 2) {
        int bin_size = static_cast<int>(res.series.size()) / B;
        std::vector<double> bm(B, 0.0);
        for (int b = 0; b < B; ++b) {
            for (int k = 0; k < bin_size; ++k)
                bm[b] += res.series[b * bin_size + k];
            bm[b] /= bin_size;
        }
        double mean = 0;
        for (double m : bm)
            mean += m;
        mean /= B;
        double var = 0;
        for (double m : bm)
            var += (m - mean) * (m - mean);
        res.mean_plaquette = mean;
        res.jackknife_error = std::sqrt(var / (static_cast<double>(B) * (B - 1)));
    } else if (!res.series.empty()) {
        double mean = 0;
        for (double m : res.series)
            mean += m;
        res.mean_plaquette = mean / res.series.size();
    }
    return res;
}

}  // namespace gnet
