#include "gaugenet/dirac.hpp"

namespace gnet {

std::vector<Mat> edge_gammas(const EmbeddedQuiver& eq, const CliffordSet& cs) {
    if (cs.dim != eq.dim)
        throw std::invalid_argument("edge_gammas: Clifford dimension mismatch");
    const cd I(0, 1);
    int ne = static_cast<int>(eq.graph.edges.size());
    std::vector<Mat> out(ne);

    bool all_axis = true;
    for (int e = 0; e < ne; ++e)
        all_axis = all_axis && eq.axis[e] >= 0;
    if (all_axis) {
        for (int e = 0; e < ne; ++e)
            out[e] = I * cs.c[eq.axis[e]];
        return out;
    }

    // general embedding: per-vertex dual frame theta from the outgoing edges,
    // least-squares right inverse of the direction matrix
    for (int v = 0; v < eq.graph.vertex_count; ++v) {
        auto edges = eq.graph.edges_out_of(v);
        if (edges.empty())
            continue;
        Eigen::MatrixXd X(edges.size(), eq.dim);
        for (std::size_t r = 0; r < edges.size(); ++r)
            X.row(r) = eq.direction[edges[r]].transpose();
        Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(X);
        if (cod.rank() < eq.dim)
            throw std::invalid_argument("edge_gammas: outgoing edges do not span at vertex " +
                                        std::to_string(v));
        Eigen::MatrixXd theta = cod.pseudoInverse();  // dim x edges
        for (std::size_t r = 0; r < edges.size(); ++r) {
            Mat g = Mat::Zero(cs.spinor_dim(), cs.spinor_dim());
            for (int mu = 0; mu < eq.dim; ++mu)
                g += theta(mu, r) * cs.c[mu];
            out[edges[r]] = I * g;
        }
    }
    for (int e = 0; e < ne; ++e)
        if (out[e].rows() == 0)
            throw std::invalid_argument("edge_gammas: edge without a source frame");
    return out;
}

LatticeDirac assemble(const EmbeddedQuiver& eq, const QuiverRep& rep, const CliffordSet& cs) {
    rep.validate();
    if (rep.graph.edges.size() != eq.graph.edges.size() ||
        rep.graph.vertex_count != eq.graph.vertex_count)
        throw std::invalid_argument("assemble: quiver mismatch");

    LatticeDirac ld;
    ld.spinor_dim = static_cast<int>(cs.spinor_dim());
    int total = 0;
    for (int v = 0; v < rep.graph.vertex_count; ++v) {
        ld.block_offset.push_back(total);
        ld.hdim.push_back(rep.objects[v].hilbert_dim());
        total += ld.spinor_dim * ld.hdim.back();
    }

    bool any_higgs = false;
    for (const auto& dv : rep.dirac)
        any_higgs = any_higgs || (dv.size() > 0 && dv.cwiseAbs().maxCoeff() > 0.0);
    if (any_higgs && cs.grading.size() == 0)
        throw std::invalid_argument("assemble: finite Dirac blocks need an even-dimensional grading");

    auto gammas = edge_gammas(eq, cs);
    ld.matrix = Mat::Zero(total, total);
    for (std::size_t e = 0; e < eq.graph.edges.size(); ++e) {
        int s = eq.graph.edges[e].s, t = eq.graph.edges[e].t;
        Mat hop = kron(gammas[e], rep.morphisms[e].L) / (2.0 * eq.length[e]);
        ld.matrix.block(ld.block_offset[t], ld.block_offset[s], hop.rows(), hop.cols()) += hop;
        ld.matrix.block(ld.block_offset[s], ld.block_offset[t], hop.cols(), hop.rows()) +=
            hop.adjoint();
    }
    if (any_higgs)
        for (int v = 0; v < rep.graph.vertex_count; ++v) {
            if (ld.hdim[v] == 0)
                continue;
            Mat diag = kron(cs.grading, rep.dirac[v]);
            ld.matrix.block(ld.block_offset[v], ld.block_offset[v], diag.rows(), diag.cols()) +=
                diag;
        }
    return ld;
}

Vec apply(const LatticeDirac& ld, const Vec& psi) {
    if (psi.size() != ld.matrix.rows())
        throw std::invalid_argument("apply: vector length mismatch");
    return ld.matrix * psi;
}

Eigen::VectorXd spectrum(const LatticeDirac& ld) {
    if (ld.matrix.rows() > 4096)
        throw std::invalid_argument("spectrum: operator dimension exceeds 4096");
    return eig_hermitian(ld.matrix).values;
}

Mat gauge_unitary(const QuiverRep& rep, const GaugeTransform& g, const CliffordSet& cs) {
    int s = static_cast<int>(cs.spinor_dim());
    int total = 0;
    for (const auto& o : rep.objects)
        total += s * o.hilbert_dim();
    Mat out = Mat::Zero(total, total);
    int off = 0;
    Mat ids = Mat::Identity(s, s);
    for (std::size_t v = 0; v < rep.objects.size(); ++v) {
        Mat gv = kron(ids, represent(rep.objects[v], g.g[v]));
        out.block(off, off, gv.rows(), gv.cols()) = gv;
        off += static_cast<int>(gv.rows());
    }
    return out;
}

}  // namespace gnet
