#include "gaugenet/quiver.hpp"

namespace gnet {

void Quiver::validate() const {
    for (const auto& e : edges)
        if (e.s < 0 || e.s >= vertex_count || e.t < 0 || e.t >= vertex_count)
            throw std::invalid_argument("Quiver: edge endpoint out of range");
}

std::vector<int> Quiver::edges_into(int v) const {
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e)
        if (edges[e].t == v)
            out.push_back(e);
    return out;
}

std::vector<int> Quiver::edges_out_of(int v) const {
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e)
        if (edges[e].s == v)
            out.push_back(e);
    return out;
}

int lattice_vertex(int d, int L, const std::vector<int>& coords) {
    int id = 0;
    for (int k = 0; k < d; ++k) {
        int c = ((coords[k] % L) + L) % L;
        id = id * L + c;
    }
    return id;
}

EmbeddedQuiver build_lattice(int d, int L, double l, bool periodic) {
    if (d < 2 || d > 4)
        throw std::invalid_argument("build_lattice: d must be in {2,3,4}");
    if (L < 1)
        throw std::invalid_argument("build_lattice: L must be >= 1");
    if (!(l > 0.0))
        throw std::invalid_argument("build_lattice: spacing must be positive");
    long long nv = 1;
    for (int k = 0; k < d; ++k)
        nv *= L;
    int spinor = 1 << (d / 2);
    if (nv * d * spinor > 100000)
        throw std::invalid_argument("build_lattice: size exceeds desk-scale cap");

    EmbeddedQuiver eq;
    eq.dim = d;
    eq.extent = L;
    eq.spacing = l;
    eq.periodic = periodic;
    eq.graph.vertex_count = static_cast<int>(nv);

    std::vector<int> coords(d, 0);
    auto next = [&]() {
        for (int k = d - 1; k >= 0; --k) {
            if (++coords[k] < L)
                return true;
            coords[k] = 0;
        }
        return false;
    };

    // vertices in lexicographic order; edges (vertex, axis)
    std::vector<std::vector<int>> edge_index(nv, std::vector<int>(d, -1));
    do {
        int v = lattice_vertex(d, L, coords);
        Eigen::VectorXd x(d);
        for (int k = 0; k < d; ++k)
            x(k) = coords[k] * l;
        eq.position.push_back(x);
        for (int mu = 0; mu < d; ++mu) {
            if (!periodic && coords[mu] == L - 1)
                continue;
            std::vector<int> c2 = coords;
            c2[mu] = (c2[mu] + 1) % L;
            edge_index[v][mu] = static_cast<int>(eq.graph.edges.size());
            eq.graph.edges.push_back({v, lattice_vertex(d, L, c2)});
            Eigen::VectorXd dir = Eigen::VectorXd::Zero(d);
            dir(mu) = 1.0;
            eq.direction.push_back(dir);
            eq.length.push_back(l);
            eq.axis.push_back(mu);
        }
    } while (next());

    std::fill(coords.begin(), coords.end(), 0);
    do {
        int v = lattice_vertex(d, L, coords);
        for (int mu = 0; mu < d; ++mu)
            for (int nu = mu + 1; nu < d; ++nu) {
                if (!periodic && (coords[mu] == L - 1 || coords[nu] == L - 1))
                    continue;
                std::vector<int> cmu = coords, cnu = coords;
                cmu[mu] = (cmu[mu] + 1) % L;
                cnu[nu] = (cnu[nu] + 1) % L;
                Plaquette p;
                p.e[0] = edge_index[v][mu];
                p.e[1] = edge_index[lattice_vertex(d, L, cmu)][nu];
                p.e[2] = edge_index[lattice_vertex(d, L, cnu)][mu];
                p.e[3] = edge_index[v][nu];
                eq.plaquettes.push_back(p);
            }
    } while (next());

    return eq;
}

void QuiverRep::validate() const {
    graph.validate();
    if (static_cast<int>(objects.size()) != graph.vertex_count ||
        static_cast<int>(dirac.size()) != graph.vertex_count ||
        morphisms.size() != graph.edges.size())
        throw std::invalid_argument("QuiverRep: size mismatch");
    for (int v = 0; v < graph.vertex_count; ++v) {
        int h = objects[v].hilbert_dim();
        if (dirac[v].rows() != h || dirac[v].cols() != h)
            throw std::invalid_argument("QuiverRep: Dirac block shape mismatch");
        if (h > 0 && !is_hermitian(dirac[v], 1e-12))
            throw contract_error("QuiverRep: Dirac block not Hermitian");
    }
    for (std::size_t e = 0; e < morphisms.size(); ++e) {
        if (!(morphisms[e].source == objects[graph.edges[e].s]) ||
            !(morphisms[e].target == objects[graph.edges[e].t]))
            throw std::invalid_argument("QuiverRep: morphism endpoints mismatch");
    }
}

QuiverRep random_rep(const Quiver& q, const std::vector<AlgebraObject>& objects,
                     const std::vector<BratteliDiagram>& diagrams, std::uint64_t seed) {
    q.validate();
    if (static_cast<int>(objects.size()) != q.vertex_count ||
        diagrams.size() != q.edges.size())
        throw std::invalid_argument("random_rep: size mismatch");
    Rng rng(seed);
    QuiverRep rep;
    rep.graph = q;
    rep.objects = objects;
    for (const auto& o : objects) {
        int h = o.hilbert_dim();
        rep.dirac.push_back(Mat::Zero(h, h));
    }
    for (std::size_t e = 0; e < diagrams.size(); ++e) {
        if (!(diagrams[e].source == objects[q.edges[e].s]) ||
            !(diagrams[e].target == objects[q.edges[e].t]))
            throw std::invalid_argument("random_rep: diagram endpoints mismatch");
        rep.morphisms.push_back(random_morphism(diagrams[e], rng));
    }
    return rep;
}

namespace {

AlgebraObject full_matrix_object(int N) { return AlgebraObject{{{N, 1}}}; }

}  // namespace

QuiverRep spin_rep(const Quiver& q, int N, const std::vector<Mat>& links) {
    q.validate();
    if (links.size() != q.edges.size())
        throw std::invalid_argument("spin_rep: link count mismatch");
    AlgebraObject obj = full_matrix_object(N);
    BratteliDiagram idd{obj, obj, Eigen::MatrixXi::Identity(1, 1)};
    QuiverRep rep;
    rep.graph = q;
    rep.objects.assign(q.vertex_count, obj);
    rep.dirac.assign(q.vertex_count, Mat::Zero(N, N));
    for (std::size_t e = 0; e < links.size(); ++e) {
        if (links[e].rows() != N || links[e].cols() != N)
            throw std::invalid_argument("spin_rep: link shape mismatch");
        Morphism m = canonical_morphism(idd);
        m.conj[0] = links[e];
        m.L = links[e];
        rep.morphisms.push_back(std::move(m));
    }
    return rep;
}

QuiverRep spin_rep_identity(const Quiver& q, int N) {
    return spin_rep(q, N, std::vector<Mat>(q.edges.size(), Mat::Identity(N, N)));
}

std::vector<Mat> links_of(const QuiverRep& rep) {
    std::vector<Mat> out;
    out.reserve(rep.morphisms.size());
    for (const auto& m : rep.morphisms)
        out.push_back(m.L);
    return out;
}

GaugeTransform identity_gauge(const std::vector<AlgebraObject>& objects) {
    GaugeTransform g;
    for (const auto& o : objects)
        g.g.push_back(identity_element(o));
    return g;
}

GaugeTransform random_gauge(const std::vector<AlgebraObject>& objects, std::uint64_t seed) {
    Rng rng(seed);
    GaugeTransform g;
    for (const auto& o : objects)
        g.g.push_back(random_block_unitary(o, rng));
    return g;
}

GaugeTransform compose_gauge(const std::vector<AlgebraObject>& objects,
                             const GaugeTransform& g2, const GaugeTransform& g1) {
    GaugeTransform out;
    for (std::size_t v = 0; v < objects.size(); ++v) {
        BlockElement b;
        for (std::size_t i = 0; i < objects[v].blocks.size(); ++i)
            b.push_back(g2.g[v][i] * g1.g[v][i]);
        out.g.push_back(std::move(b));
    }
    return out;
}

QuiverRep gauge_act(const QuiverRep& rep, const GaugeTransform& g) {
    if (g.g.size() != rep.objects.size())
        throw std::invalid_argument("gauge_act: vertex count mismatch");
    for (std::size_t v = 0; v < rep.objects.size(); ++v)
        if (g.g[v].size() != rep.objects[v].blocks.size())
            throw std::invalid_argument("gauge_act: block count mismatch");

    QuiverRep out;
    out.graph = rep.graph;
    out.objects = rep.objects;
    for (std::size_t v = 0; v < rep.objects.size(); ++v) {
        Mat gv = represent(rep.objects[v], g.g[v]);
        out.dirac.push_back(gv * rep.dirac[v] * gv.adjoint());
    }
    for (std::size_t e = 0; e < rep.morphisms.size(); ++e) {
        const Morphism& m = rep.morphisms[e];
        int vs = rep.graph.edges[e].s, vt = rep.graph.edges[e].t;
        BlockElement gs_dag;
        for (const auto& u : g.g[vs])
            gs_dag.push_back(u.adjoint());
        Morphism nm = m;
        // phi -> Ad(g_t) phi Ad(g_s^*) per target block
        Morphism can = canonical_morphism(m.diagram);
        for (int k = 0; k < m.target.block_count(); ++k) {
            Mat embedded = apply_morphism(can, gs_dag)[k];
            nm.conj[k] = g.g[vt][k] * m.conj[k] * embedded;
        }
        nm.L = represent(rep.objects[vt], g.g[vt]) * m.L *
               represent(rep.objects[vs], g.g[vs]).adjoint();
        out.morphisms.push_back(std::move(nm));
    }
    return out;
}

Mat plaquette_holonomy(const QuiverRep& rep, const Plaquette& p) {
    const Mat& l1 = rep.morphisms[p.e[0]].L;
    const Mat& l2 = rep.morphisms[p.e[1]].L;
    const Mat& l3 = rep.morphisms[p.e[2]].L;
    const Mat& l4 = rep.morphisms[p.e[3]].L;
    if (l1.rows() != l1.cols() || l2.rows() != l1.rows() || l3.rows() != l1.rows() ||
        l4.rows() != l1.rows())
        throw std::invalid_argument("plaquette_holonomy: links not composable");
    return l4.adjoint() * l3.adjoint() * l2 * l1;
}

}  // namespace gnet
