#pragma once

#include "gaugenet/finalg.hpp"

#include <array>
#include <vector>

namespace gnet {

struct Quiver {
    struct Edge {
        int s = 0, t = 0;
    };
    int vertex_count = 0;
    std::vector<Edge> edges;

    void validate() const;
    std::vector<int> edges_into(int v) const;
    std::vector<int> edges_out_of(int v) const;
};

// A plaquette records its four forward edges; the boundary is traversed as
// e[0], e[1], reverse e[2], reverse e[3].
struct Plaquette {
    std::array<int, 4> e{};
};

struct EmbeddedQuiver {
    Quiver graph;
    int dim = 0;
    int extent = 0;  // L for hypercubic lattices, 0 otherwise
    double spacing = 1.0;
    bool periodic = true;
    std::vector<Eigen::VectorXd> position;   // per vertex
    std::vector<Eigen::VectorXd> direction;  // per edge, unit vector
    std::vector<double> length;              // per edge
    std::vector<int> axis;                   // per edge, -1 if not axis-aligned
    std::vector<Plaquette> plaquettes;
};

/// Hypercubic lattice with forward edges only; edge order is lexicographic in
/// (vertex coordinates, axis). Plaquettes follow the same vertex order with
/// axis pairs mu < nu.
EmbeddedQuiver build_lattice(int d, int L, double l, bool periodic);

/// Vertex id of lattice coordinates (row-major, first coordinate slowest).
int lattice_vertex(int d, int L, const std::vector<int>& coords);

struct QuiverRep {
    Quiver graph;
    std::vector<AlgebraObject> objects;  // per vertex
    std::vector<Mat> dirac;              // per vertex, Hermitian on H_v
    std::vector<Morphism> morphisms;     // per edge

    void validate() const;
};

QuiverRep random_rep(const Quiver& q, const std::vector<AlgebraObject>& objects,
                     const std::vector<BratteliDiagram>& diagrams, std::uint64_t seed);

/// All vertices (M_N, C^N); each edge carries the unitary link L_e.
QuiverRep spin_rep(const Quiver& q, int N, const std::vector<Mat>& links);
QuiverRep spin_rep_identity(const Quiver& q, int N);
std::vector<Mat> links_of(const QuiverRep& rep);

struct GaugeTransform {
    std::vector<BlockElement> g;  // per vertex, per block unitaries
};

GaugeTransform identity_gauge(const std::vector<AlgebraObject>& objects);
GaugeTransform random_gauge(const std::vector<AlgebraObject>& objects, std::uint64_t seed);
GaugeTransform compose_gauge(const std::vector<AlgebraObject>& objects,
                             const GaugeTransform& g2, const GaugeTransform& g1);

QuiverRep gauge_act(const QuiverRep& rep, const GaugeTransform& g);

/// Ordered product L_e4^dag L_e3^dag L_e2 L_e1 around the plaquette boundary.
Mat plaquette_holonomy(const QuiverRep& rep, const Plaquette& p);

}  // namespace gnet
