#pragma once

#include "gaugenet/quiver.hpp"
#include "gaugenet/repthy.hpp"

namespace gnet {

// Group data of an edge derived from its Bratteli diagram, for objects with
// multiplicity-free representations (all n_i <= 1): G_e is the product of
// U(N'_j) over target blocks, K_B the stabilizer of the kernel embedding,
// and phi_B identifies the source gauge group inside G_e.
struct EdgeStructure {
    std::vector<int> group_ranks;    // per target block
    std::vector<int> source_ranks;   // per source block
    TorusEmbedding k_embedding;      // G_e torus -> K blocks
    TorusEmbedding joint_embedding;  // G_e torus -> (K blocks, source blocks)
    int k_block_count = 0;
};

EdgeStructure edge_structure(const BratteliDiagram& b);
std::vector<int> vertex_ranks(const AlgebraObject& a);

struct GaugeNetwork {
    Quiver graph;
    std::vector<AlgebraObject> objects;      // per vertex
    std::vector<BratteliDiagram> diagrams;   // per edge
    std::vector<ProductWeight> edge_weights; // per edge, over G_e blocks
    std::vector<long long> intertwiner_dims;   // per vertex
    std::vector<long long> intertwiner_index;  // per vertex, < dim

    bool operator==(const GaugeNetwork& o) const;
};

/// All gauge networks with weight entries bounded by the cutoff: every edge
/// keeps a nonzero K_B-invariant subspace and every vertex a nonzero
/// intertwiner space; one network per intertwiner basis index tuple.
/// Deterministic lexicographic order.
std::vector<GaugeNetwork> enumerate_networks(const Quiver& q,
                                             const std::vector<AlgebraObject>& objects,
                                             const std::vector<BratteliDiagram>& diagrams,
                                             int cutoff, long long cap = 200000);

/// Casimir energy sum over edges; the Hamiltonian acts diagonally on the
/// Peter-Weyl basis.
long long hamiltonian_energy(const GaugeNetwork& psi);

/// exp(i t (E(psi) - E(psi')))
cd evolution_phase(const GaugeNetwork& psi, const GaugeNetwork& psi2, double t);

// Correspondences carry per-vertex bimodule block-rank matrices; composition
// is the rank matrix product (dimension of E tensor_{A'} F over block pairs).
struct CorrespondenceStub {
    GaugeNetwork source, target;
    std::vector<Eigen::MatrixXi> rank;  // per vertex
};

CorrespondenceStub identity_correspondence(const GaugeNetwork& psi);
CorrespondenceStub compose_correspondences(const CorrespondenceStub& p1,
                                           const CorrespondenceStub& p2);

}  // namespace gnet
