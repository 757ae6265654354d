#pragma once

#include "gaugenet/num.hpp"

#include <Eigen/Dense>
#include <map>
#include <vector>

namespace gnet {

// Dominant weight of a U(N) irrep: a non-increasing integer vector.
// Negative entries are allowed (tensoring with powers of det).
struct HighestWeight {
    int N = 1;
    std::vector<int> lambda;

    HighestWeight() = default;
    HighestWeight(int rank, std::vector<int> lam) : N(rank), lambda(std::move(lam)) {}
    void validate() const;
    bool trivial() const;
    auto operator<=>(const HighestWeight&) const = default;
};

using WeightVec = std::vector<int>;

struct WeightCharacter {
    int N = 1;
    std::map<WeightVec, long long> mult;
    long long dimension() const;
};

// An irrep of a product of unitary groups, one dominant weight per factor.
struct ProductWeight {
    std::vector<HighestWeight> parts;
    bool trivial() const;
    auto operator<=>(const ProductWeight&) const = default;
};

// Integer torus map: pushes a weight of the target group to a weight of a
// product of source groups, source_weight = map * target_weight. Columns
// index target torus coordinates, rows the concatenated source coordinates.
struct TorusEmbedding {
    std::vector<int> source_ranks;
    Eigen::MatrixXi map;
    void validate(int target_rank) const;
};

long long weyl_dim(const HighestWeight& w);
long long weyl_dim(const ProductWeight& w);

/// Weight multiplicities via Gelfand-Tsetlin patterns.
WeightCharacter weight_multiplicities(const HighestWeight& w, long long cap = 1000000);

std::map<HighestWeight, long long> tensor_decompose(const HighestWeight& w1,
                                                    const HighestWeight& w2,
                                                    long long cap = 1000000);

/// Branch a target-group irrep along a torus embedding into irreps of the
/// product of source groups (iterated dominant subtraction).
std::map<ProductWeight, long long> restrict_rep(const HighestWeight& w,
                                                const TorusEmbedding& emb,
                                                long long cap = 1000000);
std::map<ProductWeight, long long> restrict_rep(const ProductWeight& w,
                                                const TorusEmbedding& emb,
                                                long long cap = 1000000);

/// Multiplicity of the trivial representation of the embedded subgroup.
long long invariant_dim(const HighestWeight& w, const TorusEmbedding& emb,
                        long long cap = 1000000);

/// Quadratic Casimir eigenvalue in the trace-orthonormal u(N) normalization:
/// c2(lambda) = sum_i lambda_i (lambda_i + N + 1 - 2i).
long long casimir(const HighestWeight& w);
long long casimir(const ProductWeight& w);

/// Spectrum of -sum_a rho(X_a)^2 for explicit images of lie_basis(n).
/// Checks the commutation relations first; the oracle for casimir().
std::vector<double> casimir_explicit(const std::vector<Mat>& rho);

std::vector<Mat> rep_defining(int n);
std::vector<Mat> rep_dual(const std::vector<Mat>& rho);
std::vector<Mat> rep_tensor(const std::vector<Mat>& rho1, const std::vector<Mat>& rho2);
std::vector<Mat> rep_adjoint(int n);

// An outgoing edge leg at a vertex: the G_e irrep together with the joint
// torus embedding into (K blocks, vertex-group blocks). Only the K-invariant
// part, pulled back along phi_B, acts at the source vertex.
struct OutgoingLeg {
    ProductWeight rho;
    TorusEmbedding joint;
    int k_block_count = 0;
};

/// dim Hom_{U(A_v)}(tensor of incoming, tensor of outgoing K-invariants).
long long intertwiner_dim(const std::vector<int>& vertex_ranks,
                          const std::vector<ProductWeight>& incoming,
                          const std::vector<OutgoingLeg>& outgoing,
                          long long cap = 1000000);

}  // namespace gnet
