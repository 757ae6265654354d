#pragma once

#include "gaugenet/num.hpp"

#include <Eigen/Dense>
#include <vector>

namespace gnet {

// A finite-dimensional *-algebra in Artin-Wedderburn form together with its
// representation space: block i is M_{N_i} acting with multiplicity n_i on H.
// Blocks with n_i = 0 form the kernel of the representation.
struct AlgebraObject {
    struct Block {
        int N = 1;  // matrix block dimension, >= 1
        int n = 0;  // multiplicity in H, >= 0
        bool operator==(const Block&) const = default;
    };
    std::vector<Block> blocks;

    bool operator==(const AlgebraObject&) const = default;

    int block_count() const { return static_cast<int>(blocks.size()); }
    int hilbert_dim() const;
    int hilbert_offset(int i) const;  // start of block i inside H
    std::vector<int> tilde_blocks() const;
    std::vector<int> kernel_blocks() const;
    void validate() const;
};

// One matrix per algebra block.
using BlockElement = std::vector<Mat>;

BlockElement identity_element(const AlgebraObject& a);
BlockElement random_element(const AlgebraObject& a, Rng& rng);
BlockElement random_block_unitary(const AlgebraObject& a, Rng& rng);

/// The representation lambda(a) on H (kernel blocks act as zero).
Mat represent(const AlgebraObject& a, const BlockElement& x);

// Nonnegative multiplicity matrix d(i,j) of a unital *-algebra map,
// split into the tilde subdiagram (columns with n'_j > 0) and the kernel
// subdiagram (columns with n'_j = 0).
struct BratteliDiagram {
    AlgebraObject source, target;
    Eigen::MatrixXi d;  // block_count(source) x block_count(target)

    bool operator==(const BratteliDiagram& o) const;
    bool admissible() const;
    // offset of slot s of source block i inside target block j
    int slot_offset(int i, int j, int s) const;
};

/// All admissible Bratteli diagrams between two objects, in lexicographic
/// order of the row-major flattened multiplicity matrix.
std::vector<BratteliDiagram> enumerate_bratteli(const AlgebraObject& a1,
                                                const AlgebraObject& a2);

// A morphism (phi, L): phi acts per target block j as conj[j] * e_j(a) *
// conj[j]^dag with e_j the canonical block-lexicographic embedding; L is the
// unitary H1 -> H2 implementing the tilde part.
struct Morphism {
    AlgebraObject source, target;
    BratteliDiagram diagram;
    std::vector<Mat> conj;  // per target block
    Mat L;
};

Morphism canonical_morphism(const BratteliDiagram& b);
Morphism identity_morphism(const AlgebraObject& a);
/// Canonical morphism dressed with Haar unitaries: U in Aut_{A~}(H2) and V
/// in U(ker lambda2).
Morphism random_morphism(const BratteliDiagram& b, Rng& rng);

BlockElement apply_morphism(const Morphism& m, const BlockElement& a);
Morphism compose(const Morphism& m2, const Morphism& m1);
bool morphism_equal(const Morphism& m1, const Morphism& m2, double tol = 1e-10);

/// Max-norm of L lambda1(a) L^dag - lambda2(phi(a)) over random a; should be
/// ~1e-14 for any well-formed morphism.
double equivariance_defect(const Morphism& m, Rng& rng, int trials = 20);

struct HomEntry {
    BratteliDiagram diagram;
    int aut_dim = 0;     // dim Aut_{A~2}(H2) = sum over tilde blocks of N^2 + n^2
    int orbit_dim = 0;   // dim U(ker lambda2) / Stab(phi_B0)
    int central_redundancy = 0;  // one circle per tilde block acting trivially on phi
};

std::vector<HomEntry> hom_descriptor(const AlgebraObject& a1, const AlgebraObject& a2);

struct AutomorphismInfo {
    struct Factor {
        int N = 0;
        int n = 0;        // 0 for kernel blocks
        bool kernel = false;  // kernel blocks contribute PU(N)
    };
    std::vector<Factor> continuous;
    // classes of >= 2 blocks with equal (N, n); permutations act within a class
    std::vector<std::vector<int>> tilde_permutations;
    std::vector<std::vector<int>> kernel_permutations;
    int continuous_dim() const;
};

AutomorphismInfo automorphisms(const AlgebraObject& a);

}  // namespace gnet
