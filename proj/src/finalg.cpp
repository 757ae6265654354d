#include "gaugenet/finalg.hpp"

#include <algorithm>

namespace gnet {

int AlgebraObject::hilbert_dim() const {
    int s = 0;
    for (const auto& b : blocks)
        s += b.n * b.N;
    return s;
}

int AlgebraObject::hilbert_offset(int i) const {
    int s = 0;
    for (int k = 0; k < i; ++k)
        s += blocks[k].n * blocks[k].N;
    return s;
}

std::vector<int> AlgebraObject::tilde_blocks() const {
    std::vector<int> out;
    for (int i = 0; i < block_count(); ++i)
        if (blocks[i].n > 0)
            out.push_back(i);
    return out;
}

std::vector<int> AlgebraObject::kernel_blocks() const {
    std::vector<int> out;
    for (int i = 0; i < block_count(); ++i)
        if (blocks[i].n == 0)
            out.push_back(i);
    return out;
}

void AlgebraObject::validate() const {
    if (blocks.empty())
        throw std::invalid_argument("AlgebraObject: at least one block required");
    for (const auto& b : blocks)
        if (b.N < 1 || b.n < 0)
            throw std::invalid_argument("AlgebraObject: invalid block dimensions");
}

BlockElement identity_element(const AlgebraObject& a) {
    BlockElement out;
    for (const auto& b : a.blocks)
        out.push_back(Mat::Identity(b.N, b.N));
    return out;
}

BlockElement random_element(const AlgebraObject& a, Rng& rng) {
    BlockElement out;
    for (const auto& b : a.blocks) {
        Mat m(b.N, b.N);
        for (int i = 0; i < b.N; ++i)
            for (int j = 0; j < b.N; ++j)
                m(i, j) = cd(rng.normal(), rng.normal());
        out.push_back(m);
    }
    return out;
}

BlockElement random_block_unitary(const AlgebraObject& a, Rng& rng) {
    BlockElement out;
    for (const auto& b : a.blocks)
        out.push_back(haar_unitary(b.N, rng));
    return out;
}

Mat represent(const AlgebraObject& a, const BlockElement& x) {
    if (static_cast<int>(x.size()) != a.block_count())
        throw std::invalid_argument("represent: block count mismatch");
    int dim = a.hilbert_dim();
    Mat out = Mat::Zero(dim, dim);
    for (int i = 0; i < a.block_count(); ++i) {
        const auto& b = a.blocks[i];
        if (x[i].rows() != b.N || x[i].cols() != b.N)
            throw std::invalid_argument("represent: block shape mismatch");
        int off = a.hilbert_offset(i);
        for (int c = 0; c < b.n; ++c)
            out.block(off + c * b.N, off + c * b.N, b.N, b.N) = x[i];
    }
    return out;
}

bool BratteliDiagram::operator==(const BratteliDiagram& o) const {
    return source == o.source && target == o.target && d.rows() == o.d.rows() &&
           d.cols() == o.d.cols() && (d.array() == o.d.array()).all();
}

bool BratteliDiagram::admissible() const {
    const auto& s = source.blocks;
    const auto& t = target.blocks;
    if (d.rows() != static_cast<int>(s.size()) || d.cols() != static_cast<int>(t.size()))
        return false;
    if ((d.array() < 0).any())
        return false;
    // unitality: each target block exactly filled
    for (int j = 0; j < d.cols(); ++j) {
        int fill = 0;
        for (int i = 0; i < d.rows(); ++i)
            fill += d(i, j) * s[i].N;
        if (fill != t[j].N)
            return false;
    }
    // Hilbert compatibility for faithful source blocks
    for (int i = 0; i < d.rows(); ++i) {
        if (s[i].n == 0)
            continue;
        int m = 0;
        for (int j = 0; j < d.cols(); ++j)
            m += d(i, j) * t[j].n;
        if (m != s[i].n)
            return false;
    }
    // kernel source blocks cannot reach faithful target blocks
    for (int i = 0; i < d.rows(); ++i)
        if (s[i].n == 0)
            for (int j = 0; j < d.cols(); ++j)
                if (t[j].n > 0 && d(i, j) != 0)
                    return false;
    return true;
}

int BratteliDiagram::slot_offset(int i, int j, int s) const {
    int off = 0;
    for (int k = 0; k < i; ++k)
        off += d(k, j) * source.blocks[k].N;
    return off + s * source.blocks[i].N;
}

std::vector<BratteliDiagram> enumerate_bratteli(const AlgebraObject& a1,
                                                const AlgebraObject& a2) {
    a1.validate();
    a2.validate();
    const int k1 = a1.block_count(), k2 = a2.block_count();

    // all fillings of one target column
    auto column_fills = [&](int j) {
        std::vector<std::vector<int>> fills;
        std::vector<int> cur(k1, 0);
        auto rec = [&](auto&& self, int i, int remaining) -> void {
            if (i == k1) {
                if (remaining == 0)
                    fills.push_back(cur);
                return;
            }
            bool forbidden = a1.blocks[i].n == 0 && a2.blocks[j].n > 0;
            int maxc = forbidden ? 0 : remaining / a1.blocks[i].N;
            for (int c = 0; c <= maxc; ++c) {
                cur[i] = c;
                self(self, i + 1, remaining - c * a1.blocks[i].N);
            }
            cur[i] = 0;
        };
        rec(rec, 0, a2.blocks[j].N);
        return fills;
    };

    std::vector<std::vector<std::vector<int>>> per_col;
    for (int j = 0; j < k2; ++j)
        per_col.push_back(column_fills(j));

    std::vector<BratteliDiagram> out;
    std::vector<int> pick(k2, 0);
    auto emit = [&]() {
        BratteliDiagram b{a1, a2, Eigen::MatrixXi(k1, k2)};
        for (int j = 0; j < k2; ++j)
            for (int i = 0; i < k1; ++i)
                b.d(i, j) = per_col[j][pick[j]][i];
        if (b.admissible())
            out.push_back(std::move(b));
    };
    auto rec = [&](auto&& self, int j) -> void {
        if (j == k2) {
            emit();
            return;
        }
        for (pick[j] = 0; pick[j] < static_cast<int>(per_col[j].size()); ++pick[j])
            self(self, j + 1);
    };
    rec(rec, 0);

    std::sort(out.begin(), out.end(), [](const BratteliDiagram& x, const BratteliDiagram& y) {
        for (int i = 0; i < x.d.rows(); ++i)
            for (int j = 0; j < x.d.cols(); ++j)
                if (x.d(i, j) != y.d(i, j))
                    return x.d(i, j) < y.d(i, j);
        return false;
    });
    return out;
}

namespace {

// the canonical embedding of a into target block j, following the diagram
Mat embed_block(const BratteliDiagram& b, int j, const BlockElement& a) {
    int nj = b.target.blocks[j].N;
    Mat out = Mat::Zero(nj, nj);
    int off = 0;
    for (int i = 0; i < b.source.block_count(); ++i) {
        int ni = b.source.blocks[i].N;
        for (int s = 0; s < b.d(i, j); ++s) {
            out.block(off, off, ni, ni) = a[i];
            off += ni;
        }
    }
    return out;
}

Mat canonical_L(const BratteliDiagram& b) {
    const auto& src = b.source;
    const auto& tgt = b.target;
    int dim1 = src.hilbert_dim(), dim2 = tgt.hilbert_dim();
    if (dim1 != dim2)
        throw std::invalid_argument("canonical_L: Hilbert dimensions differ");
    Mat L = Mat::Zero(dim2, dim1);
    for (int i = 0; i < src.block_count(); ++i) {
        int Ni = src.blocks[i].N;
        int copy = 0;
        for (int j = 0; j < tgt.block_count(); ++j) {
            for (int c = 0; c < tgt.blocks[j].n; ++c) {
                for (int s = 0; s < b.d(i, j); ++s) {
                    int dst = tgt.hilbert_offset(j) + c * tgt.blocks[j].N + b.slot_offset(i, j, s);
                    int srcoff = src.hilbert_offset(i) + copy * Ni;
                    for (int a = 0; a < Ni; ++a)
                        L(dst + a, srcoff + a) = 1.0;
                    ++copy;
                }
            }
        }
        if (copy != src.blocks[i].n)
            throw std::invalid_argument("canonical_L: diagram violates Hilbert compatibility");
    }
    return L;
}

}  // namespace

Morphism canonical_morphism(const BratteliDiagram& b) {
    if (!b.admissible())
        throw std::invalid_argument("canonical_morphism: diagram not admissible");
    Morphism m{b.source, b.target, b, {}, canonical_L(b)};
    for (const auto& blk : b.target.blocks)
        m.conj.push_back(Mat::Identity(blk.N, blk.N));
    return m;
}

Morphism identity_morphism(const AlgebraObject& a) {
    BratteliDiagram b{a, a, Eigen::MatrixXi::Identity(a.block_count(), a.block_count())};
    return canonical_morphism(b);
}

Morphism random_morphism(const BratteliDiagram& b, Rng& rng) {
    Morphism m = canonical_morphism(b);
    const auto& tgt = b.target;
    int dim = tgt.hilbert_dim();
    Mat U = Mat::Zero(dim, dim);
    for (int j = 0; j < tgt.block_count(); ++j) {
        const auto& blk = tgt.blocks[j];
        if (blk.n > 0) {
            Mat u = haar_unitary(blk.N, rng);
            Mat w = haar_unitary(blk.n, rng);
            m.conj[j] = u;
            U.block(tgt.hilbert_offset(j), tgt.hilbert_offset(j), blk.n * blk.N, blk.n * blk.N) =
                kron(w, u);
        } else {
            m.conj[j] = haar_unitary(blk.N, rng);  // the V part on ker lambda
        }
    }
    m.L = U * m.L;
    return m;
}

BlockElement apply_morphism(const Morphism& m, const BlockElement& a) {
    if (static_cast<int>(a.size()) != m.source.block_count())
        throw std::invalid_argument("apply_morphism: block count mismatch");
    for (int i = 0; i < m.source.block_count(); ++i)
        if (a[i].rows() != m.source.blocks[i].N || a[i].cols() != m.source.blocks[i].N)
            throw std::invalid_argument("apply_morphism: block shape mismatch");
    BlockElement out;
    for (int j = 0; j < m.target.block_count(); ++j)
        out.push_back(m.conj[j] * embed_block(m.diagram, j, a) * m.conj[j].adjoint());
    return out;
}

Morphism compose(const Morphism& m2, const Morphism& m1) {
    if (!(m1.target == m2.source))
        throw std::invalid_argument("compose: endpoint mismatch");
    const auto& A = m1.source;
    const auto& B = m1.target;
    const auto& C = m2.target;
    BratteliDiagram bc{A, C, m1.diagram.d * m2.diagram.d};

    Morphism m{A, C, bc, {}, m2.L * m1.L};
    for (int k = 0; k < C.block_count(); ++k) {
        int Nk = C.blocks[k].N;
        // nested layout: for j asc, s2 in d2(j,k): one copy of B-block j,
        // itself holding the d1-canonical layout of A-blocks
        Mat nest = Mat::Zero(Nk, Nk);
        int off = 0;
        for (int j = 0; j < B.block_count(); ++j) {
            int Nj = B.blocks[j].N;
            for (int s2 = 0; s2 < m2.diagram.d(j, k); ++s2) {
                nest.block(off, off, Nj, Nj) = m1.conj[j];
                off += Nj;
            }
        }
        // permutation from the canonical composite layout to the nested one
        Mat P = Mat::Zero(Nk, Nk);
        std::vector<int> taken(A.block_count(), 0);
        off = 0;
        for (int j = 0; j < B.block_count(); ++j) {
            for (int s2 = 0; s2 < m2.diagram.d(j, k); ++s2) {
                for (int i = 0; i < A.block_count(); ++i) {
                    int Ni = A.blocks[i].N;
                    for (int s1 = 0; s1 < m1.diagram.d(i, j); ++s1) {
                        int nested = off + m1.diagram.slot_offset(i, j, s1);
                        int canonical = bc.slot_offset(i, k, taken[i]++);
                        for (int a = 0; a < Ni; ++a)
                            P(nested + a, canonical + a) = 1.0;
                    }
                }
                off += B.blocks[j].N;
            }
        }
        m.conj.push_back(m2.conj[k] * nest * P);
    }
    return m;
}

bool morphism_equal(const Morphism& m1, const Morphism& m2, double tol) {
    if (!(m1.source == m2.source) || !(m1.target == m2.target))
        return false;
    if (!(m1.diagram == m2.diagram))
        return false;
    if ((m1.L - m2.L).cwiseAbs().maxCoeff() > tol)
        return false;
    // compare phi on a spanning set of matrix units
    for (int i = 0; i < m1.source.block_count(); ++i) {
        int Ni = m1.source.blocks[i].N;
        for (int p = 0; p < Ni; ++p)
            for (int q = 0; q < Ni; ++q) {
                BlockElement e;
                for (const auto& blk : m1.source.blocks)
                    e.push_back(Mat::Zero(blk.N, blk.N));
                e[i](p, q) = 1.0;
                BlockElement y1 = apply_morphism(m1, e), y2 = apply_morphism(m2, e);
                for (std::size_t j = 0; j < y1.size(); ++j)
                    if ((y1[j] - y2[j]).cwiseAbs().maxCoeff() > tol)
                        return false;
            }
    }
    return true;
}

double equivariance_defect(const Morphism& m, Rng& rng, int trials) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        BlockElement a = random_element(m.source, rng);
        Mat lhs = m.L * represent(m.source, a) * m.L.adjoint();
        Mat rhs = represent(m.target, apply_morphism(m, a));
        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    return worst;
}

std::vector<HomEntry> hom_descriptor(const AlgebraObject& a1, const AlgebraObject& a2) {
    std::vector<HomEntry> out;
    for (auto& b : enumerate_bratteli(a1, a2)) {
        HomEntry e;
        e.diagram = b;
        for (int j = 0; j < a2.block_count(); ++j) {
            const auto& blk = a2.blocks[j];
            if (blk.n > 0) {
                e.aut_dim += blk.N * blk.N + blk.n * blk.n;
                e.central_redundancy += 1;
            } else {
                int stab = 0;
                for (int i = 0; i < a1.block_count(); ++i)
                    stab += b.d(i, j) * b.d(i, j);
                e.orbit_dim += blk.N * blk.N - stab;
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

int AutomorphismInfo::continuous_dim() const {
    int s = 0;
    for (const auto& f : continuous)
        s += f.kernel ? f.N * f.N - 1 : f.N * f.N + f.n * f.n;
    return s;
}

AutomorphismInfo automorphisms(const AlgebraObject& a) {
    AutomorphismInfo info;
    for (const auto& b : a.blocks)
        info.continuous.push_back({b.N, b.n, b.n == 0});

    auto classes = [&](bool kernel) {
        std::vector<std::vector<int>> cls;
        std::vector<bool> used(a.blocks.size(), false);
        for (int i = 0; i < a.block_count(); ++i) {
            if (used[i] || (a.blocks[i].n == 0) != kernel)
                continue;
            std::vector<int> c{i};
            for (int j = i + 1; j < a.block_count(); ++j)
                if (!used[j] && a.blocks[j] == a.blocks[i]) {
                    c.push_back(j);
                    used[j] = true;
                }
            used[i] = true;
            if (c.size() > 1)
                cls.push_back(std::move(c));
        }
        return cls;
    };
    info.tilde_permutations = classes(false);
    info.kernel_permutations = classes(true);
    return info;
}

}  // namespace gnet
