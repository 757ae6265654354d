#include "gaugenet/network.hpp"

#include <numeric>

namespace gnet {

namespace {

bool same_matrix(const Eigen::MatrixXi& a, const Eigen::MatrixXi& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && (a.array() == b.array()).all();
}

void require_multiplicity_free(const AlgebraObject& a) {
    for (const auto& b : a.blocks)
        if (b.n > 1)
            throw std::invalid_argument(
                "gauge networks: representation multiplicities > 1 are unsupported");
}

}  // namespace

std::vector<int> vertex_ranks(const AlgebraObject& a) {
    std::vector<int> out;
    for (const auto& b : a.blocks)
        out.push_back(b.N);
    return out;
}

EdgeStructure edge_structure(const BratteliDiagram& b) {
    if (!b.admissible())
        throw std::invalid_argument("edge_structure: diagram not admissible");
    require_multiplicity_free(b.source);
    require_multiplicity_free(b.target);

    EdgeStructure es;
    es.group_ranks = vertex_ranks(b.target);
    es.source_ranks = vertex_ranks(b.source);

    int target_rank = std::accumulate(es.group_ranks.begin(), es.group_ranks.end(), 0);
    std::vector<int> block_off(b.target.block_count(), 0);
    for (int j = 1; j < b.target.block_count(); ++j)
        block_off[j] = block_off[j - 1] + b.target.blocks[j - 1].N;
    std::vector<int> src_off(b.source.block_count(), 0);
    for (int i = 1; i < b.source.block_count(); ++i)
        src_off[i] = src_off[i - 1] + b.source.blocks[i - 1].N;
    int src_rank = std::accumulate(es.source_ranks.begin(), es.source_ranks.end(), 0);

    // K blocks: one U(d_ij) per kernel target block j and source block i
    std::vector<int> k_ranks;
    std::vector<std::vector<int>> k_row;  // per (j,i) start row
    int k_rank = 0;
    std::vector<std::vector<int>> k_start(b.target.block_count(),
                                          std::vector<int>(b.source.block_count(), -1));
    for (int j = 0; j < b.target.block_count(); ++j) {
        if (b.target.blocks[j].n > 0)
            continue;
        for (int i = 0; i < b.source.block_count(); ++i)
            if (b.d(i, j) > 0) {
                k_start[j][i] = k_rank;
                k_ranks.push_back(b.d(i, j));
                k_rank += b.d(i, j);
            }
    }
    es.k_block_count = static_cast<int>(k_ranks.size());

    Eigen::MatrixXi kmap = Eigen::MatrixXi::Zero(k_rank, target_rank);
    Eigen::MatrixXi jmap = Eigen::MatrixXi::Zero(k_rank + src_rank, target_rank);
    for (int j = 0; j < b.target.block_count(); ++j) {
        bool kernel = b.target.blocks[j].n == 0;
        for (int i = 0; i < b.source.block_count(); ++i) {
            int Ni = b.source.blocks[i].N;
            for (int s = 0; s < b.d(i, j); ++s) {
                int base = block_off[j] + b.slot_offset(i, j, s);
                for (int a = 0; a < Ni; ++a) {
                    jmap(k_rank + src_off[i] + a, base + a) += 1;
                    if (kernel) {
                        kmap(k_start[j][i] + s, base + a) += 1;
                        jmap(k_start[j][i] + s, base + a) += 1;
                    }
                }
            }
        }
    }
    es.k_embedding = TorusEmbedding{k_ranks, kmap};
    std::vector<int> joint_ranks = k_ranks;
    joint_ranks.insert(joint_ranks.end(), es.source_ranks.begin(), es.source_ranks.end());
    es.joint_embedding = TorusEmbedding{joint_ranks, jmap};
    return es;
}

bool GaugeNetwork::operator==(const GaugeNetwork& o) const {
    if (graph.vertex_count != o.graph.vertex_count || graph.edges.size() != o.graph.edges.size())
        return false;
    for (std::size_t e = 0; e < graph.edges.size(); ++e)
        if (graph.edges[e].s != o.graph.edges[e].s || graph.edges[e].t != o.graph.edges[e].t)
            return false;
    if (!(objects == o.objects) || !(edge_weights == o.edge_weights) ||
        !(intertwiner_index == o.intertwiner_index))
        return false;
    for (std::size_t e = 0; e < diagrams.size(); ++e)
        if (!(diagrams[e].source == o.diagrams[e].source) ||
            !(diagrams[e].target == o.diagrams[e].target) ||
            !same_matrix(diagrams[e].d, o.diagrams[e].d))
            return false;
    return true;
}

namespace {

// non-increasing integer vectors of given length with entries in [-c, c]
void dominant_vectors(int len, int cutoff, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == len) {
        out.push_back(cur);
        return;
    }
    int hi = cur.empty() ? cutoff : cur.back();
    for (int v = hi; v >= -cutoff; --v) {
        cur.push_back(v);
        dominant_vectors(len, cutoff, cur, out);
        cur.pop_back();
    }
}

std::vector<ProductWeight> candidate_weights(const std::vector<int>& ranks, int cutoff) {
    std::vector<std::vector<std::vector<int>>> per_block;
    for (int r : ranks) {
        std::vector<std::vector<int>> vecs;
        std::vector<int> cur;
        dominant_vectors(r, cutoff, cur, vecs);
        per_block.push_back(std::move(vecs));
    }
    std::vector<ProductWeight> out;
    std::vector<std::size_t> pick(ranks.size(), 0);
    while (true) {
        ProductWeight pw;
        for (std::size_t b = 0; b < ranks.size(); ++b)
            pw.parts.emplace_back(ranks[b], per_block[b][pick[b]]);
        out.push_back(std::move(pw));
        std::size_t k = ranks.size();
        while (k > 0) {
            --k;
            if (++pick[k] < per_block[k].size())
                break;
            pick[k] = 0;
            if (k == 0)
                return out;
        }
        if (ranks.empty())
            return out;
    }
}

long long k_invariant_dim(const ProductWeight& pw, const TorusEmbedding& emb) {
    ProductWeight triv;
    for (int r : emb.source_ranks)
        triv.parts.emplace_back(r, std::vector<int>(r, 0));
    auto dec = restrict_rep(pw, emb);
    auto it = dec.find(triv);
    return it == dec.end() ? 0 : it->second;
}

}  // namespace

std::vector<GaugeNetwork> enumerate_networks(const Quiver& q,
                                             const std::vector<AlgebraObject>& objects,
                                             const std::vector<BratteliDiagram>& diagrams,
                                             int cutoff, long long cap) {
    q.validate();
    if (static_cast<int>(objects.size()) != q.vertex_count || diagrams.size() != q.edges.size())
        throw std::invalid_argument("enumerate_networks: size mismatch");
    for (const auto& o : objects)
        require_multiplicity_free(o);

    const int ne = static_cast<int>(q.edges.size());
    std::vector<EdgeStructure> es;
    std::vector<std::vector<ProductWeight>> cands(ne);
    long long combos = 1;
    for (int e = 0; e < ne; ++e) {
        if (!(diagrams[e].source == objects[q.edges[e].s]) ||
            !(diagrams[e].target == objects[q.edges[e].t]))
            throw std::invalid_argument("enumerate_networks: diagram endpoints mismatch");
        es.push_back(edge_structure(diagrams[e]));
        for (auto& pw : candidate_weights(es[e].group_ranks, cutoff))
            if (k_invariant_dim(pw, es[e].k_embedding) >= 1)
                cands[e].push_back(std::move(pw));
        combos *= static_cast<long long>(cands[e].size());
        if (combos > cap)
            throw std::invalid_argument("enumerate_networks: combinatorial cap exceeded");
        if (combos == 0)
            return {};
    }

    std::vector<GaugeNetwork> out;
    std::vector<std::size_t> pick(ne, 0);
    while (true) {
        GaugeNetwork base;
        base.graph = q;
        base.objects = objects;
        base.diagrams = diagrams;
        for (int e = 0; e < ne; ++e)
            base.edge_weights.push_back(cands[e][pick[e]]);

        bool ok = true;
        std::vector<long long> dims(q.vertex_count, 1);
        for (int v = 0; v < q.vertex_count && ok; ++v) {
            std::vector<ProductWeight> incoming;
            for (int e : q.edges_into(v))
                incoming.push_back(base.edge_weights[e]);
            std::vector<OutgoingLeg> outgoing;
            for (int e : q.edges_out_of(v))
                outgoing.push_back({base.edge_weights[e], es[e].joint_embedding,
                                    es[e].k_block_count});
            dims[v] = intertwiner_dim(vertex_ranks(objects[v]), incoming, outgoing);
            ok = dims[v] >= 1;
        }
        if (ok) {
            base.intertwiner_dims = dims;
            long long tuples = 1;
            for (long long d : dims)
                tuples *= d;
            if (static_cast<long long>(out.size()) + tuples > cap)
                throw std::invalid_argument("enumerate_networks: combinatorial cap exceeded");
            std::vector<long long> idx(q.vertex_count, 0);
            for (long long t = 0; t < tuples; ++t) {
                base.intertwiner_index = idx;
                out.push_back(base);
                int k = q.vertex_count;
                while (k > 0) {
                    --k;
                    if (++idx[k] < dims[k])
                        break;
                    idx[k] = 0;
                }
            }
        }

        int k = ne;
        bool done = true;
        while (k > 0) {
            --k;
            if (++pick[k] < cands[k].size()) {
                done = false;
                break;
            }
            pick[k] = 0;
        }
        if (done)
            break;
    }
    return out;
}

long long hamiltonian_energy(const GaugeNetwork& psi) {
    long long e = 0;
    for (const auto& w : psi.edge_weights)
        e += casimir(w);
    return e;
}

cd evolution_phase(const GaugeNetwork& psi, const GaugeNetwork& psi2, double t) {
    double de = static_cast<double>(hamiltonian_energy(psi)) -
                static_cast<double>(hamiltonian_energy(psi2));
    return std::exp(cd(0, t * de));
}

CorrespondenceStub identity_correspondence(const GaugeNetwork& psi) {
    CorrespondenceStub c;
    c.source = psi;
    c.target = psi;
    for (const auto& o : psi.objects)
        c.rank.push_back(Eigen::MatrixXi::Identity(o.block_count(), o.block_count()));
    return c;
}

CorrespondenceStub compose_correspondences(const CorrespondenceStub& p1,
                                           const CorrespondenceStub& p2) {
    if (!(p1.target == p2.source))
        throw std::invalid_argument("compose_correspondences: endpoint mismatch");
    CorrespondenceStub c;
    c.source = p1.source;
    c.target = p2.target;
    for (std::size_t v = 0; v < p1.rank.size(); ++v) {
        if (p1.rank[v].cols() != p2.rank[v].rows())
            throw std::invalid_argument("compose_correspondences: rank shape mismatch");
        c.rank.push_back(p1.rank[v] * p2.rank[v]);
    }
    return c;
}

}  // namespace gnet
