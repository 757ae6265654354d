#include "gaugenet/repthy.hpp"

#include <algorithm>
#include <numeric>

namespace gnet {

void HighestWeight::validate() const {
    if (N < 1 || static_cast<int>(lambda.size()) != N)
        throw std::invalid_argument("HighestWeight: rank/length mismatch");
    for (int i = 0; i + 1 < N; ++i)
        if (lambda[i] < lambda[i + 1])
            throw std::invalid_argument("HighestWeight: entries must be non-increasing");
}

bool HighestWeight::trivial() const {
    return std::all_of(lambda.begin(), lambda.end(), [](int x) { return x == 0; });
}

bool ProductWeight::trivial() const {
    return std::all_of(parts.begin(), parts.end(), [](const auto& p) { return p.trivial(); });
}

long long WeightCharacter::dimension() const {
    long long s = 0;
    for (const auto& [w, m] : mult)
        s += m;
    return s;
}

void TorusEmbedding::validate(int target_rank) const {
    int rows = 0;
    for (int r : source_ranks) {
        if (r < 1)
            throw std::invalid_argument("TorusEmbedding: source rank must be >= 1");
        rows += r;
    }
    if (map.rows() != rows || map.cols() != target_rank)
        throw std::invalid_argument("TorusEmbedding: matrix shape mismatch");
}

long long weyl_dim(const HighestWeight& w) {
    w.validate();
    __int128 num = 1, den = 1;
    for (int i = 0; i < w.N; ++i)
        for (int j = i + 1; j < w.N; ++j) {
            num *= w.lambda[i] - w.lambda[j] + j - i;
            den *= j - i;
        }
    if (den == 0 || num % den != 0)
        throw contract_error("weyl_dim: non-integer result");
    return static_cast<long long>(num / den);
}

long long weyl_dim(const ProductWeight& w) {
    long long p = 1;
    for (const auto& part : w.parts)
        p *= weyl_dim(part);
    return p;
}

namespace {

using FlatMult = std::map<WeightVec, long long>;

// weights over the concatenation of several torus ranks
struct FlatChar {
    std::vector<int> ranks;
    FlatMult mult;
    int total_rank() const { return std::accumulate(ranks.begin(), ranks.end(), 0); }
};

struct CharCache {
    std::map<std::vector<int>, FlatMult> gt;
    long long cap;

    explicit CharCache(long long c) : cap(c) {}

    // Gelfand-Tsetlin recursion for non-increasing nonnegative top rows
    const FlatMult& gt_char(const std::vector<int>& lam) {
        auto it = gt.find(lam);
        if (it != gt.end())
            return it->second;
        FlatMult out;
        int k = static_cast<int>(lam.size());
        long long sum = std::accumulate(lam.begin(), lam.end(), 0LL);
        if (k == 1) {
            out[{lam[0]}] = 1;
        } else {
            std::vector<int> mu(k - 1);
            auto rec = [&](auto&& self, int i) -> void {
                if (i == k - 1) {
                    long long musum = std::accumulate(mu.begin(), mu.end(), 0LL);
                    for (const auto& [w, m] : gt_char(mu)) {
                        WeightVec full = w;
                        full.push_back(static_cast<int>(sum - musum));
                        out[full] += m;
                    }
                    return;
                }
                for (mu[i] = lam[i + 1]; mu[i] <= lam[i]; ++mu[i])
                    self(self, i + 1);
            };
            rec(rec, 0);
        }
        return gt.emplace(lam, std::move(out)).first->second;
    }

    FlatMult char_of(const HighestWeight& w) {
        w.validate();
        if (weyl_dim(w) > cap)
            throw std::invalid_argument("character: dimension cap exceeded");
        int shift = 0;
        for (int x : w.lambda)
            shift = std::max(shift, -x);
        std::vector<int> lam = w.lambda;
        for (auto& x : lam)
            x += shift;
        FlatMult raw = gt_char(lam);
        if (shift == 0)
            return raw;
        FlatMult out;
        for (const auto& [wt, m] : raw) {
            WeightVec s = wt;
            for (auto& x : s)
                x -= shift;
            out[s] = m;
        }
        return out;
    }

    FlatChar char_of(const ProductWeight& pw) {
        FlatChar out;
        out.mult[{}] = 1;
        for (const auto& part : pw.parts) {
            FlatMult pc = char_of(part);
            FlatMult next;
            for (const auto& [w1, m1] : out.mult)
                for (const auto& [w2, m2] : pc) {
                    WeightVec w = w1;
                    w.insert(w.end(), w2.begin(), w2.end());
                    next[w] += m1 * m2;
                }
            out.mult = std::move(next);
            out.ranks.push_back(part.N);
        }
        return out;
    }
};

FlatChar convolve(const FlatChar& a, const FlatChar& b) {
    FlatChar out;
    out.ranks = a.ranks;
    for (const auto& [w1, m1] : a.mult)
        for (const auto& [w2, m2] : b.mult) {
            WeightVec w(w1.size());
            for (std::size_t i = 0; i < w.size(); ++i)
                w[i] = w1[i] + w2[i];
            out.mult[w] += m1 * m2;
        }
    return out;
}

FlatChar dual_char(const FlatChar& a) {
    FlatChar out;
    out.ranks = a.ranks;
    for (const auto& [w, m] : a.mult) {
        WeightVec nw(w.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            nw[i] = -w[i];
        out.mult[nw] += m;
    }
    return out;
}

FlatChar push_char(const FlatChar& a, const TorusEmbedding& emb) {
    emb.validate(a.total_rank());
    FlatChar out;
    out.ranks = emb.source_ranks;
    int rows = emb.map.rows();
    for (const auto& [w, m] : a.mult) {
        WeightVec s(rows, 0);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < emb.map.cols(); ++c)
                s[r] += emb.map(r, c) * w[c];
        out.mult[s] += m;
    }
    return out;
}

// iterated dominant subtraction
std::map<ProductWeight, long long> peel(FlatChar f, CharCache& cache) {
    std::map<ProductWeight, long long> out;
    while (!f.mult.empty()) {
        auto top = f.mult.rbegin();
        WeightVec w = top->first;
        long long m = top->second;
        if (m <= 0)
            throw contract_error("decompose: negative multiplicity (internal inconsistency)");
        ProductWeight pw;
        int off = 0;
        for (int r : f.ranks) {
            std::vector<int> part(w.begin() + off, w.begin() + off + r);
            for (int i = 0; i + 1 < r; ++i)
                if (part[i] < part[i + 1])
                    throw contract_error("decompose: non-dominant residue (internal inconsistency)");
            pw.parts.emplace_back(r, std::move(part));
            off += r;
        }
        out[pw] += m;
        FlatChar pc = cache.char_of(pw);
        for (const auto& [cw, cm] : pc.mult) {
            auto it = f.mult.find(cw);
            long long nv = (it == f.mult.end() ? 0 : it->second) - m * cm;
            if (nv == 0) {
                if (it != f.mult.end())
                    f.mult.erase(it);
            } else {
                f.mult[cw] = nv;
            }
        }
    }
    return out;
}

}  // namespace

WeightCharacter weight_multiplicities(const HighestWeight& w, long long cap) {
    CharCache cache(cap);
    return {w.N, cache.char_of(w)};
}

std::map<HighestWeight, long long> tensor_decompose(const HighestWeight& w1,
                                                    const HighestWeight& w2,
                                                    long long cap) {
    if (w1.N != w2.N)
        throw std::invalid_argument("tensor_decompose: rank mismatch");
    if (weyl_dim(w1) * weyl_dim(w2) > cap)
        throw std::invalid_argument("tensor_decompose: dimension cap exceeded");
    CharCache cache(cap);
    FlatChar a{{w1.N}, cache.char_of(w1)};
    FlatChar b{{w2.N}, cache.char_of(w2)};
    std::map<HighestWeight, long long> out;
    for (const auto& [pw, m] : peel(convolve(a, b), cache))
        out[pw.parts[0]] = m;
    return out;
}

std::map<ProductWeight, long long> restrict_rep(const HighestWeight& w,
                                                const TorusEmbedding& emb, long long cap) {
    return restrict_rep(ProductWeight{{w}}, emb, cap);
}

std::map<ProductWeight, long long> restrict_rep(const ProductWeight& w,
                                                const TorusEmbedding& emb, long long cap) {
    CharCache cache(cap);
    FlatChar c = cache.char_of(w);
    return peel(push_char(c, emb), cache);
}

long long invariant_dim(const HighestWeight& w, const TorusEmbedding& emb, long long cap) {
    ProductWeight triv;
    for (int r : emb.source_ranks)
        triv.parts.emplace_back(r, std::vector<int>(r, 0));
    auto dec = restrict_rep(w, emb, cap);
    auto it = dec.find(triv);
    return it == dec.end() ? 0 : it->second;
}

long long casimir(const HighestWeight& w) {
    w.validate();
    long long c = 0;
    for (int i = 0; i < w.N; ++i)
        c += static_cast<long long>(w.lambda[i]) * (w.lambda[i] + w.N + 1 - 2 * (i + 1));
    return c;
}

long long casimir(const ProductWeight& w) {
    long long c = 0;
    for (const auto& p : w.parts)
        c += casimir(p);
    return c;
}

std::vector<double> casimir_explicit(const std::vector<Mat>& rho) {
    std::size_t count = rho.size();
    int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(count))));
    if (static_cast<std::size_t>(n) * n != count || n < 1)
        throw std::invalid_argument("casimir_explicit: need n^2 basis images");
    auto basis = lie_basis(n);
    double scale = 1.0;
    for (const auto& m : rho)
        scale = std::max(scale, m.cwiseAbs().maxCoeff());

    // closure check against the structure constants of lie_basis(n)
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = a + 1; b < count; ++b) {
            Mat comm = basis[a] * basis[b] - basis[b] * basis[a];
            Mat want = rho[a] * rho[b] - rho[b] * rho[a];
            for (std::size_t c = 0; c < count; ++c) {
                double fc = (basis[c].adjoint() * comm).trace().real();
                if (fc != 0.0)
                    want -= fc * rho[c];
            }
            if (want.cwiseAbs().maxCoeff() > 1e-9 * scale * scale)
                throw contract_error("casimir_explicit: commutator closure check failed");
        }

    Mat c2 = Mat::Zero(rho[0].rows(), rho[0].cols());
    for (const auto& m : rho)
        c2 -= m * m;
    c2 = 0.5 * (c2 + c2.adjoint());
    auto eig = eig_hermitian(c2);
    return {eig.values.data(), eig.values.data() + eig.values.size()};
}

std::vector<Mat> rep_defining(int n) { return lie_basis(n); }

std::vector<Mat> rep_dual(const std::vector<Mat>& rho) {
    std::vector<Mat> out;
    out.reserve(rho.size());
    for (const auto& m : rho)
        out.push_back((-m.transpose()).eval());
    return out;
}

std::vector<Mat> rep_tensor(const std::vector<Mat>& rho1, const std::vector<Mat>& rho2) {
    if (rho1.size() != rho2.size())
        throw std::invalid_argument("rep_tensor: basis size mismatch");
    std::vector<Mat> out;
    Mat id1 = Mat::Identity(rho1[0].rows(), rho1[0].rows());
    Mat id2 = Mat::Identity(rho2[0].rows(), rho2[0].rows());
    for (std::size_t a = 0; a < rho1.size(); ++a)
        out.push_back(kron(rho1[a], id2) + kron(id1, rho2[a]));
    return out;
}

std::vector<Mat> rep_adjoint(int n) {
    auto basis = lie_basis(n);
    std::size_t m = basis.size();
    std::vector<Mat> out;
    for (std::size_t a = 0; a < m; ++a) {
        Mat ad = Mat::Zero(m, m);
        for (std::size_t b = 0; b < m; ++b) {
            Mat comm = basis[a] * basis[b] - basis[b] * basis[a];
            for (std::size_t c = 0; c < m; ++c)
                ad(c, b) = (basis[c].adjoint() * comm).trace();
        }
        out.push_back(ad);
    }
    return out;
}

long long intertwiner_dim(const std::vector<int>& vertex_ranks,
                          const std::vector<ProductWeight>& incoming,
                          const std::vector<OutgoingLeg>& outgoing, long long cap) {
    CharCache cache(cap);
    int total = std::accumulate(vertex_ranks.begin(), vertex_ranks.end(), 0);
    FlatChar acc;
    acc.ranks = vertex_ranks;
    acc.mult[WeightVec(total, 0)] = 1;

    for (const auto& in : incoming) {
        if (static_cast<int>(in.parts.size()) != static_cast<int>(vertex_ranks.size()))
            throw std::invalid_argument("intertwiner_dim: incoming block count mismatch");
        for (std::size_t i = 0; i < in.parts.size(); ++i)
            if (in.parts[i].N != vertex_ranks[i])
                throw std::invalid_argument("intertwiner_dim: incoming rank mismatch");
        acc = convolve(acc, cache.char_of(in));
    }

    for (const auto& leg : outgoing) {
        FlatChar flat = cache.char_of(leg.rho);
        auto dec = peel(push_char(flat, leg.joint), cache);
        FlatChar legchar;
        legchar.ranks = vertex_ranks;
        for (const auto& [pw, m] : dec) {
            bool k_trivial = true;
            for (int b = 0; b < leg.k_block_count; ++b)
                k_trivial = k_trivial && pw.parts[b].trivial();
            if (!k_trivial)
                continue;
            ProductWeight rest;
            rest.parts.assign(pw.parts.begin() + leg.k_block_count, pw.parts.end());
            if (static_cast<int>(rest.parts.size()) != static_cast<int>(vertex_ranks.size()))
                throw std::invalid_argument("intertwiner_dim: outgoing block count mismatch");
            FlatChar rc = cache.char_of(rest);
            for (const auto& [w, mm] : rc.mult)
                legchar.mult[w] += m * mm;
        }
        if (legchar.mult.empty())
            return 0;
        acc = convolve(acc, dual_char(legchar));
    }

    auto dec = peel(acc, cache);
    ProductWeight triv;
    for (int r : vertex_ranks)
        triv.parts.emplace_back(r, std::vector<int>(r, 0));
    auto it = dec.find(triv);
    return it == dec.end() ? 0 : it->second;
}

}  // namespace gnet
