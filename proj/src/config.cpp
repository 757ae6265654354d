#include "gaugenet/config.hpp"

#include <fstream>
#include <json.hpp>

namespace gnet {

using json = nlohmann::ordered_json;

std::string dump_config(const LatticeConfig& cfg) {
    json j;
    j["d"] = cfg.d;
    j["L"] = cfg.L;
    j["l"] = cfg.l;
    j["periodic"] = cfg.periodic;
    j["N"] = cfg.N;
    json links = json::array();
    for (const auto& u : cfg.links) {
        json entries = json::array();
        for (int r = 0; r < u.rows(); ++r)
            for (int c = 0; c < u.cols(); ++c)
                entries.push_back({u(r, c).real(), u(r, c).imag()});
        links.push_back(entries);
    }
    j["links"] = std::move(links);
    return j.dump();
}

LatticeConfig parse_config(const std::string& text) {
    json j = json::parse(text);
    LatticeConfig cfg;
    cfg.d = j.at("d").get<int>();
    cfg.L = j.at("L").get<int>();
    cfg.l = j.at("l").get<double>();
    cfg.periodic = j.at("periodic").get<bool>();
    cfg.N = j.at("N").get<int>();
    for (const auto& entries : j.at("links")) {
        if (entries.size() != static_cast<std::size_t>(cfg.N) * cfg.N)
            throw std::invalid_argument("parse_config: link entry count mismatch");
        Mat u(cfg.N, cfg.N);
        std::size_t k = 0;
        for (int r = 0; r < cfg.N; ++r)
            for (int c = 0; c < cfg.N; ++c, ++k)
                u(r, c) = cd(entries[k][0].get<double>(), entries[k][1].get<double>());
        cfg.links.push_back(std::move(u));
    }
    return cfg;
}

void save_config(const std::string& path, const LatticeConfig& cfg) {
    std::ofstream f(path);
    if (!f)
        throw std::invalid_argument("save_config: cannot open " + path);
    f << dump_config(cfg) << "\n";
}

LatticeConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw std::invalid_argument("load_config: cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return parse_config(text);
}

EmbeddedQuiver lattice_of(const LatticeConfig& cfg) {
    return build_lattice(cfg.d, cfg.L, cfg.l, cfg.periodic);
}

QuiverRep rep_of(const LatticeConfig& cfg) {
    EmbeddedQuiver eq = lattice_of(cfg);
    if (cfg.links.size() != eq.graph.edges.size())
        throw std::invalid_argument("rep_of: link count does not match lattice");
    return spin_rep(eq.graph, cfg.N, cfg.links);
}

LatticeConfig config_of(const EmbeddedQuiver& eq, const QuiverRep& rep) {
    LatticeConfig cfg;
    cfg.d = eq.dim;
    cfg.L = eq.extent;
    cfg.l = eq.spacing;
    cfg.periodic = eq.periodic;
    cfg.N = rep.objects.empty() ? 1 : rep.objects[0].blocks[0].N;
    cfg.links = links_of(rep);
    return cfg;
}

}  // namespace gnet
