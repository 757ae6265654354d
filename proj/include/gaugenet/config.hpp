#pragma once

#include "gaugenet/quiver.hpp"

#include <iosfwd>
#include <string>

namespace gnet {

// Checkpoint format shared by the CLI and the Monte Carlo sampler: lattice
// metadata plus one unitary per edge, entries as [re, im] pairs row-major,
// edges in build_lattice order.
struct LatticeConfig {
    int d = 4;
    int L = 2;
    double l = 1.0;
    bool periodic = true;
    int N = 1;
    std::vector<Mat> links;
};

std::string dump_config(const LatticeConfig& cfg);
LatticeConfig parse_config(const std::string& text);
void save_config(const std::string& path, const LatticeConfig& cfg);
LatticeConfig load_config(const std::string& path);

EmbeddedQuiver lattice_of(const LatticeConfig& cfg);
QuiverRep rep_of(const LatticeConfig& cfg);
LatticeConfig config_of(const EmbeddedQuiver& eq, const QuiverRep& rep);

}  // namespace gnet
