#include "gaugenet/cli.hpp"

#include "gaugenet/action.hpp"
#include "gaugenet/config.hpp"
#include "gaugenet/network.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <thread>

namespace gnet {

namespace {

using json = nlohmann::ordered_json;

std::string fmt(double x) {
    char b[48];
    std::snprintf(b, sizeof b, "%.15g", x);
    return b;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos)
            next = s.size();
        out.push_back(std::stoi(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    if (out.empty())
        throw std::invalid_argument("empty integer list");
    return out;
}

AlgebraObject parse_object(const std::string& n_list, const std::string& h_list) {
    auto ns = parse_int_list(n_list);
    auto hs = h_list.empty() ? ns : parse_int_list(h_list);
    if (ns.size() != hs.size())
        throw std::invalid_argument("algebra and Hilbert block lists differ in length");
    AlgebraObject obj;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (ns[i] < 1 || hs[i] < 0 || hs[i] % ns[i] != 0)
            throw std::invalid_argument("Hilbert dimension must be a multiple of the block dimension");
        obj.blocks.push_back({ns[i], hs[i] / ns[i]});
    }
    return obj;
}

json diagram_json(const BratteliDiagram& b) {
    json jd = json::array();
    for (int i = 0; i < b.d.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < b.d.cols(); ++j)
            row.push_back(b.d(i, j));
        jd.push_back(row);
    }
    json kernel = json::array();
    for (int j : b.target.kernel_blocks())
        kernel.push_back(j);
    return json{{"d", jd}, {"kernel_cols", kernel}};
}

void print_diagram(std::ostream& out, const BratteliDiagram& b) {
    for (int i = 0; i < b.d.rows(); ++i) {
        out << "  [";
        for (int j = 0; j < b.d.cols(); ++j)
            out << (j ? " " : "") << b.d(i, j);
        out << "]\n";
    }
}

HighestWeight parse_weight(const std::string& s) {
    auto v = parse_int_list(s);
    return HighestWeight(static_cast<int>(v.size()), v);
}

struct BasisSetup {
    Quiver graph;
    std::vector<AlgebraObject> objects;
    std::vector<BratteliDiagram> diagrams;
};

BasisSetup basis_setup(const std::string& graph, int N) {
    BasisSetup s;
    if (graph == "theta" || graph == "theta3") {
        int ne = graph == "theta" ? 2 : 3;
        s.graph.vertex_count = 2;
        AlgebraObject obj{{{N, 1}}};
        BratteliDiagram idd{obj, obj, Eigen::MatrixXi::Identity(1, 1)};
        for (int e = 0; e < ne; ++e) {
            s.graph.edges.push_back({0, 1});
            s.diagrams.push_back(idd);
        }
        s.objects.assign(2, obj);
    } else if (graph == "chain224") {
        s.graph.vertex_count = 3;
        AlgebraObject m2{{{2, 0}}}, m4{{{4, 0}}};
        s.objects = {m2, m2, m4};
        BratteliDiagram b22{m2, m2, Eigen::MatrixXi::Constant(1, 1, 1)};
        BratteliDiagram b24{m2, m4, Eigen::MatrixXi::Constant(1, 1, 2)};
        s.graph.edges = {{0, 1}, {0, 1}, {1, 2}, {1, 2}};
        s.diagrams = {b22, b22, b24, b24};
    } else {
        throw std::invalid_argument("unknown graph: " + graph);
    }
    return s;
}

json weight_json(const ProductWeight& pw) {
    json j = json::array();
    for (const auto& p : pw.parts) {
        json lam = json::array();
        for (int x : p.lambda)
            lam.push_back(x);
        j.push_back(lam);
    }
    return j;
}

std::string weight_str(const ProductWeight& pw) {
    std::string s;
    for (std::size_t b = 0; b < pw.parts.size(); ++b) {
        if (b)
            s += "x";
        s += "(";
        for (std::size_t k = 0; k < pw.parts[b].lambda.size(); ++k) {
            if (k)
                s += ",";
            s += std::to_string(pw.parts[b].lambda[k]);
        }
        s += ")";
    }
    return s;
}

QuiverRep random_links_rep(const EmbeddedQuiver& eq, int N, std::uint64_t seed, bool higgs) {
    Rng rng(seed);
    std::vector<Mat> links;
    for (std::size_t e = 0; e < eq.graph.edges.size(); ++e)
        links.push_back(haar_unitary(N, rng));
    QuiverRep rep = spin_rep(eq.graph, N, links);
    if (higgs)
        for (int v = 0; v < eq.graph.vertex_count; ++v) {
            Mat g(N, N);
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j)
                    g(i, j) = cd(rng.normal(), rng.normal());
            rep.dirac[v] = 0.25 * (g + g.adjoint());
        }
    return rep;
}

ContinuumFixture make_fixture(const std::string& mode, int d, int N, double amp) {
    ContinuumFixture fx;
    fx.d = d;
    fx.N = N;
    if (mode == "gauge") {
        fx.A = [amp, d, N](const Eigen::VectorXd& x, int mu) {
            int k = (mu + 1) % d;
            return Mat::Identity(N, N) * (amp * std::sin(2 * M_PI * x(k)));
        };
        fx.F = [amp, d, N](const Eigen::VectorXd& x, int mu, int nu) {
            double v = 0;
            if ((nu + 1) % d == mu)
                v += 2 * M_PI * amp * std::cos(2 * M_PI * x(mu));
            if ((mu + 1) % d == nu)
                v -= 2 * M_PI * amp * std::cos(2 * M_PI * x(nu));
            return (Mat::Identity(N, N) * v).eval();
        };
    } else if (mode == "higgs") {
        if (N != 2)
            throw std::invalid_argument("higgs fixture uses N = 2");
        Mat s3(2, 2);
        s3 << 1, 0, 0, -1;
        fx.phi = [amp, s3](const Eigen::VectorXd& x) {
            return (amp * std::sin(2 * M_PI * x(0)) * s3).eval();
        };
        fx.dphi = [amp, s3](const Eigen::VectorXd& x, int mu) {
            if (mu != 0)
                return Mat::Zero(2, 2).eval();
            return (2 * M_PI * amp * std::cos(2 * M_PI * x(0)) * s3).eval();
        };
    } else {
        throw std::invalid_argument("unknown continuum mode: " + mode);
    }
    return fx;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"gauge networks, lattice Dirac operators, and the spectral action"};
    app.name("gnet");
    app.require_subcommand(1);

    // ---- brat / hom ----
    std::string a1, h1, a2, h2;
    bool as_json = false;
    auto add_pair_opts = [&](CLI::App* cmd) {
        cmd->add_option("--a1", a1, "source block dimensions, e.g. 1,2")->required();
        cmd->add_option("--h1", h1, "source Hilbert dimensions per block");
        cmd->add_option("--a2", a2, "target block dimensions")->required();
        cmd->add_option("--h2", h2, "target Hilbert dimensions per block");
        cmd->add_flag("--json", as_json, "machine-readable output");
    };
    CLI::App* brat = app.add_subcommand("brat", "enumerate admissible Bratteli diagrams");
    add_pair_opts(brat);
    CLI::App* hom = app.add_subcommand("hom", "describe the morphism space per diagram");
    add_pair_opts(hom);

    // ---- rep ----
    CLI::App* rep = app.add_subcommand("rep", "U(N) representation calculus");
    rep->require_subcommand(1);
    std::string weight_s, w1_s, w2_s;
    bool rep_json = false;
    CLI::App* rep_dim = rep->add_subcommand("dim", "Weyl dimension");
    rep_dim->add_option("--weight", weight_s)->required();
    rep_dim->add_flag("--json", rep_json);
    CLI::App* rep_weights = rep->add_subcommand("weights", "weight multiplicities");
    rep_weights->add_option("--weight", weight_s)->required();
    rep_weights->add_flag("--json", rep_json);
    CLI::App* rep_tensor = rep->add_subcommand("tensor", "tensor product decomposition");
    rep_tensor->add_option("--w1", w1_s)->required();
    rep_tensor->add_option("--w2", w2_s)->required();
    rep_tensor->add_flag("--json", rep_json);
    CLI::App* rep_cas = rep->add_subcommand("casimir", "quadratic Casimir eigenvalue");
    rep_cas->add_option("--weight", weight_s)->required();
    rep_cas->add_flag("--json", rep_json);

    // ---- basis / hamiltonian ----
    std::string graph_name = "theta";
    int basis_N = 1, cutoff = 2;
    bool basis_json = false;
    CLI::App* basis = app.add_subcommand("basis", "enumerate gauge networks under a cutoff");
    basis->add_option("--graph", graph_name, "theta | theta3 | chain224");
    basis->add_option("--N", basis_N, "block dimension for theta graphs");
    basis->add_option("--cutoff", cutoff, "max |weight entry|");
    basis->add_flag("--json", basis_json);
    CLI::App* ham = app.add_subcommand("hamiltonian", "CSV of network Casimir energies");
    ham->add_option("--graph", graph_name);
    ham->add_option("--N", basis_N);
    ham->add_option("--cutoff", cutoff);
    ham->add_flag("--json", basis_json);

    // ---- dirac ----
    CLI::App* dirac = app.add_subcommand("dirac", "lattice Dirac operator");
    dirac->require_subcommand(1);
    int d = 4, L = 3, mat_N = 1;
    double spacing = 1.0;
    std::uint64_t seed = 0;
    bool have_seed = false, open_lattice = false;
    std::string config_path;
    CLI::App* dspec = dirac->add_subcommand("spectrum", "CSV of eigenvalues");
    dspec->add_option("--d", d, "lattice dimension");
    dspec->add_option("--L", L, "sites per axis");
    dspec->add_option("--l", spacing, "lattice spacing");
    dspec->add_option("--N", mat_N, "gauge group U(N)");
    dspec->add_option("--seed", seed, "Haar-random links")->trigger_on_parse();
    dspec->add_flag("--open", open_lattice, "open boundary conditions");
    dspec->add_option("--config", config_path, "link configuration file");
    auto* dseed_opt = dspec->get_option("--seed");

    // ---- action ----
    CLI::App* action = app.add_subcommand("action", "spectral action");
    action->require_subcommand(1);
    bool with_higgs = false, action_json = false;
    CLI::App* cmp = action->add_subcommand("compare", "closed form vs exact trace");
    cmp->add_option("--d", d);
    cmp->add_option("--L", L);
    cmp->add_option("--l", spacing);
    cmp->add_option("--N", mat_N);
    cmp->add_option("--seed", seed);
    cmp->add_option("--config", config_path);
    cmp->add_flag("--higgs", with_higgs, "include random finite Dirac blocks");
    cmp->add_flag("--json", action_json);

    // ---- continuum ----
    CLI::App* cont = app.add_subcommand("continuum", "lattice action vs continuum functional");
    std::string mode = "gauge", levels_s = "4,8,16";
    double amp = 0.3;
    int cont_d = 2, cont_N = 1;
    cont->add_option("--mode", mode, "gauge | higgs");
    cont->add_option("--d", cont_d);
    cont->add_option("--N", cont_N);
    cont->add_option("--levels", levels_s, "comma list of lattice sizes");
    cont->add_option("--amp", amp, "field amplitude");

    // ---- mc ----
    CLI::App* mc = app.add_subcommand("mc", "Metropolis sampling of the Wilson action");
    MCParams mp;
    int mc_d = 2, mc_L = 2, chains = 1;
    bool mc_open = true, mc_json = false;
    std::string checkpoint;
    mc->add_option("--d", mc_d);
    mc->add_option("--L", mc_L);
    mc->add_option("--N", mp.N);
    mc->add_option("--beta", mp.beta);
    mc->add_option("--sweeps", mp.sweeps);
    mc->add_option("--therm", mp.therm);
    mc->add_option("--eps", mp.eps);
    mc->add_option("--seed", mp.seed)->required();
    mc->add_option("--chains", chains);
    mc->add_flag("--periodic,!--open", mc_open, "boundary conditions")->default_val(false);
    mc->add_option("--checkpoint", checkpoint, "write final links of chain 0");
    mc->add_flag("--json", mc_json);

    // ---- ks ----
    CLI::App* ks = app.add_subcommand("ks", "Kogut-Susskind plaquette form at d = 3");
    int ks_L = 3;
    bool ks_json = false;
    ks->add_option("--L", ks_L);
    ks->add_option("--N", mat_N);
    ks->add_option("--l", spacing);
    ks->add_option("--seed", seed)->required();
    ks->add_flag("--json", ks_json);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*brat || *hom) {
            AlgebraObject o1 = parse_object(a1, h1);
            AlgebraObject o2 = parse_object(a2, h2);
            if (*brat) {
                auto list = enumerate_bratteli(o1, o2);
                if (as_json) {
                    json j;
                    j["count"] = list.size();
                    j["diagrams"] = json::array();
                    for (const auto& b : list)
                        j["diagrams"].push_back(diagram_json(b));
                    out << j.dump() << "\n";
                } else {
                    out << list.size() << " admissible diagram" << (list.size() == 1 ? "" : "s")
                        << "\n";
                    for (std::size_t k = 0; k < list.size(); ++k) {
                        out << "diagram " << k << ":\n";
                        print_diagram(out, list[k]);
                    }
                }
            } else {
                auto entries = hom_descriptor(o1, o2);
                if (as_json) {
                    json j = json::array();
                    for (const auto& e : entries)
                        j.push_back({{"diagram", diagram_json(e.diagram)},
                                     {"aut_dim", e.aut_dim},
                                     {"orbit_dim", e.orbit_dim},
                                     {"central_redundancy", e.central_redundancy}});
                    out << j.dump() << "\n";
                } else {
                    for (std::size_t k = 0; k < entries.size(); ++k) {
                        out << "diagram " << k << ": aut_dim=" << entries[k].aut_dim
                            << " orbit_dim=" << entries[k].orbit_dim
                            << " central_redundancy=" << entries[k].central_redundancy << "\n";
                        print_diagram(out, entries[k].diagram);
                    }
                }
            }
            return 0;
        }

        if (*rep) {
            if (*rep_dim) {
                auto w = parse_weight(weight_s);
                long long dim = weyl_dim(w);
                if (rep_json)
                    out << json{{"dim", dim}}.dump() << "\n";
                else
                    out << dim << "\n";
            } else if (*rep_weights) {
                auto wc = weight_multiplicities(parse_weight(weight_s));
                if (rep_json) {
                    json j = json::array();
                    for (const auto& [w, m] : wc.mult)
                        j.push_back({{"weight", w}, {"multiplicity", m}});
                    out << j.dump() << "\n";
                } else {
                    for (const auto& [w, m] : wc.mult) {
                        out << "(";
                        for (std::size_t k = 0; k < w.size(); ++k)
                            out << (k ? "," : "") << w[k];
                        out << ") " << m << "\n";
                    }
                }
            } else if (*rep_tensor) {
                auto dec = tensor_decompose(parse_weight(w1_s), parse_weight(w2_s));
                if (rep_json) {
                    json j = json::array();
                    for (const auto& [w, m] : dec)
                        j.push_back({{"weight", w.lambda}, {"multiplicity", m}});
                    out << j.dump() << "\n";
                } else {
                    for (const auto& [w, m] : dec) {
                        out << "(";
                        for (std::size_t k = 0; k < w.lambda.size(); ++k)
                            out << (k ? "," : "") << w.lambda[k];
                        out << ") " << m << "\n";
                    }
                }
            } else if (*rep_cas) {
                long long c = casimir(parse_weight(weight_s));
                if (rep_json)
                    out << json{{"casimir", c}}.dump() << "\n";
                else
                    out << c << "\n";
            }
            return 0;
        }

        if (*basis || *ham) {
            BasisSetup s = basis_setup(graph_name, basis_N);
            auto nets = enumerate_networks(s.graph, s.objects, s.diagrams, cutoff);
            if (*basis) {
                if (basis_json) {
                    json j;
                    j["graph"] = graph_name;
                    j["networks"] = json::array();
                    for (std::size_t k = 0; k < nets.size(); ++k) {
                        json n;
                        n["id"] = k;
                        n["edge_weights"] = json::array();
                        for (const auto& w : nets[k].edge_weights)
                            n["edge_weights"].push_back(weight_json(w));
                        n["intertwiner_dims"] = nets[k].intertwiner_dims;
                        n["intertwiner_index"] = nets[k].intertwiner_index;
                        n["energy"] = hamiltonian_energy(nets[k]);
                        j["networks"].push_back(n);
                    }
                    out << j.dump() << "\n";
                } else {
                    for (std::size_t k = 0; k < nets.size(); ++k) {
                        out << k << ": ";
                        for (std::size_t e = 0; e < nets[k].edge_weights.size(); ++e)
                            out << (e ? " " : "") << weight_str(nets[k].edge_weights[e]);
                        out << "  dims=[";
                        for (std::size_t v = 0; v < nets[k].intertwiner_dims.size(); ++v)
                            out << (v ? "," : "") << nets[k].intertwiner_dims[v];
                        out << "] index=[";
                        for (std::size_t v = 0; v < nets[k].intertwiner_index.size(); ++v)
                            out << (v ? "," : "") << nets[k].intertwiner_index[v];
                        out << "] energy=" << hamiltonian_energy(nets[k]) << "\n";
                    }
                }
            } else {
                out << "id,energy\n";
                for (std::size_t k = 0; k < nets.size(); ++k)
                    out << k << "," << hamiltonian_energy(nets[k]) << "\n";
            }
            return 0;
        }

        if (*dirac) {
            QuiverRep qr;
            EmbeddedQuiver eq;
            if (!config_path.empty()) {
                LatticeConfig cfg = load_config(config_path);
                eq = lattice_of(cfg);
                qr = rep_of(cfg);
            } else {
                eq = build_lattice(d, L, spacing, !open_lattice);
                if (dseed_opt->count() > 0)
                    qr = random_links_rep(eq, mat_N, seed, false);
                else
                    qr = spin_rep_identity(eq.graph, mat_N);
            }
            CliffordSet cs = clifford(eq.dim);
            auto vals = spectrum(assemble(eq, qr, cs));
            out << "index,eigenvalue\n";
            for (Eigen::Index k = 0; k < vals.size(); ++k)
                out << k << "," << fmt(vals(k)) << "\n";
            return 0;
        }

        if (*action) {
            QuiverRep qr;
            EmbeddedQuiver eq;
            if (!config_path.empty()) {
                LatticeConfig cfg = load_config(config_path);
                eq = lattice_of(cfg);
                qr = rep_of(cfg);
            } else {
                eq = build_lattice(d, L, spacing, true);
                qr = random_links_rep(eq, mat_N, seed, with_higgs);
            }
            CliffordSet cs = clifford(eq.dim);
            ActionBreakdown bd = spectral_action_closed(eq, qr, cs);
            double exact = spectral_action_exact(assemble(eq, qr, cs), eq.spacing);
            double delta = bd.total - exact;
            if (action_json) {
                json j;
                j["d"] = eq.dim;
                j["L"] = eq.extent;
                j["l"] = eq.spacing;
                j["N"] = mat_N;
                j["wilson"] = bd.wilson;
                j["constant"] = bd.constant;
                j["higgs_hopping"] = bd.higgs_hopping;
                j["higgs_mass"] = bd.higgs_mass;
                j["higgs_quartic"] = bd.higgs_quartic;
                j["closed_total"] = bd.total;
                j["exact"] = exact;
                j["exact_unnormalized"] = spectral_action_exact_unnormalized(
                    assemble(eq, qr, cs), eq.spacing);
                j["delta"] = delta;
                out << j.dump() << "\n";
            } else {
                out << "wilson " << fmt(bd.wilson) << "\n";
                out << "constant " << fmt(bd.constant) << "\n";
                out << "higgs_hopping " << fmt(bd.higgs_hopping) << "\n";
                out << "higgs_mass " << fmt(bd.higgs_mass) << "\n";
                out << "higgs_quartic " << fmt(bd.higgs_quartic) << "\n";
                out << "closed_total " << fmt(bd.total) << "\n";
                out << "exact " << fmt(exact) << "\n";
                out << "delta " << fmt(delta) << "\n";
            }
            if (std::abs(delta) > 1e-9) {
                err << "error: closed form deviates from the exact trace\n";
                return 1;
            }
            return 0;
        }

        if (*cont) {
            ContinuumFixture fx = make_fixture(mode, cont_d, cont_N, amp);
            auto levels = parse_int_list(levels_s);
            ContinuumStudy st = continuum_study(fx, levels);
            out << "l,lattice,continuum,rel_error,fitted_order\n";
            for (const auto& r : st.rows)
                out << fmt(r.l) << "," << fmt(r.lattice) << "," << fmt(r.continuum) << ","
                    << fmt(r.rel_error) << "," << fmt(st.fitted_order) << "\n";
            return 0;
        }

        if (*mc) {
            EmbeddedQuiver eq = build_lattice(mc_d, mc_L, 1.0, mc_open);
            if (chains < 1)
                throw std::invalid_argument("mc: chains must be >= 1");
            std::vector<MCResult> results(chains);
            std::vector<std::thread> pool;
            for (int c = 0; c < chains; ++c)
                pool.emplace_back([&, c]() {
                    MCParams p = mp;
                    p.seed = mp.seed + static_cast<std::uint64_t>(c);
                    results[c] = metropolis(eq, p);
                });
            for (auto& th : pool)
                th.join();

            double mean = 0, var = 0;
            for (const auto& r : results)
                mean += r.mean_plaquette;
            mean /= chains;
            for (const auto& r : results)
                var += r.jackknife_error * r.jackknife_error;
            double comb_err = std::sqrt(var) / chains;

            if (mc_json) {
                json j;
                j["chains"] = json::array();
                for (int c = 0; c < chains; ++c)
                    j["chains"].push_back({{"seed", mp.seed + static_cast<std::uint64_t>(c)},
                                           {"mean_plaquette", results[c].mean_plaquette},
                                           {"error", results[c].jackknife_error},
                                           {"acceptance", results[c].acceptance}});
                j["mean_plaquette"] = mean;
                j["error"] = comb_err;
                out << j.dump() << "\n";
            } else {
                out << "chain,mean_plaquette,error,acceptance\n";
                for (int c = 0; c < chains; ++c)
                    out << c << "," << fmt(results[c].mean_plaquette) << ","
                        << fmt(results[c].jackknife_error) << "," << fmt(results[c].acceptance)
                        << "\n";
                out << "combined," << fmt(mean) << "," << fmt(comb_err) << ",\n";
            }
            if (!checkpoint.empty()) {
                LatticeConfig cfg;
                cfg.d = mc_d;
                cfg.L = mc_L;
                cfg.l = 1.0;
                cfg.periodic = mc_open ? false : true;
                cfg.N = mp.N;
                cfg.links = results[0].links;
                save_config(checkpoint, cfg);
            }
            return 0;
        }

        if (*ks) {
            EmbeddedQuiver eq = build_lattice(3, ks_L, spacing, true);
            QuiverRep qr = random_links_rep(eq, mat_N, seed, false);
            CliffordSet cs = clifford(3);
            double plaq = ks_magnetic(qr, eq);
            ActionBreakdown bd = spectral_action_closed(eq, qr, cs);
            double exact = spectral_action_exact(assemble(eq, qr, cs), eq.spacing);
            double residual = exact - plaq - bd.constant;
            if (ks_json) {
                json j;
                j["L"] = ks_L;
                j["N"] = mat_N;
                j["plaquette_sum"] = plaq;
                j["constant"] = bd.constant;
                j["exact"] = exact;
                j["residual"] = residual;
                out << j.dump() << "\n";
            } else {
                out << "plaquette_sum " << fmt(plaq) << "\n";
                out << "constant " << fmt(bd.constant) << "\n";
                out << "exact " << fmt(exact) << "\n";
                out << "residual " << fmt(residual) << "\n";
            }
            if (std::abs(residual) > 1e-9) {
                err << "error: plaquette form deviates from the exact trace\n";
                return 1;
            }
            return 0;
        }
    } catch (const contract_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace gnet
