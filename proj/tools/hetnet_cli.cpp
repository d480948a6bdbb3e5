#include "hetnet/bowtie.hpp"
#include "hetnet/netspec.hpp"
#include "hetnet/ode.hpp"
#include "hetnet/switching.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace hetnet;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2;

std::ofstream open_out(const fs::path& dir, const std::string& name) {
    fs::create_directories(dir);
    std::ofstream f(dir / name);
    if (!f) throw std::runtime_error("cannot write " + (dir / name).string());
    return f;
}

void emit_config(std::ostream& os, const NetworkSpec& spec) {
    os << "# resolved configuration\n";
    std::istringstream is(serialize(spec));
    for (std::string line; std::getline(is, line);) os << "#   " << line << "\n";
}

int cmd_validate(const std::string& path) {
    const NetworkSpec spec = load_netspec(path);
    const DirectedGraph g = spec.graph();
    const Realizability r = validate_graph(g);
    if (r.realizable()) {
        std::cout << "realizable: " << g.n << " nodes, " << g.edges.size()
                  << " edges, one- and two-cycle free\n";
        return kOk;
    }
    std::cout << "not realizable:\n";
    for (const Edge& e : r.one_cycles)
        std::cout << "  one-cycle at node " << e.first << "\n";
    for (const Edge& e : r.two_cycles)
        std::cout << "  two-cycle between " << e.first << " and " << e.second << "\n";
    return kFail;
}

int cmd_build(const std::string& path, const fs::path& outdir) {
    const NetworkSpec spec = load_netspec(path);
    const SimplexField f = spec.field();
    auto out = open_out(outdir, "field.txt");
    emit_config(out, spec);
    out << "# dx_j/dt = x_j (1 - |x|^2 + sum_i a_ij x_i^2)\n";
    out << "coefficients a_ij (rows i, columns j):\n";
    for (int i = 1; i <= f.dim(); ++i) {
        for (int j = 1; j <= f.dim(); ++j)
            out << to_string(f.coeff(i, j)) << (j == f.dim() ? "\n" : " ");
    }
    out << "spectra (node: direction=eigenvalue ...):\n";
    for (int j = 1; j <= f.dim(); ++j) {
        const NodeSpectrum s = node_spectrum(f, j);
        out << "  xi_" << j << ":";
        for (int m = 1; m <= f.dim(); ++m) out << " " << m << "=" << to_string(s.at(m));
        out << "\n";
    }
    std::cout << "wrote " << (outdir / "field.txt").string() << "\n";
    return kOk;
}

void require_wiring(const DirectedGraph& got, const DirectedGraph& want, const char* name) {
    if (got == want) return;
    std::ostringstream os;
    os << "analysis '" << name << "' expects edges {";
    for (const Edge& e : want.edges) os << " " << e.first << "->" << e.second;
    os << " }, spec has {";
    for (const Edge& e : got.edges) os << " " << e.first << "->" << e.second;
    os << " }";
    throw std::runtime_error(os.str());
}

int analyze_common_connection(const NetworkSpec& spec, const fs::path& outdir) {
    const SimplexField f = spec.field();
    const DirectedGraph g = f.graph();
    const auto incoming = g.predecessors(1);
    const auto outgoing = g.successors(2);
    if (!g.has_edge(1, 2) || incoming.size() != 2 || outgoing.size() != 2)
        throw std::runtime_error(
            "common-connection analysis needs [xi_1 -> xi_2] with two incoming "
            "directions at xi_1 and two outgoing at xi_2");
    CommonConnectionConfig cfg;
    cfg.alpha = incoming[0];
    cfg.a = incoming[1];
    cfg.beta = outgoing[0];
    cfg.b = outgoing[1];
    cfg.c1alpha = -node_spectrum(f, 1).at(cfg.alpha);
    cfg.c1a = -node_spectrum(f, 1).at(cfg.a);
    cfg.e2beta = node_spectrum(f, 2).at(cfg.beta);
    cfg.e2b = node_spectrum(f, 2).at(cfg.b);

    const PathVerdict v = classify_paths(cfg);
    auto out = open_out(outdir, "paths.csv");
    out << "path,verdict\n";
    for (const auto& [name, st] : v.items()) out << name << "," << to_string(st) << "\n";

    auto rep = open_out(outdir, "report.txt");
    emit_config(rep, spec);
    rep << "common connection [xi_1 -> xi_2], incoming {" << cfg.alpha << "," << cfg.a
        << "}, outgoing {" << cfg.beta << "," << cfg.b << "}\n";
    rep << "c1alpha=" << to_string(cfg.c1alpha) << " c1a=" << to_string(cfg.c1a)
        << " e2beta=" << to_string(cfg.e2beta) << " e2b=" << to_string(cfg.e2b) << "\n";
    for (const auto& [name, st] : v.items()) rep << name << ": " << to_string(st) << "\n";
    std::cout << "wrote " << (outdir / "paths.csv").string() << "\n";
    return kOk;
}

int analyze_house(const NetworkSpec& spec, const fs::path& outdir) {
    const SimplexField f = spec.field();
    require_wiring(f.graph(), house_graph(), "house");
    const auto regions = house_regions(Network::from_field(f));
    auto out = open_out(outdir, "house_witnesses.csv");
    out << "from,to,x2,x3,x4,x5\n";
    for (const HouseRegion& r : regions) {
        out << r.from << "," << r.to;
        for (double c : r.witness()) out << "," << c;
        out << "\n";
    }
    auto rep = open_out(outdir, "report.txt");
    emit_config(rep, spec);
    rep << "house switching witnesses on H_2^{in,1} (log2 coordinates):\n";
    for (const HouseRegion& r : regions) {
        rep << "  from xi_" << r.from << " to xi_" << r.to << ":";
        for (const Rational& c : r.witness_log2) rep << " " << to_string(c);
        rep << "\n";
    }
    std::cout << "wrote " << (outdir / "house_witnesses.csv").string() << "\n";
    return kOk;
}

int analyze_bowtie(const NetworkSpec& spec, const fs::path& outdir) {
    const SimplexField f = spec.field();
    require_wiring(f.graph(), bowtie_graph(), "bowtie");
    const BowtieTable table = BowtieTable::from_network(Network::from_field(f));
    const BowtieParameters p = compute_parameters(table);

    auto params = open_out(outdir, "parameters.csv");
    params << "name,exact,approx\n";
    const std::pair<const char*, const Rational*> rows[] = {
        {"rho", &p.rho},     {"rho~", &p.rho_t},   {"nu", &p.nu},       {"nu~", &p.nu_t},
        {"mu", &p.mu},       {"mu~", &p.mu_t},     {"delta", &p.delta}, {"delta~", &p.delta_t},
        {"alpha", &p.alpha}, {"beta", &p.beta}};
    for (const auto& [name, val] : rows)
        params << name << "," << to_string(*val) << "," << to_double(*val) << "\n";

    auto turns = open_out(outdir, "turn_exponents.csv");
    turns << "n,s_n_R,s_n_L\n";
    for (unsigned n = 0; n <= 10; ++n)
        turns << n << "," << to_string(turn_exponent(p, Cycle::R, n)) << ","
              << to_string(turn_exponent(p, Cycle::L, n)) << "\n";

    auto rep = open_out(outdir, "report.txt");
    emit_config(rep, spec);
    rep << "delta = " << to_string(p.delta) << ", delta~ = " << to_string(p.delta_t) << "\n";
    if (p.delta < 0 && p.delta_t < 0) {
        rep << "regime: both negative -- every point leaves its cycle after finitely many turns\n";
        auto wit = open_out(outdir, "witnesses.csv");
        wit << "kind,u3,u4,u5,detail\n";
        // one RLR witness: x5 small makes Eq. (1) hold
        {
            const Rational sigma0 = p.e24 / p.e23;
            const Rational a = (p.e23 / p.e24) * p.rho - p.nu;
            const Rational b = -p.delta;
            const Rational u3{-1}, u4 = Rational(sigma0 / -2);
            const Rational cand = Rational((u3 - a * u4 - 1) / b);
            const std::array<Rational, 3> u{u3, u4, std::min(cand, Rational(-1))};
            wit << "RLR," << to_string(u[0]) << "," << to_string(u[1]) << "," << to_string(u[2])
                << "," << to_string(classify_transition(u, p)) << "\n";
        }
        for (unsigned n : {1u, 3u}) {
            const auto u = witness_for_L_turns(n, p);
            wit << "RL" << std::string(n, 'L') << "," << to_string(u[0]) << "," << to_string(u[1])
                << "," << to_string(u[2]) << ",g_RL image in E_" << n + 1 << "\n";
        }
        const auto cyc = switching_along_cycle_check(table);
        auto sw = open_out(outdir, "cycle_switching.csv");
        sw << "source,destination,witness_log2\n";
        for (const CycleSwitchWitness& w : cyc) {
            sw << w.source << "," << w.destination << ",";
            for (std::size_t i = 0; i < w.witness_log2.size(); ++i)
                sw << (i ? " " : "") << to_string(w.witness_log2[i]);
            sw << "\n";
        }
        rep << "wrote RLR/RLL witnesses and the four cycle-switching witnesses\n";
    } else {
        rep << "regime: Kirk-Silber-like (some delta >= 0): E_1 = E_2 on the affected cycle\n";
    }
    std::cout << "wrote " << (outdir / "parameters.csv").string() << "\n";
    return kOk;
}

int cmd_analyze(const std::string& path, std::string analysis, const fs::path& outdir) {
    const NetworkSpec spec = load_netspec(path);
    if (analysis.empty()) analysis = spec.analysis;
    if (analysis.empty())
        throw std::runtime_error("no analysis requested (spec 'analysis' line or --analysis)");
    if (analysis == "common-connection") return analyze_common_connection(spec, outdir);
    if (analysis == "house") return analyze_house(spec, outdir);
    if (analysis == "bowtie") return analyze_bowtie(spec, outdir);
    throw std::runtime_error("unknown analysis '" + analysis + "'");
}

int cmd_simulate(const std::string& path, int count, long seed, double eps, int prefix,
                 const fs::path& outdir) {
    const NetworkSpec spec = load_netspec(path);
    const SimplexField f = spec.field();
    require_wiring(f.graph(), bowtie_graph(), "simulate (bowtie ensembles)");

    EnsembleConfig cfg;
    cfg.count = count >= 0 ? count : spec.simulate.count;
    cfg.seed = seed >= 0 ? static_cast<unsigned>(seed) : spec.simulate.seed;
    cfg.eps = eps > 0 ? eps : spec.simulate.eps;
    cfg.prefix_k = prefix > 0 ? prefix : spec.simulate.prefix;
    if (cfg.count < 0) throw CLI::ValidationError("count must be nonnegative");
    if (!(cfg.eps > 0) || cfg.eps >= std::sqrt(2.0) / 2)
        throw CLI::ValidationError("eps must lie in (0, sqrt(2)/2)");

    const EnsembleSummary sum = run_ensemble(BowtieTable::from_network(Network::from_field(f)), cfg);

    auto runs = open_out(outdir, "runs.csv");
    runs << "run,u2,u3,u4,u5,predicted,observed,agree_prefix,ok,error\n";
    for (const RunRecord& r : sum.runs) {
        runs << r.index;
        for (const Rational& u : r.u_log2) runs << "," << to_string(u);
        runs << "," << r.predicted << "," << r.observed << "," << r.agree_prefix << ","
             << (r.ok ? 1 : 0) << "," << r.error << "\n";
    }
    auto rep = open_out(outdir, "summary.txt");
    emit_config(rep, spec);
    rep << "runs: " << cfg.count << "  seed: " << cfg.seed << "  eps: " << cfg.eps
        << "  prefix: " << cfg.prefix_k << "\n";
    rep << "completed: " << sum.succeeded << "\n";
    rep << "agreement fraction (prefix >= " << cfg.prefix_k << "): " << sum.agreement_fraction
        << "\n";
    std::cout << "agreement fraction: " << sum.agreement_fraction << "\n";
    return kOk;
}

int cmd_shadow(const std::string& path, const std::string& walk, int per_axis,
               const fs::path& outdir) {
    const NetworkSpec spec = load_netspec(path);
    const Network net = Network::from_field(spec.field());
    std::vector<int> nodes;
    std::istringstream is(walk);
    for (std::string part; std::getline(is, part, ',');) nodes.push_back(std::stoi(part));
    GridSpec grid;
    if (per_axis > 0) grid.per_axis = per_axis;
    const ShadowResult res = verify_shadowing(net, nodes, grid);

    auto rep = open_out(outdir, "shadow.txt");
    emit_config(rep, spec);
    rep << "path:";
    for (int n : nodes) rep << " " << n;
    rep << "\ngrid: " << res.grid.per_axis << " per axis in [" << res.grid.lo << ", "
        << res.grid.hi << "]\npoints checked: " << res.points_checked << "\n";
    if (res.found) {
        rep << "witness on the entry section:";
        for (double c : res.witness) rep << " " << c;
        rep << "\n";
        std::cout << "witness found\n";
        return kOk;
    }
    rep << "no witness on the grid (evidence the path is not shadowed)\n";
    std::cout << "empty on grid\n";
    return kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"heteroclinic network toolkit: validate graphs, synthesize simplex fields, "
                 "analyze switching, simulate itineraries"};
    app.require_subcommand(1);

    std::string spec_path, analysis, walk;
    std::string outdir = ".";
    int count = -1, prefix = -1, per_axis = -1;
    long seed = -1;
    double eps = -1;

    auto* validate = app.add_subcommand("validate", "check a spec's graph for realizability");
    validate->add_option("spec", spec_path, "spec file")->required();

    auto* build = app.add_subcommand("build", "synthesize the vector field and its spectra");
    build->add_option("spec", spec_path, "spec file")->required();
    build->add_option("-o,--out", outdir, "output directory");

    auto* analyze = app.add_subcommand("analyze", "run a switching analysis");
    analyze->add_option("spec", spec_path, "spec file")->required();
    analyze->add_option("--analysis", analysis, "common-connection | house | bowtie");
    analyze->add_option("-o,--out", outdir, "output directory");

    auto* simulate = app.add_subcommand("simulate", "ODE-vs-map agreement ensemble (bowtie)");
    simulate->add_option("spec", spec_path, "spec file")->required();
    simulate->add_option("--count", count, "ensemble size");
    simulate->add_option("--seed", seed, "RNG seed");
    simulate->add_option("--eps", eps, "equilibrium neighbourhood radius");
    simulate->add_option("--prefix", prefix, "agreement prefix length");
    simulate->add_option("-o,--out", outdir, "output directory");

    auto* shadow = app.add_subcommand("shadow", "brute-force shadowing witnesses for a walk");
    shadow->add_option("spec", spec_path, "spec file")->required();
    shadow->add_option("--path", walk, "comma-separated node walk, e.g. 3,1,2,4")->required();
    shadow->add_option("--per-axis", per_axis, "grid resolution per axis");
    shadow->add_option("-o,--out", outdir, "output directory");

    try {
        app.parse(argc, argv);
        if (validate->parsed()) return cmd_validate(spec_path);
        if (build->parsed()) return cmd_build(spec_path, outdir);
        if (analyze->parsed()) return cmd_analyze(spec_path, analysis, outdir);
        if (simulate->parsed()) return cmd_simulate(spec_path, count, seed, eps, prefix, outdir);
        if (shadow->parsed()) return cmd_shadow(spec_path, walk, per_axis, outdir);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
