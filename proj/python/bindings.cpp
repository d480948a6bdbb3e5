#include "hetnet/bowtie.hpp"
#include "hetnet/netspec.hpp"
#include "hetnet/ode.hpp"
#include "hetnet/switching.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hetnet;

namespace {

// Exact rationals cross the boundary as "p/q" strings so Python callers can
// hand them to fractions.Fraction without precision loss.
std::vector<Rational> parse_all(const std::vector<std::string>& in) {
    std::vector<Rational> out;
    out.reserve(in.size());
    for (const auto& s : in) out.push_back(parse_rational(s));
    return out;
}

std::vector<std::string> print_all(const std::vector<Rational>& in) {
    std::vector<std::string> out;
    out.reserve(in.size());
    for (const auto& r : in) out.push_back(to_string(r));
    return out;
}

SimplexField field_from_spec_text(const std::string& text) {
    return parse_netspec(text).field();
}

}  // namespace

PYBIND11_MODULE(hetnet, m) {
    m.doc() = "heteroclinic network toolkit: graph realizability, simplex vector fields, "
              "monomial Poincare maps, switching analysis and itinerary simulation";

    // ---- graphs -----------------------------------------------------------
    py::class_<DirectedGraph>(m, "DirectedGraph")
        .def(py::init([](int n, const std::vector<Edge>& edges) {
                 DirectedGraph g{n, {edges.begin(), edges.end()}};
                 return g;
             }),
             py::arg("n"), py::arg("edges"))
        .def_readonly("n", &DirectedGraph::n)
        .def_property_readonly(
            "edges",
            [](const DirectedGraph& g) { return std::vector<Edge>(g.edges.begin(), g.edges.end()); })
        .def("has_edge", &DirectedGraph::has_edge)
        .def("successors", &DirectedGraph::successors)
        .def("predecessors", &DirectedGraph::predecessors)
        .def("__eq__", [](const DirectedGraph& a, const DirectedGraph& b) { return a == b; });

    m.def("kirk_silber_graph", &kirk_silber_graph);
    m.def("house_graph", &house_graph);
    m.def("bowtie_graph", &bowtie_graph);

    m.def("validate_graph", [](const DirectedGraph& g) {
        const Realizability r = validate_graph(g);
        py::dict d;
        d["realizable"] = r.realizable();
        d["one_cycles"] = r.one_cycles;
        d["two_cycles"] = r.two_cycles;
        return d;
    });
    m.def("is_closed_walk", &is_closed_walk);

    // ---- vector fields ----------------------------------------------------
    py::class_<SimplexField>(m, "SimplexField")
        .def_static(
            "build",
            [](const DirectedGraph& g, const std::map<Edge, std::string>& overrides) {
                std::map<Edge, Rational> ov;
                for (const auto& [e, s] : overrides) ov[e] = parse_rational(s);
                return SimplexField::build(g, {}, ov);
            },
            py::arg("graph"), py::arg("overrides") = std::map<Edge, std::string>{})
        .def_property_readonly("dim", &SimplexField::dim)
        .def_property_readonly("graph", &SimplexField::graph)
        .def("coeff", [](const SimplexField& f, int i, int j) { return to_string(f.coeff(i, j)); })
        .def("coeff_float",
             [](const SimplexField& f, int i, int j) { return to_double(f.coeff(i, j)); })
        .def("with_coeff",
             [](const SimplexField& f, int i, int j, const std::string& v) {
                 return f.with_coeff(i, j, parse_rational(v));
             })
        .def("eval",
             [](const SimplexField& f, const std::vector<double>& x) { return f.eval(x); });

    m.def("kirk_silber_field", &kirk_silber_field);
    m.def("house_field", &house_field);
    m.def("bowtie_field", &bowtie_field);
    m.def("field_from_spec", &field_from_spec_text,
          "Synthesize a field from 'hetnet-spec v1' text");

    m.def("node_spectrum", [](const SimplexField& f, int j) {
        const NodeSpectrum s = node_spectrum(f, j);
        std::map<int, std::string> out;
        for (int d = 1; d <= s.dim; ++d) out[d] = to_string(s.at(d));
        return out;
    });

    // ---- map algebra ------------------------------------------------------
    py::class_<Network>(m, "Network").def_static("from_field", &Network::from_field);

    py::class_<MonomialMap>(m, "MonomialMap")
        .def("exponent",
             [](const MonomialMap& mm, int out, int in) { return to_string(mm.exponent(out, in)); })
        .def("eval", [](const MonomialMap& mm, const std::vector<double>& x) {
            return evaluate(mm, x);
        })
        .def("eval_log2",
             [](const MonomialMap& mm, const std::vector<std::string>& u) {
                 return print_all(evaluate_log(mm, parse_all(u)));
             })
        .def("__str__", [](const MonomialMap& mm) { return serialize(mm); });

    m.def("path_map", &path_map, py::arg("network"), py::arg("path"),
          "Composite Poincare map along a node path (entry section to exit section)");
    m.def("close_loop", &close_loop);
    m.def("iterate", &iterate);
    m.def("inverse", [](const MonomialMap& mm) { return inverse(mm); });
    m.def("compose",
          [](const MonomialMap& second, const MonomialMap& first) { return compose(second, first); });

    // ---- switching --------------------------------------------------------
    m.def("verify_shadowing",
          [](const Network& net, const std::vector<int>& path, int per_axis) {
              GridSpec grid;
              if (per_axis > 0) grid.per_axis = per_axis;
              const ShadowResult r = verify_shadowing(net, path, grid);
              py::dict d;
              d["found"] = r.found;
              d["witness"] = r.witness;
              d["points_checked"] = r.points_checked;
              return d;
          },
          py::arg("network"), py::arg("path"), py::arg("per_axis") = 0);

    m.def("house_regions", [](const Network& net) {
        py::list out;
        for (const HouseRegion& r : house_regions(net)) {
            py::dict d;
            d["from_node"] = r.from;
            d["to_node"] = r.to;
            d["witness"] = r.witness();
            d["witness_log2"] = print_all(r.witness_log2);
            out.append(d);
        }
        return out;
    });

    // ---- bowtie -----------------------------------------------------------
    m.def("bowtie_parameters", [](const SimplexField& f) {
        const BowtieParameters p = compute_parameters(BowtieTable::from_network(Network::from_field(f)));
        std::map<std::string, std::string> out{
            {"rho", to_string(p.rho)},     {"rho_t", to_string(p.rho_t)},
            {"nu", to_string(p.nu)},       {"nu_t", to_string(p.nu_t)},
            {"mu", to_string(p.mu)},       {"mu_t", to_string(p.mu_t)},
            {"delta", to_string(p.delta)}, {"delta_t", to_string(p.delta_t)},
            {"alpha", to_string(p.alpha)}, {"beta", to_string(p.beta)}};
        return out;
    });

    m.def("max_turns",
          [](const SimplexField& f, const std::vector<std::string>& u, const std::string& cycle) {
              const BowtieParameters p =
                  compute_parameters(BowtieTable::from_network(Network::from_field(f)));
              const auto uu = parse_all(u);
              if (uu.size() != 3) throw std::invalid_argument("u must have three entries");
              const MaxTurns t =
                  max_turns({uu[0], uu[1], uu[2]}, p, cycle == "L" ? Cycle::L : Cycle::R);
              return t.unbounded ? py::object(py::none()) : py::object(py::int_(t.turns));
          },
          py::arg("field"), py::arg("u_log2"), py::arg("cycle"),
          "Exact turn count for a log2 section point; None when unbounded");

    m.def("predict_word",
          [](const SimplexField& f, const std::vector<std::string>& u, int k) {
              return predict_word(Network::from_field(f), parse_all(u), k);
          },
          py::arg("field"), py::arg("u_log2"), py::arg("k"));

    // ---- simulation -------------------------------------------------------
    m.def("record_itinerary",
          [](const SimplexField& f, const std::vector<double>& x0, double eps) {
              const Itinerary itin = record_itinerary(f, x0, eps, {});
              py::list visits;
              for (const Visit& v : itin.visits) {
                  py::dict d;
                  d["node"] = v.node;
                  d["t_entry"] = v.t_entry;
                  d["t_exit"] = v.t_exit;
                  visits.append(d);
              }
              py::dict d;
              d["visits"] = visits;
              d["word"] = itin.word();
              return d;
          },
          py::arg("field"), py::arg("x0"), py::arg("eps") = 0.3);

    m.def("compare", [](const std::string& predicted, const std::string& observed, int k) {
        const AgreementReport r = compare(predicted, observed, k);
        py::dict d;
        d["longest_prefix"] = r.longest_prefix;
        d["prefix_at_least_k"] = r.prefix_at_least_k;
        d["run_deltas"] = r.run_deltas;
        return d;
    });

    m.def("run_ensemble",
          [](const SimplexField& f, int count, unsigned seed, int prefix_k) {
              EnsembleConfig cfg;
              cfg.count = count;
              cfg.seed = seed;
              cfg.prefix_k = prefix_k;
              const EnsembleSummary s =
                  run_ensemble(BowtieTable::from_network(Network::from_field(f)), cfg);
              py::list runs;
              for (const RunRecord& r : s.runs) {
                  py::dict d;
                  d["predicted"] = r.predicted;
                  d["observed"] = r.observed;
                  d["agree_prefix"] = r.agree_prefix;
                  d["ok"] = r.ok;
                  d["error"] = r.error;
                  runs.append(d);
              }
              py::dict d;
              d["runs"] = runs;
              d["agreement_fraction"] = s.agreement_fraction;
              return d;
          },
          py::arg("field"), py::arg("count") = 100, py::arg("seed") = 42, py::arg("prefix_k") = 5);

    // ---- spec files -------------------------------------------------------
    m.def("parse_spec", [](const std::string& text) {
        const NetworkSpec s = parse_netspec(text);
        py::dict d;
        d["preset"] = s.preset;
        d["nodes"] = s.nodes;
        d["edges"] = s.edges;
        d["analysis"] = s.analysis;
        return d;
    });
    m.def("roundtrip_spec",
          [](const std::string& text) { return serialize(parse_netspec(text)); });
}
