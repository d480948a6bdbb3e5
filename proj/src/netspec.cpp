#include "hetnet/netspec.hpp"

#include "hetnet/bowtie.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace hetnet {

SimplexField kirk_silber_field() {
    // asymmetric contraction at xi_1 and expansion at xi_2 so that the
    // common-connection classification is non-degenerate
    return SimplexField::build(kirk_silber_graph(), {},
                               {{{1, 4}, Rational(-2)}, {{2, 4}, Rational(1, 2)}});
}

SimplexField house_field() { return SimplexField::build(house_graph(), {}, {}); }

SimplexField bowtie_field() { return BowtieTable::preset().to_field(); }

DirectedGraph NetworkSpec::graph() const {
    if (!preset.empty()) {
        if (preset == "kirk-silber") return kirk_silber_graph();
        if (preset == "house") return house_graph();
        if (preset == "bowtie") return bowtie_graph();
        throw std::invalid_argument("unknown preset '" + preset + "'");
    }
    if (nodes < 1) throw std::invalid_argument("spec has neither a preset nor a node count");
    DirectedGraph g{nodes, {}};
    for (const Edge& e : edges) {
        if (e.first < 1 || e.first > nodes || e.second < 1 || e.second > nodes)
            throw std::invalid_argument("edge endpoint out of range");
        g.edges.insert(e);
    }
    return g;
}

SimplexField NetworkSpec::field() const {
    if (!preset.empty()) {
        SimplexField f = preset == "kirk-silber" ? kirk_silber_field()
                         : preset == "house"     ? house_field()
                                                 : bowtie_field();
        for (const auto& [e, val] : overrides) f = f.with_coeff(e.first, e.second, val);
        return f;
    }
    return SimplexField::build(graph(), margins, overrides);
}

bool NetworkSpec::operator==(const NetworkSpec& o) const {
    return preset == o.preset && nodes == o.nodes && edges == o.edges &&
           margins.e_mag == o.margins.e_mag && margins.c_mag == o.margins.c_mag &&
           margins.t_mag == o.margins.t_mag && overrides == o.overrides &&
           analysis == o.analysis && simulate == o.simulate;
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream is(line.substr(0, line.find('#')));
    std::vector<std::string> t;
    std::string w;
    while (is >> w) t.push_back(w);
    return t;
}

int parse_int(const std::string& s, int line, const char* what) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw SpecParseError(line, std::string("expected an integer ") + what + ", got '" + s + "'");
    }
}

double parse_double(const std::string& s, int line, const char* what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw SpecParseError(line, std::string("expected a number ") + what + ", got '" + s + "'");
    }
}

Rational parse_coeff(const std::string& s, int line) {
    try {
        return parse_rational(s);
    } catch (const std::exception& e) {
        throw SpecParseError(line, e.what());
    }
}

}  // namespace

NetworkSpec parse_netspec(const std::string& text) {
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    bool versioned = false, have_nodes = false, have_sim[4] = {};
    NetworkSpec spec;

    while (std::getline(is, raw)) {
        ++lineno;
        const auto t = tokens_of(raw);
        if (t.empty()) continue;
        if (!versioned) {
            if (t.size() != 2 || t[0] != "hetnet-spec" || t[1] != "v1")
                throw SpecParseError(lineno, "file must start with 'hetnet-spec v1'");
            versioned = true;
            continue;
        }
        const std::string& key = t[0];
        if (key == "preset") {
            if (t.size() != 2) throw SpecParseError(lineno, "usage: preset <name>");
            if (!spec.preset.empty()) throw SpecParseError(lineno, "duplicate preset line");
            if (t[1] != "kirk-silber" && t[1] != "house" && t[1] != "bowtie")
                throw SpecParseError(lineno, "unknown preset '" + t[1] + "'");
            spec.preset = t[1];
        } else if (key == "nodes") {
            if (t.size() != 2) throw SpecParseError(lineno, "usage: nodes <count>");
            if (have_nodes) throw SpecParseError(lineno, "duplicate nodes line");
            spec.nodes = parse_int(t[1], lineno, "node count");
            if (spec.nodes < 1) throw SpecParseError(lineno, "node count must be positive");
            have_nodes = true;
        } else if (key == "edge") {
            if (t.size() != 3) throw SpecParseError(lineno, "usage: edge <from> <to>");
            spec.edges.emplace_back(parse_int(t[1], lineno, "node label"),
                                    parse_int(t[2], lineno, "node label"));
        } else if (key == "margin") {
            if (t.size() != 3) throw SpecParseError(lineno, "usage: margin <e|c|t> <p/q>");
            const Rational v = parse_coeff(t[2], lineno);
            if (t[1] == "e") spec.margins.e_mag = v;
            else if (t[1] == "c") spec.margins.c_mag = v;
            else if (t[1] == "t") spec.margins.t_mag = v;
            else throw SpecParseError(lineno, "margin kind must be e, c or t");
        } else if (key == "override") {
            if (t.size() != 4) throw SpecParseError(lineno, "usage: override <i> <j> <p/q>");
            const Edge e{parse_int(t[1], lineno, "node label"), parse_int(t[2], lineno, "node label")};
            if (spec.overrides.count(e)) throw SpecParseError(lineno, "duplicate override");
            spec.overrides[e] = parse_coeff(t[3], lineno);
        } else if (key == "analysis") {
            if (t.size() != 2) throw SpecParseError(lineno, "usage: analysis <name>");
            if (!spec.analysis.empty()) throw SpecParseError(lineno, "duplicate analysis line");
            if (t[1] != "common-connection" && t[1] != "house" && t[1] != "bowtie")
                throw SpecParseError(lineno, "unknown analysis '" + t[1] + "'");
            spec.analysis = t[1];
        } else if (key == "simulate") {
            if (t.size() != 3) throw SpecParseError(lineno, "usage: simulate <count|seed|eps|prefix> <value>");
            if (t[1] == "count") {
                spec.simulate.count = parse_int(t[2], lineno, "run count");
                have_sim[0] = true;
            } else if (t[1] == "seed") {
                spec.simulate.seed = static_cast<unsigned>(parse_int(t[2], lineno, "seed"));
                have_sim[1] = true;
            } else if (t[1] == "eps") {
                spec.simulate.eps = parse_double(t[2], lineno, "radius");
                have_sim[2] = true;
            } else if (t[1] == "prefix") {
                spec.simulate.prefix = parse_int(t[2], lineno, "prefix length");
                have_sim[3] = true;
            } else {
                throw SpecParseError(lineno, "unknown simulate key '" + t[1] + "'");
            }
        } else {
            throw SpecParseError(lineno, "unknown key '" + key + "'");
        }
    }
    if (!versioned) throw SpecParseError(lineno, "empty spec file");
    if (!spec.preset.empty() && (have_nodes || !spec.edges.empty()))
        throw SpecParseError(lineno, "a preset spec must not also list nodes or edges");
    if (spec.preset.empty() && !have_nodes)
        throw SpecParseError(lineno, "spec needs either a preset or a nodes line");
    std::sort(spec.edges.begin(), spec.edges.end());
    spec.edges.erase(std::unique(spec.edges.begin(), spec.edges.end()), spec.edges.end());
    return spec;
}

NetworkSpec load_netspec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spec file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return parse_netspec(os.str());
}

std::string serialize(const NetworkSpec& s) {
    std::ostringstream os;
    os << "hetnet-spec v1\n";
    if (!s.preset.empty()) os << "preset " << s.preset << "\n";
    if (s.nodes > 0) os << "nodes " << s.nodes << "\n";
    for (const Edge& e : s.edges) os << "edge " << e.first << " " << e.second << "\n";
    os << "margin e " << to_string(s.margins.e_mag) << "\n";
    os << "margin c " << to_string(s.margins.c_mag) << "\n";
    os << "margin t " << to_string(s.margins.t_mag) << "\n";
    for (const auto& [e, v] : s.overrides)
        os << "override " << e.first << " " << e.second << " " << to_string(v) << "\n";
    if (!s.analysis.empty()) os << "analysis " << s.analysis << "\n";
    os << "simulate count " << s.simulate.count << "\n";
    os << "simulate seed " << s.simulate.seed << "\n";
    char buf[32];  // shortest round-trip representation
    const auto res = std::to_chars(buf, buf + sizeof buf, s.simulate.eps);
    os << "simulate eps " << std::string_view(buf, res.ptr - buf) << "\n";
    os << "simulate prefix " << s.simulate.prefix << "\n";
    return os.str();
}

}  // namespace hetnet
