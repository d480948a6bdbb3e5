#pragma once

#include "hetnet/field.hpp"

#include <map>
#include <string>
#include <vector>

namespace hetnet {

struct SpecParseError : std::runtime_error {
    int line;
    SpecParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct SimulateBlock {
    int count = 100;
    unsigned seed = 42;
    double eps = 0.3;
    int prefix = 5;

    bool operator==(const SimulateBlock&) const = default;
};

/// In-memory form of the "hetnet-spec v1" file format. A spec names either a
/// preset (kirk-silber, house, bowtie) or an explicit node count + edge list;
/// coefficient overrides and the analysis/simulate blocks apply to both.
struct NetworkSpec {
    std::string preset;  // empty, or one of the named presets
    int nodes = 0;       // 0 when a preset supplies the graph
    std::vector<Edge> edges;
    Margins margins{};
    std::map<Edge, Rational> overrides;  // a_ij replacements, exact rationals
    std::string analysis;                // empty, common-connection, house or bowtie
    SimulateBlock simulate{};

    DirectedGraph graph() const;
    SimplexField field() const;

    bool operator==(const NetworkSpec& o) const;
};

/// Parse the text of a spec file; errors carry 1-based line numbers.
NetworkSpec parse_netspec(const std::string& text);
NetworkSpec load_netspec(const std::string& path);

/// Lossless inverse of parse_netspec (parse(serialize(s)) == s).
std::string serialize(const NetworkSpec& s);

// The code-embedded preset fields.
SimplexField kirk_silber_field();
SimplexField house_field();
SimplexField bowtie_field();

}  // namespace hetnet
