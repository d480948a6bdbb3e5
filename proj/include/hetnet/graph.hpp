#pragma once

#include <set>
#include <utility>
#include <vector>

namespace hetnet {

using Edge = std::pair<int, int>;  // (i, j) = connection from node i to node j

/// Abstract network blueprint. Nodes are labelled 1..n.
struct DirectedGraph {
    int n = 0;
    std::set<Edge> edges;

    bool has_edge(int i, int j) const { return edges.count({i, j}) > 0; }
    std::vector<int> successors(int i) const;
    std::vector<int> predecessors(int i) const;

    bool operator==(const DirectedGraph&) const = default;
};

enum class Verdict { Realizable, HasOneCycle, HasTwoCycle };

struct Realizability {
    Verdict verdict = Verdict::Realizable;
    std::vector<Edge> one_cycles;  // offending (i,i) edges
    std::vector<Edge> two_cycles;  // offending (i,j) with (j,i) also present

    bool realizable() const { return verdict == Verdict::Realizable; }
};

/// Total function: never throws, defect lists enumerate offending edges.
/// One-cycles take precedence in the verdict when both defects are present.
Realizability validate_graph(const DirectedGraph& g);

/// Closed walk check: cycle[k] -> cycle[k+1] (and last -> first) are all edges.
bool is_closed_walk(const DirectedGraph& g, const std::vector<int>& cycle);

// Networks from the source material, used as presets throughout.
DirectedGraph kirk_silber_graph();  // 4 nodes, cycles 1-2-3 and 1-2-4
DirectedGraph house_graph();        // 5 nodes, cycles 1-2-3 and 1-2-4-5
DirectedGraph bowtie_graph();       // 5 nodes, cycles 1-2-3 (R) and 5-2-4 (L)

}  // namespace hetnet
