#include "hetnet/graph.hpp"

namespace hetnet {

std::vector<int> DirectedGraph::successors(int i) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges)
        if (a == i) out.push_back(b);
    return out;
}

std::vector<int> DirectedGraph::predecessors(int i) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges)
        if (b == i) out.push_back(a);
    return out;
}

Realizability validate_graph(const DirectedGraph& g) {
    Realizability r;
    for (const auto& e : g.edges) {
        if (e.first == e.second) r.one_cycles.push_back(e);
        else if (g.has_edge(e.second, e.first)) r.two_cycles.push_back(e);
    }
    if (!r.one_cycles.empty()) r.verdict = Verdict::HasOneCycle;
    else if (!r.two_cycles.empty()) r.verdict = Verdict::HasTwoCycle;
    return r;
}

bool is_closed_walk(const DirectedGraph& g, const std::vector<int>& cycle) {
    if (cycle.size() < 2) return false;
    for (std::size_t k = 0; k < cycle.size(); ++k)
        if (!g.has_edge(cycle[k], cycle[(k + 1) % cycle.size()])) return false;
    return true;
}

DirectedGraph kirk_silber_graph() {
    return {4, {{1, 2}, {2, 3}, {3, 1}, {2, 4}, {4, 1}}};
}

DirectedGraph house_graph() {
    return {5, {{1, 2}, {2, 3}, {3, 1}, {2, 4}, {4, 5}, {5, 1}}};
}

DirectedGraph bowtie_graph() {
    return {5, {{1, 2}, {2, 3}, {3, 1}, {5, 2}, {2, 4}, {4, 5}}};
}

}  // namespace hetnet
