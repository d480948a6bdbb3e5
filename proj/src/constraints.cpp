#include "hetnet/constraints.hpp"

#include <sstream>

namespace hetnet {

int MonomialInequality::side(const std::vector<Rational>& log_point) const {
    Rational s = 0;
    for (const auto& [label, w] : weights) s += w * log_point.at(section.active_index(label));
    return s < 0 ? -1 : (s > 0 ? 1 : 0);
}

bool MonomialInequality::holds(const std::vector<double>& log_point) const {
    double s = 0;
    for (const auto& [label, w] : weights) s += to_double(w) * log_point.at(section.active_index(label));
    return s < 0;
}

MonomialInequality MonomialInequality::pull_back(const MonomialMap& through) const {
    std::map<int, Rational> w = weights;
    CrossSection land = through.codomain;
    if (!(land == section)) {
        if (!sections_identified(land, section)) throw SectionMismatch(land, section);
        // relabel onto the map's codomain: the target coordinate x_j carries
        // the source radial x_i, everything else matches by label
        std::map<int, Rational> relabeled;
        for (const auto& [label, coeff] : w)
            relabeled[label == section.radial_label() ? land.radial_label() : label] = coeff;
        w = std::move(relabeled);
    }
    MonomialInequality out;
    out.section = through.domain;
    for (int col_label : through.domain.active_labels()) {
        Rational s = 0;
        for (const auto& [row_label, coeff] : w)
            s += coeff * through.E(land.active_index(row_label),
                                   through.domain.active_index(col_label));
        if (s != 0) out.weights[col_label] = s;
    }
    return out;
}

std::string MonomialInequality::pretty() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [label, w] : weights) {
        if (!first) os << " * ";
        os << "x" << label << "^(" << to_string(w) << ")";
        first = false;
    }
    os << " < 1 on " << to_string(section);
    return os.str();
}

bool DomainConstraint::holds(const std::vector<double>& log_point) const {
    for (const auto& ineq : inequalities)
        if (!ineq.holds(log_point)) return false;
    return true;
}

bool DomainConstraint::holds_exact(const std::vector<Rational>& log_point) const {
    for (const auto& ineq : inequalities)
        if (ineq.side(log_point) >= 0) return false;
    return true;
}

static void check_walk(const Network& net, const std::vector<int>& path) {
    if (path.size() < 2) throw std::invalid_argument("path needs at least one connection");
    for (std::size_t t = 0; t + 1 < path.size(); ++t)
        if (!net.graph.has_edge(path[t], path[t + 1]))
            throw std::invalid_argument("path is not a walk in the network");
}

DomainConstraint domain_constraints(const Network& net, const std::vector<int>& path) {
    check_walk(net, path);
    CrossSection start{path[1], Orientation::In, path[0], net.graph.n};
    DomainConstraint dc{start, {}};
    MonomialMap prefix = MonomialMap::identity(start);
    for (std::size_t t = 1; t + 1 < path.size(); ++t) {
        const int node = path[t], prev = path[t - 1], next = path[t + 1];
        const NodeSpectrum& spec = net.at(node);
        CrossSection here{node, Orientation::In, prev, net.graph.n};
        for (int m = 1; m <= net.graph.n; ++m) {
            if (m == node || m == next || m == prev) continue;
            if (spec.at(m) <= 0) continue;  // only expanding directions compete
            MonomialInequality ineq;
            ineq.section = here;
            ineq.weights[m] = 1;
            ineq.weights[next] = -spec.at(m) / spec.at(next);
            dc.inequalities.push_back(ineq.pull_back(prefix));
        }
        prefix = compose(local_map(spec, prev, next), prefix);
    }
    return dc;
}

MonomialMap path_map(const Network& net, const std::vector<int>& path) {
    check_walk(net, path);
    CrossSection start{path[1], Orientation::In, path[0], net.graph.n};
    MonomialMap m = MonomialMap::identity(start);
    for (std::size_t t = 1; t + 1 < path.size(); ++t)
        m = compose(local_map(net.at(path[t]), path[t - 1], path[t + 1]), m);
    return m;
}

}  // namespace hetnet
