#pragma once

#include "hetnet/monomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace hetnet {

/// One monomial inequality prod_l x_l^(w_l) < 1 over a section's active
/// coordinates, i.e. sum_l w_l log x_l < 0. Inequalities of the shape
/// x_a < x_b^q are stored as w_a = 1, w_b = -q.
struct MonomialInequality {
    CrossSection section;
    std::map<int, Rational> weights;  // label -> exponent; absent = 0

    /// <0 satisfied, >0 violated, ==0 on the boundary.
    int side(const std::vector<Rational>& log_point) const;
    bool holds(const std::vector<double>& log_point) const;

    /// Substitute through a monomial map landing on this section, producing
    /// the equivalent inequality on the map's domain.
    MonomialInequality pull_back(const MonomialMap& through) const;

    std::string pretty() const;
};

/// Conjunction of monomial inequalities on one section.
struct DomainConstraint {
    CrossSection section;
    std::vector<MonomialInequality> inequalities;

    bool holds(const std::vector<double>& log_point) const;
    bool holds_exact(const std::vector<Rational>& log_point) const;
};

/// Constraint on the first cross-section of a walk selecting, at every
/// intermediate node, the prescribed outgoing direction against each
/// competing positive-eigenvalue direction. path = ordered node list
/// [n0, n1, ..., nk]; the result lives on H_{n1}^{in,n0}.
DomainConstraint domain_constraints(const Network& net, const std::vector<int>& path);

/// The composed local map along the walk, from H_{n1}^{in,n0} to
/// H_{nk}^{in,n(k-1)}-identified coordinates.
MonomialMap path_map(const Network& net, const std::vector<int>& path);

}  // namespace hetnet
