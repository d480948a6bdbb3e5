#pragma once

#include "hetnet/graph.hpp"
#include "hetnet/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hetnet {

struct Margins {
    Rational e_mag{1};        // expanding entry on each edge (i,j): a_ij = +e_mag
    Rational c_mag{1};        // contracting entry: a_ji = -c_mag
    Rational t_mag{1, 4};     // default transverse entry: -t_mag
};

/// The explicit polynomial vector field realizing a directed graph:
///     dx_j/dt = x_j (1 - |x|^2 + sum_i a_ij x_i^2)
/// with zero diagonal, so each equilibrium xi_j is the unit point on the
/// x_j-axis and the linearization there is diagonal: eigenvalue a_jk in
/// direction k != j and -2 radially.
class SimplexField {
public:
    SimplexField(DirectedGraph graph, RatMatrix coefficients);

    static SimplexField build(const DirectedGraph& g, const Margins& margins = {},
                              const std::map<Edge, Rational>& overrides = {});

    int dim() const { return graph_.n; }
    const DirectedGraph& graph() const { return graph_; }
    /// a_ij with 1-based node labels.
    const Rational& coeff(int i, int j) const { return a_(i - 1, j - 1); }
    const RatMatrix& coefficients() const { return a_; }

    /// Copy with one off-diagonal entry replaced (diagonal is protected).
    SimplexField with_coeff(int i, int j, const Rational& value) const;

    void eval(std::span<const double> x, std::span<double> dxdt) const;
    std::vector<double> eval(const std::vector<double>& x) const;

    /// Right-hand side of du_j/dt for u = log x, valid on the open positive
    /// orthant: du_j/dt = 1 - sum_m exp(2 u_m) + sum_i a_ij exp(2 u_i).
    void eval_log(std::span<const double> u, std::span<double> dudt) const;

    /// Central-difference Jacobian at an arbitrary state (test oracle).
    std::vector<std::vector<double>> numerical_jacobian(const std::vector<double>& x,
                                                        double h = 1e-5) const;

private:
    DirectedGraph graph_;
    RatMatrix a_;
    std::vector<double> a_dbl_;  // row-major cache for the integrator
};

/// Eigenvalues of the linearization at one equilibrium, by direction label.
struct NodeSpectrum {
    int node = 0;  // 1-based
    int dim = 0;
    std::vector<Rational> eig;  // eig[m-1] = eigenvalue in direction m; eig[node-1] is radial

    const Rational& at(int direction) const { return eig.at(direction - 1); }
    Rational& at(int direction) { return eig.at(direction - 1); }
};

struct EquilibriumData {
    int index = 0;
    std::vector<double> position;  // unit point on the axis
    Rational radial;               // -2 under the zero-diagonal convention
    std::vector<std::pair<int, Rational>> transverse_spectrum;  // (direction, eigenvalue)

    NodeSpectrum spectrum() const;
};

EquilibriumData equilibrium_data(const SimplexField& f, int j);
NodeSpectrum node_spectrum(const SimplexField& f, int j);

enum class RoleKind { Radial, Contracting, Expanding, Transverse };

struct EigenvalueRole {
    RoleKind kind;
    int toward = 0;  // neighbour label; 0 for Radial
};

struct SignContradiction : std::runtime_error {
    int direction;
    explicit SignContradiction(int d)
        : std::runtime_error("eigenvalue sign contradicts its role in direction " +
                             std::to_string(d)),
          direction(d) {}
};

/// Role of each direction at node j relative to a closed walk through j.
/// Throws SignContradiction if a radial/contracting/expanding eigenvalue has
/// the wrong sign.
std::vector<std::pair<int, EigenvalueRole>> classify_roles(const SimplexField& f,
                                                           const std::vector<int>& cycle,
                                                           int j);

/// Graph + spectra is all the map algebra needs; it can come from a simplex
/// field or from a user-supplied eigenvalue table.
struct Network {
    DirectedGraph graph;
    std::vector<NodeSpectrum> spectra;  // index j-1 for node j

    static Network from_field(const SimplexField& f);
    const NodeSpectrum& at(int node) const { return spectra.at(node - 1); }
};

}  // namespace hetnet
