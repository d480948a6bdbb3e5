#include "hetnet/field.hpp"

#include <algorithm>
#include <cmath>

namespace hetnet {

SimplexField::SimplexField(DirectedGraph graph, RatMatrix coefficients)
    : graph_(std::move(graph)), a_(std::move(coefficients)) {
    const int n = graph_.n;
    if (a_.rows() != static_cast<std::size_t>(n) || a_.cols() != static_cast<std::size_t>(n))
        throw std::invalid_argument("coefficient matrix must be n x n");
    for (int j = 0; j < n; ++j)
        if (a_(j, j) != 0) throw std::invalid_argument("diagonal must be identically zero");
    a_dbl_.resize(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a_dbl_[i * n + j] = to_double(a_(i, j));
}

SimplexField SimplexField::build(const DirectedGraph& g, const Margins& m,
                                 const std::map<Edge, Rational>& overrides) {
    auto v = validate_graph(g);
    if (!v.realizable())
        throw std::invalid_argument("graph is not one- and two-cycle free");
    if (m.e_mag <= 0 || m.c_mag <= 0 || m.t_mag <= 0)
        throw std::invalid_argument("margins must be positive");
    const int n = g.n;
    RatMatrix a(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            if (g.has_edge(i, j)) a(i - 1, j - 1) = m.e_mag;
            else if (g.has_edge(j, i)) a(i - 1, j - 1) = -m.c_mag;
            else a(i - 1, j - 1) = -m.t_mag;
        }
    for (const auto& [e, val] : overrides) {
        if (e.first == e.second) throw std::invalid_argument("cannot override a diagonal entry");
        if (e.first < 1 || e.first > n || e.second < 1 || e.second > n)
            throw std::invalid_argument("override index out of range");
        a(e.first - 1, e.second - 1) = val;
    }
    return SimplexField(g, std::move(a));
}

SimplexField SimplexField::with_coeff(int i, int j, const Rational& value) const {
    if (i == j) throw std::invalid_argument("cannot override a diagonal entry");
    RatMatrix a = a_;
    a(i - 1, j - 1) = value;
    return SimplexField(graph_, std::move(a));
}

void SimplexField::eval(std::span<const double> x, std::span<double> dxdt) const {
    const int n = graph_.n;
    double norm2 = 0;
    for (int i = 0; i < n; ++i) norm2 += x[i] * x[i];
    for (int j = 0; j < n; ++j) {
        double s = 1.0 - norm2;
        for (int i = 0; i < n; ++i) s += a_dbl_[i * n + j] * x[i] * x[i];
        dxdt[j] = x[j] * s;
    }
}

std::vector<double> SimplexField::eval(const std::vector<double>& x) const {
    std::vector<double> d(x.size());
    eval(x, d);
    return d;
}

void SimplexField::eval_log(std::span<const double> u, std::span<double> dudt) const {
    const int n = graph_.n;
    double norm2 = 0;
    std::vector<double> x2(n);
    for (int i = 0; i < n; ++i) {
        x2[i] = std::exp(2.0 * u[i]);
        norm2 += x2[i];
    }
    for (int j = 0; j < n; ++j) {
        double s = 1.0 - norm2;
        for (int i = 0; i < n; ++i) s += a_dbl_[i * n + j] * x2[i];
        dudt[j] = s;
    }
}

std::vector<std::vector<double>> SimplexField::numerical_jacobian(const std::vector<double>& x,
                                                                  double h) const {
    const int n = graph_.n;
    std::vector<std::vector<double>> jac(n, std::vector<double>(n));
    std::vector<double> xp = x, xm = x, fp(n), fm(n);
    for (int l = 0; l < n; ++l) {
        xp[l] = x[l] + h;
        xm[l] = x[l] - h;
        eval(xp, fp);
        eval(xm, fm);
        for (int k = 0; k < n; ++k) jac[k][l] = (fp[k] - fm[k]) / (2 * h);
        xp[l] = x[l];
        xm[l] = x[l];
    }
    return jac;
}

NodeSpectrum EquilibriumData::spectrum() const {
    NodeSpectrum s;
    s.node = index;
    s.dim = static_cast<int>(position.size());
    s.eig.resize(s.dim);
    s.at(index) = radial;
    for (const auto& [k, val] : transverse_spectrum) s.at(k) = val;
    return s;
}

EquilibriumData equilibrium_data(const SimplexField& f, int j) {
    if (j < 1 || j > f.dim()) throw std::out_of_range("node index");
    EquilibriumData d;
    d.index = j;
    d.position.assign(f.dim(), 0.0);
    d.position[j - 1] = 1.0;
    d.radial = -2;
    for (int k = 1; k <= f.dim(); ++k)
        if (k != j) d.transverse_spectrum.emplace_back(k, f.coeff(j, k));
    return d;
}

NodeSpectrum node_spectrum(const SimplexField& f, int j) {
    return equilibrium_data(f, j).spectrum();
}

std::vector<std::pair<int, EigenvalueRole>> classify_roles(const SimplexField& f,
                                                           const std::vector<int>& cycle,
                                                           int j) {
    if (!is_closed_walk(f.graph(), cycle))
        throw std::invalid_argument("cycle is not a closed walk in the graph");
    auto it = std::find(cycle.begin(), cycle.end(), j);
    if (it == cycle.end()) throw std::invalid_argument("node not on the cycle");
    const std::size_t pos = static_cast<std::size_t>(it - cycle.begin());
    const int pred = cycle[(pos + cycle.size() - 1) % cycle.size()];
    const int succ = cycle[(pos + 1) % cycle.size()];

    auto spec = node_spectrum(f, j);
    std::vector<std::pair<int, EigenvalueRole>> roles;
    for (int m = 1; m <= f.dim(); ++m) {
        EigenvalueRole role;
        if (m == j) role = {RoleKind::Radial, 0};
        else if (m == pred) role = {RoleKind::Contracting, pred};
        else if (m == succ) role = {RoleKind::Expanding, succ};
        else role = {RoleKind::Transverse, m};
        const Rational& lam = spec.at(m);
        if (role.kind == RoleKind::Radial && lam >= 0) throw SignContradiction(m);
        if (role.kind == RoleKind::Contracting && lam >= 0) throw SignContradiction(m);
        if (role.kind == RoleKind::Expanding && lam <= 0) throw SignContradiction(m);
        roles.emplace_back(m, role);
    }
    return roles;
}

Network Network::from_field(const SimplexField& f) {
    Network net{f.graph(), {}};
    for (int j = 1; j <= f.dim(); ++j) net.spectra.push_back(node_spectrum(f, j));
    return net;
}

}  // namespace hetnet
