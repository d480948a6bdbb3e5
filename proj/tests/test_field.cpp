#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hetnet/field.hpp"

#include <random>

using namespace hetnet;

namespace {

// Random realizable graph + random rational coefficients with the simplex
// sign pattern, used as the bulk oracle input.
SimplexField random_field(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> coin(0, 1), digit(1, 9);
    DirectedGraph g{n, {}};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j || g.has_edge(j, i)) continue;
            if (coin(rng)) g.edges.insert({i, j});
        }
    std::map<Edge, Rational> overrides;
    for (const Edge& e : g.edges) {
        overrides[e] = Rational(digit(rng), digit(rng));                       // expanding
        overrides[{e.second, e.first}] = Rational(-digit(rng), digit(rng));    // contracting
    }
    return SimplexField::build(g, {}, overrides);
}

}  // namespace

TEST_CASE("margins place coefficients directly") {
    DirectedGraph g{3, {{1, 2}, {2, 3}, {3, 1}}};
    const SimplexField f = SimplexField::build(g, {Rational(1, 2), Rational(1), Rational(1, 4)});
    CHECK(f.coeff(1, 2) == Rational(1, 2));
    CHECK(f.coeff(2, 1) == Rational(-1));
    CHECK(f.coeff(2, 3) == Rational(1, 2));
    CHECK(f.coeff(3, 2) == Rational(-1));
    for (int j = 1; j <= 3; ++j) CHECK(f.coeff(j, j) == 0);
}

TEST_CASE("bowtie field has expanding entries exactly on the graph edges") {
    const SimplexField f = SimplexField::build(bowtie_graph());
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) {
            if (i == j) continue;
            if (f.graph().has_edge(i, j))
                CHECK(f.coeff(i, j) > 0);
            else
                CHECK(f.coeff(i, j) < 0);
        }
}

TEST_CASE("non-realizable graphs are rejected") {
    DirectedGraph g{2, {{1, 2}, {2, 1}}};
    CHECK_THROWS(SimplexField::build(g));
}

TEST_CASE("radial eigenvalue is -2 and matches the numerical Jacobian") {
    std::mt19937 rng(7);
    const SimplexField f = random_field(rng, 4);
    for (int j = 1; j <= 4; ++j) {
        const EquilibriumData eq = equilibrium_data(f, j);
        CHECK(eq.radial == Rational(-2));
        const auto J = f.numerical_jacobian(eq.position);
        for (int m = 1; m <= 4; ++m) {
            const double analytic = to_double(eq.spectrum().at(m));
            CHECK(std::abs(J[m - 1][m - 1] - analytic) < 1e-8);
            // off-diagonal entries of the Jacobian vanish at the equilibria
            for (int k = 1; k <= 4; ++k)
                if (k != m) CHECK(std::abs(J[m - 1][k - 1]) < 1e-8);
        }
    }
}

TEST_CASE("a_ij becomes the eigenvalue at xi_i in direction j") {
    DirectedGraph g{3, {{1, 2}, {2, 3}, {3, 1}}};
    const SimplexField f =
        SimplexField::build(g, {}, {{{1, 2}, Rational(5, 7)}});
    CHECK(node_spectrum(f, 1).at(2) == Rational(5, 7));
}

TEST_CASE("n = 1 gives the logistic normal form with eigenvalue -2") {
    const SimplexField f = SimplexField::build(DirectedGraph{1, {}});
    CHECK(node_spectrum(f, 1).at(1) == Rational(-2));
    CHECK(f.eval({1.0})[0] == doctest::Approx(0.0));
}

TEST_CASE("coordinate hyperplanes are flow-invariant, field is Z_2^n equivariant") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> coord(0.05, 0.8);
    const SimplexField f = random_field(rng, 5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> x(5);
        for (double& v : x) v = coord(rng);
        x[trial % 5] = 0.0;
        CHECK(f.eval(x)[trial % 5] == 0.0);  // exactly zero

        std::vector<double> sx = x;
        for (int k = 0; k < 5; ++k)
            if ((trial >> (k % 3)) & 1) sx[k] = -sx[k];
        const auto fx = f.eval(x), fsx = f.eval(sx);
        for (int k = 0; k < 5; ++k) {
            const double expected = (sx[k] == x[k]) ? fx[k] : -fx[k];
            CHECK(fsx[k] == doctest::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("classify_roles on the bowtie R-cycle at node 2") {
    const SimplexField f = SimplexField::build(bowtie_graph());
    const auto roles = classify_roles(f, {1, 2, 3}, 2);
    for (const auto& [dir, role] : roles) {
        if (dir == 1) CHECK(role.kind == RoleKind::Contracting);
        if (dir == 2) CHECK(role.kind == RoleKind::Radial);
        if (dir == 3) CHECK(role.kind == RoleKind::Expanding);
        if (dir == 4) CHECK(role.kind == RoleKind::Transverse);
        if (dir == 5) CHECK(role.kind == RoleKind::Transverse);
    }
}

TEST_CASE("3-cycle in R^3 has no transverse directions") {
    DirectedGraph g{3, {{1, 2}, {2, 3}, {3, 1}}};
    const SimplexField f = SimplexField::build(g);
    for (const auto& [dir, role] : classify_roles(f, {1, 2, 3}, 2))
        CHECK(role.kind != RoleKind::Transverse);
}

TEST_CASE("flipped expanding sign raises SignContradiction") {
    SimplexField f = SimplexField::build(bowtie_graph());
    f = f.with_coeff(2, 3, Rational(-1));
    CHECK_THROWS_AS((void)classify_roles(f, {1, 2, 3}, 2), SignContradiction);
}

TEST_CASE("edge roles have the right signs for 25 random fields") {
    std::mt19937 rng(23);
    for (int t = 0; t < 25; ++t) {
        const SimplexField f = random_field(rng, 4);
        for (const Edge& e : f.graph().edges) {
            CHECK(node_spectrum(f, e.first).at(e.second) > 0);
            CHECK(node_spectrum(f, e.second).at(e.first) < 0);
        }
    }
}
