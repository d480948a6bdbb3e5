#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hetnet/netspec.hpp"

using namespace hetnet;

TEST_CASE("explicit specs parse and round-trip losslessly") {
    const std::string text =
        "hetnet-spec v1\n"
        "nodes 3\n"
        "edge 1 2\n"
        "edge 2 3\n"
        "edge 3 1\n"
        "margin e 1/2\n"
        "override 1 2 5/7\n"
        "simulate count 10\n";
    const NetworkSpec s = parse_netspec(text);
    CHECK(s.nodes == 3);
    CHECK(s.edges.size() == 3);
    CHECK(s.margins.e_mag == Rational(1, 2));
    CHECK(s.overrides.at({1, 2}) == Rational(5, 7));
    CHECK(s.simulate.count == 10);
    CHECK(parse_netspec(serialize(s)) == s);
}

TEST_CASE("preset specs round-trip and build the preset field") {
    const NetworkSpec s = parse_netspec("hetnet-spec v1\npreset bowtie\nanalysis bowtie\n");
    CHECK(s.graph() == bowtie_graph());
    CHECK(s.field().coeff(2, 3) == bowtie_field().coeff(2, 3));
    CHECK(parse_netspec(serialize(s)) == s);
}

TEST_CASE("parse errors carry 1-based line numbers") {
    auto expect_line = [](const std::string& text, int line) {
        try {
            (void)parse_netspec(text);
            FAIL("expected a parse error");
        } catch (const SpecParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_line("hetnet-spec v1\nnodes 2\nfrobnicate 3\n", 3);            // unknown key
    expect_line("hetnet-spec v1\nnodes 2\nnodes 3\n", 3);                 // duplicate
    expect_line("hetnet-spec v1\nnodes 2\noverride 1 2 3/0\n", 3);        // zero denominator
    expect_line("hetnet-spec v1\nnodes 2\noverride 1 2 0.5\n", 3);        // decimals rejected
    expect_line("nodes 2\n", 1);                                          // missing header
    expect_line("hetnet-spec v1\npreset bowtie\nnodes 2\n", 3);           // preset + nodes
    expect_line("hetnet-spec v1\nmargin e 1\n", 2);                       // no graph at all
}

TEST_CASE("comments and blank lines are ignored, edges deduplicated") {
    const NetworkSpec s = parse_netspec(
        "hetnet-spec v1\n\n# a comment\nnodes 2\nedge 1 2  # trailing\nedge 1 2\n");
    CHECK(s.edges == std::vector<Edge>{{1, 2}});
}

TEST_CASE("preset fields have the documented analysis regimes") {
    // kirk-silber: asymmetric ratios so exactly one path is missing
    const SimplexField ks = kirk_silber_field();
    CHECK(node_spectrum(ks, 1).at(4) / node_spectrum(ks, 1).at(3) !=
          node_spectrum(ks, 2).at(4) / node_spectrum(ks, 2).at(3));
    // house wiring matches the preset graph
    CHECK(house_field().graph() == house_graph());
    CHECK(bowtie_field().graph() == bowtie_graph());
}
