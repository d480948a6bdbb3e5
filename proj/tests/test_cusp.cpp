#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hetnet/cusp.hpp"

using namespace hetnet;

TEST_CASE("thin/thick classification and tangency axis") {
    CuspRegion below2{1, 2, Rational(2), CuspSide::Below};
    CHECK(below2.thickness() == Thickness::Thin);
    CHECK(below2.tangency_axis() == 1);
    CHECK(below2.complement().thickness() == Thickness::Thick);

    CuspRegion below_half{1, 2, Rational(1, 2), CuspSide::Below};
    CHECK(below_half.thickness() == Thickness::Thick);
    CHECK(below_half.complement().thickness() == Thickness::Thin);
    CHECK(below_half.complement().tangency_axis() == 2);
}

TEST_CASE("q = 1 is degenerate") {
    CuspRegion c{1, 2, Rational(1), CuspSide::Below};
    CHECK(c.thickness() == Thickness::Degenerate);
    CHECK(c.tangency_axis() == 0);
    CHECK_THROWS_AS((void)cusp_relations(c, c), DegenerateCusp);
}

TEST_CASE("classification is invariant under axes swap") {
    for (const Rational& q : {Rational(3), Rational(2, 5), Rational(7, 3)}) {
        for (CuspSide s : {CuspSide::Below, CuspSide::Above}) {
            CuspRegion c{1, 2, q, s};
            const CuspRegion swapped = c.axes_swapped();
            CHECK(swapped.thickness() == c.thickness());
            CHECK(swapped.q == Rational(1) / q);
        }
    }
}

TEST_CASE("thin and thick regions partition a punctured neighbourhood") {
    CuspRegion thin{1, 2, Rational(2), CuspSide::Below};
    const CuspRegion thick = thin.complement();
    for (double x = 1e-3; x < 1e-2; x += 1e-3)
        for (double y = 1e-3; y < 1e-2; y += 1e-3) {
            if (y == x * x) continue;  // boundary
            CHECK(thin.contains(x, y) != thick.contains(x, y));
        }
}

TEST_CASE("q1 = 2 vs q2 = 1/2: thin cusps disjoint, thick contains thin") {
    CuspRegion c1{1, 2, Rational(2), CuspSide::Below};   // thin at x-axis
    CuspRegion c2{1, 2, Rational(1, 2), CuspSide::Above};  // thin at y-axis
    const CuspRelationReport rep = cusp_relations(c1, c2, 1e-2, 100);
    CHECK_FALSE(rep.coincident_axes);
    CHECK(rep.thin_thin_empty);
    CHECK(rep.thick1_contains_thin2);
    CHECK(rep.thick2_contains_thin1);
}

TEST_CASE("identical cusps report coincident-axis containment") {
    CuspRegion c{1, 2, Rational(2), CuspSide::Below};
    const CuspRelationReport rep = cusp_relations(c, c);
    CHECK(rep.coincident_axes);
}

TEST_CASE("thick-thick intersection fraction stays bounded away from zero") {
    CuspRegion c1{1, 2, Rational(3), CuspSide::Below};
    CuspRegion c2{1, 2, Rational(1, 3), CuspSide::Above};
    double prev = 1.0;
    for (double eps : {1e-1, 1e-2, 1e-3}) {
        const CuspRelationReport rep = cusp_relations(c1, c2, eps, 100);
        CHECK(rep.thick_thick_fraction > 0.1);
        prev = rep.thick_thick_fraction;
    }
    (void)prev;
}
