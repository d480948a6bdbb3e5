#pragma once

#include "hetnet/rational.hpp"

#include <stdexcept>

namespace hetnet {

enum class CuspSide { Below, Above };
enum class Thickness { Thin, Thick, Degenerate };

struct DegenerateCusp : std::runtime_error {
    DegenerateCusp() : std::runtime_error("q = 1 separates no cusp (degenerate)") {}
};

/// Power-law cusp in a coordinate plane: the region of points on `side` of
/// the curve y = x^q (positive quadrant; the ambient Z_2^n symmetry copies
/// it to the other quadrants).
struct CuspRegion {
    int horizontal = 0;  // coordinate label on the x-axis of the plane
    int vertical = 0;    // coordinate label on the y-axis
    Rational q{1};       // curve exponent, q > 0
    CuspSide side = CuspSide::Below;

    Thickness thickness() const;
    /// Axis the defining curve is tangent to at the origin: horizontal when
    /// q > 1, vertical when q < 1, 0 when degenerate.
    int tangency_axis() const;
    /// The complementary region of the same curve.
    CuspRegion complement() const;
    /// Same region described with the axes exchanged (q -> 1/q, side swapped).
    CuspRegion axes_swapped() const;

    bool contains(double x, double y) const;
};

struct CuspRelationReport {
    bool coincident_axes = false;       // same tangency axis: one cusp nests in the other
    bool thick1_contains_thin2 = true;  // on the sampled grid
    bool thick2_contains_thin1 = true;
    bool thin_thin_empty = true;
    double thick_thick_fraction = 0.0;  // fraction of grid points in both thick cusps
    double eps_used = 0.0;              // neighbourhood radius after any refinement
};

/// Grid-sampled verdicts for the three cusp-intersection statements, for the
/// two curves underlying c1 and c2 (their chosen sides are irrelevant here).
/// The neighbourhood size is refined x10 (up to `max_refine` times) until the
/// boolean verdicts agree across two consecutive scales.
CuspRelationReport cusp_relations(const CuspRegion& c1, const CuspRegion& c2,
                                  double eps = 1e-2, int grid = 100, int max_refine = 3);

}  // namespace hetnet
