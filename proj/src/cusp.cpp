#include "hetnet/cusp.hpp"

#include <cmath>

namespace hetnet {

Thickness CuspRegion::thickness() const {
    if (q == 1) return Thickness::Degenerate;
    if (q > 1) return side == CuspSide::Below ? Thickness::Thin : Thickness::Thick;
    return side == CuspSide::Above ? Thickness::Thin : Thickness::Thick;
}

int CuspRegion::tangency_axis() const {
    if (q == 1) return 0;
    return q > 1 ? horizontal : vertical;
}

CuspRegion CuspRegion::complement() const {
    CuspRegion c = *this;
    c.side = side == CuspSide::Below ? CuspSide::Above : CuspSide::Below;
    return c;
}

CuspRegion CuspRegion::axes_swapped() const {
    CuspRegion c;
    c.horizontal = vertical;
    c.vertical = horizontal;
    c.q = 1 / q;
    c.side = side == CuspSide::Below ? CuspSide::Above : CuspSide::Below;
    return c;
}

bool CuspRegion::contains(double x, double y) const {
    if (!(x > 0) || !(y > 0)) return false;
    const double curve = std::pow(x, to_double(q));
    return side == CuspSide::Below ? y < curve : y > curve;
}

namespace {

struct GridVerdicts {
    bool t1_contains_thin2 = true, t2_contains_thin1 = true, thin_thin_empty = true;
    double thick_fraction = 0.0;
};

GridVerdicts sample(const CuspRegion& thin1, const CuspRegion& thin2, double eps, int grid) {
    GridVerdicts v;
    const CuspRegion thick1 = thin1.complement(), thick2 = thin2.complement();
    long in_both_thick = 0, total = 0;
    for (int i = 1; i <= grid; ++i)
        for (int j = 1; j <= grid; ++j) {
            const double x = eps * i / grid, y = eps * j / grid;
            const bool n1 = thin1.contains(x, y), n2 = thin2.contains(x, y);
            const bool k1 = thick1.contains(x, y), k2 = thick2.contains(x, y);
            ++total;
            if (n1 && n2) v.thin_thin_empty = false;
            if (n2 && !k1) v.t1_contains_thin2 = false;
            if (n1 && !k2) v.t2_contains_thin1 = false;
            if (k1 && k2) ++in_both_thick;
        }
    v.thick_fraction = static_cast<double>(in_both_thick) / total;
    return v;
}

}  // namespace

CuspRelationReport cusp_relations(const CuspRegion& c1, const CuspRegion& c2, double eps,
                                  int grid, int max_refine) {
    if (c1.horizontal != c2.horizontal || c1.vertical != c2.vertical)
        throw std::invalid_argument("cusps must share the coordinate plane");
    if (c1.q == 1 || c2.q == 1) throw DegenerateCusp();

    CuspRegion thin1 = c1, thin2 = c2;
    if (thin1.thickness() != Thickness::Thin) thin1 = thin1.complement();
    if (thin2.thickness() != Thickness::Thin) thin2 = thin2.complement();

    CuspRelationReport rep;
    if (c1.tangency_axis() == c2.tangency_axis()) {
        // same tangency axis: the sharper thin cusp nests inside the other
        rep.coincident_axes = true;
    }

    GridVerdicts prev = sample(thin1, thin2, eps, grid);
    double scale = eps;
    for (int r = 0; r < max_refine; ++r) {
        GridVerdicts next = sample(thin1, thin2, scale / 10, grid);
        if (next.t1_contains_thin2 == prev.t1_contains_thin2 &&
            next.t2_contains_thin1 == prev.t2_contains_thin1 &&
            next.thin_thin_empty == prev.thin_thin_empty)
            break;
        prev = next;
        scale /= 10;
    }
    rep.thick1_contains_thin2 = prev.t1_contains_thin2;
    rep.thick2_contains_thin1 = prev.t2_contains_thin1;
    rep.thin_thin_empty = prev.thin_thin_empty;
    rep.thick_thick_fraction = prev.thick_fraction;
    rep.eps_used = scale;
    return rep;
}

}  // namespace hetnet
