#include "hetnet/switching.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

namespace hetnet {

std::string to_string(PathStatus s) {
    switch (s) {
        case PathStatus::Realized: return "realized";
        case PathStatus::NotRealized: return "not-realized";
        case PathStatus::Degenerate: return "degenerate";
        case PathStatus::Unknown: return "unknown";
    }
    return "?";
}

int PathVerdict::missing_count() const {
    int k = 0;
    for (const auto& [name, st] : items())
        if (st == PathStatus::NotRealized) ++k;
    return k;
}

void CommonConnectionConfig::validate() const {
    if (alpha == a || alpha <= 0 || a <= 0) throw std::invalid_argument("incoming axes alpha, a must be distinct positive labels");
    if (beta == b || beta <= 0 || b <= 0) throw std::invalid_argument("outgoing axes beta, b must be distinct positive labels");
    if (c1alpha <= 0 || c1a <= 0 || e2beta <= 0 || e2b <= 0)
        throw std::invalid_argument("eigenvalue magnitudes must be positive");
    if (psi == PsiKind::GeneralLinear && !kappa.generic())
        throw std::invalid_argument("kappa must be generic (no zero entry)");
}

bool assumption1_check(const CommonConnectionConfig& cfg) {
    cfg.validate();
    if (cfg.psi == PsiKind::Identity) {
        const bool straight = cfg.beta == cfg.alpha && cfg.b == cfg.a;
        const bool crossed = cfg.beta == cfg.a && cfg.b == cfg.alpha;
        return straight || crossed;
    }
    // general psi: the decoupling of the invariant plane is the user's
    // declaration about the global map, not something we can derive here
    return cfg.planes_decouple;
}

namespace {

// Feasibility of { w1.u < 0, w2.u < 0 } over the open cone u_x < 0, u_y < 0,
// with w = (p, q) acting as p u_x + q u_y. Writing u = -s (1, t), s > 0,
// each condition becomes p + q t > 0 over t in (0, inf): an interval.
struct Ray {  // open interval (lo, hi) of slopes t, hi empty = unbounded
    Rational lo{0};
    std::optional<Rational> hi;
    bool empty = false;
};

Ray solve_halfplane(const Rational& p, const Rational& q) {
    Ray r;
    if (q > 0) {
        const Rational t = -p / q;
        if (t > 0) r.lo = t;
    } else if (q < 0) {
        if (p > 0)
            r.hi = -p / q;
        else
            r.empty = true;
    } else {
        r.empty = (p <= 0);
    }
    return r;
}

PathStatus cone_feasible(const std::pair<Rational, Rational>& w1,
                         const std::pair<Rational, Rational>& w2) {
    const Ray r1 = solve_halfplane(w1.first, w1.second);
    const Ray r2 = solve_halfplane(w2.first, w2.second);
    if (r1.empty || r2.empty) return PathStatus::NotRealized;
    const Rational lo = std::max(r1.lo, r2.lo);
    std::optional<Rational> hi;
    if (r1.hi && r2.hi)
        hi = std::min(*r1.hi, *r2.hi);
    else if (r1.hi)
        hi = r1.hi;
    else if (r2.hi)
        hi = r2.hi;
    if (!hi) return PathStatus::Realized;
    if (lo < *hi) return PathStatus::Realized;
    if (lo == *hi) return PathStatus::Degenerate;
    return PathStatus::NotRealized;
}

using W2 = std::pair<Rational, Rational>;
W2 negate(const W2& w) { return {-w.first, -w.second}; }

}  // namespace

PathVerdict classify_paths(const CommonConnectionConfig& cfg) {
    cfg.validate();
    PathVerdict v;
    const Rational R1 = cfg.c1a / cfg.c1alpha;  // incoming split y = x^R1 in (x_alpha, x_a)
    const Rational R2 = cfg.e2b / cfg.e2beta;   // outgoing split y = x^R2 in (x_beta, x_b)

    if (cfg.psi == PsiKind::Identity) {
        if (!assumption1_check(cfg)) throw Assumption1Violated();
        // weights act on (u_alpha, u_a); points from alpha are below the
        // incoming split, points from a above it
        const W2 c_alpha{-R1, 1}, c_a = negate(c_alpha);
        W2 e_beta, e_b;
        if (cfg.beta == cfg.alpha) {  // straight pairing
            e_beta = {-R2, 1};
            e_b = negate(e_beta);
        } else {  // crossed: x_beta = x_a, x_b = x_alpha
            e_beta = {1, -R2};
            e_b = negate(e_beta);
        }
        v.a12b = cone_feasible(c_a, e_b);
        v.a12beta = cone_feasible(c_a, e_beta);
        v.alpha12b = cone_feasible(c_alpha, e_b);
        v.alpha12beta = cone_feasible(c_alpha, e_beta);
        return v;
    }

    if (!cfg.planes_decouple) return v;  // nothing derivable: all Unknown
    if (R1 == 1 || R2 == 1) {
        v.a12b = v.a12beta = v.alpha12b = v.alpha12beta = PathStatus::Degenerate;
        return v;
    }
    // generic kappa: a thin incoming cusp maps onto a beam around a generic
    // line, which lands in the thick outgoing region only; a thick incoming
    // region covers the kappa-preimage of the thin outgoing cusp. So exactly
    // the thin-to-thin path is missing.
    const bool a_thin = R1 < 1;       // C_a1 = {x_a > x_alpha^R1} is thin iff R1 < 1
    const bool b_thin = R2 < 1;       // E_2b = {x_b > x_beta^R2} is thin iff R2 < 1
    v.a12b = v.a12beta = v.alpha12b = v.alpha12beta = PathStatus::Realized;
    if (a_thin && b_thin) v.a12b = PathStatus::NotRealized;
    if (a_thin && !b_thin) v.a12beta = PathStatus::NotRealized;
    if (!a_thin && b_thin) v.alpha12b = PathStatus::NotRealized;
    if (!a_thin && !b_thin) v.alpha12beta = PathStatus::NotRealized;
    return v;
}

PathVerdict classify_paths_grid(const CommonConnectionConfig& cfg, double eps, int grid) {
    cfg.validate();
    if (cfg.psi == PsiKind::Identity && !assumption1_check(cfg)) throw Assumption1Violated();
    const double R1 = to_double(cfg.c1a / cfg.c1alpha);
    const double R2 = to_double(cfg.e2b / cfg.e2beta);
    PathVerdict v;
    v.a12b = v.a12beta = v.alpha12b = v.alpha12beta = PathStatus::NotRealized;

    auto mark = [&](bool from_a, bool to_b) {
        PathStatus& slot = from_a ? (to_b ? v.a12b : v.a12beta) : (to_b ? v.alpha12b : v.alpha12beta);
        slot = PathStatus::Realized;
    };

    if (cfg.psi == PsiKind::Identity) {
        // All side tests are linear in log coordinates and scale-invariant, so
        // a point is determined by its log-slope t: u = -(1, t). Sampling in
        // slope space avoids the underflow a physical grid hits when the cusp
        // exponents are extreme. Both region boundaries are slopes; sampling
        // a geometric range around them plus the midpoint between them puts a
        // sample strictly inside every maximal region.
        const double s_in = R1;                                        // from-a boundary
        const double s_out = cfg.beta == cfg.alpha ? R2 : 1.0 / R2;    // to-b boundary
        const double cmin = std::min(s_in, s_out), cmax = std::max(s_in, s_out);
        std::vector<double> slopes;
        for (int i = 0; i < grid; ++i)
            slopes.push_back(cmin / 4 * std::pow(16 * cmax / cmin, double(i) / (grid - 1)));
        slopes.push_back(std::sqrt(cmin * cmax));
        for (double t : slopes) {
            if (t == s_in || t == s_out) continue;
            const bool from_a = t < s_in;  // u_a > R1 u_alpha at u = -(1, t)
            const bool to_b = cfg.beta == cfg.alpha ? t < s_out : t > s_out;
            mark(from_a, to_b);
        }
        return v;
    }

    const double lo = eps * 1e-4;
    auto coord = [&](int i) { return lo * std::pow(eps / lo, double(i) / (grid - 1)); };

    // classify one physical sample (x_alpha, x_a) and both sign lifts of its
    // kappa image, quotienting the ambient Z_2^n symmetry by absolute values
    auto consider = [&](double x, double y) {
        if (!(x > 0) || !(y > 0) || !std::isfinite(x) || !std::isfinite(y)) return;
        const double inc = std::pow(x, R1);
        if (y == inc) return;
        const bool from_a = y > inc;
        for (double sx : {1.0, -1.0}) {
            const double xb = std::abs(cfg.kappa.k11 * sx * x + cfg.kappa.k12 * y);
            const double yb = std::abs(cfg.kappa.k21 * sx * x + cfg.kappa.k22 * y);
            if (xb == 0 || yb == 0) continue;
            const double outc = std::pow(xb, R2);
            if (yb == outc) continue;
            mark(from_a, yb > outc);
        }
    };

    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j) consider(coord(i), coord(j));

    // A uniform grid only reaches the interiors of thick regions: the image
    // of a generic beam under kappa lands away from the outgoing cusp tip,
    // and a thin outgoing cusp is only entered where one row of kappa nearly
    // cancels. Refine along those kernel lines, and along the incoming cusp
    // boundary so both incoming sides are represented at every depth.
    std::vector<double> rays;
    for (double sx : {1.0, -1.0}) {
        if (cfg.kappa.k12 != 0) rays.push_back(-cfg.kappa.k11 * sx / cfg.kappa.k12);
        if (cfg.kappa.k22 != 0) rays.push_back(-cfg.kappa.k21 * sx / cfg.kappa.k22);
    }
    for (int i = 0; i < grid; ++i) {
        const double x = coord(i);
        for (int j = 1; j <= 60; ++j)
            for (double sgn : {1.0, -1.0}) {
                const double off = sgn * std::pow(2.0, -j);
                for (double slope : rays)
                    if (slope > 0) consider(x, slope * x * (1 + off));
                consider(x, std::pow(x, R1) * (1 + off));
            }
    }
    return v;
}

// ---------------------------------------------------------------------------
// Shadowing on a grid
// ---------------------------------------------------------------------------

namespace {

struct StepPlan {
    // constraints on the current section: u[m_idx] - ratio * u[next_idx] < 0
    struct Check {
        int m_idx, next_idx;
        double ratio;
    };
    std::vector<Check> checks;
    int next_idx = -1;                       // u[next_idx] < 0 must hold too
    std::vector<std::vector<double>> E;      // log-space step matrix, or empty on last node
};

}  // namespace

ShadowResult verify_shadowing(const Network& net, const std::vector<int>& path,
                              const GridSpec& grid) {
    if (path.size() < 2) throw std::invalid_argument("path needs at least one connection");
    for (std::size_t t = 0; t + 1 < path.size(); ++t)
        if (!net.graph.has_edge(path[t], path[t + 1]))
            throw std::invalid_argument("path is not a walk in the network");
    const int n = net.graph.n;

    std::vector<StepPlan> plan;
    for (std::size_t t = 1; t + 1 < path.size(); ++t) {
        const int node = path[t], prev = path[t - 1], next = path[t + 1];
        const NodeSpectrum& spec = net.at(node);
        CrossSection here{node, Orientation::In, prev, n};
        StepPlan sp;
        sp.next_idx = here.active_index(next);
        for (int m = 1; m <= n; ++m) {
            if (m == node || m == next || m == prev) continue;
            if (spec.at(m) <= 0) continue;
            sp.checks.push_back({here.active_index(m), sp.next_idx,
                                 to_double(spec.at(m) / spec.at(next))});
        }
        const MonomialMap local = local_map(spec, prev, next);
        CrossSection landing{next, Orientation::In, node, n};
        const MonomialMap step = compose(MonomialMap::identification(local.codomain, landing), local);
        const int d = n - 1;
        sp.E.assign(d, std::vector<double>(d));
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) sp.E[r][c] = to_double(step.E(r, c));
        plan.push_back(std::move(sp));
    }

    ShadowResult res;
    res.grid = grid;
    const int d = n - 1;
    const double ulo = std::log(grid.lo), uhi = std::log(grid.hi);
    std::vector<int> idx(d, 0);
    std::vector<double> u(d), next_u(d);
    while (true) {
        ++res.points_checked;
        for (int k = 0; k < d; ++k)
            u[k] = grid.per_axis == 1
                       ? ulo
                       : ulo + (uhi - ulo) * idx[k] / (grid.per_axis - 1);
        bool ok = true;
        std::vector<double> cur = u;
        for (const StepPlan& sp : plan) {
            if (cur[sp.next_idx] >= 0) { ok = false; break; }
            for (const auto& c : sp.checks)
                if (!(cur[c.m_idx] - c.ratio * cur[c.next_idx] < 0)) { ok = false; break; }
            if (!ok) break;
            for (int r = 0; r < d; ++r) {
                double s = 0;
                for (int c = 0; c < d; ++c) s += sp.E[r][c] * cur[c];
                next_u[r] = s;
            }
            cur.swap(next_u);
        }
        if (ok) {
            res.found = true;
            res.grid_index = idx;
            res.witness.resize(d);
            for (int k = 0; k < d; ++k) res.witness[k] = std::exp(u[k]);
            return res;
        }
        int k = d - 1;
        while (k >= 0 && ++idx[k] == grid.per_axis) idx[k--] = 0;
        if (k < 0) break;
    }
    return res;
}

// ---------------------------------------------------------------------------
// Corollary for chains of connections
// ---------------------------------------------------------------------------

PathVerdict sequence_corollary_check(const Network& net, const std::vector<int>& chain,
                                     int alpha, int a, int beta, int b) {
    if (chain.size() < 2) throw std::invalid_argument("chain needs at least two nodes");
    const int n1 = chain.front(), n2 = chain.back();
    const int pre2 = chain[chain.size() - 2];
    if (alpha == a || beta == b) throw std::invalid_argument("axis labels must be distinct");
    if (alpha == n1 || a == n1 || alpha == chain[1] || a == chain[1])
        throw std::invalid_argument("incoming axes must be transverse to the chain at its head");
    if (beta == n2 || b == n2 || beta == pre2 || b == pre2)
        throw std::invalid_argument("outgoing axes must be transverse to the chain at its tail");

    const NodeSpectrum& s1 = net.at(n1);
    const NodeSpectrum& s2 = net.at(n2);
    if (s1.at(alpha) >= 0 || s1.at(a) >= 0)
        throw std::invalid_argument("incoming directions must be contracting at the head node");
    if (s2.at(beta) <= 0 || s2.at(b) <= 0)
        throw std::invalid_argument("outgoing directions must be expanding at the tail node");
    const Rational R1 = s1.at(a) / s1.at(alpha);  // = c1a / c1alpha
    const Rational R2 = s2.at(b) / s2.at(beta);

    const MonomialMap M = path_map(net, chain);
    // the side of the incoming split reached from alpha, expressed on the
    // first section of the chain: u_a - R1 u_alpha < 0
    MonomialInequality from_alpha;
    from_alpha.section = M.domain;
    from_alpha.weights[a] = 1;
    from_alpha.weights[alpha] = -R1;
    const MonomialInequality carried = from_alpha.pull_back(inverse(M));

    // Assumption 1 for the chain: the transported split must stay inside the
    // outgoing (beta, b)-plane
    W2 c_alpha{0, 0};
    for (const auto& [label, w] : carried.weights) {
        if (label == beta)
            c_alpha.first = w;
        else if (label == b)
            c_alpha.second = w;
        else if (w != 0)
            throw Assumption1Violated();
    }
    const W2 c_a = negate(c_alpha);
    const W2 e_beta{-R2, 1}, e_b = negate(e_beta);  // weights on (u_beta, u_b)

    PathVerdict v;
    v.a12b = cone_feasible(c_a, e_b);
    v.a12beta = cone_feasible(c_a, e_beta);
    v.alpha12b = cone_feasible(c_alpha, e_b);
    v.alpha12beta = cone_feasible(c_alpha, e_beta);
    return v;
}

// ---------------------------------------------------------------------------
// House network
// ---------------------------------------------------------------------------

std::vector<double> HouseRegion::witness() const {
    std::vector<double> x(witness_log2.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::exp2(to_double(witness_log2[i]));
    return x;
}

std::array<HouseRegion, 4> house_regions(const Network& net) {
    if (!(net.graph == house_graph()))
        throw std::invalid_argument("house_regions expects the House wiring on 5 nodes");
    const NodeSpectrum& s1 = net.at(1);
    const NodeSpectrum& s2 = net.at(2);
    for (int f : {3, 5})
        if (s1.at(f) >= 0) throw EmptyRegion("direction " + std::to_string(f) + " must contract at node 1");
    for (int g : {3, 4})
        if (s2.at(g) <= 0) throw EmptyRegion("direction " + std::to_string(g) + " must expand at node 2");
    const Rational c13 = -s1.at(3), c15 = -s1.at(5);
    const Rational e23 = s2.at(3), e24 = s2.at(4);
    const Rational r = c15 / c13;  // incoming split: x5 = x3^r on H_2^{in,1}
    const Rational s = e24 / e23;  // outgoing split: x4 = x3^s

    const int n = net.graph.n;
    const CrossSection S{2, Orientation::In, 1, n};

    std::array<HouseRegion, 4> out;
    int slot = 0;
    for (int from : {3, 5})
        for (int to : {3, 4}) {
            HouseRegion reg;
            reg.from = from;
            reg.to = to;
            reg.constraint = domain_constraints(net, {1, 2, to});
            reg.source_split.section = S;
            reg.source_split.weights[5] = from == 3 ? Rational(1) : Rational(-1);
            reg.source_split.weights[3] = from == 3 ? -r : r;

            // The lemma's regions are the four intersections of the two split
            // surfaces' sides, which partition the whole section: near the
            // x3-axis (3->3), the x4-axis (3->4), the x5-axis (5->3) and the
            // x4x5-plane away from the x5-axis (5->4). Pick the shallow
            // coordinate(s) first, then push u3 deep enough that both split
            // inequalities hold with a full unit of slack.
            const Rational T = 8;
            Rational u2, u3, u4, u5;
            if (from == 3 && to == 3) {
                u3 = -T;
                u4 = s * u3 - 1;
                u5 = r * u3 - 1;
                u2 = -1;
            } else if (from == 3 && to == 4) {
                u4 = -1;
                u3 = (u4 - 1) / s - T;
                u5 = r * u3 - 1;
                u2 = -1;
            } else if (from == 5 && to == 3) {
                u5 = -1;
                u3 = (u5 - 1) / r - T;
                u4 = s * u3 - 1;
                u2 = -1;
            } else {  // from 5 to 4
                u4 = -1;
                u5 = -2;
                u3 = std::min(Rational((u4 - 1) / s), Rational((u5 - 1) / r)) - T;
                u2 = u3;
            }

            std::vector<Rational> w(n - 1);  // active labels of S: 2,3,4,5
            w[S.active_index(2)] = u2;
            w[S.active_index(3)] = u3;
            w[S.active_index(4)] = u4;
            w[S.active_index(5)] = u5;

            // verify: the destination selection and the source side hold exactly
            if (!reg.constraint.holds_exact(w) || reg.source_split.side(w) >= 0)
                throw EmptyRegion("witness from " + std::to_string(from) + " to " +
                                  std::to_string(to) + " fails its constraints");
            reg.witness_log2 = std::move(w);
            out[slot++] = std::move(reg);
        }
    return out;
}

}  // namespace hetnet
