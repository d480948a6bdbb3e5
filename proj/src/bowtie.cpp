#include "hetnet/bowtie.hpp"

#include <algorithm>

namespace hetnet {

BowtieTable BowtieTable::preset() {
    BowtieTable t;
    t.e12 = 1;  t.c13 = 2;            t.c14 = Rational(1, 10); t.c15 = Rational(1, 10);
    t.c21 = 1;  t.e23 = 1;            t.e24 = Rational(9, 10); t.c25 = 1;
    t.e31 = 1;  t.c32 = 1;            t.c34 = Rational(1, 10); t.c35 = Rational(1, 10);
    t.c41 = Rational(1, 10); t.c42 = 1; t.c43 = Rational(1, 10); t.e45 = 1;
    t.c51 = Rational(1, 10); t.e52 = 1; t.c53 = Rational(1, 10); t.c54 = 2;
    return t;
}

namespace {

// (node, direction, expanding?) for each named magnitude, in struct order
struct Slot {
    Rational BowtieTable::*field;
    int node, dir;
    bool expanding;
};

const Slot kSlots[] = {
    {&BowtieTable::e12, 1, 2, true},  {&BowtieTable::c13, 1, 3, false},
    {&BowtieTable::c14, 1, 4, false}, {&BowtieTable::c15, 1, 5, false},
    {&BowtieTable::c21, 2, 1, false}, {&BowtieTable::e23, 2, 3, true},
    {&BowtieTable::e24, 2, 4, true},  {&BowtieTable::c25, 2, 5, false},
    {&BowtieTable::e31, 3, 1, true},  {&BowtieTable::c32, 3, 2, false},
    {&BowtieTable::c34, 3, 4, false}, {&BowtieTable::c35, 3, 5, false},
    {&BowtieTable::c41, 4, 1, false}, {&BowtieTable::c42, 4, 2, false},
    {&BowtieTable::c43, 4, 3, false}, {&BowtieTable::e45, 4, 5, true},
    {&BowtieTable::c51, 5, 1, false}, {&BowtieTable::e52, 5, 2, true},
    {&BowtieTable::c53, 5, 3, false}, {&BowtieTable::c54, 5, 4, false},
};

}  // namespace

BowtieTable BowtieTable::from_network(const Network& net) {
    if (!(net.graph == bowtie_graph()))
        throw std::invalid_argument("expected the Bowtie wiring on 5 nodes");
    BowtieTable t;
    for (const Slot& s : kSlots) {
        const Rational& lam = net.at(s.node).at(s.dir);
        if (s.expanding ? lam <= 0 : lam >= 0)
            throw SignError("eigenvalue at node " + std::to_string(s.node) + " in direction " +
                            std::to_string(s.dir) + " has the wrong sign");
        t.*(s.field) = s.expanding ? lam : Rational(-lam);
    }
    return t;
}

BowtieTable BowtieTable::random(std::mt19937& rng) {
    std::uniform_int_distribution<int> digit(1, 9);
    BowtieTable t;
    for (const Slot& s : kSlots) t.*(s.field) = Rational(digit(rng), digit(rng));
    if (t.e23 <= t.e24) {
        std::swap(t.e23, t.e24);
        if (t.e23 == t.e24) t.e23 += 1;
    }
    return t;
}

SimplexField BowtieTable::to_field() const {
    RatMatrix a(5, 5);
    for (const Slot& s : kSlots)
        a(s.node - 1, s.dir - 1) = s.expanding ? this->*(s.field) : Rational(-(this->*(s.field)));
    return SimplexField(bowtie_graph(), std::move(a));
}

Network BowtieTable::to_network() const { return Network::from_field(to_field()); }

BowtieParameters compute_parameters(const BowtieTable& t) {
    for (const Slot& s : kSlots)
        if (t.*(s.field) <= 0) throw SignError("all magnitudes must be positive");
    if (t.e23 < t.e24) throw AssumptionViolation();

    BowtieParameters p;
    p.e23 = t.e23;
    p.e24 = t.e24;
    p.c21 = t.c21;
    p.c25 = t.c25;
    p.degenerate_expansion = (t.e23 == t.e24);

    p.rho = t.c42 * t.c54 * t.c25 / (t.e24 * t.e45 * t.e52);
    p.rho_t = t.c32 * t.c13 * t.c21 / (t.e23 * t.e31 * t.e12);
    p.nu = -t.e23 / t.e24 + t.c25 * t.c43 / (t.e24 * t.e45) +
           t.c53 * t.c42 * t.c25 / (t.e45 * t.e24 * t.e52);
    p.nu_t = -t.e24 / t.e23 + t.c21 * t.c34 / (t.e23 * t.e31) +
             t.c14 * t.c32 * t.c21 / (t.e31 * t.e23 * t.e12);
    p.mu = t.c21 / t.e24 + t.c25 * t.c41 / (t.e24 * t.e45) +
           t.c51 * t.c42 * t.c25 / (t.e45 * t.e24 * t.e52);
    p.mu_t = t.c25 / t.e23 + t.c21 * t.c35 / (t.e23 * t.e31) +
             t.c15 * t.c32 * t.c21 / (t.e31 * t.e23 * t.e12);
    p.delta = t.c43 / t.e45 + t.c53 * t.c42 / (t.e52 * t.e45) -
              t.e23 * t.c54 * t.c42 / (t.e52 * t.e45 * t.e24);
    p.delta_t = t.c34 / t.e31 + t.c14 * t.c32 / (t.e12 * t.e31) -
                t.e24 * t.c13 * t.c32 / (t.e12 * t.e31 * t.e23);
    p.alpha = t.c41 / t.e45 + t.c42 * t.c51 / (t.e45 * t.e52);
    p.beta = t.c43 / t.e45 + t.c42 * t.c53 / (t.e45 * t.e52);

    // the section-4 identities are theorems of the formulas above; a failure
    // here means the formulas were mistyped
    const Rational lhs_r = (p.e24 / p.e23) * (p.rho_t - 1) - p.nu_t;
    const Rational rhs_r = -(p.c21 / p.e23) * p.delta_t;
    const Rational lhs_l = (p.e23 / p.e24) * (p.rho - 1) - p.nu;
    const Rational rhs_l = -(p.c25 / p.e24) * p.delta;
    const Rational beta_id = p.delta + (p.e23 / p.c25) * p.rho;
    if (lhs_r != rhs_r || lhs_l != rhs_l || p.beta != beta_id)
        throw std::logic_error("Bowtie parameter identities violated");
    if (p.alpha <= 0 || p.beta <= 0)
        throw std::logic_error("alpha, beta must be positive for positive magnitudes");
    return p;
}

Rational turn_exponent(const BowtieParameters& p, Cycle cycle, unsigned n) {
    const Rational& rho = cycle == Cycle::R ? p.rho_t : p.rho;
    const Rational& nu = cycle == Cycle::R ? p.nu_t : p.nu;
    Rational s = cycle == Cycle::R ? Rational(p.e24 / p.e23) : Rational(p.e23 / p.e24);
    for (unsigned i = 0; i < n; ++i) s = rho * s - nu;  // s_{k+1} = rho s_k - nu
    return s;
}

bool membership(const TurnSetQuery& q, const BowtieParameters& p) {
    if (q.n < 1) throw std::invalid_argument("turn-set index must be >= 1");
    for (const Rational& ui : q.u)
        if (ui >= 0) throw NonPositiveInput();
    const Rational s = turn_exponent(p, q.cycle, q.n - 1);
    // R: x4 < x3^{s_{n-1}}; L: x3 < x4^{s_{n-1}} (u = log2 x, all negative)
    const Rational& lhs = q.u[1];
    const Rational& base = q.cycle == Cycle::R ? q.u[0] : q.u[2];
    return lhs < s * base;
}

MaxTurns max_turns(const std::array<Rational, 3>& u, const BowtieParameters& p, Cycle cycle) {
    if (!membership({cycle, 1, u}, p)) throw NotInE1();
    const Rational& d = cycle == Cycle::R ? p.delta_t : p.delta;
    if (d >= 0) return {true, 0};  // E_1 = E_2 = ... (KS-like regime)
    const Rational& rho = cycle == Cycle::R ? p.rho_t : p.rho;
    const Rational& nu = cycle == Cycle::R ? p.nu_t : p.nu;
    const Rational ratio = cycle == Cycle::R ? u[1] / u[0] : u[1] / u[2];
    Rational s = cycle == Cycle::R ? Rational(p.e24 / p.e23) : Rational(p.e23 / p.e24);  // s_0
    unsigned n = 0;
    while (s < ratio) {  // member of E_{n+1} iff s_n < u-ratio (strict)
        ++n;
        s = rho * s - nu;
        if (n > 1000000) throw std::logic_error("turn exponents failed to overtake the point");
    }
    return {false, n};
}

std::string to_string(Transition t) {
    switch (t) {
        case Transition::RLR: return "RLR";
        case Transition::RLLplus: return "RLL+";
        case Transition::Degenerate: return "degenerate";
    }
    return "?";
}

Transition classify_transition(const std::array<Rational, 3>& u, const BowtieParameters& p) {
    for (const Rational& ui : u)
        if (ui >= 0) throw NonPositiveInput();
    const Rational sigma0 = p.e24 / p.e23;
    if (!(u[1] > sigma0 * u[0]))
        throw std::domain_error("point must lie outside E~_1 (x4 > x3^(e24/e23))");
    const Rational a = (p.e23 / p.e24) * p.rho - p.nu;
    const Rational b = -p.delta;  // = (e23/c25) rho - beta
    const Rational lhs = a * u[1] + b * u[2];
    if (lhs < u[0]) return Transition::RLR;
    if (lhs > u[0]) return Transition::RLLplus;
    return Transition::Degenerate;
}

namespace {

// g_RL on relevant log2 coordinates: (u3,u4,u5) -> (U1,U3,U4)
std::array<Rational, 3> g_rl_log(const std::array<Rational, 3>& u, const BowtieParameters& p) {
    return {p.mu * u[1] + p.alpha * u[2],
            u[0] + p.nu * u[1] + p.beta * u[2],
            p.rho * u[1] + (p.e24 / p.c25) * p.rho * u[2]};
}

}  // namespace

std::array<Rational, 3> witness_for_L_turns(unsigned n, const BowtieParameters& p) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (p.delta >= 0 || p.delta_t >= 0)
        throw std::domain_error("witness construction requires delta < 0 and delta~ < 0");
    Rational sum = 0, pw = 1;  // sum rho^i for i = 0..n, rho^{n+1}
    for (unsigned i = 0; i <= n; ++i) {
        sum += pw;
        pw *= p.rho;
    }
    const Rational core = (p.e23 / p.e24) * pw - p.nu * sum;
    const Rational A = core - p.nu;
    const Rational B = (p.e24 / p.c25) * core - p.beta;
    if (A <= 0 || B <= 0) throw std::logic_error("thresholds A_n, B_n must be positive");
    const std::array<Rational, 3> w{Rational(-A - B - 1), Rational(-1), Rational(-1)};

    // verify: outside E~_1, and the g_RL image takes at least n L-turns
    if (!(w[1] > (p.e24 / p.e23) * w[0])) throw std::logic_error("witness landed inside E~_1");
    if (!membership({Cycle::L, n + 1, g_rl_log(w, p)}, p))
        throw std::logic_error("witness image missed E_{n+1}");
    return w;
}

std::array<CycleSwitchWitness, 4> switching_along_cycle_check(const BowtieTable& t) {
    const Network net = t.to_network();
    const BowtieParameters p = compute_parameters(t);
    const int n = 5;
    const CrossSection out23{2, Orientation::Out, 3, n};  // split by origin (x1 x5-plane)

    // one trip around the R-cycle back to the x3 x4 destination split
    const MonomialMap around =
        compose(path_map(net, {2, 3, 1, 2}), MonomialMap::identity(out23));

    std::array<CycleSwitchWitness, 4> out;
    int slot = 0;
    for (int source : {1, 5})
        for (int destination : {3, 4}) {
            CycleSwitchWitness cw;
            cw.source = source;
            cw.destination = destination;

            const Rational q = t.c25 / t.c21;  // origin split: x5 = x1^q on H_2^{out,3}
            Rational u1, u5, u2;
            if (source == 1) {
                u1 = -8;
                u5 = q * u1 - 1;
                u2 = (2 / t.c21) * u1 - 1;
            } else {
                u5 = -8;
                u1 = (t.c21 / t.c25) * u5 - 1;
                u2 = (2 / t.c25) * u5 - 1;
            }
            // the x3 and x4 rows of the trip depend on x1 only, and the
            // destination comparison collapses to u4 against -delta~ u1
            const Rational bound = -p.delta_t * u1;
            Rational u4;
            if (destination == 3) {
                u4 = std::min(bound, Rational(0)) - 1;
            } else {
                if (bound >= 0)
                    throw EmptyRegion("switching to xi_4 along the R-cycle needs delta~ < 0");
                u4 = bound / 2;
            }

            std::vector<Rational> w(n - 1);
            w[out23.active_index(1)] = u1;
            w[out23.active_index(2)] = u2;
            w[out23.active_index(4)] = u4;
            w[out23.active_index(5)] = u5;

            // verify the point really came from `source`: its preimage under
            // the entry map at xi_2 must lie in the unit cube
            const MonomialMap entry = local_map(net.at(2), source, 3);
            for (const Rational& c : evaluate_log(inverse(entry), w))
                if (c >= 0) throw EmptyRegion("witness is not in the image of the entry map");

            // transport around the cycle and verify the destination split
            const std::vector<Rational> v = evaluate_log(around, w);
            for (const Rational& c : v)
                if (c >= 0) throw EmptyRegion("witness escaped the unit cube along the cycle");
            const CrossSection land = around.codomain;  // H_1^{out,2}
            const Rational lhs = v[land.active_index(4)];
            const Rational rhs = (p.e24 / p.e23) * v[land.active_index(3)];
            if (destination == 3 ? !(lhs < rhs) : !(lhs > rhs))
                throw EmptyRegion("witness arrived on the wrong side of the exit split");

            cw.witness_log2 = std::move(w);
            cw.arrival_log2 = v;
            out[slot++] = std::move(cw);
        }
    return out;
}

BowtieMaps build_bowtie_maps(const Network& net) {
    if (!(net.graph == bowtie_graph()))
        throw std::invalid_argument("expected the Bowtie wiring on 5 nodes");
    BowtieMaps m;
    m.h_R = close_loop(path_map(net, {1, 2, 3, 1, 2}));
    m.h_L = close_loop(path_map(net, {5, 2, 4, 5, 2}));
    const int n = net.graph.n;
    const CrossSection inR{2, Orientation::In, 1, n}, inL{2, Orientation::In, 5, n};
    m.g_RL = compose(MonomialMap::identification({5, Orientation::Out, 2, n}, inL),
                     path_map(net, {1, 2, 4, 5, 2}));
    m.g_LR = compose(MonomialMap::identification({1, Orientation::Out, 2, n}, inR),
                     path_map(net, {5, 2, 3, 1, 2}));
    return m;
}

std::string predict_word(const Network& net, std::vector<Rational> u, int k) {
    const BowtieMaps maps = build_bowtie_maps(net);
    const BowtieParameters p = compute_parameters(BowtieTable::from_network(net));
    const int n = net.graph.n;
    const CrossSection inR{2, Orientation::In, 1, n}, inL{2, Orientation::In, 5, n};
    if (u.size() != static_cast<std::size_t>(n - 1))
        throw std::invalid_argument("point must list all active coordinates of H_2^{in,1}");
    for (const Rational& c : u)
        if (c >= 0) throw NonPositiveInput();

    std::string word;
    Cycle at = Cycle::R;
    while (static_cast<int>(word.size()) < k) {
        if (at == Cycle::R) {
            const Rational lhs = u[inR.active_index(4)];
            const Rational rhs = (p.e24 / p.e23) * u[inR.active_index(3)];
            if (lhs == rhs) throw std::domain_error("point sits on the exit boundary");
            if (lhs < rhs) {  // leaves toward xi_3: an R-visit
                word += 'R';
                u = evaluate_log(maps.h_R, u);
            } else {  // leaves toward xi_4: an L-visit
                word += 'L';
                u = evaluate_log(maps.g_RL, u);
                at = Cycle::L;
            }
        } else {
            const Rational lhs = u[inL.active_index(3)];
            const Rational rhs = (p.e23 / p.e24) * u[inL.active_index(4)];
            if (lhs == rhs) throw std::domain_error("point sits on the exit boundary");
            if (lhs < rhs) {  // leaves toward xi_4: an L-visit
                word += 'L';
                u = evaluate_log(maps.h_L, u);
            } else {
                word += 'R';
                u = evaluate_log(maps.g_LR, u);
                at = Cycle::R;
            }
        }
    }
    return word;
}

}  // namespace hetnet
