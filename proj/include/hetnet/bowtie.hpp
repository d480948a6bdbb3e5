#pragma once

#include "hetnet/constraints.hpp"
#include "hetnet/field.hpp"
#include "hetnet/monomial.hpp"
#include "hetnet/switching.hpp"

#include <array>
#include <random>
#include <string>

namespace hetnet {

struct SignError : std::runtime_error {
    explicit SignError(const std::string& what) : std::runtime_error(what) {}
};
struct AssumptionViolation : std::runtime_error {
    AssumptionViolation() : std::runtime_error("the Bowtie analysis assumes e23 > e24") {}
};
struct NotInE1 : std::runtime_error {
    NotInE1() : std::runtime_error("point does not take even one turn (not in E_1)") {}
};

enum class Cycle { L, R };

/// The twenty eigenvalue magnitudes of the Bowtie network, named e_jk / c_jk
/// for the expanding / contracting eigenvalue at xi_j in direction k.
struct BowtieTable {
    Rational e12{1}, c13{1}, c14{1}, c15{1};  // at xi_1
    Rational c21{1}, e23{1}, e24{1}, c25{1};  // at xi_2
    Rational e31{1}, c32{1}, c34{1}, c35{1};  // at xi_3
    Rational c41{1}, c42{1}, c43{1}, e45{1};  // at xi_4
    Rational c51{1}, e52{1}, c53{1}, c54{1};  // at xi_5

    /// Committed example table with delta < 0 and delta~ < 0 (both cycles
    /// lose points to the other in finite time).
    static BowtieTable preset();
    static BowtieTable from_network(const Network& net);
    static BowtieTable random(std::mt19937& rng);

    SimplexField to_field() const;
    Network to_network() const;
};

/// The section-4 parameter set. Tilded quantities concern the R-cycle. Note
/// the paper reuses the letter alpha for a node label elsewhere; here alpha
/// is always the g_RL exponent. A few raw magnitudes ride along because the
/// downstream thresholds need them.
struct BowtieParameters {
    Rational rho, rho_t;      // rho~ = rho_t etc.
    Rational nu, nu_t;
    Rational mu, mu_t;
    Rational delta, delta_t;
    Rational alpha, beta;
    Rational e23, e24, c21, c25;
    bool degenerate_expansion = false;  // e23 == e24: boundary of the paper's assumption
};

BowtieParameters compute_parameters(const BowtieTable& t);

/// s_n = (e_opp/e_own) rho^n - nu sum_{i=0}^{n-1} rho^i (tilded for R).
/// Membership in E_{n+1} compares against s_n; s_0 = e_opp/e_own.
Rational turn_exponent(const BowtieParameters& p, Cycle cycle, unsigned n);

/// Point on the cycle's entry section in exact log2 coordinates (x = 2^u,
/// u < 0): relevant coordinates (u3, u4, u5) for R, (u1, u3, u4) for L.
struct TurnSetQuery {
    Cycle cycle = Cycle::R;
    unsigned n = 1;
    std::array<Rational, 3> u{};
};

/// x in E_n (at least n turns around the cycle), by the closed form.
bool membership(const TurnSetQuery& q, const BowtieParameters& p);

struct MaxTurns {
    bool unbounded = false;
    unsigned turns = 0;

    bool operator==(const MaxTurns&) const = default;
};

/// Exact number of consecutive turns: the largest n with x in E_n. Unbounded
/// in the delta >= 0 regime where E_1 = E_2 = ...
MaxTurns max_turns(const std::array<Rational, 3>& u, const BowtieParameters& p, Cycle cycle);

enum class Transition { RLR, RLLplus, Degenerate };
std::string to_string(Transition t);

/// For a point on H_1^{out,2} \ E~_1 (precondition: x4 > x3^(e24/e23)):
/// does the L-visit return immediately (RLR) or stay for a turn (RLL...)?
Transition classify_transition(const std::array<Rational, 3>& u, const BowtieParameters& p);

/// A point of H_1^{out,2} \ E~_1 whose g_RL-image takes at least n turns
/// around the L-cycle, at x4 = x5 = 1/2 and x3 one factor 2 below the exact
/// threshold x4^{A_n} x5^{B_n}. Verified internally through g_RL.
std::array<Rational, 3> witness_for_L_turns(unsigned n, const BowtieParameters& p);

/// Witness for one of the four (entered node 2 from `source`) x (leaves
/// toward `destination`) combinations, produced on H_2^{out,3} and
/// transported once around the R-cycle onto H_2^{in,1}.
struct CycleSwitchWitness {
    int source = 0;       // 1 or 5
    int destination = 0;  // 3 or 4
    std::vector<Rational> witness_log2;  // on H_2^{out,3}, active order
    std::vector<Rational> arrival_log2;  // its image on H_2^{in,1}
};

/// The switching-along-the-cycle lemma, constructively: all four combinations
/// are witnessed after one trip around the R-cycle. Needs delta~ < 0 for the
/// switching (to xi_4) witnesses; throws EmptyRegion otherwise.
std::array<CycleSwitchWitness, 4> switching_along_cycle_check(const BowtieTable& t);

/// Return and transition maps as monomial maps on full section coordinates:
/// h_R on H_2^{in,1}, h_L on H_2^{in,5}, g_RL between them and g_LR back.
struct BowtieMaps {
    MonomialMap h_R, h_L, g_RL, g_LR;
};
BowtieMaps build_bowtie_maps(const Network& net);

/// The first k letters of the symbolic L/R visit word of a point given in
/// exact log2 coordinates on H_2^{in,1} (active order: x2, x3, x4, x5).
std::string predict_word(const Network& net, std::vector<Rational> u, int k);

}  // namespace hetnet
