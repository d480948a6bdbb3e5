#pragma once

#include "hetnet/field.hpp"
#include "hetnet/rational.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace hetnet {

enum class Orientation { In, Out };

/// Cross-section to the flow near equilibrium `node`, at the connection
/// to/from `neighbor`. The coordinate fixed on the section is x_neighbor;
/// the remaining dim-1 coordinates are active, with x_node playing the
/// radial role. The offset h only matters when bridging to the physical
/// flow; it never enters the symbolic algebra and is ignored by comparison.
struct CrossSection {
    int node = 0;
    Orientation orient = Orientation::In;
    int neighbor = 0;
    int dim = 0;
    double offset = 0.1;

    std::vector<int> active_labels() const;
    int active_index(int label) const;  // position of a label in active_labels()
    int radial_label() const { return node; }

    bool operator==(const CrossSection& o) const {
        return node == o.node && orient == o.orient && neighbor == o.neighbor && dim == o.dim;
    }
};

std::string to_string(const CrossSection& s);

/// H_i^{out,j} and H_j^{in,i} are freely identified (identity global maps):
/// shared coordinates match up and the radial x_i on the source corresponds
/// to x_j on the target.
bool sections_identified(const CrossSection& from, const CrossSection& to);

struct SectionMismatch : std::runtime_error {
    SectionMismatch(const CrossSection& got, const CrossSection& want);
};
struct NonPositiveExpanding : std::runtime_error {
    NonPositiveExpanding() : std::runtime_error("expanding eigenvalue must be positive") {}
};
struct NonPositiveInput : std::runtime_error {
    NonPositiveInput() : std::runtime_error("monomial maps are defined on positive inputs only") {}
};

/// Monomial map between cross-sections: output_k = prod_l input_l^(E[k][l]),
/// rows indexed by codomain active coordinates, columns by domain active
/// coordinates. Composition is exact matrix multiplication in log space.
struct MonomialMap {
    CrossSection domain;
    CrossSection codomain;
    RatMatrix E;

    static MonomialMap identity(const CrossSection& s);

    /// Pure relabeling realizing the identification of `from` with `to`.
    static MonomialMap identification(const CrossSection& from, const CrossSection& to);

    const Rational& exponent(int out_label, int in_label) const;
};

/// Local map phi_{j i k} near xi_i from the linearized flow: everything is a
/// power of the outgoing coordinate x_k, with exponents -lambda_m / e_ik.
MonomialMap local_map(const NodeSpectrum& eq, int from, int to);
inline MonomialMap local_map(const EquilibriumData& eq, int from, int to) {
    return local_map(eq.spectrum(), from, to);
}

/// g then f composition order: compose({f1, f2, f3}) = f3 . f2 . f1 (apply
/// left to right). Sections are auto-identified across connections.
MonomialMap compose(const std::vector<MonomialMap>& maps);
MonomialMap compose(const MonomialMap& second, const MonomialMap& first);

/// Re-anchor codomain onto the (identified) domain so the map becomes a true
/// endomorphism; no-op when the sections already match.
MonomialMap close_loop(const MonomialMap& m);

/// n-th iterate (exponent matrix power), n >= 1.
MonomialMap iterate(const MonomialMap& m, unsigned long n);

/// Exact functional inverse (exponent matrix inverse).
MonomialMap inverse(const MonomialMap& m);

/// Evaluate at strictly positive inputs, ordered like domain.active_labels().
std::vector<double> evaluate(const MonomialMap& m, const std::vector<double>& x);

/// Same map acting on logarithms: u' = E u. Exact on rational log-points,
/// which is how membership oracles stay in exact arithmetic.
std::vector<double> evaluate_log(const MonomialMap& m, const std::vector<double>& u);
std::vector<Rational> evaluate_log(const MonomialMap& m, const std::vector<Rational>& u);

/// Exact evaluation when every exponent is an integer.
std::vector<Rational> evaluate_exact(const MonomialMap& m, const std::vector<Rational>& x);
bool has_integer_exponents(const MonomialMap& m);

/// Projection onto the non-radial ("relevant") coordinates. Asserts the
/// radial column does not feed any surviving row, which holds for every map
/// composed from local maps.
struct RelevantBlock {
    std::vector<int> row_labels;
    std::vector<int> col_labels;
    RatMatrix E;
};
RelevantBlock relevant_block(const MonomialMap& m);

// Lossless text round-trip.
std::string serialize(const MonomialMap& m);
MonomialMap deserialize_map(const std::string& text);

}  // namespace hetnet
