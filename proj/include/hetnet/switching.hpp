#pragma once

#include "hetnet/constraints.hpp"
#include "hetnet/cusp.hpp"
#include "hetnet/field.hpp"
#include "hetnet/monomial.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hetnet {

enum class PathStatus { Realized, NotRealized, Degenerate, Unknown };
std::string to_string(PathStatus s);

/// Verdicts for the four paths through a common connection [xi_1 -> xi_2],
/// in the order a12b, a12beta, alpha12b, alpha12beta.
struct PathVerdict {
    PathStatus a12b = PathStatus::Unknown;
    PathStatus a12beta = PathStatus::Unknown;
    PathStatus alpha12b = PathStatus::Unknown;
    PathStatus alpha12beta = PathStatus::Unknown;

    std::array<std::pair<std::string, PathStatus>, 4> items() const {
        return {{{"a12b", a12b},
                 {"a12beta", a12beta},
                 {"alpha12b", alpha12b},
                 {"alpha12beta", alpha12beta}}};
    }
    int missing_count() const;
};

enum class PsiKind { Identity, GeneralLinear };

/// 2x2 block of the global map psi_12 on the plane of Assumption 1.
struct Kappa {
    double k11 = 1, k12 = 0, k21 = 0, k22 = 1;
    bool generic() const { return k11 * k12 * k21 * k22 != 0; }
};

struct Assumption1Violated : std::runtime_error {
    Assumption1Violated() : std::runtime_error("Assumption 1 does not hold for this config") {}
};

/// Two cycles sharing [xi_1 -> xi_2]: incoming directions alpha/a at xi_1,
/// outgoing beta/b at xi_2, with the eigenvalue magnitudes that control the
/// cusp geometry. For GeneralLinear psi the user declares (via
/// `planes_decouple`) that the remaining directions decouple; without that
/// declaration no classification is attempted.
struct CommonConnectionConfig {
    int node1 = 1, node2 = 2;
    int alpha = 0, a = 0;  // incoming axes at xi_1 (alpha != a)
    int beta = 0, b = 0;   // outgoing axes at xi_2 (beta != b)
    Rational c1alpha{1}, c1a{1};  // contracting magnitudes at xi_1
    Rational e2beta{1}, e2b{1};   // expanding magnitudes at xi_2
    PsiKind psi = PsiKind::Identity;
    Kappa kappa{};
    bool planes_decouple = true;

    void validate() const;
};

bool assumption1_check(const CommonConnectionConfig& cfg);

/// Symbolic path classification under Assumption 1 (the authoritative
/// verdict; grids are evidence only). Identity psi: the eigenvalue-ratio
/// comparison, one of a12beta / alpha12b missing. GeneralLinear psi: the
/// thin/thick table, any of the four may be missing.
PathVerdict classify_paths(const CommonConnectionConfig& cfg);

/// Grid-sampled cross-check of classify_paths: push cusp samples through
/// psi and test the outgoing regions. Sign flips are quotiented out by the
/// ambient symmetry (absolute values).
PathVerdict classify_paths_grid(const CommonConnectionConfig& cfg, double eps = 1e-2,
                                int grid = 200);

// ---------------------------------------------------------------------------
// Brute-force shadowing on a concrete network
// ---------------------------------------------------------------------------

struct GridSpec {
    int per_axis = 64;
    double lo = 1e-4;  // smallest sampled coordinate on the entry section
    double hi = 0.9;   // largest (log-spaced in between)
};

struct ShadowResult {
    bool found = false;
    std::vector<double> witness;      // coordinates on the entry section, domain order
    std::vector<int> grid_index;      // deterministic: first surviving point in scan order
    GridSpec grid;
    long points_checked = 0;
};

/// Push every grid point of the entry cross-section through the walk's local
/// maps, checking the outgoing-direction constraint at every node. Emptiness
/// on the grid is evidence, not proof.
ShadowResult verify_shadowing(const Network& net, const std::vector<int>& path,
                              const GridSpec& grid = {});

/// Corollary-style classification when [xi_1 -> xi_2] is replaced by a chain
/// xi_1 -> ... -> xi_2 (identity global maps): the interior maps are folded
/// into the transported cusp before the endpoint comparison.
PathVerdict sequence_corollary_check(const Network& net, const std::vector<int>& chain,
                                     int alpha, int a, int beta, int b);

// ---------------------------------------------------------------------------
// House network
// ---------------------------------------------------------------------------

struct EmptyRegion : std::runtime_error {
    explicit EmptyRegion(const std::string& what) : std::runtime_error(what) {}
};

/// One of the four switching regions in H_2^{in,1} of the House network:
/// points coming from `from` (3 or 5) and going to `to` (3 or 4).
struct HouseRegion {
    int from = 0, to = 0;
    DomainConstraint constraint;          // destination selection on H_2^{in,1}
    MonomialInequality source_split;      // side of the incoming split (satisfied)
    std::vector<Rational> witness_log2;   // log2 coordinates, section order
    std::vector<double> witness() const;  // the actual point
};

/// Lemma-style sampler: a verified witness for each of (3->3, 3->4, 5->3,
/// 5->4) through the common connection. Throws EmptyRegion if verification
/// fails (an eigenvalue sign error in the supplied network).
std::array<HouseRegion, 4> house_regions(const Network& net);

}  // namespace hetnet
