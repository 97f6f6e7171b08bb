#pragma once

// Plane curves, their Jacobian ideals and Milnor algebras, singular-scheme data
// and the strong Ziegler comparison.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ziegler/resolution.hpp"

namespace ziegler {

enum class ComponentKind { line, conic, sextic_irreducible, curve };

std::string to_string(ComponentKind k);
/// Inverse of to_string; nullopt for unknown names.
std::optional<ComponentKind> component_kind_from_string(const std::string& s);
/// Degree a component of this kind must have; nullopt for the generic `curve` kind.
std::optional<int> kind_degree(ComponentKind k);

struct Component {
    std::string label;
    ComponentKind kind = ComponentKind::curve;
    Poly poly;
};

struct Curve {
    std::string name;
    Field field;
    std::vector<Component> components;

    int degree() const;
};

/// Throws SchemaError (path "components[i]...") on a component that is zero,
/// inhomogeneous, over another field, or of the wrong degree for its kind.
void validate_curve(const Curve& c);

/// Hilbert profile did not stabilize: the singular locus is not finite.
class NotReduced : public Error {
public:
    explicit NotReduced(std::vector<std::pair<int, long>> profile);
    const std::vector<std::pair<int, long>>& profile() const noexcept { return profile_; }

private:
    std::vector<std::pair<int, long>> profile_;
};

struct AnalysisOptions {
    /// Re-verify the Groebner basis, d∘d = 0 and the Hilbert identity.
    bool check = false;
    /// Memoize Jacobian Groebner bases (in memory, and on disk under ZIEGLER_CACHE_DIR).
    bool cache = false;
    /// Last degree of the Hilbert profile; defaults to regularity + 3.
    std::optional<int> max_degree;
};

/// Product of the components.
Poly curve_polynomial(const Curve& c);

/// Reduced Groebner basis of (f_x, f_y, f_z).
GroebnerBasis jacobian_ideal(const Poly& f, const AnalysisOptions& opts = {});

using HilbertProfile = std::vector<std::pair<int, long>>;

/// (t, dim (S/J)_t) for t = 0..upto.
HilbertProfile hilbert_profile(const GroebnerBasis& J, int upto);

struct MilnorResolution {
    FreeResolution resolution;  // minimal
    BettiTable betti;
    int regularity = 0;
    long tjurina = 0;
    HilbertProfile profile;
};

/// Minimal resolution of S/J for the curve's Jacobian ideal. Throws NotReduced
/// when the Hilbert function is not constant from regularity + 1 on.
MilnorResolution milnor_resolution(const Curve& c, const AnalysisOptions& opts = {});

/// Degrees of a minimal generating set of the Jacobian syzygies of a degree-d
/// curve: j - (d - 1) for every beta_{2,j}, sorted.
std::vector<int> ar_generator_degrees(const BettiTable& B, int d);

struct SingularReport {
    /// Stabilized Hilbert value; absent when the curve is not reduced.
    std::optional<long> tjurina;
    int regularity = 0;
    HilbertProfile hilbert_profile;
    /// k -> dim (J^sat)_k for k = 1, 2, 3; empty if saturation did not stabilize.
    std::map<int, long> saturated_piece_dims;
    /// (t, dim (S/J^sat)_t) over the same range as hilbert_profile.
    HilbertProfile saturated_profile;
    int saturation_rounds = 0;
    bool reduced_ok = false;
};

SingularReport singular_report(const Curve& c, const AnalysisOptions& opts = {});

struct BettiComparison {
    bool equal = true;
    /// First (i, j) in lexicographic order where the tables differ.
    std::optional<BettiTable::Key> first_difference;
    long left = 0;
    long right = 0;
};

BettiComparison compare_betti(const BettiTable& a, const BettiTable& b);

enum class Verdict { StrongZiegler, Inconclusive, NotComparable };
std::string to_string(Verdict v);

struct ZieglerVerdict {
    bool combinatorics_asserted = false;
    bool betti_equal = false;
    Verdict verdict = Verdict::NotComparable;
    BettiComparison comparison;
    /// Numeric consequences of the asserted combinatorics that fail (tau, component degrees).
    std::vector<std::string> assertion_violations;
};

/// Decision from two Betti tables.
ZieglerVerdict ziegler_verdict(const BettiTable& a, const BettiTable& b, bool combinatorics_asserted);
ZieglerVerdict ziegler_verdict(const Curve& a, const Curve& b, bool combinatorics_asserted,
                               const AnalysisOptions& opts = {});
/// As above from finished analyses; also fills assertion_violations when asserted.
ZieglerVerdict ziegler_verdict(const Curve& a, const MilnorResolution& ma, const Curve& b,
                               const MilnorResolution& mb, bool combinatorics_asserted);

/// Sum of local Tjurina numbers. Kinds: node (A1) 1, cusp (A2) 2, tacnode (A3) 3,
/// triple (ordinary triple point, D4) 4. Throws std::invalid_argument otherwise.
long expected_tjurina(const std::map<std::string, long>& counts);

/// Drops every memoized Groebner basis held in memory.
void clear_jacobian_cache();

}  // namespace ziegler
