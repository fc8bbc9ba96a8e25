#ifndef FPNKIT_TORSION_HPP
#define FPNKIT_TORSION_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fpnkit/modules.hpp"

namespace fpnkit {

/// A declared map inside a module universe, given by its matrix on
/// generators (to.generators x from.generators).
struct DeclaredMap {
    int from = 0, to = 0;  // indices into ModuleUniverse::modules
    RingMatrix matrix;
    enum class Kind { Inclusion, Surjection } kind = Kind::Inclusion;
    std::string label;
};

/// Finite universe of modules over one ring, with declared inclusions and
/// surjections used for the closure checks.
struct ModuleUniverse {
    RingId ring;
    std::vector<Presentation> modules;
    std::vector<DeclaredMap> maps;
};

using ModulePredicate = std::function<bool(const Presentation&)>;

ModulePredicate torsion_predicate();       // over Z: the group is finite
ModulePredicate torsion_free_predicate();  // over Z: no torsion factors

struct TorsionCheckFailure {
    std::string check;
    std::string detail;
};

struct TorsionPairReport {
    int orthogonality_pairs = 0;
    int maximality_checks = 0;
    int closure_checks = 0;
    int sum_checks = 0;
    std::vector<TorsionCheckFailure> failures;

    bool pass() const { return failures.empty(); }
};

/// Verifies the torsion-pair axioms for (T, F) on the finite universe:
/// Hom(T, F) = 0 for classified members, maximality of both classes against
/// the Hom-orthogonality, closure of T under declared quotients and of F
/// under declared submodules, and closure of both classes under finite
/// direct sums drawn from the universe.
TorsionPairReport check_torsion_pair(const ModuleUniverse& universe,
                                     const ModulePredicate& in_t,
                                     const ModulePredicate& in_f,
                                     std::optional<int> window = std::nullopt);

/// Exact torsion subgroup of a finitely presented abelian group, with the
/// inclusion t(M) -> M and the projection M ->> M/t(M) on generators.
struct TorsionDecomposition {
    Presentation torsion_part;
    RingMatrix inclusion;  // p.generators x torsion_part.generators
    Presentation free_quotient;
    RingMatrix projection;  // free_quotient.generators x p.generators
};

TorsionDecomposition torsion_subgroup(const Presentation& p);

/// Per-member vanishing of Ext^1(F, m) / Tor_1(F, m) across a test family.
std::vector<bool> fpn_injective_test(const Presentation& m,
                                      const std::vector<Presentation>& family,
                                      std::optional<int> window = std::nullopt);
std::vector<bool> fpn_flat_test(const Presentation& m,
                                   const std::vector<Presentation>& family,
                                   std::optional<int> window = std::nullopt);

struct DualityReport {
    int pairs = 0;
    std::vector<std::string> counterexamples;

    bool pass() const { return counterexamples.empty(); }
};

/// Sweeps ordered pairs (F, M) of modules over Z/n and compares vanishing of
/// Tor_1(F, M) with vanishing of Ext^1(F, M^+), M^+ the character dual.
DualityReport duality_sweep(const std::vector<Presentation>& modules);

}  // namespace fpnkit

#endif
