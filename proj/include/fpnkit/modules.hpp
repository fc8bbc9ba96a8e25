#ifndef FPNKIT_MODULES_HPP
#define FPNKIT_MODULES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fpnkit/matrix.hpp"

namespace fpnkit {

/// A finitely presented module, the cokernel of the relations map
/// R^cols -> R^generators.  A free module has an empty relations matrix and
/// the zero module has no generators.
struct Presentation {
    RingId ring;
    int generators = 0;
    RingMatrix relations;  // generators x (number of relation columns)
    std::string label;
};

Presentation make_presentation(const RingId& ring, int generators, RingMatrix relations,
                               std::string label = "");
Presentation free_presentation(const RingId& ring, int rank, std::string label = "");
/// Cyclic-sum module R/(d1) (+) ... (+) R/(dk) given by a diagonal relations
/// matrix.
Presentation diagonal_presentation(const RingId& ring, const std::vector<mpz_class>& diag,
                                   std::string label = "");
Presentation direct_sum(const Presentation& p, const Presentation& q);

/// Invariant factors of the underlying abelian group; defined over Integers
/// and Modular rings.
struct AbGroupValue {
    int free_rank = 0;
    std::vector<mpz_class> torsion;  // divisibility chain, entries >= 2

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const AbGroupValue& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
};

std::string describe(const AbGroupValue& g);
AbGroupValue abelian_invariants(const Presentation& p);

/// Canonical row-span representative of the relation lattice over Modular
/// rings; equal forms with equal generator counts mean isomorphic modules.
RingMatrix module_canonical_form(const Presentation& p);

struct Resolution {
    std::vector<RingMatrix> differentials;  // d1, d2, ..., d_depth
    std::optional<int> window;
};

/// Presentation of the first syzygy ker(R^g ->> M), generated by the columns
/// of the relations map.
Presentation syzygy(const Presentation& p, std::optional<int> window = std::nullopt);
Resolution resolve(const Presentation& p, int depth,
                   std::optional<int> window = std::nullopt);

enum class FpVerdict { FPnVerified, SyzygyGrowth, Inconclusive };

struct FpCertificate {
    int level_verified = 0;
    // (stage, window) -> minimal generator count of the stage-th free module;
    // window 0 is used over non-windowed rings.
    std::map<std::pair<int, int>, int> stage_counts;
    FpVerdict verdict = FpVerdict::Inconclusive;
    int growth_stage = -1;
    std::vector<int> growth_counts;
};

FpCertificate classify_fp(const Presentation& p, int n, const std::vector<int>& windows);
/// Same classification for a submodule of a free module given by generator
/// columns (e.g. an ideal); here even the first presentation stage is
/// recomputed per window.
FpCertificate classify_fp_submodule(const RingMatrix& generators, int n,
                                    const std::vector<int>& windows);

/// Hom(M, N): a hom is an h x g matrix X with X*rel(P) factoring through
/// rel(Q), modulo the homs factoring through the relations of Q.
struct HomDescription {
    AbGroupValue group;  // meaningful over Integers/Modular only
    std::vector<RingMatrix> representatives;  // cocycle generators
    std::optional<RingMatrix> nonzero_witness;
    bool windowed = false;
    std::optional<int> window;

    bool is_zero() const {
        return windowed ? !nonzero_witness.has_value() : group.is_zero();
    }
};

HomDescription hom_module(const Presentation& p, const Presentation& q,
                          std::optional<int> window = std::nullopt);

/// Ext^i / Tor_i value.  Over Integers and Modular rings the full abelian
/// invariants are computed; over windowed rings only (non)vanishing within
/// the window, with a witness when nonzero.
struct HomologyValue {
    bool windowed = false;
    AbGroupValue group;
    std::optional<std::vector<Elem>> witness;  // windowed nonzero witness
    std::optional<int> window;

    bool is_zero() const { return windowed ? !witness.has_value() : group.is_zero(); }
};

HomologyValue ext_group(const Presentation& p, const Presentation& q, int i,
                        std::optional<int> window = std::nullopt);
HomologyValue tor_group(const Presentation& p, const Presentation& q, int i,
                        std::optional<int> window = std::nullopt);

/// Splitting test for the surjection R^g ->> M; the witness is the matrix of
/// the induced idempotent section composite on R^g.
struct ProjectivityResult {
    bool projective = false;
    std::optional<RingMatrix> section_witness;
};

ProjectivityResult is_projective(const Presentation& p,
                                 std::optional<int> window = std::nullopt);
bool pd_at_most_one(const Presentation& p, std::optional<int> window = std::nullopt);

/// Character dual Hom(M, Q/Z) of a finite module over Modular(n); invariant
/// factors are preserved.
Presentation character_dual(const Presentation& p);

}  // namespace fpnkit

#endif
