#ifndef FPNKIT_IDEALS_HPP
#define FPNKIT_IDEALS_HPP

#include <string>
#include <vector>

#include "fpnkit/modules.hpp"

namespace fpnkit {

/// Finitely generated ideal of the unitification ring Z (+) (+)Z/2Z.
/// Normalization drops zero and duplicate generators.
struct IdealFG {
    std::vector<Elem> generators;
};

IdealFG make_ideal(std::vector<Elem> generators);
IdealFG parse_ideal(const std::string& literal);  // <(m; s,...), ...>
std::string print_ideal(const IdealFG& ideal);

struct MembershipResult {
    bool member = false;
    std::vector<Elem> coefficients;  // witness: x = sum gen_i * coeff_i
    std::string obstruction;         // set when not a member
};

/// Exact ideal-membership decision: the integer parts give a linear
/// Diophantine condition and the Z/2Z parts a finite F2 system coupled
/// through coefficient parities.
MembershipResult ideal_membership(const IdealFG& ideal, const Elem& x, int bound = 0);

/// Principal generator (d, c) with <(d, c)> equal to the input ideal; d is
/// the positive gcd of the integer parts.
Elem bezout_reduce(const IdealFG& ideal);

/// Splitting data for the projective principal ideal (m,a)R, m odd: the
/// section sends (m,a) to (1,a) and the composite idempotent is (1,a).
struct SplitWitness {
    Elem generator;      // (m, a)
    Elem section_image;  // (1, a)
    Elem idempotent;     // e with e*e = e and eR isomorphic to (m,a)R
};

SplitWitness principal_split(const mpz_class& m, const std::vector<int>& supp);

struct KernelGrowthReport {
    std::vector<std::pair<int, int>> counts;  // (window, minimal generator count)
    bool growing = false;
};

/// Window-restricted generator counts of ker(R -> (m2,a)R) for even m2; the
/// count at window B equals |[1..B] \ supp(a)| and strict growth witnesses
/// that the kernel is not finitely generated.
KernelGrowthReport kernel_growth_witness(const mpz_class& m2, const std::vector<int>& supp,
                                         const std::vector<int>& windows);

struct NonSplitReport {
    bool nonsplit = false;
    std::string obstruction;
};

/// Decides whether the inclusion (m^2,a)R -> (m,a)R splits for odd |m| > 1.
/// A section is pinned down by the image of the generator; the identity
/// condition projects to m^2 = m^3 * n over the integers, which fails.
NonSplitReport nonsplit_extension_check(const mpz_class& m, const std::vector<int>& supp);

// Built-in module presentations over the unitification ring.

/// The principal ideal uR presented as R / ann(u), with the annihilator
/// computed inside the window.
Presentation principal_ideal_module(const Elem& u, int window, std::string label = "");
/// The cokernel C = (m,a)R / (m^2,a)R as a cyclic module R / J with
/// J = ((m,a)) + ann((m,a)).
Presentation quotient_c_module(const mpz_class& m, const std::vector<int>& supp,
                               int window);

}  // namespace fpnkit

#endif
