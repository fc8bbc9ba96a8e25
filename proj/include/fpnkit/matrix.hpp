#ifndef FPNKIT_MATRIX_HPP
#define FPNKIT_MATRIX_HPP

#include <iosfwd>
#include <optional>
#include <vector>

#include "fpnkit/ring.hpp"

namespace fpnkit {

/// Dense rectangular matrix over one of the supported rings.  Zero-row and
/// zero-column matrices are legal and show up constantly as resolutions
/// terminate.
struct RingMatrix {
    RingId ring;
    int rows = 0, cols = 0;
    std::vector<Elem> entries;  // row-major, rows*cols

    RingMatrix() = default;
    RingMatrix(const RingId& r, int nr, int nc);

    Elem& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
    const Elem& at(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * cols + j];
    }

    bool operator==(const RingMatrix& o) const;
};

RingMatrix identity_matrix(const RingId& ring, int n);
RingMatrix from_rows(const RingId& ring, const std::vector<std::vector<long>>& rows);
RingMatrix from_columns(const RingId& ring, const std::vector<std::vector<Elem>>& cols);
RingMatrix transpose(const RingMatrix& a);
RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b);
std::vector<Elem> mat_apply(const RingMatrix& a, const std::vector<Elem>& v);
bool is_zero_matrix(const RingMatrix& a);
/// Horizontal concatenation [a | b].
RingMatrix hconcat(const RingMatrix& a, const RingMatrix& b);
int max_support_index(const RingMatrix& a);

/// U*A*V = D with U, V unimodular and D diagonal with the divisibility chain
/// d_i | d_{i+1}; diagonal entries normalized nonnegative.
struct SmithDecomposition {
    RingMatrix U, D, V;
    std::vector<mpz_class> invariant_factors;  // full diagonal, nonzeros first
};

SmithDecomposition smith_normal_form(const RingMatrix& a);
mpz_class det(const RingMatrix& a);  // Integers only

/// Canonical representative of the row span of a matrix over Z/n: two
/// matrices have equal row spans iff equal Howell forms.
RingMatrix howell_form(const RingMatrix& a);

struct SolutionSet {
    std::optional<std::vector<Elem>> particular;
    std::vector<std::vector<Elem>> kernel_generators;
    std::optional<int> window;
};

/// Solves A x = b exactly.  A window bound is required over the
/// Unitification and SquareZero rings, where the reported kernel generators
/// generate the kernel restricted to supports inside [1..window].
SolutionSet solve_linear(const RingMatrix& a, const std::vector<Elem>& b,
                         std::optional<int> window = std::nullopt);
std::vector<std::vector<Elem>> kernel_basis(const RingMatrix& a,
                                            std::optional<int> window = std::nullopt);

/// Drops generators lying in the span (over the ring, within the window) of
/// the remaining ones.
std::vector<std::vector<Elem>> minimize_generators(const RingId& ring,
                                                   std::vector<std::vector<Elem>> gens,
                                                   std::optional<int> window);

/// True iff target is an R-linear combination of the given columns; the
/// witness coefficients are returned when it is.
std::optional<std::vector<Elem>> span_membership(const RingId& ring,
                                                 const std::vector<std::vector<Elem>>& cols,
                                                 const std::vector<Elem>& target,
                                                 std::optional<int> window);

// --- integer lattice helpers (used by the homological layer) ---

using ZVec = std::vector<mpz_class>;
using ZMat = std::vector<ZVec>;  // list of column vectors, all the same length

/// A basis of the lattice spanned by the given columns of Z^d.
ZMat lattice_basis(int dim, const ZMat& gens);

/// Invariant factors of the finitely generated abelian group K/I for
/// lattices I <= K <= Z^d given by generators.  Returns (free_rank, torsion
/// factors >= 2 in a divisibility chain).
std::pair<int, std::vector<mpz_class>> lattice_quotient(int dim, const ZMat& k_gens,
                                                        const ZMat& i_gens);

// Matrix text format: first line "<ring> <rows> <cols>", then one entry per
// line in row-major order, in the element syntax of the ring.
std::string emit_matrix(const RingMatrix& a);
RingMatrix parse_matrix(std::istream& in);
RingMatrix parse_matrix(const std::string& text);

}  // namespace fpnkit

#endif
