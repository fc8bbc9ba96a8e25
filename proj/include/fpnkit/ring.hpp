#ifndef FPNKIT_RING_HPP
#define FPNKIT_RING_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fpnkit {

enum class RingKind { Integers, Modular, Unitification, SquareZero };
enum class FieldKind { F2, Rationals };

/// Identity of one of the supported coefficient rings.  Two elements may be
/// combined only when their RingId compare equal.
struct RingId {
    RingKind kind = RingKind::Integers;
    mpz_class modulus = 0;            // Modular only, >= 2
    FieldKind field = FieldKind::F2;  // SquareZero only

    static RingId integers() { return {RingKind::Integers, 0, FieldKind::F2}; }
    static RingId modular(const mpz_class& n);
    static RingId unitification() { return {RingKind::Unitification, 0, FieldKind::F2}; }
    static RingId square_zero(FieldKind f = FieldKind::F2) {
        return {RingKind::SquareZero, 0, f};
    }

    bool operator==(const RingId& o) const {
        return kind == o.kind && modulus == o.modulus &&
               (kind != RingKind::SquareZero || field == o.field);
    }
    bool operator!=(const RingId& o) const { return !(*this == o); }

    bool windowed() const {
        return kind == RingKind::Unitification || kind == RingKind::SquareZero;
    }
};

std::string ring_token(const RingId& id);
RingId parse_ring_token(const std::string& tok);

/// Element (m, a) of Z (+) (+)_{i>=1} Z/2Z.  The support is kept sorted and
/// duplicate-free so structural equality is semantic equality.
struct UElem {
    mpz_class m;
    std::vector<int> supp;  // strictly increasing indices >= 1

    bool operator==(const UElem& o) const { return m == o.m && supp == o.supp; }
};

/// Element c0 + sum c_i x_i of k[x1,x2,...]/(x_i x_j).  Stored coefficients
/// are nonzero; for F2 they are kept in {0,1} as rationals.
struct SqElem {
    mpq_class c0;
    std::vector<std::pair<int, mpq_class>> coeffs;  // sorted by index, nonzero values

    bool operator==(const SqElem& o) const { return c0 == o.c0 && coeffs == o.coeffs; }
};

/// A value of one of the supported rings together with its ring identity.
struct Elem {
    RingId ring;
    std::variant<mpz_class, UElem, SqElem> v;

    bool operator==(const Elem& o) const;
    bool operator!=(const Elem& o) const { return !(*this == o); }
};

// Constructors.
Elem integer_elem(const mpz_class& n);
Elem modular_elem(const RingId& ring, const mpz_class& n);
Elem u_elem(const mpz_class& m, std::vector<int> supp);
Elem sq_elem(const RingId& ring, const mpq_class& c0,
             std::vector<std::pair<int, mpq_class>> coeffs);
Elem sq_var(const RingId& ring, int index);  // the element x_index
Elem zero(const RingId& ring);
Elem one(const RingId& ring);
Elem from_int(const RingId& ring, long n);

// Arithmetic.  Operands must carry equal RingId.
Elem add(const Elem& x, const Elem& y);
Elem neg(const Elem& x);
Elem sub(const Elem& x, const Elem& y);
Elem mul(const Elem& x, const Elem& y);
bool is_zero(const Elem& x);
bool is_one(const Elem& x);

/// Decides invertibility in every supported ring and returns the inverse
/// when one exists.
std::optional<Elem> inverse(const Elem& x);
bool is_unit(const Elem& x);

// Support-set helpers shared by the linear solvers.
std::vector<int> supp_xor(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> supp_and(const std::vector<int>& a, const std::vector<int>& b);

/// Largest variable/support index occurring in x (0 when none).
int max_support_index(const Elem& x);

// Textual element syntax:
//   Integers        -12
//   Modular         3 mod 4
//   Unitification   (3; 1,2)    (support may be empty: "(3; )")
//   SquareZero      1/2 + 3*x1 + x4   (F2: 1 + x1 + x4)
std::string print_elem(const Elem& x);
Elem parse_elem(const RingId& ring, const std::string& text);

}  // namespace fpnkit

#endif
