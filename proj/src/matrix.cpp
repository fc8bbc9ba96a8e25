#include "fpnkit/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fpnkit {

RingMatrix::RingMatrix(const RingId& r, int nr, int nc)
    : ring(r), rows(nr), cols(nc),
      entries(static_cast<std::size_t>(nr) * nc, zero(r)) {}

bool RingMatrix::operator==(const RingMatrix& o) const {
    return ring == o.ring && rows == o.rows && cols == o.cols && entries == o.entries;
}

RingMatrix identity_matrix(const RingId& ring, int n) {
    RingMatrix m(ring, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = one(ring);
    return m;
}

RingMatrix from_rows(const RingId& ring, const std::vector<std::vector<long>>& rows) {
    int nr = static_cast<int>(rows.size());
    int nc = nr == 0 ? 0 : static_cast<int>(rows[0].size());
    RingMatrix m(ring, nr, nc);
    for (int i = 0; i < nr; ++i) {
        if (static_cast<int>(rows[i].size()) != nc)
            throw std::invalid_argument("ragged row list");
        for (int j = 0; j < nc; ++j) m.at(i, j) = from_int(ring, rows[i][j]);
    }
    return m;
}

RingMatrix from_columns(const RingId& ring, const std::vector<std::vector<Elem>>& cols) {
    int nc = static_cast<int>(cols.size());
    int nr = nc == 0 ? 0 : static_cast<int>(cols[0].size());
    RingMatrix m(ring, nr, nc);
    for (int j = 0; j < nc; ++j) {
        if (static_cast<int>(cols[j].size()) != nr)
            throw std::invalid_argument("ragged column list");
        for (int i = 0; i < nr; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

RingMatrix transpose(const RingMatrix& a) {
    RingMatrix m(a.ring, a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) m.at(j, i) = a.at(i, j);
    return m;
}

RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b) {
    if (a.ring != b.ring) throw std::invalid_argument("ring mismatch in mat_mul");
    if (a.cols != b.rows) throw std::invalid_argument("dimension mismatch in mat_mul");
    RingMatrix m(a.ring, a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < b.cols; ++j) {
            Elem s = zero(a.ring);
            for (int k = 0; k < a.cols; ++k) s = add(s, mul(a.at(i, k), b.at(k, j)));
            m.at(i, j) = s;
        }
    return m;
}

std::vector<Elem> mat_apply(const RingMatrix& a, const std::vector<Elem>& v) {
    if (static_cast<int>(v.size()) != a.cols)
        throw std::invalid_argument("dimension mismatch in mat_apply");
    std::vector<Elem> out(a.rows, zero(a.ring));
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) out[i] = add(out[i], mul(a.at(i, j), v[j]));
    return out;
}

bool is_zero_matrix(const RingMatrix& a) {
    return std::all_of(a.entries.begin(), a.entries.end(),
                       [](const Elem& e) { return is_zero(e); });
}

RingMatrix hconcat(const RingMatrix& a, const RingMatrix& b) {
    if (a.ring != b.ring || a.rows != b.rows)
        throw std::invalid_argument("shape mismatch in hconcat");
    RingMatrix m(a.ring, a.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) m.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols; ++j) m.at(i, a.cols + j) = b.at(i, j);
    }
    return m;
}

int max_support_index(const RingMatrix& a) {
    int mx = 0;
    for (const auto& e : a.entries) mx = std::max(mx, max_support_index(e));
    return mx;
}

// ---------------------------------------------------------------------------
// Smith normal form over Z
// ---------------------------------------------------------------------------

namespace {

using Zrow = std::vector<mpz_class>;
using Zrows = std::vector<Zrow>;

Zrows to_zrows(const RingMatrix& a) {
    Zrows m(a.rows, Zrow(a.cols));
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) m[i][j] = std::get<mpz_class>(a.at(i, j).v);
    return m;
}

RingMatrix from_zrows(const Zrows& m, int cols) {
    RingMatrix a(RingId::integers(), static_cast<int>(m.size()), cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < cols; ++j) a.at(i, j) = integer_elem(m[i][j]);
    return a;
}

struct SmithWork {
    Zrows m, u, v;  // u: r x r, v: c x c; row ops hit u, col ops hit v
    int r, c;

    void swap_rows(int i, int j) {
        if (i == j) return;
        std::swap(m[i], m[j]);
        std::swap(u[i], u[j]);
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (auto& row : m) std::swap(row[i], row[j]);
        for (auto& row : v) std::swap(row[i], row[j]);
    }
    void add_row(int dst, int src, const mpz_class& q) {  // row dst += q * row src
        for (int j = 0; j < c; ++j) m[dst][j] += q * m[src][j];
        for (int j = 0; j < r; ++j) u[dst][j] += q * u[src][j];
    }
    void add_col(int dst, int src, const mpz_class& q) {
        for (int i = 0; i < r; ++i) m[i][dst] += q * m[i][src];
        for (int i = 0; i < c; ++i) v[i][dst] += q * v[i][src];
    }
    void negate_row(int i) {
        for (auto& x : m[i]) x = -x;
        for (auto& x : u[i]) x = -x;
    }

    // Pivot choice: smallest nonzero absolute value in the trailing block,
    // ties broken row-major.
    bool find_pivot(int t, int& pi, int& pj) const {
        bool found = false;
        mpz_class best;
        for (int i = t; i < r; ++i)
            for (int j = t; j < c; ++j) {
                if (m[i][j] == 0) continue;
                mpz_class a = abs(m[i][j]);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    void diagonalize() {
        int n = std::min(r, c);
        for (int t = 0; t < n; ++t) {
            int pi, pj;
            while (true) {
                if (!find_pivot(t, pi, pj)) return;
                swap_rows(t, pi);
                swap_cols(t, pj);
                bool clean = true;
                for (int i = t + 1; i < r; ++i)
                    if (m[i][t] != 0) {
                        mpz_class q;
                        mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(),
                                   m[t][t].get_mpz_t());
                        add_row(i, t, -q);
                        if (m[i][t] != 0) clean = false;
                    }
                for (int j = t + 1; j < c; ++j)
                    if (m[t][j] != 0) {
                        mpz_class q;
                        mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(),
                                   m[t][t].get_mpz_t());
                        add_col(j, t, -q);
                        if (m[t][j] != 0) clean = false;
                    }
                if (clean) break;
            }
        }
    }

    bool fix_divisibility() {  // returns true when a change was made
        int n = std::min(r, c);
        for (int i = 0; i < n; ++i) {
            if (m[i][i] == 0) continue;
            for (int j = i + 1; j < n; ++j) {
                if (m[j][j] == 0) continue;
                if (m[j][j] % m[i][i] != 0) {
                    add_col(i, j, 1);  // brings d_j into column i
                    return true;
                }
            }
        }
        return false;
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const RingMatrix& a) {
    if (a.ring.kind != RingKind::Integers)
        throw std::invalid_argument("smith_normal_form: ring must be Integers");
    SmithWork w;
    w.r = a.rows;
    w.c = a.cols;
    w.m = to_zrows(a);
    w.u = to_zrows(identity_matrix(RingId::integers(), a.rows));
    w.v = to_zrows(identity_matrix(RingId::integers(), a.cols));
    w.diagonalize();
    while (w.fix_divisibility()) w.diagonalize();
    int n = std::min(w.r, w.c);
    for (int i = 0; i < n; ++i)
        if (w.m[i][i] < 0) w.negate_row(i);
    SmithDecomposition out;
    out.U = from_zrows(w.u, a.rows);
    out.D = from_zrows(w.m, a.cols);
    out.V = from_zrows(w.v, a.cols);
    for (int i = 0; i < n; ++i) out.invariant_factors.push_back(w.m[i][i]);
    return out;
}

mpz_class det(const RingMatrix& a) {
    if (a.ring.kind != RingKind::Integers)
        throw std::invalid_argument("det: ring must be Integers");
    if (a.rows != a.cols) throw std::invalid_argument("det: matrix must be square");
    // Bareiss fraction-free elimination.
    int n = a.rows;
    if (n == 0) return 1;
    Zrows m = to_zrows(a);
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = q;
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// ---------------------------------------------------------------------------
// Howell form over Z/n
// ---------------------------------------------------------------------------

namespace {

mpz_class zmod(const mpz_class& x, const mpz_class& n) {
    mpz_class r = x % n;
    if (r < 0) r += n;
    return r;
}

// A unit u mod n with u*x == gcd(x,n) mod n.
mpz_class unit_multiplier(const mpz_class& x, const mpz_class& n) {
    mpz_class d = gcd(gcd(x, n), n);
    if (d == n) return 1;  // x == 0 mod n
    mpz_class xp = zmod(x, n) / d;
    mpz_class np = n / d;
    mpz_class u0;
    if (!mpz_invert(u0.get_mpz_t(), xp.get_mpz_t(), np.get_mpz_t()))
        throw std::logic_error("unit_multiplier: inversion failed");
    mpz_class u = u0;
    while (gcd(u, n) != 1) u += np;
    return zmod(u, n);
}

}  // namespace

RingMatrix howell_form(const RingMatrix& a) {
    if (a.ring.kind != RingKind::Modular)
        throw std::invalid_argument("howell_form: ring must be Modular");
    const mpz_class& n = a.ring.modulus;
    int c = a.cols;
    Zrows work;
    for (int i = 0; i < a.rows; ++i) {
        Zrow row(c);
        bool nz = false;
        for (int j = 0; j < c; ++j) {
            row[j] = zmod(std::get<mpz_class>(a.at(i, j).v), n);
            nz |= row[j] != 0;
        }
        if (nz) work.push_back(std::move(row));
    }
    Zrows placed;
    for (int j = 0; j < c; ++j) {
        // All worklist rows have zeros left of column j.
        std::vector<std::size_t> hit;
        for (std::size_t k = 0; k < work.size(); ++k)
            if (work[k][j] != 0) hit.push_back(k);
        if (hit.empty()) continue;
        // Fold all hit rows into the first via extended gcd combinations.
        std::size_t p = hit[0];
        for (std::size_t t = 1; t < hit.size(); ++t) {
            std::size_t q = hit[t];
            mpz_class al = work[p][j], be = work[q][j], g, s, tt;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), tt.get_mpz_t(), al.get_mpz_t(),
                       be.get_mpz_t());
            Zrow comb(c), rest(c);
            for (int x = 0; x < c; ++x) {
                comb[x] = zmod(s * work[p][x] + tt * work[q][x], n);
                rest[x] = zmod((be / g) * work[p][x] - (al / g) * work[q][x], n);
            }
            work[p] = std::move(comb);
            work[q] = std::move(rest);
        }
        // Normalize the pivot to gcd(value, n) by a unit multiple.
        mpz_class u = unit_multiplier(work[p][j], n);
        for (int x = 0; x < c; ++x) work[p][x] = zmod(u * work[p][x], n);
        mpz_class d = work[p][j];
        // Annihilator row keeps the Howell span property.
        mpz_class ann = n / d;
        Zrow annrow(c);
        bool nz = false;
        for (int x = 0; x < c; ++x) {
            annrow[x] = zmod(ann * work[p][x], n);
            nz |= annrow[x] != 0;
        }
        placed.push_back(work[p]);
        work.erase(work.begin() + static_cast<long>(p));
        std::erase_if(work, [](const Zrow& r) {
            return std::all_of(r.begin(), r.end(), [](const mpz_class& x) { return x == 0; });
        });
        if (nz) work.push_back(std::move(annrow));
    }
    // Reduce entries above each pivot modulo the pivot.
    for (std::size_t k = 0; k < placed.size(); ++k) {
        int pj = 0;
        while (placed[k][pj] == 0) ++pj;
        const mpz_class d = placed[k][pj];
        for (std::size_t r = 0; r < k; ++r) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), placed[r][pj].get_mpz_t(), d.get_mpz_t());
            if (q != 0)
                for (int x = 0; x < c; ++x)
                    placed[r][x] = zmod(placed[r][x] - q * placed[k][x], n);
        }
    }
    RingMatrix out(a.ring, static_cast<int>(placed.size()), c);
    for (int i = 0; i < out.rows; ++i)
        for (int j = 0; j < c; ++j) out.at(i, j) = modular_elem(a.ring, placed[i][j]);
    return out;
}

// ---------------------------------------------------------------------------
// Field elimination helper (F2 / Q), used by the windowed solvers
// ---------------------------------------------------------------------------

namespace {

struct FieldSystem {
    FieldKind field;
    int nvars;
    std::vector<std::vector<mpq_class>> rows;  // each row: nvars coefficients + rhs

    mpq_class norm(const mpq_class& x) const {
        if (field != FieldKind::F2) return x;
        mpz_class r = x.get_num() % 2;
        if (r < 0) r += 2;
        return mpq_class(r);
    }

    void add_equation(std::vector<mpq_class> coeffs, const mpq_class& rhs) {
        coeffs.push_back(rhs);
        for (auto& x : coeffs) x = norm(x);
        rows.push_back(std::move(coeffs));
    }

    // Returns false when inconsistent.  On success fills a particular
    // solution and a kernel basis of the homogeneous system.
    bool solve(std::vector<mpq_class>& particular,
               std::vector<std::vector<mpq_class>>& kernel) const {
        auto m = rows;
        int nr = static_cast<int>(m.size());
        std::vector<int> pivot_col;
        int prow = 0;
        for (int col = 0; col < nvars && prow < nr; ++col) {
            int sel = -1;
            for (int i = prow; i < nr; ++i)
                if (m[i][col] != 0) {
                    sel = i;
                    break;
                }
            if (sel < 0) continue;
            std::swap(m[prow], m[sel]);
            mpq_class inv = 1 / m[prow][col];
            for (auto& x : m[prow]) x = norm(x * inv);
            for (int i = 0; i < nr; ++i) {
                if (i == prow || m[i][col] == 0) continue;
                mpq_class f = m[i][col];
                for (int j = 0; j <= nvars; ++j) m[i][j] = norm(m[i][j] - f * m[prow][j]);
            }
            pivot_col.push_back(col);
            ++prow;
        }
        for (int i = prow; i < nr; ++i)
            if (m[i][nvars] != 0) return false;
        std::vector<bool> is_pivot(nvars, false);
        particular.assign(nvars, 0);
        for (int k = 0; k < prow; ++k) {
            is_pivot[pivot_col[k]] = true;
            particular[pivot_col[k]] = m[k][nvars];
        }
        kernel.clear();
        for (int col = 0; col < nvars; ++col) {
            if (is_pivot[col]) continue;
            std::vector<mpq_class> vec(nvars, 0);
            vec[col] = 1;
            for (int k = 0; k < prow; ++k) vec[pivot_col[k]] = norm(-m[k][col]);
            kernel.push_back(std::move(vec));
        }
        return true;
    }
};

// --- integer system helpers built on Smith form ---

// Solve A x = b over Z.  Returns particular solution (if any) and a kernel
// basis.
struct ZSolve {
    std::optional<Zrow> particular;
    Zrows kernel;  // column vectors of length cols
};

ZSolve solve_integer(const RingMatrix& a, const std::vector<mpz_class>& b) {
    auto dec = smith_normal_form(a);
    int r = a.rows, c = a.cols, nmin = std::min(r, c);
    auto U = to_zrows(dec.U), D = to_zrows(dec.D), V = to_zrows(dec.V);
    Zrow ub(r, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) ub[i] += U[i][j] * b[j];
    int rank = 0;
    while (rank < nmin && D[rank][rank] != 0) ++rank;
    ZSolve out;
    bool ok = true;
    Zrow y(c, 0);
    for (int i = 0; i < r; ++i) {
        if (i < rank) {
            if (ub[i] % D[i][i] != 0) {
                ok = false;
                break;
            }
            y[i] = ub[i] / D[i][i];
        } else if (ub[i] != 0) {
            ok = false;
            break;
        }
    }
    if (ok) {
        Zrow x(c, 0);
        for (int i = 0; i < c; ++i)
            for (int j = 0; j < c; ++j) x[i] += V[i][j] * y[j];
        out.particular = std::move(x);
    }
    for (int k = rank; k < c; ++k) {
        Zrow col(c);
        for (int i = 0; i < c; ++i) col[i] = V[i][k];
        out.kernel.push_back(std::move(col));
    }
    return out;
}

std::vector<mpz_class> int_parts(const std::vector<Elem>& v, RingKind kind) {
    std::vector<mpz_class> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        if (kind == RingKind::Unitification)
            out.push_back(std::get<UElem>(e.v).m);
        else
            out.push_back(std::get<mpz_class>(e.v));
    }
    return out;
}

bool supp_has(const std::vector<int>& supp, int s) {
    return std::binary_search(supp.begin(), supp.end(), s);
}

}  // namespace

// ---------------------------------------------------------------------------
// solve_linear
// ---------------------------------------------------------------------------

namespace {

SolutionSet solve_integers(const RingMatrix& a, const std::vector<Elem>& b) {
    auto zs = solve_integer(a, int_parts(b, RingKind::Integers));
    SolutionSet out;
    if (zs.particular) {
        std::vector<Elem> p;
        for (auto& x : *zs.particular) p.push_back(integer_elem(x));
        out.particular = std::move(p);
    }
    for (auto& col : zs.kernel) {
        std::vector<Elem> v;
        for (auto& x : col) v.push_back(integer_elem(x));
        out.kernel_generators.push_back(std::move(v));
    }
    return out;
}

SolutionSet solve_modular(const RingMatrix& a, const std::vector<Elem>& b) {
    const mpz_class& n = a.ring.modulus;
    // Lift to Z with modulus slack columns: [A | nI] (x;k) = b.
    RingMatrix big(RingId::integers(), a.rows, a.cols + a.rows);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j)
            big.at(i, j) = integer_elem(std::get<mpz_class>(a.at(i, j).v));
        big.at(i, a.cols + i) = integer_elem(n);
    }
    auto zs = solve_integer(big, int_parts(b, RingKind::Modular));
    SolutionSet out;
    if (zs.particular) {
        std::vector<Elem> p;
        for (int j = 0; j < a.cols; ++j) p.push_back(modular_elem(a.ring, (*zs.particular)[j]));
        out.particular = std::move(p);
    }
    for (auto& col : zs.kernel) {
        std::vector<Elem> v;
        bool nz = false;
        for (int j = 0; j < a.cols; ++j) {
            v.push_back(modular_elem(a.ring, col[j]));
            nz |= !is_zero(v.back());
        }
        if (nz) out.kernel_generators.push_back(std::move(v));
    }
    // Distinct generators only; the lift produces duplicates.
    std::sort(out.kernel_generators.begin(), out.kernel_generators.end(),
              [](const auto& x, const auto& y) {
                  for (std::size_t i = 0; i < x.size(); ++i) {
                      const auto& xi = std::get<mpz_class>(x[i].v);
                      const auto& yi = std::get<mpz_class>(y[i].v);
                      if (xi != yi) return xi < yi;
                  }
                  return false;
              });
    out.kernel_generators.erase(
        std::unique(out.kernel_generators.begin(), out.kernel_generators.end()),
        out.kernel_generators.end());
    return out;
}

SolutionSet solve_unitification(const RingMatrix& a, const std::vector<Elem>& b,
                                int window) {
    int r = a.rows, c = a.cols;
    // Integer projection (m,a) -> m is a ring homomorphism.
    RingMatrix ai(RingId::integers(), r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            ai.at(i, j) = integer_elem(std::get<UElem>(a.at(i, j).v).m);
    auto zs = solve_integer(ai, int_parts(b, RingKind::Unitification));
    int t = static_cast<int>(zs.kernel.size());

    // F2 unknowns: support bits b_{j,s} and lattice-parameter parities tau_l.
    auto bvar = [&](int j, int s) { return j * window + (s - 1); };
    int ntau = c * window;
    int nvars = ntau + t;

    auto build_system = [&](const Zrow& k0, bool homogeneous) {
        FieldSystem sys{FieldKind::F2, nvars, {}};
        for (int i = 0; i < r; ++i) {
            const auto& bi = std::get<UElem>(b[i].v);
            for (int s = 1; s <= window; ++s) {
                std::vector<mpq_class> co(nvars, 0);
                mpq_class rhs = homogeneous ? 0 : (supp_has(bi.supp, s) ? 1 : 0);
                for (int j = 0; j < c; ++j) {
                    const auto& e = std::get<UElem>(a.at(i, j).v);
                    int aij = supp_has(e.supp, s) ? 1 : 0;
                    int mij = mpz_odd_p(e.m.get_mpz_t()) ? 1 : 0;
                    co[bvar(j, s)] += (mij + aij) % 2;
                    if (aij) {
                        rhs -= mpq_class(zmod(k0[j], 2));
                        for (int l = 0; l < t; ++l)
                            co[ntau + l] += mpq_class(zmod(zs.kernel[l][j], 2));
                    }
                }
                sys.add_equation(std::move(co), rhs);
            }
        }
        return sys;
    };

    auto assemble = [&](const Zrow& k0, const std::vector<mpq_class>& sol,
                        bool double_lattice) {
        // double_lattice: interpret tau as exact {0,1} multipliers of the
        // lattice basis (used for particular and F2-kernel lifts).
        std::vector<Elem> x;
        for (int j = 0; j < c; ++j) {
            mpz_class kj = k0[j];
            for (int l = 0; l < t; ++l)
                if (sol[ntau + l] != 0) kj += zs.kernel[l][j];
            std::vector<int> supp;
            for (int s = 1; s <= window; ++s)
                if (sol[bvar(j, s)] != 0) supp.push_back(s);
            x.push_back(u_elem(kj, std::move(supp)));
        }
        (void)double_lattice;
        return x;
    };

    SolutionSet out;
    out.window = window;
    Zrow zero_k0(c, 0);

    if (zs.particular) {
        auto sys = build_system(*zs.particular, false);
        std::vector<mpq_class> part;
        std::vector<std::vector<mpq_class>> kern;
        if (sys.solve(part, kern)) out.particular = assemble(*zs.particular, part, true);
    }

    {
        auto sys = build_system(zero_k0, true);
        std::vector<mpq_class> part;
        std::vector<std::vector<mpq_class>> kern;
        bool ok = sys.solve(part, kern);
        assert(ok);
        (void)ok;
        // Doubled lattice directions are always in the kernel: an even
        // integer part contributes nothing mod 2.
        for (int l = 0; l < t; ++l) {
            std::vector<Elem> x;
            for (int j = 0; j < c; ++j) x.push_back(u_elem(2 * zs.kernel[l][j], {}));
            out.kernel_generators.push_back(std::move(x));
        }
        for (auto& w : kern) {
            auto x = assemble(zero_k0, w, true);
            bool nz = std::any_of(x.begin(), x.end(),
                                  [](const Elem& e) { return !is_zero(e); });
            if (nz) out.kernel_generators.push_back(std::move(x));
        }
    }
    return out;
}

SolutionSet solve_square_zero(const RingMatrix& a, const std::vector<Elem>& b,
                              int window) {
    int r = a.rows, c = a.cols;
    // Unknowns: scalar parts d0_j, then coefficient parts w_{j,s}.
    auto wvar = [&](int j, int s) { return c + j * window + (s - 1); };
    int nvars = c + c * window;
    FieldSystem sys{a.ring.field, nvars, {}};

    auto coeff_at = [](const SqElem& e, int s) -> mpq_class {
        for (auto& [i, cv] : e.coeffs)
            if (i == s) return cv;
        return 0;
    };

    for (int i = 0; i < r; ++i) {
        const auto& bi = std::get<SqElem>(b[i].v);
        std::vector<mpq_class> co(nvars, 0);
        for (int j = 0; j < c; ++j) co[j] = std::get<SqElem>(a.at(i, j).v).c0;
        sys.add_equation(std::move(co), bi.c0);
        for (int s = 1; s <= window; ++s) {
            std::vector<mpq_class> cs(nvars, 0);
            for (int j = 0; j < c; ++j) {
                const auto& e = std::get<SqElem>(a.at(i, j).v);
                cs[wvar(j, s)] = e.c0;
                cs[j] = coeff_at(e, s);
            }
            sys.add_equation(std::move(cs), coeff_at(bi, s));
        }
    }

    auto assemble = [&](const std::vector<mpq_class>& sol) {
        std::vector<Elem> x;
        for (int j = 0; j < c; ++j) {
            std::vector<std::pair<int, mpq_class>> coeffs;
            for (int s = 1; s <= window; ++s)
                if (sol[wvar(j, s)] != 0) coeffs.emplace_back(s, sol[wvar(j, s)]);
            x.push_back(sq_elem(a.ring, sol[j], std::move(coeffs)));
        }
        return x;
    };

    SolutionSet out;
    out.window = window;
    std::vector<mpq_class> part;
    std::vector<std::vector<mpq_class>> kern;
    if (sys.solve(part, kern)) {
        out.particular = assemble(part);
        for (auto& w : kern) out.kernel_generators.push_back(assemble(w));
    } else {
        FieldSystem hom = sys;
        for (auto& row : hom.rows) row[nvars] = 0;
        bool ok = hom.solve(part, kern);
        assert(ok);
        (void)ok;
        for (auto& w : kern) out.kernel_generators.push_back(assemble(w));
    }
    return out;
}

}  // namespace

SolutionSet solve_linear(const RingMatrix& a, const std::vector<Elem>& b,
                         std::optional<int> window) {
    if (static_cast<int>(b.size()) != a.rows)
        throw std::invalid_argument("solve_linear: rhs length != rows");
    for (const auto& e : b)
        if (e.ring != a.ring) throw std::invalid_argument("solve_linear: ring mismatch");
    if (a.ring.windowed()) {
        if (!window)
            throw std::invalid_argument("solve_linear: window required for this ring");
        int w = *window;
        w = std::max(w, max_support_index(a));
        for (const auto& e : b) w = std::max(w, max_support_index(e));
        if (a.ring.kind == RingKind::Unitification)
            return solve_unitification(a, b, w);
        return solve_square_zero(a, b, w);
    }
    if (a.ring.kind == RingKind::Integers) return solve_integers(a, b);
    return solve_modular(a, b);
}

std::vector<std::vector<Elem>> kernel_basis(const RingMatrix& a,
                                            std::optional<int> window) {
    std::vector<Elem> b(a.rows, zero(a.ring));
    return solve_linear(a, b, window).kernel_generators;
}

std::optional<std::vector<Elem>> span_membership(const RingId& ring,
                                                 const std::vector<std::vector<Elem>>& cols,
                                                 const std::vector<Elem>& target,
                                                 std::optional<int> window) {
    if (cols.empty()) {
        bool z = std::all_of(target.begin(), target.end(),
                             [](const Elem& e) { return is_zero(e); });
        if (z) return std::vector<Elem>{};
        return std::nullopt;
    }
    RingMatrix m = from_columns(ring, cols);
    auto sol = solve_linear(m, target, window);
    if (sol.particular) return sol.particular;
    return std::nullopt;
}

std::vector<std::vector<Elem>> minimize_generators(const RingId& ring,
                                                   std::vector<std::vector<Elem>> gens,
                                                   std::optional<int> window) {
    std::erase_if(gens, [](const std::vector<Elem>& g) {
        return std::all_of(g.begin(), g.end(), [](const Elem& e) { return is_zero(e); });
    });
    for (std::size_t i = gens.size(); i-- > 0;) {
        std::vector<std::vector<Elem>> others;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != i) others.push_back(gens[j]);
        if (span_membership(ring, others, gens[i], window))
            gens.erase(gens.begin() + static_cast<long>(i));
    }
    return gens;
}

// ---------------------------------------------------------------------------
// Integer lattice helpers
// ---------------------------------------------------------------------------

ZMat lattice_basis(int dim, const ZMat& gens) {
    // Column-style Hermite reduction; the surviving columns are a basis.
    ZMat cols;
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != dim)
            throw std::invalid_argument("lattice_basis: bad generator length");
        if (std::any_of(g.begin(), g.end(), [](const mpz_class& x) { return x != 0; }))
            cols.push_back(g);
    }
    std::size_t fixed = 0;
    for (int row = 0; row < dim && fixed < cols.size(); ++row) {
        // Gcd-combine all columns with a nonzero entry in this row into one.
        std::size_t sel = fixed;
        bool found = false;
        for (std::size_t j = fixed; j < cols.size(); ++j)
            if (cols[j][row] != 0) {
                if (!found) {
                    sel = j;
                    found = true;
                } else {
                    mpz_class al = cols[sel][row], be = cols[j][row], g, s, t;
                    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                               al.get_mpz_t(), be.get_mpz_t());
                    ZVec comb(dim), rest(dim);
                    for (int i = 0; i < dim; ++i) {
                        comb[i] = s * cols[sel][i] + t * cols[j][i];
                        rest[i] = (be / g) * cols[sel][i] - (al / g) * cols[j][i];
                    }
                    cols[sel] = std::move(comb);
                    cols[j] = std::move(rest);
                }
            }
        if (!found) continue;
        std::swap(cols[fixed], cols[sel]);
        ++fixed;
        std::erase_if(cols, [](const ZVec& v) {
            return std::all_of(v.begin(), v.end(),
                               [](const mpz_class& x) { return x == 0; });
        });
    }
    return cols;
}

std::pair<int, std::vector<mpz_class>> lattice_quotient(int dim, const ZMat& k_gens,
                                                        const ZMat& i_gens) {
    ZMat basis = lattice_basis(dim, k_gens);
    int k = static_cast<int>(basis.size());
    if (k == 0) return {0, {}};
    RingMatrix bm(RingId::integers(), dim, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < dim; ++i) bm.at(i, j) = integer_elem(basis[j][i]);
    // Coordinates of each subgroup generator in the chosen basis.
    ZMat coords;
    for (const auto& g : i_gens) {
        auto zs = solve_integer(bm, g);
        if (!zs.particular)
            throw std::logic_error("lattice_quotient: subgroup not contained in group");
        coords.push_back(*zs.particular);
    }
    RingMatrix cm(RingId::integers(), k, static_cast<int>(coords.size()));
    for (std::size_t j = 0; j < coords.size(); ++j)
        for (int i = 0; i < k; ++i) cm.at(i, static_cast<int>(j)) = integer_elem(coords[j][i]);
    auto dec = smith_normal_form(cm);
    int rank = 0;
    std::vector<mpz_class> torsion;
    for (const auto& f : dec.invariant_factors)
        if (f != 0) {
            ++rank;
            if (f >= 2) torsion.push_back(f);
        }
    return {k - rank, torsion};
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

std::string emit_matrix(const RingMatrix& a) {
    std::ostringstream os;
    os << ring_token(a.ring) << " " << a.rows << " " << a.cols << "\n";
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) os << print_elem(a.at(i, j)) << "\n";
    return os.str();
}

RingMatrix parse_matrix(std::istream& in) {
    std::string header;
    if (!std::getline(in, header))
        throw std::invalid_argument("matrix: missing header line");
    std::istringstream hs(header);
    std::string ringtok;
    int rows, cols;
    if (!(hs >> ringtok >> rows >> cols) || rows < 0 || cols < 0)
        throw std::invalid_argument("matrix: bad header '" + header + "'");
    RingId ring = parse_ring_token(ringtok);
    RingMatrix m(ring, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            std::string line;
            if (!std::getline(in, line))
                throw std::invalid_argument("matrix: truncated at entry (" +
                                            std::to_string(i) + "," + std::to_string(j) +
                                            ")");
            m.at(i, j) = parse_elem(ring, line);
        }
    return m;
}

RingMatrix parse_matrix(const std::string& text) {
    std::istringstream is(text);
    return parse_matrix(is);
}

}  // namespace fpnkit
