#include "fpnkit/modules.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace fpnkit {

Presentation make_presentation(const RingId& ring, int generators, RingMatrix relations,
                               std::string label) {
    if (relations.ring != ring)
        throw std::invalid_argument("presentation: relations ring mismatch");
    if (relations.rows != generators)
        throw std::invalid_argument("presentation: relations must have one row per generator");
    return Presentation{ring, generators, std::move(relations), std::move(label)};
}

Presentation free_presentation(const RingId& ring, int rank, std::string label) {
    return Presentation{ring, rank, RingMatrix(ring, rank, 0), std::move(label)};
}

Presentation diagonal_presentation(const RingId& ring, const std::vector<mpz_class>& diag,
                                   std::string label) {
    int g = static_cast<int>(diag.size());
    RingMatrix rel(ring, g, g);
    for (int i = 0; i < g; ++i) {
        if (ring.kind == RingKind::Integers)
            rel.at(i, i) = integer_elem(diag[i]);
        else if (ring.kind == RingKind::Modular)
            rel.at(i, i) = modular_elem(ring, diag[i]);
        else
            throw std::invalid_argument("diagonal_presentation: unsupported ring");
    }
    return Presentation{ring, g, std::move(rel), std::move(label)};
}

Presentation direct_sum(const Presentation& p, const Presentation& q) {
    if (p.ring != q.ring) throw std::invalid_argument("direct_sum: ring mismatch");
    RingMatrix rel(p.ring, p.generators + q.generators,
                   p.relations.cols + q.relations.cols);
    for (int i = 0; i < p.generators; ++i)
        for (int j = 0; j < p.relations.cols; ++j) rel.at(i, j) = p.relations.at(i, j);
    for (int i = 0; i < q.generators; ++i)
        for (int j = 0; j < q.relations.cols; ++j)
            rel.at(p.generators + i, p.relations.cols + j) = q.relations.at(i, j);
    return Presentation{p.ring, p.generators + q.generators, std::move(rel),
                        p.label + "+" + q.label};
}

std::string describe(const AbGroupValue& g) {
    if (g.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < g.free_rank; ++i) {
        os << (first ? "" : " + ") << "Z";
        first = false;
    }
    for (const auto& t : g.torsion) {
        os << (first ? "" : " + ") << "Z/" << t.get_str();
        first = false;
    }
    return os.str();
}

namespace {

mpz_class lift_entry(const Elem& e) { return std::get<mpz_class>(e.v); }

bool lattice_ring(const RingId& r) {
    return r.kind == RingKind::Integers || r.kind == RingKind::Modular;
}

// Generators of the relation lattice of coker(B) inside Z^h, including the
// modulus multiples over Z/n.
ZMat relation_lattice(const Presentation& q) {
    ZMat gens;
    int h = q.generators;
    for (int j = 0; j < q.relations.cols; ++j) {
        ZVec v(h);
        for (int i = 0; i < h; ++i) v[i] = lift_entry(q.relations.at(i, j));
        gens.push_back(std::move(v));
    }
    if (q.ring.kind == RingKind::Modular)
        for (int i = 0; i < h; ++i) {
            ZVec v(h, 0);
            v[i] = q.ring.modulus;
            gens.push_back(std::move(v));
        }
    return gens;
}

ZMat unit_vectors(int dim) {
    ZMat out;
    for (int i = 0; i < dim; ++i) {
        ZVec v(dim, 0);
        v[i] = 1;
        out.push_back(std::move(v));
    }
    return out;
}

// vec index for an h x c matrix entry (a, j): column-major.
int vec_idx(int h, int a, int j) { return j * h + a; }

// Lattice of matrices X (h x rc) with X*D in the column span of B (and of
// n*I over Z/n), where D is rc x rn.  Everything is lifted to Z.
ZMat cocycle_lattice(int h, int rc, const RingMatrix& d, const Presentation& q) {
    int rn = d.cols;
    int dimx = h * rc;
    if (rn == 0) return unit_vectors(dimx);
    int rb = q.relations.cols;
    bool modular = q.ring.kind == RingKind::Modular;
    int nslack = modular ? h * rn : 0;
    int nunk = dimx + rb * rn + nslack;
    RingMatrix sys(RingId::integers(), h * rn, nunk);
    for (int a = 0; a < h; ++a)
        for (int k = 0; k < rn; ++k) {
            int eq = vec_idx(h, a, k);
            for (int j = 0; j < rc; ++j)
                sys.at(eq, vec_idx(h, a, j)) = integer_elem(lift_entry(d.at(j, k)));
            for (int l = 0; l < rb; ++l)
                sys.at(eq, dimx + vec_idx(rb, l, k)) =
                    integer_elem(-lift_entry(q.relations.at(a, l)));
            if (modular) sys.at(eq, dimx + rb * rn + eq) = integer_elem(q.ring.modulus);
        }
    auto kern = kernel_basis(sys);
    ZMat out;
    for (const auto& v : kern) {
        ZVec x(dimx);
        bool nz = false;
        for (int i = 0; i < dimx; ++i) {
            x[i] = lift_entry(v[i]);
            nz |= x[i] != 0;
        }
        if (nz) out.push_back(std::move(x));
    }
    return out;
}

// Generators of the coboundary lattice in Z^{h*rc}: images W*Dprev of matrix
// units, the per-column relation lattice of Q, and n*I over Z/n.
ZMat coboundary_lattice(int h, int rc, const RingMatrix* dprev, const Presentation& q) {
    int dimx = h * rc;
    ZMat out;
    if (dprev) {
        int rp = dprev->rows;
        for (int a = 0; a < h; ++a)
            for (int l = 0; l < rp; ++l) {
                ZVec x(dimx, 0);
                bool nz = false;
                for (int j = 0; j < rc; ++j) {
                    x[vec_idx(h, a, j)] = lift_entry(dprev->at(l, j));
                    nz |= x[vec_idx(h, a, j)] != 0;
                }
                if (nz) out.push_back(std::move(x));
            }
    }
    for (int k = 0; k < rc; ++k)
        for (int l = 0; l < q.relations.cols; ++l) {
            ZVec x(dimx, 0);
            bool nz = false;
            for (int a = 0; a < h; ++a) {
                x[vec_idx(h, a, k)] = lift_entry(q.relations.at(a, l));
                nz |= x[vec_idx(h, a, k)] != 0;
            }
            if (nz) out.push_back(std::move(x));
        }
    if (q.ring.kind == RingKind::Modular)
        for (int i = 0; i < dimx; ++i) {
            ZVec x(dimx, 0);
            x[i] = q.ring.modulus;
            out.push_back(std::move(x));
        }
    return out;
}

// Windowed analogue: cocycle generators over the ring itself.
std::vector<std::vector<Elem>> cocycle_generators_windowed(int h, int rc,
                                                           const RingMatrix& d,
                                                           const Presentation& q,
                                                           int window) {
    const RingId& ring = q.ring;
    int rn = d.cols;
    int dimx = h * rc;
    std::vector<std::vector<Elem>> out;
    if (rn == 0) {
        for (int i = 0; i < dimx; ++i) {
            std::vector<Elem> x(dimx, zero(ring));
            x[i] = one(ring);
            out.push_back(std::move(x));
        }
        return out;
    }
    int rb = q.relations.cols;
    RingMatrix sys(ring, h * rn, dimx + rb * rn);
    for (int a = 0; a < h; ++a)
        for (int k = 0; k < rn; ++k) {
            int eq = vec_idx(h, a, k);
            for (int j = 0; j < rc; ++j) sys.at(eq, vec_idx(h, a, j)) = d.at(j, k);
            for (int l = 0; l < rb; ++l)
                sys.at(eq, dimx + vec_idx(rb, l, k)) = neg(q.relations.at(a, l));
        }
    for (const auto& v : kernel_basis(sys, window)) {
        std::vector<Elem> x(v.begin(), v.begin() + dimx);
        if (std::any_of(x.begin(), x.end(), [](const Elem& e) { return !is_zero(e); }))
            out.push_back(std::move(x));
    }
    return out;
}

std::vector<std::vector<Elem>> coboundary_generators_windowed(int h, int rc,
                                                              const RingMatrix* dprev,
                                                              const Presentation& q) {
    const RingId& ring = q.ring;
    int dimx = h * rc;
    std::vector<std::vector<Elem>> out;
    if (dprev)
        for (int a = 0; a < h; ++a)
            for (int l = 0; l < dprev->rows; ++l) {
                std::vector<Elem> x(dimx, zero(ring));
                bool nz = false;
                for (int j = 0; j < rc; ++j) {
                    x[vec_idx(h, a, j)] = dprev->at(l, j);
                    nz |= !is_zero(x[vec_idx(h, a, j)]);
                }
                if (nz) out.push_back(std::move(x));
            }
    for (int k = 0; k < rc; ++k)
        for (int l = 0; l < q.relations.cols; ++l) {
            std::vector<Elem> x(dimx, zero(ring));
            bool nz = false;
            for (int a = 0; a < h; ++a) {
                x[vec_idx(h, a, k)] = q.relations.at(a, l);
                nz |= !is_zero(x[vec_idx(h, a, k)]);
            }
            if (nz) out.push_back(std::move(x));
        }
    return out;
}

RingMatrix matrix_from_vec(const RingId& ring, const ZVec& x, int h, int rc) {
    RingMatrix m(ring, h, rc);
    for (int a = 0; a < h; ++a)
        for (int j = 0; j < rc; ++j) {
            const mpz_class& v = x[vec_idx(h, a, j)];
            m.at(a, j) = ring.kind == RingKind::Integers ? integer_elem(v)
                                                         : modular_elem(ring, v);
        }
    return m;
}

std::optional<ZVec> integer_span_membership(int dim, const ZMat& gens, const ZVec& target) {
    RingMatrix m(RingId::integers(), dim, static_cast<int>(gens.size()));
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (int i = 0; i < dim; ++i)
            m.at(i, static_cast<int>(j)) = integer_elem(gens[j][i]);
    std::vector<Elem> b;
    for (int i = 0; i < dim; ++i) b.push_back(integer_elem(target[i]));
    auto sol = solve_linear(m, b);
    if (!sol.particular) return std::nullopt;
    ZVec out;
    for (auto& e : *sol.particular) out.push_back(lift_entry(e));
    return out;
}

struct HomologyInput {
    int h, rc;
    RingMatrix d;            // constraint matrix (rc x rn)
    const RingMatrix* dprev;  // boundary source, may be null
};

HomologyValue homology_value(const HomologyInput& in, const Presentation& q,
                             std::optional<int> window) {
    HomologyValue out;
    int dimx = in.h * in.rc;
    if (dimx == 0) return out;  // zero cochain group
    if (lattice_ring(q.ring)) {
        ZMat k = cocycle_lattice(in.h, in.rc, in.d, q);
        ZMat i = coboundary_lattice(in.h, in.rc, in.dprev, q);
        auto [free_rank, torsion] = lattice_quotient(dimx, k, i);
        out.group = AbGroupValue{free_rank, std::move(torsion)};
        return out;
    }
    if (!window)
        throw std::invalid_argument("homology over a windowed ring needs a window bound");
    out.windowed = true;
    out.window = window;
    auto k = cocycle_generators_windowed(in.h, in.rc, in.d, q, *window);
    auto i = coboundary_generators_windowed(in.h, in.rc, in.dprev, q);
    for (auto& x : k)
        if (!span_membership(q.ring, i, x, window)) {
            out.witness = x;
            break;
        }
    return out;
}

}  // namespace

AbGroupValue abelian_invariants(const Presentation& p) {
    if (!lattice_ring(p.ring))
        throw std::invalid_argument("abelian_invariants: needs Integers or Modular ring");
    auto [free_rank, torsion] =
        lattice_quotient(p.generators, unit_vectors(p.generators), relation_lattice(p));
    return AbGroupValue{free_rank, std::move(torsion)};
}

RingMatrix module_canonical_form(const Presentation& p) {
    if (p.ring.kind != RingKind::Modular)
        throw std::invalid_argument("module_canonical_form: Modular rings only");
    return howell_form(transpose(p.relations));
}

Presentation syzygy(const Presentation& p, std::optional<int> window) {
    auto gens = minimize_generators(p.ring, kernel_basis(p.relations, window), window);
    int r = p.relations.cols;
    RingMatrix rel(p.ring, r, static_cast<int>(gens.size()));
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (int i = 0; i < r; ++i) rel.at(i, static_cast<int>(j)) = gens[j][i];
    return Presentation{p.ring, r, std::move(rel), "syz(" + p.label + ")"};
}

Resolution resolve(const Presentation& p, int depth, std::optional<int> window) {
    if (depth < 1) throw std::invalid_argument("resolve: depth must be >= 1");
    Resolution res;
    res.window = window;
    res.differentials.push_back(p.relations);
    for (int k = 2; k <= depth; ++k) {
        const RingMatrix& prev = res.differentials.back();
        auto gens = minimize_generators(p.ring, kernel_basis(prev, window), window);
        RingMatrix d(p.ring, prev.cols, static_cast<int>(gens.size()));
        for (std::size_t j = 0; j < gens.size(); ++j)
            for (int i = 0; i < prev.cols; ++i) d.at(i, static_cast<int>(j)) = gens[j][i];
        res.differentials.push_back(std::move(d));
    }
    return res;
}

namespace {

/// Walks the stages 0..n, pulling the per-window count for each stage from
/// stage_count, and stops descending as soon as one stage shows syzygy
/// growth (at least 3 strictly increasing counts in a row); deeper stages of
/// a growing chain are never computed.
FpCertificate classify_windowed(int n, const std::vector<int>& windows,
                                const std::function<int(int, int)>& stage_count) {
    FpCertificate cert;
    int stable_prefix = -1;
    for (int s = 0; s <= n; ++s) {
        std::vector<int> cs;
        for (int w : windows) {
            int c = stage_count(w, s);
            cert.stage_counts[{s, w}] = c;
            cs.push_back(c);
        }
        bool stable = std::all_of(cs.begin(), cs.end(), [&](int c) { return c == cs[0]; });
        int run = 1, best = 1;
        for (std::size_t i = 1; i < cs.size(); ++i) {
            run = cs[i] > cs[i - 1] ? run + 1 : 1;
            best = std::max(best, run);
        }
        if (best >= 3) {
            cert.verdict = FpVerdict::SyzygyGrowth;
            cert.growth_stage = s;
            cert.growth_counts = cs;
            cert.level_verified = std::max(stable_prefix, 0);
            return cert;
        }
        if (stable && stable_prefix == s - 1) stable_prefix = s;
    }
    if (stable_prefix == n) {
        cert.verdict = FpVerdict::FPnVerified;
        cert.level_verified = n;
    } else {
        cert.verdict = FpVerdict::Inconclusive;
        cert.level_verified = std::max(stable_prefix, 0);
    }
    return cert;
}

RingMatrix kernel_matrix(const RingId& ring, const RingMatrix& cur, std::optional<int> w) {
    auto gens = minimize_generators(ring, kernel_basis(cur, w), w);
    RingMatrix d(ring, cur.cols, static_cast<int>(gens.size()));
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (int i = 0; i < cur.cols; ++i) d.at(i, static_cast<int>(j)) = gens[j][i];
    return d;
}

}  // namespace

FpCertificate classify_fp(const Presentation& p, int n, const std::vector<int>& windows) {
    if (n < 0) throw std::invalid_argument("classify_fp: n must be >= 0");
    if (!p.ring.windowed()) {
        // Full kernels are computable; every stage is finite.
        FpCertificate cert;
        cert.stage_counts[{0, 0}] = p.generators;
        if (n >= 1) {
            auto res = resolve(p, std::max(n, 1));
            for (int s = 1; s <= n; ++s)
                cert.stage_counts[{s, 0}] = res.differentials[s - 1].cols;
        }
        cert.verdict = FpVerdict::FPnVerified;
        cert.level_verified = n;
        return cert;
    }
    if (windows.size() < 2 || !std::is_sorted(windows.begin(), windows.end()) ||
        std::adjacent_find(windows.begin(), windows.end()) != windows.end())
        throw std::invalid_argument("classify_fp: windows must be strictly increasing");
    std::map<int, RingMatrix> cur;  // per-window differential, deepened lazily
    auto stage_count = [&](int w, int s) -> int {
        if (s == 0) return p.generators;
        if (s == 1) {
            cur.emplace(w, p.relations);
            return p.relations.cols;
        }
        cur.at(w) = kernel_matrix(p.ring, cur.at(w), w);
        return cur.at(w).cols;
    };
    return classify_windowed(n, windows, stage_count);
}

FpCertificate classify_fp_submodule(const RingMatrix& generators, int n,
                                    const std::vector<int>& windows) {
    if (n < 0) throw std::invalid_argument("classify_fp_submodule: n must be >= 0");
    const RingId& ring = generators.ring;
    if (!ring.windowed()) {
        FpCertificate cert;
        cert.stage_counts[{0, 0}] = generators.cols;
        RingMatrix cur = generators;
        for (int s = 1; s <= n; ++s) {
            cur = kernel_matrix(ring, cur, std::nullopt);
            cert.stage_counts[{s, 0}] = cur.cols;
        }
        cert.verdict = FpVerdict::FPnVerified;
        cert.level_verified = n;
        return cert;
    }
    if (windows.size() < 2 || !std::is_sorted(windows.begin(), windows.end()))
        throw std::invalid_argument("classify_fp_submodule: bad window schedule");
    std::map<int, RingMatrix> cur;
    auto stage_count = [&](int w, int s) -> int {
        if (s == 0) {
            cur.emplace(w, generators);
            return generators.cols;
        }
        cur.at(w) = kernel_matrix(ring, cur.at(w), w);
        return cur.at(w).cols;
    };
    return classify_windowed(n, windows, stage_count);
}

HomDescription hom_module(const Presentation& p, const Presentation& q,
                          std::optional<int> window) {
    if (p.ring != q.ring) throw std::invalid_argument("hom_module: ring mismatch");
    HomDescription out;
    int h = q.generators, g = p.generators;
    int dimx = h * g;
    if (dimx == 0) return out;
    if (lattice_ring(p.ring)) {
        ZMat k = cocycle_lattice(h, g, p.relations, q);
        ZMat i = coboundary_lattice(h, g, nullptr, q);
        auto [free_rank, torsion] = lattice_quotient(dimx, k, i);
        out.group = AbGroupValue{free_rank, std::move(torsion)};
        for (const auto& x : k) out.representatives.push_back(matrix_from_vec(p.ring, x, h, g));
        if (!out.group.is_zero())
            for (const auto& x : k)
                if (!integer_span_membership(dimx, i, x)) {
                    out.nonzero_witness = matrix_from_vec(p.ring, x, h, g);
                    break;
                }
        return out;
    }
    if (!window)
        throw std::invalid_argument("hom_module over a windowed ring needs a window bound");
    out.windowed = true;
    out.window = window;
    auto k = cocycle_generators_windowed(h, g, p.relations, q, *window);
    auto i = coboundary_generators_windowed(h, g, nullptr, q);
    for (auto& x : k) {
        RingMatrix m(p.ring, h, g);
        for (int a = 0; a < h; ++a)
            for (int j = 0; j < g; ++j) m.at(a, j) = x[vec_idx(h, a, j)];
        out.representatives.push_back(std::move(m));
        if (!out.nonzero_witness && !span_membership(p.ring, i, x, window)) {
            RingMatrix w(p.ring, h, g);
            for (int a = 0; a < h; ++a)
                for (int j = 0; j < g; ++j) w.at(a, j) = x[vec_idx(h, a, j)];
            out.nonzero_witness = std::move(w);
        }
    }
    return out;
}

HomologyValue ext_group(const Presentation& p, const Presentation& q, int i,
                        std::optional<int> window) {
    if (p.ring != q.ring) throw std::invalid_argument("ext_group: ring mismatch");
    if (i < 0) throw std::invalid_argument("ext_group: degree must be >= 0");
    auto res = resolve(p, i + 1, window);
    auto rank = [&](int k) { return k == 0 ? p.generators : res.differentials[k - 1].cols; };
    HomologyInput in{q.generators, rank(i), res.differentials[i],
                     i >= 1 ? &res.differentials[i - 1] : nullptr};
    return homology_value(in, q, window);
}

HomologyValue tor_group(const Presentation& p, const Presentation& q, int i,
                        std::optional<int> window) {
    if (p.ring != q.ring) throw std::invalid_argument("tor_group: ring mismatch");
    if (i < 0) throw std::invalid_argument("tor_group: degree must be >= 0");
    auto res = resolve(p, i + 1, window);
    auto rank = [&](int k) { return k == 0 ? p.generators : res.differentials[k - 1].cols; };
    RingMatrix constraint = i >= 1 ? transpose(res.differentials[i - 1])
                                   : RingMatrix(p.ring, rank(0), 0);
    RingMatrix boundary = transpose(res.differentials[i]);
    HomologyInput in{q.generators, rank(i), std::move(constraint), &boundary};
    return homology_value(in, q, window);
}

ProjectivityResult is_projective(const Presentation& p, std::optional<int> window) {
    const RingMatrix& d = p.relations;
    int g = p.generators, r = d.cols;
    if (r == 0 || g == 0) {
        // Free (or zero) module.
        return {true, identity_matrix(p.ring, g)};
    }
    // A section of R^g ->> M exists iff d*Y*d = -d is solvable: the witness
    // composite is T = I + d*Y, with im(T - I) inside im(d) and T*d = 0.
    RingMatrix sys(p.ring, g * r, r * g);
    std::vector<Elem> rhs;
    for (int jcol = 0; jcol < r; ++jcol)
        for (int i = 0; i < g; ++i) {
            int eq = jcol * g + i;
            for (int k = 0; k < r; ++k)
                for (int l = 0; l < g; ++l)
                    sys.at(eq, l * r + k) = mul(d.at(i, k), d.at(l, jcol));
            rhs.push_back(neg(d.at(i, jcol)));
        }
    auto sol = solve_linear(sys, rhs, window);
    if (!sol.particular) return {false, std::nullopt};
    RingMatrix y(p.ring, r, g);
    for (int k = 0; k < r; ++k)
        for (int l = 0; l < g; ++l) y.at(k, l) = (*sol.particular)[l * r + k];
    RingMatrix t = identity_matrix(p.ring, g);
    RingMatrix dy = mat_mul(d, y);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) t.at(i, j) = add(t.at(i, j), dy.at(i, j));
    return {true, std::move(t)};
}

bool pd_at_most_one(const Presentation& p, std::optional<int> window) {
    if (p.relations.cols == 0) return true;
    return is_projective(syzygy(p, window), window).projective;
}

Presentation character_dual(const Presentation& p) {
    if (p.ring.kind != RingKind::Modular)
        throw std::invalid_argument(
            "character_dual: defined for Modular rings only (finite modules)");
    auto inv = abelian_invariants(p);
    // Finite modules are non-canonically self-dual and over Z/n the module
    // structure is determined by the underlying group.
    return diagonal_presentation(p.ring, inv.torsion, p.label + "^+");
}

}  // namespace fpnkit
