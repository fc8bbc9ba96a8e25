#include "fpnkit/torsion.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fpnkit {

namespace {

std::string module_name(const Presentation& p, int index) {
    if (!p.label.empty()) return p.label;
    std::ostringstream os;
    os << "module#" << index;
    return os.str();
}

std::vector<std::vector<Elem>> matrix_columns(const RingMatrix& a) {
    std::vector<std::vector<Elem>> cols(static_cast<std::size_t>(a.cols));
    for (int j = 0; j < a.cols; ++j) {
        cols[static_cast<std::size_t>(j)].reserve(static_cast<std::size_t>(a.rows));
        for (int i = 0; i < a.rows; ++i) cols[static_cast<std::size_t>(j)].push_back(a.at(i, j));
    }
    return cols;
}

}  // namespace

ModulePredicate torsion_predicate() {
    return [](const Presentation& p) { return abelian_invariants(p).free_rank == 0; };
}

ModulePredicate torsion_free_predicate() {
    return [](const Presentation& p) { return abelian_invariants(p).torsion.empty(); };
}

TorsionDecomposition torsion_subgroup(const Presentation& p) {
    if (p.ring.kind != RingKind::Integers)
        throw std::invalid_argument("torsion_subgroup expects a module over Z");
    const int g = p.generators;
    SmithDecomposition snf = smith_normal_form(p.relations);

    // In the coordinates y = U x the relation lattice is diagonal, so the
    // summands split off one generator at a time.
    const int diag = std::min(snf.D.rows, snf.D.cols);
    std::vector<int> torsion_idx, free_idx;
    std::vector<mpz_class> torsion_factors;
    for (int i = 0; i < g; ++i) {
        mpz_class d = i < diag ? std::get<mpz_class>(snf.D.at(i, i).v) : mpz_class(0);
        if (d == 0)
            free_idx.push_back(i);
        else if (d >= 2) {
            torsion_idx.push_back(i);
            torsion_factors.push_back(d);
        }
    }

    TorsionDecomposition out;
    out.torsion_part = diagonal_presentation(p.ring, torsion_factors,
                                             "t(" + module_name(p, 0) + ")");
    out.free_quotient = free_presentation(p.ring, static_cast<int>(free_idx.size()),
                                          module_name(p, 0) + "/t");

    // Columns of U^{-1} carry the diagonal coordinates back to the original
    // generators; U itself is the change of coordinates in the other
    // direction.
    out.inclusion = RingMatrix(p.ring, g, static_cast<int>(torsion_idx.size()));
    for (std::size_t j = 0; j < torsion_idx.size(); ++j) {
        std::vector<Elem> e(static_cast<std::size_t>(g), zero(p.ring));
        e[static_cast<std::size_t>(torsion_idx[j])] = one(p.ring);
        SolutionSet sol = solve_linear(snf.U, e);
        if (!sol.particular) throw std::logic_error("torsion_subgroup: U not invertible");
        for (int i = 0; i < g; ++i)
            out.inclusion.at(i, static_cast<int>(j)) = (*sol.particular)[static_cast<std::size_t>(i)];
    }
    out.projection = RingMatrix(p.ring, static_cast<int>(free_idx.size()), g);
    for (std::size_t i = 0; i < free_idx.size(); ++i)
        for (int j = 0; j < g; ++j)
            out.projection.at(static_cast<int>(i), j) = snf.U.at(free_idx[i], j);
    return out;
}

TorsionPairReport check_torsion_pair(const ModuleUniverse& universe,
                                     const ModulePredicate& in_t,
                                     const ModulePredicate& in_f,
                                     std::optional<int> window) {
    TorsionPairReport rep;
    const auto& mods = universe.modules;
    std::vector<bool> is_t(mods.size()), is_f(mods.size());
    for (std::size_t i = 0; i < mods.size(); ++i) {
        is_t[i] = in_t(mods[i]);
        is_f[i] = in_f(mods[i]);
    }
    auto fail = [&rep](std::string check, std::string detail) {
        rep.failures.push_back({std::move(check), std::move(detail)});
    };

    // Hom-orthogonality: Hom(T, F) = 0.
    for (std::size_t i = 0; i < mods.size(); ++i) {
        if (!is_t[i]) continue;
        for (std::size_t j = 0; j < mods.size(); ++j) {
            if (!is_f[j]) continue;
            rep.orthogonality_pairs++;
            if (!hom_module(mods[i], mods[j], window).is_zero())
                fail("orthogonality", "Hom(" + module_name(mods[i], static_cast<int>(i)) +
                                          ", " + module_name(mods[j], static_cast<int>(j)) +
                                          ") is nonzero");
        }
    }

    // Maximality against the orthogonality within the universe: anything
    // left-orthogonal to every F must already be in T, and dually.
    for (std::size_t c = 0; c < mods.size(); ++c) {
        rep.maximality_checks += 2;
        if (!is_t[c]) {
            bool left_orth = true;
            for (std::size_t j = 0; j < mods.size(); ++j)
                if (is_f[j]) left_orth = left_orth && hom_module(mods[c], mods[j], window).is_zero();
            if (left_orth)
                fail("maximality", module_name(mods[c], static_cast<int>(c)) +
                                       " is left-orthogonal to every F but not in T");
        }
        if (!is_f[c]) {
            bool right_orth = true;
            for (std::size_t i = 0; i < mods.size(); ++i)
                if (is_t[i]) right_orth = right_orth && hom_module(mods[i], mods[c], window).is_zero();
            if (right_orth)
                fail("maximality", module_name(mods[c], static_cast<int>(c)) +
                                       " is right-orthogonal to every T but not in F");
        }
    }

    // Closure along the declared maps: T under quotients, F under submodules.
    for (const DeclaredMap& m : universe.maps) {
        rep.closure_checks++;
        const Presentation& src = mods[static_cast<std::size_t>(m.from)];
        const Presentation& dst = mods[static_cast<std::size_t>(m.to)];
        if (m.matrix.rows != dst.generators || m.matrix.cols != src.generators) {
            fail("map-shape", m.label + ": matrix shape does not match the endpoints");
            continue;
        }
        if (src.relations.cols > 0) {
            RingMatrix pushed = mat_mul(m.matrix, src.relations);
            auto dst_cols = matrix_columns(dst.relations);
            for (int j = 0; j < pushed.cols; ++j) {
                std::vector<Elem> target;
                for (int i = 0; i < pushed.rows; ++i) target.push_back(pushed.at(i, j));
                bool ok = dst_cols.empty()
                              ? std::all_of(target.begin(), target.end(),
                                            [](const Elem& e) { return is_zero(e); })
                              : span_membership(universe.ring, dst_cols, target, window)
                                    .has_value();
                if (!ok) {
                    fail("map-welldefined",
                         m.label + ": relations of the source do not map into the target");
                    break;
                }
            }
        }
        if (m.kind == DeclaredMap::Kind::Surjection && is_t[static_cast<std::size_t>(m.from)] &&
            !is_t[static_cast<std::size_t>(m.to)])
            fail("closure", m.label + ": quotient of a T-module left T");
        if (m.kind == DeclaredMap::Kind::Inclusion && is_f[static_cast<std::size_t>(m.to)] &&
            !is_f[static_cast<std::size_t>(m.from)])
            fail("closure", m.label + ": submodule of an F-module left F");
    }

    // Closure under finite direct sums drawn from the universe.
    for (std::size_t i = 0; i < mods.size(); ++i)
        for (std::size_t j = i; j < mods.size(); ++j) {
            if (is_t[i] && is_t[j]) {
                rep.sum_checks++;
                if (!in_t(direct_sum(mods[i], mods[j])))
                    fail("sum-closure", module_name(mods[i], static_cast<int>(i)) + " (+) " +
                                            module_name(mods[j], static_cast<int>(j)) +
                                            " left T");
            }
            if (is_f[i] && is_f[j]) {
                rep.sum_checks++;
                if (!in_f(direct_sum(mods[i], mods[j])))
                    fail("sum-closure", module_name(mods[i], static_cast<int>(i)) + " (+) " +
                                            module_name(mods[j], static_cast<int>(j)) +
                                            " left F");
            }
        }
    return rep;
}

std::vector<bool> fpn_injective_test(const Presentation& m,
                                      const std::vector<Presentation>& family,
                                      std::optional<int> window) {
    std::vector<bool> out;
    out.reserve(family.size());
    for (const Presentation& f : family)
        out.push_back(ext_group(f, m, 1, window).is_zero());
    return out;
}

std::vector<bool> fpn_flat_test(const Presentation& m,
                                   const std::vector<Presentation>& family,
                                   std::optional<int> window) {
    std::vector<bool> out;
    out.reserve(family.size());
    for (const Presentation& f : family)
        out.push_back(tor_group(f, m, 1, window).is_zero());
    return out;
}

DualityReport duality_sweep(const std::vector<Presentation>& modules) {
    DualityReport rep;
    for (const Presentation& f : modules) {
        if (f.ring.kind != RingKind::Modular)
            throw std::invalid_argument("duality_sweep expects modules over Z/n");
        for (const Presentation& m : modules) {
            rep.pairs++;
            bool tor_vanishes = tor_group(f, m, 1).is_zero();
            bool ext_vanishes = ext_group(f, character_dual(m), 1).is_zero();
            if (tor_vanishes != ext_vanishes) {
                std::ostringstream os;
                os << "Tor_1(" << module_name(f, -1) << ", " << module_name(m, -1)
                   << ") vanishing disagrees with Ext^1 against the dual";
                rep.counterexamples.push_back(os.str());
            }
        }
    }
    return rep;
}

}  // namespace fpnkit
