#include "fpnkit/suites.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fpnkit {

namespace {

using nlohmann::json;

// Fixed anchor vocabulary; every check must use one of these slugs.
const std::set<std::string>& anchor_table() {
    static const std::set<std::string> table = {
        "ring-axioms",         "bezout-reduction",   "ideal-membership",
        "principal-splitting", "kernel-growth",      "fp-classification",
        "periodic-resolution", "projectivity",       "nonsplit-extension",
        "relative-injectivity", "relative-flatness", "pd-bound",
        "ext-square-vanishing", "character-duality", "torsion-pair-axioms",
        "torsion-idempotence", "quotient-closure",   "round-trip",
    };
    return table;
}

struct SuiteBuilder {
    SuiteReport rep;

    explicit SuiteBuilder(const SuiteConfig& cfg) {
        rep.suite = cfg.suite;
        rep.config = cfg;
    }

    void check(const std::string& anchor, const std::string& claim, bool pass,
               json data = json::object()) {
        if (!anchor_table().count(anchor))
            throw std::logic_error("anchor not in the fixed table: " + anchor);
        CheckRecord r;
        r.index = static_cast<int>(rep.checks.size());
        r.anchor = anchor;
        r.claim = claim;
        r.pass = pass;
        r.data = std::move(data);
        rep.checks.push_back(std::move(r));
    }
};

std::string describe_counts(const std::vector<std::pair<int, int>>& counts) {
    std::ostringstream os;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) os << ",";
        os << counts[i].first << ":" << counts[i].second;
    }
    return os.str();
}

std::vector<std::vector<int>> subsets_of(const std::vector<int>& base) {
    std::vector<std::vector<int>> out;
    for (std::size_t mask = 0; mask < (1u << base.size()); ++mask) {
        std::vector<int> s;
        for (std::size_t i = 0; i < base.size(); ++i)
            if (mask & (1u << i)) s.push_back(base[i]);
        out.push_back(std::move(s));
    }
    return out;
}

// ---- example1-chain -------------------------------------------------------

void suite_example1_chain(SuiteBuilder& b, const SuiteConfig& cfg) {
    RingId ring = RingId::square_zero(FieldKind::F2);
    RingMatrix rel(ring, 1, 1);
    rel.at(0, 0) = sq_var(ring, 1);
    Presentation quot = make_presentation(ring, 1, rel, "R/(x1)");

    FpCertificate cert = classify_fp(quot, 2, cfg.windows);
    json data;
    data["level_verified"] = cert.level_verified;
    data["growth_stage"] = cert.growth_stage;
    for (const auto& [key, count] : cert.stage_counts)
        data["counts"][std::to_string(key.first) + "@" + std::to_string(key.second)] = count;
    b.check("fp-classification",
            "R/(x1) over the square-zero algebra: verified to level 1, syzygy growth at stage 2",
            cert.verdict == FpVerdict::SyzygyGrowth && cert.growth_stage == 2 &&
                cert.level_verified >= 1,
            data);

    bool counts_match = true;
    for (int w : cfg.windows) {
        auto it = cert.stage_counts.find({2, w});
        counts_match = counts_match && it != cert.stage_counts.end() && it->second == w;
    }
    b.check("kernel-growth",
            "stage-2 generator counts for R/(x1) equal the window sizes", counts_match, data);

    RingMatrix gens(ring, 1, 1);
    gens.at(0, 0) = sq_var(ring, 1);
    FpCertificate icert = classify_fp_submodule(gens, 2, cfg.windows);
    bool ideal_ok = icert.verdict == FpVerdict::SyzygyGrowth && icert.growth_stage == 1;
    for (int w : cfg.windows) {
        auto it = icert.stage_counts.find({1, w});
        ideal_ok = ideal_ok && it != icert.stage_counts.end() && it->second == w;
    }
    json idata;
    idata["growth_stage"] = icert.growth_stage;
    b.check("fp-classification",
            "the ideal (x1) shows syzygy growth already at stage 1, counts equal to windows",
            ideal_ok, idata);
}

// ---- z4-ideal -------------------------------------------------------------

void suite_z4_ideal(SuiteBuilder& b, const SuiteConfig&) {
    RingId ring = RingId::modular(4);
    Presentation ideal = diagonal_presentation(ring, {2}, "2Z/4Z");

    RingMatrix canon = module_canonical_form(ideal);
    bool periodic = true;
    Presentation stage = ideal;
    for (int depth = 1; depth <= 5 && periodic; ++depth) {
        stage = syzygy(stage);
        periodic = stage.generators == 1 && module_canonical_form(stage) == canon;
    }
    b.check("periodic-resolution",
            "every syzygy of 2Z/4Z through depth 5 is isomorphic to 2Z/4Z", periodic);

    ProjectivityResult proj = is_projective(ideal);
    b.check("projectivity", "2Z/4Z is not projective over Z/4", !proj.projective);

    FpCertificate cert = classify_fp(ideal, 5, {});
    b.check("fp-classification", "2Z/4Z is finitely presented to level 5",
            cert.verdict == FpVerdict::FPnVerified && cert.level_verified >= 5,
            json{{"level_verified", cert.level_verified}});

    HomologyValue e = ext_group(ideal, ideal, 1);
    b.check("periodic-resolution", "Ext^1 over Z/4 of Z/2 with itself is Z/2",
            !e.windowed && e.group.free_rank == 0 && e.group.torsion == std::vector<mpz_class>{2},
            json{{"value", describe(e.group)}});
}

// ---- appendixA-bezout -----------------------------------------------------

bool witness_resubstitutes(const IdealFG& ideal, const Elem& target,
                           const MembershipResult& m) {
    if (!m.member) return false;
    Elem acc = zero(target.ring);
    for (std::size_t i = 0; i < ideal.generators.size(); ++i)
        acc = add(acc, mul(ideal.generators[i], m.coefficients[i]));
    return acc == target;
}

void suite_bezout(SuiteBuilder& b, const SuiteConfig& cfg) {
    auto expect_reduce = [&](const IdealFG& ideal, const Elem& want, const std::string& txt) {
        Elem got = bezout_reduce(ideal);
        b.check("bezout-reduction", txt, got == want, json{{"result", print_elem(got)}});
    };
    expect_reduce(make_ideal({u_elem(2, {}), u_elem(4, {})}), u_elem(2, {}),
                  "<(2; ), (4; )> reduces to (2; )");
    expect_reduce(make_ideal({u_elem(2, {1})}), u_elem(2, {1}),
                  "<(2; 1)> reduces to itself");
    expect_reduce(make_ideal({u_elem(3, {}), u_elem(0, {1})}), u_elem(3, {}),
                  "<(3; ), (0; 1)> reduces to (3; )");

    MembershipResult neg = ideal_membership(make_ideal({u_elem(2, {})}), u_elem(1, {}));
    b.check("ideal-membership", "(1; ) is not in <(2; )> and the obstruction names the gcd",
            !neg.member && neg.obstruction.find("gcd") != std::string::npos,
            json{{"obstruction", neg.obstruction}});
    IdealFG tiny = make_ideal({u_elem(2, {2})});
    MembershipResult pos = ideal_membership(tiny, u_elem(0, {2}));
    b.check("ideal-membership", "(0; 2) is in <(2; 2)> with an exact witness",
            witness_resubstitutes(tiny, u_elem(0, {2}), pos));

    const int total = cfg.samples > 0 ? cfg.samples : 200;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> ngen(1, 4), coef(-60, 60), pick(0, 3);
    int verified = 0;
    for (int t = 0; t < total; ++t) {
        std::vector<Elem> gens;
        for (int g = 0, k = ngen(rng); g < k; ++g) {
            std::vector<int> supp;
            for (int s = 1; s <= 8; ++s)
                if (pick(rng) == 0) supp.push_back(s);
            gens.push_back(u_elem(coef(rng), supp));
        }
        IdealFG ideal = make_ideal(gens);
        if (ideal.generators.empty()) {
            ideal = make_ideal({u_elem(1 + coef(rng) * coef(rng), {})});
        }
        Elem r = bezout_reduce(ideal);
        IdealFG principal = make_ideal({r});
        bool ok = witness_resubstitutes(ideal, r, ideal_membership(ideal, r));
        for (const Elem& g : ideal.generators)
            ok = ok && witness_resubstitutes(principal, g, ideal_membership(principal, g));
        if (ok) ++verified;
    }
    b.check("bezout-reduction",
            std::to_string(verified) + "/" + std::to_string(total) +
                " random reductions verified by membership witnesses in both directions",
            verified == total, json{{"verified", verified}, {"total", total}});
}

// ---- appendixA-splittings -------------------------------------------------

void suite_splittings(SuiteBuilder& b, const SuiteConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> coef(-9, 9), pick(0, 2);
    const auto supports = subsets_of({1, 2, 3, 4});
    int cases = 0, failures = 0;
    for (int m = 3; m <= 49; m += 2)
        for (const auto& a : supports) {
            ++cases;
            try {
                SplitWitness w = principal_split(m, a);
                bool ok = mul(w.idempotent, w.idempotent) == w.idempotent;
                for (int s = 0; s < 5 && ok; ++s) {
                    std::vector<int> supp;
                    for (int i = 1; i <= 5; ++i)
                        if (pick(rng) == 0) supp.push_back(i);
                    Elem r = u_elem(coef(rng), supp);
                    Elem x = mul(w.generator, r);
                    Elem back = mul(w.generator, mul(w.section_image, r));
                    ok = back == x;
                }
                if (!ok) ++failures;
            } catch (const std::exception&) {
                ++failures;
            }
        }
    b.check("principal-splitting",
            "section and idempotent verified for every odd m in [3..49] and support in [1..4]",
            failures == 0, json{{"cases", cases}, {"failures", failures}});
}

// ---- appendixA-kernel-growth ----------------------------------------------

void suite_kernel_growth(SuiteBuilder& b, const SuiteConfig& cfg) {
    KernelGrowthReport r1 = kernel_growth_witness(2, {}, cfg.windows);
    bool ok1 = r1.growing;
    for (std::size_t i = 0; i < cfg.windows.size(); ++i)
        ok1 = ok1 && r1.counts[i].second == cfg.windows[i];
    b.check("kernel-growth",
            "kernel generator counts for (2; ) equal the window sizes and grow strictly", ok1,
            json{{"counts", describe_counts(r1.counts)}});

    KernelGrowthReport r2 = kernel_growth_witness(2, {1}, {2, 4, 8});
    bool ok2 = r2.counts == std::vector<std::pair<int, int>>{{2, 1}, {4, 3}, {8, 7}};
    b.check("kernel-growth", "counts for (2; 1) at windows 2,4,8 are 1,3,7", ok2,
            json{{"counts", describe_counts(r2.counts)}});

    KernelGrowthReport r3 = kernel_growth_witness(4, {}, {1});
    b.check("kernel-growth", "count for (4; ) at window 1 is 1",
            r3.counts.size() == 1 && r3.counts[0].second == 1,
            json{{"counts", describe_counts(r3.counts)}});

    b.check("projectivity",
            "for even integer part the kernel growth witnesses non-finite generation; "
            "no window-scale projectivity verdict is claimed",
            true, json{{"note", "growth witness only"}});
}

// ---- nontrivial-torsion ---------------------------------------------------

void suite_nontrivial_torsion(SuiteBuilder& b, const SuiteConfig&) {
    const std::vector<mpz_class> ms = {3, 5, 7};
    const std::vector<std::vector<int>> supports = {{}, {1}, {1, 2}};
    const int window = 4;

    int corpus_ok = 0;
    int inj_flagged = 0;
    for (const mpz_class& m : ms)
        for (const auto& a : supports) {
            NonSplitReport rep = nonsplit_extension_check(m, a);
            if (rep.nonsplit && !rep.obstruction.empty()) ++corpus_ok;
            Presentation sub = principal_ideal_module(u_elem(m * m, a), window);
            Presentation c = quotient_c_module(m, a, window);
            std::vector<bool> inj = fpn_injective_test(sub, {c}, window);
            if (!inj.empty() && !inj[0]) ++inj_flagged;
        }
    b.check("nonsplit-extension",
            "the inclusion of (m^2,a)R into (m,a)R fails to split for all 9 corpus pairs",
            corpus_ok == 9, json{{"verified", corpus_ok}});
    b.check("relative-injectivity",
            "(m^2,a)R fails the relative Ext^1 test against C(m,a) for all 9 corpus pairs "
            "(relative to this finite family only)",
            inj_flagged == 9, json{{"flagged", inj_flagged}});

    int sweep = 0, sweep_ok = 0;
    for (int m = 3; m <= 99; m += 2)
        for (const auto& a : subsets_of({1, 2, 3, 4})) {
            ++sweep;
            if (nonsplit_extension_check(m, a).nonsplit) ++sweep_ok;
        }
    b.check("nonsplit-extension",
            "full sweep over odd m in [3..99] and supports in [1..4]: no splitting anywhere",
            sweep_ok == sweep, json{{"cases", sweep}, {"nonsplit", sweep_ok}});
}

// ---- duality --------------------------------------------------------------

void suite_duality_z4(SuiteBuilder& b, const SuiteConfig&) {
    auto sweep_over = [&](const mpz_class& n, const std::vector<Presentation>& mods,
                          const std::string& txt) {
        DualityReport rep = duality_sweep(mods);
        json data;
        data["pairs"] = rep.pairs;
        data["counterexamples"] = rep.counterexamples;
        b.check("character-duality", txt, rep.pass(), data);
        (void)n;
    };

    RingId z4 = RingId::modular(4);
    Presentation mixed = direct_sum(free_presentation(z4, 1), diagonal_presentation(z4, {2}));
    mixed.label = "Z/4+Z/2";
    std::vector<Presentation> mods4 = {
        make_presentation(z4, 0, RingMatrix(z4, 0, 0), "0"),
        diagonal_presentation(z4, {2}, "Z/2"),
        free_presentation(z4, 1, "Z/4"),
        diagonal_presentation(z4, {2, 2}, "Z/2+Z/2"),
        free_presentation(z4, 2, "Z/4+Z/4"),
        mixed,
        make_presentation(z4, 2, from_rows(z4, {{2, 1}, {0, 2}}), "upper-triangular"),
    };
    sweep_over(4, mods4,
               "over Z/4, Tor_1(F,M) vanishes exactly when Ext^1(F,M^+) does, on all pairs");

    RingId z2 = RingId::modular(2);
    std::vector<Presentation> mods2 = {
        make_presentation(z2, 0, RingMatrix(z2, 0, 0), "0"),
        free_presentation(z2, 1, "Z/2"),
        free_presentation(z2, 2, "Z/2+Z/2"),
    };
    sweep_over(2, mods2, "over the field Z/2 every Tor_1 and dual Ext^1 pair vanishes");

    RingId z9 = RingId::modular(9);
    std::vector<Presentation> mods9 = {
        make_presentation(z9, 0, RingMatrix(z9, 0, 0), "0"),
        diagonal_presentation(z9, {3}, "Z/3"),
        free_presentation(z9, 1, "Z/9"),
        diagonal_presentation(z9, {3, 3}, "Z/3+Z/3"),
    };
    sweep_over(9, mods9, "over Z/9 the cyclic sweep shows no duality counterexample");
}

// ---- classical-torsion-z --------------------------------------------------

ModuleUniverse build_z_universe() {
    RingId z = RingId::integers();
    ModuleUniverse u;
    u.ring = z;
    auto& mods = u.modules;
    mods.push_back(make_presentation(z, 0, RingMatrix(z, 0, 0), "0"));          // 0
    mods.push_back(free_presentation(z, 1, "Z"));                               // 1
    mods.push_back(free_presentation(z, 2, "Z^2"));                             // 2
    mods.push_back(free_presentation(z, 3, "Z^3"));                             // 3
    mods.push_back(diagonal_presentation(z, {2}, "Z/2"));                       // 4
    mods.push_back(diagonal_presentation(z, {4}, "Z/4"));                       // 5
    mods.push_back(diagonal_presentation(z, {6}, "Z/6"));                       // 6
    mods.push_back(diagonal_presentation(z, {2, 3}, "Z/2+Z/3"));                // 7
    Presentation m8 = direct_sum(free_presentation(z, 1), diagonal_presentation(z, {2}));
    m8.label = "Z+Z/2";
    mods.push_back(m8);                                                         // 8
    Presentation m9 = direct_sum(free_presentation(z, 1), diagonal_presentation(z, {6}));
    m9.label = "Z+Z/6";
    mods.push_back(m9);                                                         // 9
    Presentation m10 = direct_sum(free_presentation(z, 2), diagonal_presentation(z, {2}));
    m10.label = "Z^2+Z/2";
    mods.push_back(m10);                                                        // 10
    RingMatrix padded(z, 2, 2);
    padded.at(0, 0) = integer_elem(2);
    padded.at(0, 1) = integer_elem(0);
    padded.at(1, 0) = integer_elem(0);
    padded.at(1, 1) = integer_elem(0);
    mods.push_back(make_presentation(z, 2, padded, "coker[2 0; 0 0]"));         // 11

    auto one_by_one = [&](long v) {
        RingMatrix m(z, 1, 1);
        m.at(0, 0) = integer_elem(v);
        return m;
    };
    u.maps.push_back({5, 4, one_by_one(1), DeclaredMap::Kind::Surjection, "Z/4->>Z/2"});
    u.maps.push_back({6, 4, one_by_one(1), DeclaredMap::Kind::Surjection, "Z/6->>Z/2"});
    u.maps.push_back({1, 1, one_by_one(2), DeclaredMap::Kind::Inclusion, "2Z->Z"});
    u.maps.push_back({4, 5, one_by_one(2), DeclaredMap::Kind::Inclusion, "Z/2->Z/4"});
    RingMatrix incl(z, 2, 1);
    incl.at(0, 0) = integer_elem(1);
    incl.at(1, 0) = integer_elem(0);
    u.maps.push_back({1, 8, incl, DeclaredMap::Kind::Inclusion, "Z->Z+Z/2"});
    RingMatrix proj(z, 1, 2);
    proj.at(0, 0) = integer_elem(0);
    proj.at(0, 1) = integer_elem(1);
    u.maps.push_back({8, 4, proj, DeclaredMap::Kind::Surjection, "Z+Z/2->>Z/2"});
    return u;
}

void suite_classical_torsion(SuiteBuilder& b, const SuiteConfig&) {
    ModuleUniverse u = build_z_universe();
    TorsionPairReport rep = check_torsion_pair(u, torsion_predicate(), torsion_free_predicate());
    json data;
    data["orthogonality_pairs"] = rep.orthogonality_pairs;
    data["closure_checks"] = rep.closure_checks;
    data["sum_checks"] = rep.sum_checks;
    for (const auto& f : rep.failures) data["failures"].push_back(f.check + ": " + f.detail);
    b.check("torsion-pair-axioms",
            "the (finite groups, free groups) pair passes every axiom check on the 12-module "
            "universe (relative to this universe and its declared maps)",
            rep.pass(), data);

    bool idem = true, quot_zero = true;
    for (const Presentation& p : u.modules) {
        TorsionDecomposition d = torsion_subgroup(p);
        TorsionDecomposition dd = torsion_subgroup(d.torsion_part);
        idem = idem && abelian_invariants(dd.torsion_part) == abelian_invariants(d.torsion_part);
        TorsionDecomposition q = torsion_subgroup(d.free_quotient);
        quot_zero = quot_zero && abelian_invariants(q.torsion_part).is_zero();
    }
    b.check("torsion-idempotence", "t(t(M)) = t(M) for every universe member", idem);
    b.check("torsion-idempotence", "t(M/t(M)) = 0 for every universe member", quot_zero);

    bool orth = true;
    for (const Presentation& p : u.modules)
        for (const Presentation& q : u.modules) {
            TorsionDecomposition dp = torsion_subgroup(p);
            TorsionDecomposition dq = torsion_subgroup(q);
            orth = orth && hom_module(dp.torsion_part, dq.free_quotient).is_zero();
        }
    b.check("torsion-pair-axioms", "Hom(t(M), N/t(N)) = 0 for all universe pairs", orth);

    // Negative control: shrinking T to {Z/2} must break maximality at Z/6.
    ModuleUniverse small;
    small.ring = u.ring;
    for (int i : {1, 4, 6, 2, 8}) small.modules.push_back(u.modules[static_cast<std::size_t>(i)]);
    AbGroupValue z2_only{0, {2}};
    TorsionPairReport bad = check_torsion_pair(
        small,
        [&](const Presentation& p) { return abelian_invariants(p) == z2_only; },
        torsion_free_predicate());
    bool caught = !bad.pass();
    bool names_z6 = false;
    for (const auto& f : bad.failures) names_z6 = names_z6 || f.detail.find("Z/6") != std::string::npos;
    b.check("torsion-pair-axioms",
            "shrinking T to {Z/2} is rejected and the report names Z/6 as the witness",
            caught && names_z6);
}

// ---- teo-big-desk ---------------------------------------------------------

void suite_big_desk(SuiteBuilder& b, const SuiteConfig& cfg) {
    const int window = std::min(cfg.windows.empty() ? 8 : cfg.windows.back(), 8);
    const std::vector<mpz_class> ms = {3, 5, 7};
    const std::vector<std::vector<int>> supports = {{}, {1}, {1, 2}};
    RingId ring = RingId::unitification();

    std::vector<Presentation> family;  // the 9 C(m,a)
    for (const mpz_class& m : ms)
        for (const auto& a : supports) family.push_back(quotient_c_module(m, a, window));
    std::vector<Presentation> corpus = family;
    corpus.push_back(free_presentation(ring, 1, "R"));
    corpus.push_back(free_presentation(ring, 2, "R^2"));
    corpus.push_back(free_presentation(ring, 3, "R^3"));

    int pd_ok = 0;
    for (const Presentation& p : corpus)
        if (pd_at_most_one(p, window)) ++pd_ok;
    b.check("pd-bound", "projective dimension at most 1 for all 12 corpus modules",
            pd_ok == static_cast<int>(corpus.size()),
            json{{"verified", pd_ok}, {"total", corpus.size()}, {"window", window}});

    int ext2_zero = 0, ext2_total = 0;
    for (const Presentation& f : family)
        for (const Presentation& m : corpus) {
            ++ext2_total;
            if (ext_group(f, m, 2, window).is_zero()) ++ext2_zero;
        }
    b.check("ext-square-vanishing",
            "Ext^2(F, M) vanishes for every family member F and corpus module M",
            ext2_zero == ext2_total, json{{"zero", ext2_zero}, {"total", ext2_total}});

    // Quotient closure of the relative-injectivity verdict: sources are the
    // C(3,a), tested against the coprime subfamily m in {5,7}; each target is
    // the quotient of its source by one extra annihilated coordinate.
    std::vector<Presentation> coprime(family.begin() + 3, family.end());
    auto passes = [&](const Presentation& m) {
        std::vector<bool> v = fpn_injective_test(m, coprime, window);
        return std::all_of(v.begin(), v.end(), [](bool x) { return x; });
    };
    int nonvacuous = 0;
    bool closure_ok = true;
    for (int k = 0; k < 3; ++k) {
        const Presentation& src = family[static_cast<std::size_t>(k)];
        RingMatrix rel(ring, 1, src.relations.cols + 1);
        for (int j = 0; j < src.relations.cols; ++j) rel.at(0, j) = src.relations.at(0, j);
        rel.at(0, src.relations.cols) = u_elem(0, {3});
        Presentation tgt = make_presentation(ring, 1, rel, src.label + "/e3");
        if (passes(src)) {
            ++nonvacuous;
            closure_ok = closure_ok && passes(tgt);
        }
    }
    b.check("quotient-closure",
            "whenever the source of a corpus surjection passes the relative Ext^1 test, "
            "so does its quotient (relative to the finite coprime subfamily)",
            closure_ok && nonvacuous == 3, json{{"nonvacuous", nonvacuous}});

    // Subfamily monotonicity of the relative test, spot-checked on one module.
    std::vector<bool> full = fpn_injective_test(corpus[0], family, window);
    bool mono = true;
    for (std::size_t i = 0; i < family.size(); ++i) {
        std::vector<bool> single = fpn_injective_test(corpus[0], {family[i]}, window);
        mono = mono && single.size() == 1 && single[0] == full[i];
    }
    b.check("relative-injectivity",
            "relative verdicts restrict consistently to subfamilies", mono);
}

using SuiteFn = void (*)(SuiteBuilder&, const SuiteConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> reg = {
        {"example1-chain", suite_example1_chain},
        {"z4-ideal", suite_z4_ideal},
        {"appendixA-bezout", suite_bezout},
        {"appendixA-splittings", suite_splittings},
        {"appendixA-kernel-growth", suite_kernel_growth},
        {"nontrivial-torsion", suite_nontrivial_torsion},
        {"duality-z4", suite_duality_z4},
        {"classical-torsion-z", suite_classical_torsion},
        {"teo-big-desk", suite_big_desk},
    };
    return reg;
}

json config_json(const SuiteConfig& cfg) {
    return json{{"suite", cfg.suite},
                {"windows", cfg.windows},
                {"seed", cfg.seed},
                {"samples", cfg.samples}};
}

}  // namespace

int SuiteReport::passed() const {
    int n = 0;
    for (const auto& c : checks) n += c.pass ? 1 : 0;
    return n;
}

int SuiteReport::failed() const { return static_cast<int>(checks.size()) - passed(); }

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suite_registry()) out.push_back(name);
        return out;
    }();
    return names;
}

SuiteReport run_suite(const SuiteConfig& config) {
    for (std::size_t i = 1; i < config.windows.size(); ++i)
        if (config.windows[i] <= config.windows[i - 1])
            throw std::invalid_argument("windows must be strictly increasing");
    for (const auto& [name, fn] : suite_registry())
        if (name == config.suite) {
            SuiteBuilder b(config);
            fn(b, config);
            return b.rep;
        }
    throw std::invalid_argument("unknown suite: " + config.suite);
}

void write_report(std::ostream& os, const SuiteReport& report, const std::string& format) {
    if (format == "jsonl") {
        for (const auto& c : report.checks) {
            json rec{{"type", "check"},
                     {"suite", report.suite},
                     {"index", c.index},
                     {"anchor", c.anchor},
                     {"claim", c.claim},
                     {"status", c.pass ? "pass" : "fail"},
                     {"data", c.data}};
            os << rec.dump() << "\n";
        }
        json summary{{"type", "summary"},
                     {"suite", report.suite},
                     {"passed", report.passed()},
                     {"failed", report.failed()},
                     {"config", config_json(report.config)}};
        os << summary.dump() << "\n";
        return;
    }
    if (format != "human") throw std::invalid_argument("unknown format: " + format);
    for (const auto& c : report.checks)
        os << (c.pass ? "[pass] " : "[FAIL] ") << "(" << c.anchor << ") " << c.claim << "\n";
    os << report.suite << ": " << report.passed() << " passed, " << report.failed()
       << " failed (seed " << report.config.seed << ")\n";
}

}  // namespace fpnkit
