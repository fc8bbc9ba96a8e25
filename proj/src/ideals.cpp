#include "fpnkit/ideals.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fpnkit {

namespace {

const UElem& as_u(const Elem& x) { return std::get<UElem>(x.v); }

void require_unitification(const Elem& x) {
    if (x.ring.kind != RingKind::Unitification)
        throw std::invalid_argument("ideal elements must live in the unitification ring");
}

int ideal_window(const IdealFG& ideal, int extra) {
    int w = std::max(extra, 1);
    for (const Elem& g : ideal.generators) w = std::max(w, max_support_index(g));
    return w;
}

}  // namespace

IdealFG make_ideal(std::vector<Elem> generators) {
    IdealFG ideal;
    for (Elem& g : generators) {
        require_unitification(g);
        if (is_zero(g)) continue;
        bool dup = false;
        for (const Elem& h : ideal.generators) dup = dup || h == g;
        if (!dup) ideal.generators.push_back(std::move(g));
    }
    return ideal;
}

IdealFG parse_ideal(const std::string& literal) {
    std::string s = literal;
    auto first = s.find_first_not_of(" \t");
    auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos || s[first] != '<' || s[last] != '>')
        throw std::invalid_argument("ideal literal must be of the form <(m; i,...), ...>");
    s = s.substr(first + 1, last - first - 1);

    std::vector<Elem> gens;
    RingId ring = RingId::unitification();
    int depth = 0;
    std::string cur;
    auto flush = [&]() {
        auto b = cur.find_first_not_of(" \t");
        if (b != std::string::npos) gens.push_back(parse_elem(ring, cur));
        cur.clear();
    };
    for (char c : s) {
        if (c == '(') depth++;
        if (c == ')') depth--;
        if (c == ',' && depth == 0) {
            flush();
            continue;
        }
        cur += c;
    }
    if (depth != 0) throw std::invalid_argument("unbalanced parentheses in ideal literal");
    flush();
    if (gens.empty()) throw std::invalid_argument("ideal literal lists no generators");
    return make_ideal(std::move(gens));
}

std::string print_ideal(const IdealFG& ideal) {
    std::string out = "<";
    for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
        if (i) out += ", ";
        out += print_elem(ideal.generators[i]);
    }
    return out + ">";
}

MembershipResult ideal_membership(const IdealFG& ideal, const Elem& x, int bound) {
    require_unitification(x);
    MembershipResult res;
    if (is_zero(x)) {
        res.member = true;
        res.coefficients.assign(ideal.generators.size(), zero(x.ring));
        return res;
    }
    if (ideal.generators.empty()) {
        res.obstruction = "the zero ideal contains only 0";
        return res;
    }

    RingMatrix a(x.ring, 1, static_cast<int>(ideal.generators.size()));
    for (int j = 0; j < a.cols; ++j) a.at(0, j) = ideal.generators[j];
    int window = std::max(ideal_window(ideal, bound), max_support_index(x));
    SolutionSet sol = solve_linear(a, {x}, window);
    if (sol.particular) {
        res.member = true;
        res.coefficients = *sol.particular;
        return res;
    }

    mpz_class d = 0;
    for (const Elem& g : ideal.generators) d = gcd(d, as_u(g).m);
    const mpz_class& xm = as_u(x).m;
    if (d == 0 ? xm != 0 : xm % d != 0) {
        std::ostringstream os;
        os << "integer part " << xm << " is not a multiple of the projection gcd " << d;
        res.obstruction = os.str();
    } else {
        res.obstruction = "the Z/2Z coordinate system has no solution";
    }
    return res;
}

Elem bezout_reduce(const IdealFG& ideal) {
    if (ideal.generators.empty())
        throw std::invalid_argument("bezout_reduce: the zero ideal has no generator");
    const RingId ring = ideal.generators.front().ring;

    mpz_class d = 0;
    std::vector<int> big;  // union of the generator supports
    for (const Elem& g : ideal.generators) {
        d = gcd(d, as_u(g).m);
        std::vector<int> merged;
        std::set_union(big.begin(), big.end(), as_u(g).supp.begin(), as_u(g).supp.end(),
                       std::back_inserter(merged));
        big = std::move(merged);
    }

    if (d % 2 == 0) {
        // Even gcd: the full support union is reachable, and every generator
        // reduces against (d, big) because the Z/2Z block acts trivially
        // through even integer parts.
        return u_elem(d, big);
    }

    // Odd gcd: find one element (d, a0) of the ideal via a Bezout
    // combination of the integer parts, then saturate the known part of
    // J = { a : (d, a) in the ideal } using
    //   a, b in J          =>  a /\ b in J        via (d,a) - (d,b) + (d,b)(1,a)
    //   n_i/d even, c in J =>  a_i (+) c in J     via (n_i,a_i) - (d,c)(n_i/d - 1, c)
    //   n_i/d odd          =>  a_i in J           same identity
    // J only contains subsets of the support union, so this terminates; the
    // intersection of everything found is the minimal-support representative
    // and (d, that intersection) generates the ideal.
    mpz_class g = 0;
    Elem acc = zero(ring);
    for (const Elem& gen : ideal.generators) {
        const mpz_class& n = as_u(gen).m;
        mpz_class s, t, g2;
        mpz_gcdext(g2.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(),
                   n.get_mpz_t());
        acc = add(mul(u_elem(s, {}), acc), mul(u_elem(t, {}), gen));
        g = g2;
    }
    if (as_u(acc).m == -d) acc = neg(acc);
    if (as_u(acc).m != d) throw std::logic_error("bezout_reduce: combination lost the gcd");

    std::set<std::vector<int>> J = {as_u(acc).supp};
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::vector<int>> snapshot(J.begin(), J.end());
        for (const auto& a : snapshot)
            for (const auto& b : snapshot) changed |= J.insert(supp_and(a, b)).second;
        for (const Elem& gen : ideal.generators) {
            mpz_class mi = as_u(gen).m / d;
            if (mi % 2 != 0) {
                changed |= J.insert(as_u(gen).supp).second;
            } else {
                for (const auto& c : snapshot)
                    changed |= J.insert(supp_xor(as_u(gen).supp, c)).second;
            }
        }
    }

    std::vector<int> c = big;
    for (const auto& a : J) c = supp_and(c, a);
    return u_elem(d, c);
}

SplitWitness principal_split(const mpz_class& m, const std::vector<int>& supp) {
    if (m % 2 == 0)
        throw std::invalid_argument("principal_split needs an odd integer part");
    SplitWitness w;
    w.generator = u_elem(m, supp);
    w.section_image = u_elem(1, supp);
    w.idempotent = u_elem(1, supp);
    if (mul(w.idempotent, w.idempotent) != w.idempotent)
        throw std::logic_error("principal_split: idempotent check failed");

    // Well-definedness of (m,a) |-> (1,a): every annihilator of the
    // generator (within its support window) must also kill the image.
    RingMatrix col(w.generator.ring, 1, 1);
    col.at(0, 0) = w.generator;
    int window = std::max(1, max_support_index(w.generator));
    for (const auto& z : kernel_basis(col, window))
        if (!is_zero(mul(w.section_image, z[0])))
            throw std::logic_error("principal_split: section is not well defined");
    return w;
}

KernelGrowthReport kernel_growth_witness(const mpz_class& m2, const std::vector<int>& supp,
                                         const std::vector<int>& windows) {
    if (m2 % 2 != 0)
        throw std::invalid_argument("kernel_growth_witness needs an even integer part");
    Elem u = u_elem(m2, supp);
    RingMatrix col(u.ring, 1, 1);
    col.at(0, 0) = u;

    KernelGrowthReport rep;
    for (int w : windows) {
        if (w < max_support_index(u))
            throw std::invalid_argument("window does not cover the generator support");
        auto gens = minimize_generators(u.ring, kernel_basis(col, w), w);
        rep.counts.emplace_back(w, static_cast<int>(gens.size()));
    }
    rep.growing = rep.counts.size() >= 2;
    for (std::size_t i = 1; i < rep.counts.size(); ++i)
        rep.growing = rep.growing && rep.counts[i].second > rep.counts[i - 1].second;
    return rep;
}

NonSplitReport nonsplit_extension_check(const mpz_class& m, const std::vector<int>& supp) {
    if (m % 2 == 0 || m == 1 || m == -1)
        throw std::invalid_argument("nonsplit_extension_check needs odd |m| > 1");
    // A section q of (m^2,a)R -> (m,a)R sends the generator (m,a) to some
    // (m^2,a)(n,b); being a section forces (m,a)(m^2,a)(n,b) = (m^2,a).
    Elem lhs = mul(u_elem(m, supp), u_elem(m * m, supp));
    RingMatrix a(lhs.ring, 1, 1);
    a.at(0, 0) = lhs;
    Elem rhs = u_elem(m * m, supp);
    int window = std::max(1, max_support_index(rhs));
    SolutionSet sol = solve_linear(a, {rhs}, window);

    NonSplitReport rep;
    rep.nonsplit = !sol.particular.has_value();
    if (rep.nonsplit) {
        std::ostringstream os;
        os << "a section would need " << mpz_class(m * m) << " = "
           << mpz_class(m * m * m) << " * n over Z, which has no integer solution";
        rep.obstruction = os.str();
    }
    return rep;
}

Presentation principal_ideal_module(const Elem& u, int window, std::string label) {
    require_unitification(u);
    RingMatrix col(u.ring, 1, 1);
    col.at(0, 0) = u;
    auto ann = minimize_generators(u.ring, kernel_basis(col, window), window);
    RingMatrix rel(u.ring, 1, static_cast<int>(ann.size()));
    for (int j = 0; j < rel.cols; ++j) rel.at(0, j) = ann[static_cast<std::size_t>(j)][0];
    if (label.empty()) label = print_elem(u) + "R";
    return make_presentation(u.ring, 1, rel, std::move(label));
}

Presentation quotient_c_module(const mpz_class& m, const std::vector<int>& supp,
                               int window) {
    Elem u = u_elem(m, supp);
    RingMatrix col(u.ring, 1, 1);
    col.at(0, 0) = u;
    auto ann = minimize_generators(u.ring, kernel_basis(col, window), window);
    RingMatrix rel(u.ring, 1, 1 + static_cast<int>(ann.size()));
    rel.at(0, 0) = u;
    for (std::size_t j = 0; j < ann.size(); ++j) rel.at(0, static_cast<int>(j) + 1) = ann[j][0];
    std::string label = "C" + print_elem(u);
    return make_presentation(u.ring, 1, rel, std::move(label));
}

}  // namespace fpnkit
