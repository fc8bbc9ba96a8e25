#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "fpnkit/matrix.hpp"

using namespace fpnkit;

namespace {

const RingId Z = RingId::integers();

RingMatrix random_int_matrix(std::mt19937_64& rng, int maxdim, int lo, int hi) {
    std::uniform_int_distribution<int> dim(1, maxdim), val(lo, hi);
    RingMatrix m(Z, dim(rng), dim(rng));
    for (auto& e : m.entries) e = integer_elem(val(rng));
    return m;
}

// k-th determinantal divisor: gcd of all k x k minors.
mpz_class determinantal_divisor(const RingMatrix& a, int k) {
    std::vector<int> ri(a.rows), ci(a.cols);
    std::iota(ri.begin(), ri.end(), 0);
    std::iota(ci.begin(), ci.end(), 0);
    mpz_class g = 0;
    std::vector<int> rsel(k), csel(k);
    std::function<void(int, int)> rows = [&](int start, int depth) {
        if (depth == k) {
            std::function<void(int, int)> cols = [&](int cstart, int cdepth) {
                if (cdepth == k) {
                    RingMatrix minor(Z, k, k);
                    for (int i = 0; i < k; ++i)
                        for (int j = 0; j < k; ++j) minor.at(i, j) = a.at(rsel[i], csel[j]);
                    g = gcd(g, det(minor));
                    return;
                }
                for (int c = cstart; c < a.cols; ++c) {
                    csel[cdepth] = c;
                    cols(c + 1, cdepth + 1);
                }
            };
            cols(0, 0);
            return;
        }
        for (int r = start; r < a.rows; ++r) {
            rsel[depth] = r;
            rows(r + 1, depth + 1);
        }
    };
    rows(0, 0);
    return g;
}

// Row span of a matrix over Z/n as an explicit set of vectors.
std::set<std::vector<mpz_class>> row_span_set(const RingMatrix& a) {
    const mpz_class n = a.ring.modulus;
    std::set<std::vector<mpz_class>> span;
    std::vector<mpz_class> coeff(static_cast<std::size_t>(a.rows), 0);
    while (true) {
        std::vector<mpz_class> v(static_cast<std::size_t>(a.cols), 0);
        for (int i = 0; i < a.rows; ++i)
            for (int j = 0; j < a.cols; ++j) {
                v[static_cast<std::size_t>(j)] +=
                    coeff[static_cast<std::size_t>(i)] * std::get<mpz_class>(a.at(i, j).v);
                v[static_cast<std::size_t>(j)] %= n;
            }
        span.insert(v);
        int k = 0;
        while (k < a.rows && coeff[static_cast<std::size_t>(k)] == n - 1)
            coeff[static_cast<std::size_t>(k++)] = 0;
        if (k == a.rows) break;
        coeff[static_cast<std::size_t>(k)] += 1;
    }
    return span;
}

}  // namespace

TEST_CASE("smith normal form on worked examples") {
    RingMatrix a = from_rows(Z, {{2, 4}, {6, 8}});
    SmithDecomposition s = smith_normal_form(a);
    CHECK(s.invariant_factors == std::vector<mpz_class>{2, 4});
    CHECK(mat_mul(mat_mul(s.U, a), s.V) == s.D);

    CHECK(smith_normal_form(from_rows(Z, {{1, 0}, {0, 1}})).invariant_factors ==
          std::vector<mpz_class>{1, 1});
    CHECK(smith_normal_form(from_rows(Z, {{0, 0}})).invariant_factors ==
          std::vector<mpz_class>{0});
    CHECK(smith_normal_form(from_rows(Z, {{6, 0}, {0, 10}})).invariant_factors ==
          std::vector<mpz_class>{2, 30});
}

TEST_CASE("smith invariants equal determinantal divisor ratios on random matrices") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        RingMatrix a = random_int_matrix(rng, 4, -5, 5);
        SmithDecomposition s = smith_normal_form(a);
        CHECK(mat_mul(mat_mul(s.U, a), s.V) == s.D);
        mpz_class prev = 1;
        for (int k = 1; k <= static_cast<int>(s.invariant_factors.size()); ++k) {
            mpz_class dk = determinantal_divisor(a, k);
            mpz_class expect = prev == 0 ? mpz_class(0) : mpz_class(dk / prev);
            CHECK(s.invariant_factors[static_cast<std::size_t>(k - 1)] == expect);
            prev = dk;
            if (prev == 0) break;
        }
        // divisibility chain
        for (std::size_t i = 1; i < s.invariant_factors.size(); ++i)
            if (s.invariant_factors[i - 1] != 0)
                CHECK(s.invariant_factors[i] % s.invariant_factors[i - 1] == 0);
    }
}

TEST_CASE("howell form is a canonical row-span representative over Z/4") {
    RingId z4 = RingId::modular(4);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> val(0, 3);
    std::vector<RingMatrix> mats;
    for (int t = 0; t < 60; ++t) {
        RingMatrix m(z4, 2, 2);
        for (auto& e : m.entries) e = modular_elem(z4, val(rng));
        mats.push_back(m);
    }
    std::vector<std::set<std::vector<mpz_class>>> spans;
    std::vector<RingMatrix> howells;
    for (const auto& m : mats) {
        spans.push_back(row_span_set(m));
        howells.push_back(howell_form(m));
    }
    for (std::size_t i = 0; i < mats.size(); ++i)
        for (std::size_t j = i + 1; j < mats.size(); ++j)
            CHECK((spans[i] == spans[j]) == (howells[i] == howells[j]));
}

TEST_CASE("integer and modular linear solving") {
    SolutionSet s1 = solve_linear(from_rows(Z, {{2}}), {integer_elem(4)});
    REQUIRE(s1.particular.has_value());
    CHECK((*s1.particular)[0] == integer_elem(2));
    CHECK_FALSE(solve_linear(from_rows(Z, {{2}}), {integer_elem(3)}).particular.has_value());

    RingId z4 = RingId::modular(4);
    RingMatrix a(z4, 1, 1);
    a.at(0, 0) = modular_elem(z4, 2);
    SolutionSet s2 = solve_linear(a, {modular_elem(z4, 2)});
    REQUIRE(s2.particular.has_value());
    CHECK(mul(a.at(0, 0), (*s2.particular)[0]) == modular_elem(z4, 2));
    REQUIRE(s2.kernel_generators.size() == 1);
    CHECK(s2.kernel_generators[0][0] == modular_elem(z4, 2));
    CHECK_FALSE(solve_linear(a, {modular_elem(z4, 1)}).particular.has_value());
}

TEST_CASE("unitification solving distinguishes parity-coupled systems") {
    RingId u = RingId::unitification();
    RingMatrix a(u, 1, 1);
    a.at(0, 0) = u_elem(2, {});
    // (2; ) r always has empty support, so (0; 1) is unreachable
    CHECK_FALSE(solve_linear(a, {u_elem(0, {1})}, 2).particular.has_value());

    RingMatrix b(u, 1, 1);
    b.at(0, 0) = u_elem(2, {1});
    SolutionSet s = solve_linear(b, {u_elem(0, {1})}, 2);
    REQUIRE(s.particular.has_value());
    CHECK(mul(b.at(0, 0), (*s.particular)[0]) == u_elem(0, {1}));

    auto k = kernel_basis(a, 3);
    CHECK(k.size() == 3);
    for (const auto& v : k) CHECK(is_zero(mul(a.at(0, 0), v[0])));
}

TEST_CASE("kernel generator counts are monotone in the window") {
    RingId u = RingId::unitification();
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> coef(-6, 6), pick(0, 2);
    for (int t = 0; t < 20; ++t) {
        RingMatrix a(u, 1, 2);
        for (auto& e : a.entries) {
            std::vector<int> supp;
            for (int s = 1; s <= 3; ++s)
                if (pick(rng) == 0) supp.push_back(s);
            e = u_elem(coef(rng), supp);
        }
        std::size_t prev = 0;
        for (int w : {3, 4, 5}) {
            auto gens = minimize_generators(u, kernel_basis(a, w), w);
            for (const auto& g : gens) {
                std::vector<Elem> img = mat_apply(a, g);
                for (const auto& e : img) CHECK(is_zero(e));
            }
            CHECK(gens.size() >= prev);
            prev = gens.size();
        }
    }
}

TEST_CASE("square-zero solving") {
    RingId sq = RingId::square_zero(FieldKind::F2);
    RingMatrix a(sq, 1, 1);
    a.at(0, 0) = sq_var(sq, 1);
    // x1 * x1 = 0, so x1 is in the kernel but 1 is not reachable
    CHECK_FALSE(solve_linear(a, {one(sq)}, 2).particular.has_value());
    auto k = kernel_basis(a, 2);
    CHECK(k.size() == 2);
    SolutionSet s = solve_linear(a, {zero(sq)}, 2);
    CHECK(s.particular.has_value());
}

TEST_CASE("span membership returns exact witnesses") {
    RingId u = RingId::unitification();
    std::vector<std::vector<Elem>> cols = {{u_elem(2, {})}, {u_elem(3, {1})}};
    auto w = span_membership(u, cols, {u_elem(1, {1})}, 2);
    REQUIRE(w.has_value());
    Elem acc = zero(u);
    for (std::size_t i = 0; i < cols.size(); ++i) acc = add(acc, mul(cols[i][0], (*w)[i]));
    CHECK(acc == u_elem(1, {1}));
}

TEST_CASE("lattice quotients") {
    auto [fr1, t1] = lattice_quotient(2, {{1, 0}, {0, 1}}, {{2, 0}, {0, 3}});
    CHECK(fr1 == 0);
    CHECK(t1 == std::vector<mpz_class>{6});

    auto [fr2, t2] = lattice_quotient(2, {{1, 0}, {0, 1}}, {{2, 0}});
    CHECK(fr2 == 1);
    CHECK(t2 == std::vector<mpz_class>{2});

    auto [fr3, t3] = lattice_quotient(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {});
    CHECK(fr3 == 3);
    CHECK(t3.empty());
}

TEST_CASE("matrix text round-trips") {
    RingMatrix a = from_rows(Z, {{1, -2}, {3, 0}});
    CHECK(parse_matrix(emit_matrix(a)) == a);

    RingId u = RingId::unitification();
    RingMatrix b(u, 1, 2);
    b.at(0, 0) = u_elem(3, {1});
    b.at(0, 1) = u_elem(0, {2});
    CHECK(parse_matrix(emit_matrix(b)) == b);

    CHECK_THROWS(parse_matrix("Z 2 2\n1\n2\n3"));  // missing entry
    CHECK_THROWS(parse_matrix("Q 1 1\n1"));        // unknown ring
}
