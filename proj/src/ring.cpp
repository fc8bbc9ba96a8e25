#include "fpnkit/ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fpnkit {

RingId RingId::modular(const mpz_class& n) {
    if (n < 2) throw std::invalid_argument("Modular ring needs modulus >= 2");
    return {RingKind::Modular, n, FieldKind::F2};
}

std::string ring_token(const RingId& id) {
    switch (id.kind) {
        case RingKind::Integers: return "Z";
        case RingKind::Modular: return "Z/" + id.modulus.get_str();
        case RingKind::Unitification: return "U";
        case RingKind::SquareZero:
            return id.field == FieldKind::F2 ? "SZ[F2]" : "SZ[Q]";
    }
    throw std::logic_error("bad ring kind");
}

RingId parse_ring_token(const std::string& tok) {
    if (tok == "Z") return RingId::integers();
    if (tok == "U") return RingId::unitification();
    if (tok == "SZ[F2]") return RingId::square_zero(FieldKind::F2);
    if (tok == "SZ[Q]") return RingId::square_zero(FieldKind::Rationals);
    if (tok.rfind("Z/", 0) == 0) {
        mpz_class n;
        if (n.set_str(tok.substr(2), 10) != 0)
            throw std::invalid_argument("bad modulus in ring token: " + tok);
        return RingId::modular(n);
    }
    throw std::invalid_argument("unknown ring token: " + tok);
}

bool Elem::operator==(const Elem& o) const {
    return ring == o.ring && v == o.v;
}

namespace {

void check_same_ring(const Elem& x, const Elem& y) {
    if (x.ring != y.ring)
        throw std::invalid_argument("ring mismatch between elements");
}

mpz_class mod_reduce(const mpz_class& n, const mpz_class& mod) {
    mpz_class r = n % mod;
    if (r < 0) r += mod;
    return r;
}

void normalize_sq(SqElem& s, FieldKind f) {
    if (f == FieldKind::F2) {
        mpz_class num = s.c0.get_num() % 2;
        if (num < 0) num += 2;
        s.c0 = mpq_class(num);
        for (auto& [i, c] : s.coeffs) {
            mpz_class cn = c.get_num() % 2;
            if (cn < 0) cn += 2;
            c = mpq_class(cn);
        }
    }
    std::sort(s.coeffs.begin(), s.coeffs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<int, mpq_class>> out;
    for (auto& [i, c] : s.coeffs) {
        if (!out.empty() && out.back().first == i)
            out.back().second += c;
        else
            out.emplace_back(i, c);
    }
    if (f == FieldKind::F2)
        for (auto& [i, c] : out) {
            mpz_class cn = c.get_num() % 2;
            if (cn < 0) cn += 2;
            c = mpq_class(cn);
        }
    std::erase_if(out, [](const auto& p) { return p.second == 0; });
    s.coeffs = std::move(out);
}

}  // namespace

Elem integer_elem(const mpz_class& n) { return {RingId::integers(), n}; }

Elem modular_elem(const RingId& ring, const mpz_class& n) {
    if (ring.kind != RingKind::Modular)
        throw std::invalid_argument("modular_elem: ring is not Modular");
    return {ring, mod_reduce(n, ring.modulus)};
}

Elem u_elem(const mpz_class& m, std::vector<int> supp) {
    std::sort(supp.begin(), supp.end());
    for (std::size_t i = 0; i + 1 < supp.size(); ++i)
        if (supp[i] == supp[i + 1])
            throw std::invalid_argument("duplicate support index");
    for (int i : supp)
        if (i < 1) throw std::invalid_argument("support indices start at 1");
    return {RingId::unitification(), UElem{m, std::move(supp)}};
}

Elem sq_elem(const RingId& ring, const mpq_class& c0,
             std::vector<std::pair<int, mpq_class>> coeffs) {
    if (ring.kind != RingKind::SquareZero)
        throw std::invalid_argument("sq_elem: ring is not SquareZero");
    for (auto& [i, c] : coeffs)
        if (i < 1) throw std::invalid_argument("variable indices start at 1");
    SqElem s{c0, std::move(coeffs)};
    normalize_sq(s, ring.field);
    return {ring, std::move(s)};
}

Elem sq_var(const RingId& ring, int index) {
    return sq_elem(ring, 0, {{index, 1}});
}

Elem zero(const RingId& ring) {
    switch (ring.kind) {
        case RingKind::Integers:
        case RingKind::Modular: return {ring, mpz_class(0)};
        case RingKind::Unitification: return {ring, UElem{0, {}}};
        case RingKind::SquareZero: return {ring, SqElem{0, {}}};
    }
    throw std::logic_error("bad ring kind");
}

Elem one(const RingId& ring) {
    switch (ring.kind) {
        case RingKind::Integers: return {ring, mpz_class(1)};
        case RingKind::Modular: return {ring, mod_reduce(1, ring.modulus)};
        case RingKind::Unitification: return {ring, UElem{1, {}}};
        case RingKind::SquareZero: return {ring, SqElem{1, {}}};
    }
    throw std::logic_error("bad ring kind");
}

Elem from_int(const RingId& ring, long n) {
    switch (ring.kind) {
        case RingKind::Integers: return {ring, mpz_class(n)};
        case RingKind::Modular: return modular_elem(ring, n);
        case RingKind::Unitification: return {ring, UElem{n, {}}};
        case RingKind::SquareZero: return sq_elem(ring, mpq_class(n), {});
    }
    throw std::logic_error("bad ring kind");
}

std::vector<int> supp_xor(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

std::vector<int> supp_and(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

Elem add(const Elem& x, const Elem& y) {
    check_same_ring(x, y);
    switch (x.ring.kind) {
        case RingKind::Integers:
            return {x.ring, std::get<mpz_class>(x.v) + std::get<mpz_class>(y.v)};
        case RingKind::Modular:
            return {x.ring, mod_reduce(std::get<mpz_class>(x.v) + std::get<mpz_class>(y.v),
                                       x.ring.modulus)};
        case RingKind::Unitification: {
            const auto& a = std::get<UElem>(x.v);
            const auto& b = std::get<UElem>(y.v);
            return {x.ring, UElem{a.m + b.m, supp_xor(a.supp, b.supp)}};
        }
        case RingKind::SquareZero: {
            const auto& a = std::get<SqElem>(x.v);
            const auto& b = std::get<SqElem>(y.v);
            SqElem s{a.c0 + b.c0, a.coeffs};
            s.coeffs.insert(s.coeffs.end(), b.coeffs.begin(), b.coeffs.end());
            normalize_sq(s, x.ring.field);
            return {x.ring, std::move(s)};
        }
    }
    throw std::logic_error("bad ring kind");
}

Elem neg(const Elem& x) {
    switch (x.ring.kind) {
        case RingKind::Integers: return {x.ring, mpz_class(-std::get<mpz_class>(x.v))};
        case RingKind::Modular:
            return {x.ring, mod_reduce(-std::get<mpz_class>(x.v), x.ring.modulus)};
        case RingKind::Unitification: {
            const auto& a = std::get<UElem>(x.v);
            return {x.ring, UElem{-a.m, a.supp}};  // -1 = 1 in Z/2Z
        }
        case RingKind::SquareZero: {
            SqElem s = std::get<SqElem>(x.v);
            s.c0 = -s.c0;
            for (auto& [i, c] : s.coeffs) c = -c;
            normalize_sq(s, x.ring.field);
            return {x.ring, std::move(s)};
        }
    }
    throw std::logic_error("bad ring kind");
}

Elem sub(const Elem& x, const Elem& y) { return add(x, neg(y)); }

Elem mul(const Elem& x, const Elem& y) {
    check_same_ring(x, y);
    switch (x.ring.kind) {
        case RingKind::Integers:
            return {x.ring, std::get<mpz_class>(x.v) * std::get<mpz_class>(y.v)};
        case RingKind::Modular:
            return {x.ring, mod_reduce(std::get<mpz_class>(x.v) * std::get<mpz_class>(y.v),
                                       x.ring.modulus)};
        case RingKind::Unitification: {
            // (m,a)(n,b) = (mn, mb + na + ab); the scalar action of an even
            // integer kills a Z/2Z vector.
            const auto& a = std::get<UElem>(x.v);
            const auto& b = std::get<UElem>(y.v);
            std::vector<int> s;
            if (mpz_odd_p(a.m.get_mpz_t())) s = b.supp;
            if (mpz_odd_p(b.m.get_mpz_t())) s = supp_xor(s, a.supp);
            s = supp_xor(s, supp_and(a.supp, b.supp));
            return {x.ring, UElem{a.m * b.m, std::move(s)}};
        }
        case RingKind::SquareZero: {
            // (c0+v)(d0+w) = c0 d0 + c0 w + d0 v; the v*w cross term vanishes.
            const auto& a = std::get<SqElem>(x.v);
            const auto& b = std::get<SqElem>(y.v);
            SqElem s{a.c0 * b.c0, {}};
            for (auto& [i, c] : b.coeffs) s.coeffs.emplace_back(i, a.c0 * c);
            for (auto& [i, c] : a.coeffs) s.coeffs.emplace_back(i, b.c0 * c);
            normalize_sq(s, x.ring.field);
            return {x.ring, std::move(s)};
        }
    }
    throw std::logic_error("bad ring kind");
}

bool is_zero(const Elem& x) { return x == zero(x.ring); }
bool is_one(const Elem& x) { return x == one(x.ring); }

std::optional<Elem> inverse(const Elem& x) {
    switch (x.ring.kind) {
        case RingKind::Integers: {
            const auto& n = std::get<mpz_class>(x.v);
            if (n == 1 || n == -1) return x;
            return std::nullopt;
        }
        case RingKind::Modular: {
            const auto& n = std::get<mpz_class>(x.v);
            mpz_class inv;
            if (mpz_invert(inv.get_mpz_t(), n.get_mpz_t(), x.ring.modulus.get_mpz_t()))
                return Elem{x.ring, inv};
            return std::nullopt;
        }
        case RingKind::Unitification: {
            // (m,a)(n,b) = (1,0) forces mn = 1, and on every index of supp(a)
            // the Z/2Z component of the product is b_i + 1 + b_i = 1.  So the
            // units are exactly (1,0) and (-1,0), each its own inverse.
            const auto& a = std::get<UElem>(x.v);
            if ((a.m == 1 || a.m == -1) && a.supp.empty()) return x;
            return std::nullopt;
        }
        case RingKind::SquareZero: {
            const auto& a = std::get<SqElem>(x.v);
            if (a.c0 == 0) return std::nullopt;
            // (c0 + v)^{-1} = 1/c0 - v/c0^2.
            SqElem s{1 / a.c0, {}};
            for (auto& [i, c] : a.coeffs) s.coeffs.emplace_back(i, -c / (a.c0 * a.c0));
            normalize_sq(s, x.ring.field);
            return Elem{x.ring, std::move(s)};
        }
    }
    throw std::logic_error("bad ring kind");
}

bool is_unit(const Elem& x) { return inverse(x).has_value(); }

int max_support_index(const Elem& x) {
    if (x.ring.kind == RingKind::Unitification) {
        const auto& a = std::get<UElem>(x.v);
        return a.supp.empty() ? 0 : a.supp.back();
    }
    if (x.ring.kind == RingKind::SquareZero) {
        const auto& a = std::get<SqElem>(x.v);
        return a.coeffs.empty() ? 0 : a.coeffs.back().first;
    }
    return 0;
}

std::string print_elem(const Elem& x) {
    switch (x.ring.kind) {
        case RingKind::Integers: return std::get<mpz_class>(x.v).get_str();
        case RingKind::Modular:
            return std::get<mpz_class>(x.v).get_str() + " mod " + x.ring.modulus.get_str();
        case RingKind::Unitification: {
            const auto& a = std::get<UElem>(x.v);
            std::ostringstream os;
            os << "(" << a.m.get_str() << ";";
            for (std::size_t i = 0; i < a.supp.size(); ++i)
                os << (i ? "," : " ") << a.supp[i];
            if (a.supp.empty()) os << " ";
            os << ")";
            return os.str();
        }
        case RingKind::SquareZero: {
            const auto& a = std::get<SqElem>(x.v);
            std::ostringstream os;
            os << a.c0;
            for (auto& [i, c] : a.coeffs) {
                os << " + ";
                if (c != 1) os << c << "*";
                os << "x" << i;
            }
            return os.str();
        }
    }
    throw std::logic_error("bad ring kind");
}

namespace {

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

mpz_class parse_mpz(const std::string& s) {
    mpz_class n;
    if (s.empty() || n.set_str(strip(s), 10) != 0)
        throw std::invalid_argument("bad integer literal: '" + s + "'");
    return n;
}

mpq_class parse_mpq(const std::string& s) {
    mpq_class q;
    if (s.empty() || q.set_str(strip(s), 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

Elem parse_elem(const RingId& ring, const std::string& raw) {
    std::string text = strip(raw);
    switch (ring.kind) {
        case RingKind::Integers: return integer_elem(parse_mpz(text));
        case RingKind::Modular: {
            auto pos = text.find(" mod ");
            std::string num = pos == std::string::npos ? text : text.substr(0, pos);
            if (pos != std::string::npos) {
                mpz_class m = parse_mpz(text.substr(pos + 5));
                if (m != ring.modulus)
                    throw std::invalid_argument("modulus mismatch in '" + raw + "'");
            }
            return modular_elem(ring, parse_mpz(num));
        }
        case RingKind::Unitification: {
            if (text.size() < 3 || text.front() != '(' || text.back() != ')')
                throw std::invalid_argument("bad unitification literal: '" + raw + "'");
            std::string body = text.substr(1, text.size() - 2);
            auto semi = body.find(';');
            if (semi == std::string::npos)
                throw std::invalid_argument("missing ';' in '" + raw + "'");
            mpz_class m = parse_mpz(body.substr(0, semi));
            std::vector<int> supp;
            std::string rest = strip(body.substr(semi + 1));
            if (!rest.empty())
                for (auto& part : split(rest, ',')) {
                    std::string p = strip(part);
                    if (p.empty())
                        throw std::invalid_argument("empty support index in '" + raw + "'");
                    supp.push_back(std::stoi(p));
                }
            return u_elem(m, std::move(supp));  // rejects duplicates
        }
        case RingKind::SquareZero: {
            std::vector<std::pair<int, mpq_class>> coeffs;
            mpq_class c0 = 0;
            bool saw_scalar = false;
            for (auto& part : split(text, '+')) {
                std::string p = strip(part);
                if (p.empty())
                    throw std::invalid_argument("empty term in '" + raw + "'");
                auto xpos = p.find('x');
                if (xpos == std::string::npos) {
                    if (saw_scalar)
                        throw std::invalid_argument("two scalar terms in '" + raw + "'");
                    c0 = parse_mpq(p);
                    saw_scalar = true;
                } else {
                    std::string coef = strip(p.substr(0, xpos));
                    if (!coef.empty() && coef.back() == '*') coef.pop_back();
                    mpq_class c = coef.empty() || strip(coef).empty() ? mpq_class(1)
                                                                     : parse_mpq(coef);
                    int idx = std::stoi(p.substr(xpos + 1));
                    coeffs.emplace_back(idx, c);
                }
            }
            return sq_elem(ring, c0, std::move(coeffs));
        }
    }
    throw std::logic_error("bad ring kind");
}

}  // namespace fpnkit
