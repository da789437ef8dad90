#include "dslice/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "dslice/linalg.hpp"

namespace dslice {

namespace {

// Ordinary polynomial over Q, coefficient of t^i at index i; empty = zero,
// otherwise back() != 0.
using Dense = std::vector<Rat>;

void trim(Dense& d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
}

long deg(const Dense& d) { return static_cast<long>(d.size()) - 1; }  // -1 for zero

Dense dense_mul(const Dense& a, const Dense& b) {
    if (a.empty() || b.empty()) return {};
    Dense out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

Dense dense_sub(Dense a, const Dense& b) {
    if (b.size() > a.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

Dense dense_scale(Dense a, const Rat& c) {
    for (auto& x : a) x *= c;
    trim(a);
    return a;
}

// quotient and remainder of a by b over Q, b != 0
std::pair<Dense, Dense> dense_divmod(Dense a, const Dense& b) {
    Dense q;
    if (deg(a) >= deg(b)) q.resize(a.size() - b.size() + 1);
    const Rat lead = b.back();
    while (deg(a) >= deg(b)) {
        Rat f = a.back() / lead;
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    trim(q);
    return {q, a};
}

struct ExtGcd {
    Dense g, s, t;  // s*a + t*b = g, g monic
};

ExtGcd dense_ext_gcd(Dense a, Dense b) {
    Dense r0 = std::move(a), r1 = std::move(b);
    Dense s0{Rat(1)}, s1, t0, t1{Rat(1)};
    while (!r1.empty()) {
        auto [q, r] = dense_divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Dense s2 = dense_sub(s0, dense_mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
        Dense t2 = dense_sub(t0, dense_mul(q, t1));
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Rat lead = r0.back();
    return {dense_scale(std::move(r0), 1 / lead), dense_scale(std::move(s0), 1 / lead),
            dense_scale(std::move(t0), 1 / lead)};
}

// p = t^shift * dense with dense(0) != 0
Dense to_dense(const LaurentPoly& p, long& shift) {
    if (p.is_zero()) throw ZeroPolynomial("zero polynomial");
    shift = p.min_exp();
    Dense d(static_cast<std::size_t>(p.max_exp() - shift) + 1);
    for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e - shift)] = c;
    return d;
}

LaurentPoly from_dense(const Dense& d, long shift) {
    std::map<long, Rat> m;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) m[static_cast<long>(i) + shift] = d[i];
    return LaurentPoly::from_map(m);
}

Rat rat_pow(const Rat& x, long e) {
    if (e == 0) return Rat(1);
    Rat base = e > 0 ? x : Rat(1) / x;
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Rat out(1);
    while (n) {
        if (n & 1) out *= base;
        base *= base;
        n >>= 1;
    }
    return out;
}

}  // namespace

LaurentPoly LaurentPoly::constant(const Rat& c) { return term(c, 0); }

LaurentPoly LaurentPoly::term(const Rat& coeff, long exp) {
    LaurentPoly p;
    if (coeff != 0) p.c_[exp] = coeff;
    return p;
}

LaurentPoly LaurentPoly::from_map(const std::map<long, Rat>& coeffs) {
    LaurentPoly p;
    for (const auto& [e, c] : coeffs)
        if (c != 0) p.c_[e] = c;
    return p;
}

long LaurentPoly::min_exp() const {
    if (is_zero()) throw ZeroPolynomial("min_exp of zero polynomial");
    return c_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (is_zero()) throw ZeroPolynomial("max_exp of zero polynomial");
    return c_.rbegin()->first;
}

Rat LaurentPoly::coeff(long e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Rat(0) : it->second;
}

void LaurentPoly::set(long e, const Rat& v) {
    if (v == 0)
        c_.erase(e);
    else
        c_[e] = v;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.c_) out.set(e, out.coeff(e) + c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.c_) out.set(e, out.coeff(e) - c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly out;
    for (const auto& [e1, c1] : c_)
        for (const auto& [e2, c2] : o.c_) out.set(e1 + e2, out.coeff(e1 + e2) + c1 * c2);
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : c_) out.c_[e] = -c;
    return out;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
    LaurentPoly out;
    if (c == 0) return out;
    for (const auto& [e, v] : c_) out.c_[e] = v * c;
    return out;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly out;
    for (const auto& [e, v] : c_) out.c_[e + k] = v;
    return out;
}

LaurentPoly LaurentPoly::reversed() const {
    LaurentPoly out;
    for (const auto& [e, v] : c_) out.c_[-e] = v;
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned long n) const {
    LaurentPoly out = constant(1);
    LaurentPoly base = *this;
    while (n) {
        if (n & 1) out = out * base;
        base = base * base;
        n >>= 1;
    }
    return out;
}

Rat LaurentPoly::evaluate(const Rat& x) const {
    if (x == 0) throw ZeroPolynomial("Laurent polynomial evaluated at 0");
    Rat out(0);
    for (const auto& [e, c] : c_) out += c * rat_pow(x, e);
    return out;
}

bool LaurentPoly::integer_coeffs() const {
    for (const auto& [e, c] : c_)
        if (!is_integral(c)) return false;
    return true;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        long e = it->first;
        Rat c = it->second;
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        Rat a = neg ? Rat(-c) : c;
        bool unit_coeff = (a == 1);
        if (e == 0) {
            os << rat_str(a);
        } else {
            if (!unit_coeff) {
                if (!is_integral(a)) os << "(" << rat_str(a) << ")";
                else os << rat_str(a);
            }
            os << "t";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

LaurentPoly alexander_from_seifert(const IntMatrix& v) {
    if (!v.is_square()) throw InvalidSeifert("Seifert matrix must be square");
    Int u = linalg::det(v - v.transpose());
    if (u != 1 && u != -1) throw InvalidSeifert("V - V^T is not unimodular");
    std::size_t n = v.rows();
    if (n == 0) return LaurentPoly::constant(1);

    // det(V - t V^T) has degree <= n: interpolate at t = 0..n
    std::vector<Rat> values;
    values.reserve(n + 1);
    IntMatrix vt = v.transpose();
    for (std::size_t k = 0; k <= n; ++k) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = Rat(v(i, j)) - Rat(static_cast<long>(k)) * Rat(vt(i, j));
        values.push_back(linalg::det(m));
    }
    Dense poly;
    for (std::size_t k = 0; k <= n; ++k) {
        Dense basis{Rat(1)};
        Rat denom(1);
        for (std::size_t j = 0; j <= n; ++j) {
            if (j == k) continue;
            basis = dense_mul(basis, Dense{Rat(-static_cast<long>(j)), Rat(1)});
            denom *= Rat(static_cast<long>(k)) - Rat(static_cast<long>(j));
        }
        poly = dense_sub(poly, dense_scale(basis, -values[k] / denom));
    }
    LaurentPoly p = from_dense(poly, 0);
    if (!p.integer_coeffs()) throw InternalCheck("Alexander interpolation not integral");
    return normalize(p);
}

LaurentPoly normalize(const LaurentPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("normalize of zero polynomial");
    LaurentPoly out = p.shifted(-p.min_exp());
    if (out.coeff(out.max_exp()) < 0) out = -out;
    return out;
}

GcdResult gcd_bezout(const LaurentPoly& p, const LaurentPoly& q) {
    long sa = 0, sb = 0;
    Dense da = to_dense(p, sa);
    Dense db = to_dense(q, sb);
    ExtGcd eg = dense_ext_gcd(da, db);
    if (deg(eg.g) > 0) return {from_dense(eg.g, 0), std::nullopt};

    // g = 1: clear denominators of the cofactors shifted back to Laurent form
    LaurentPoly g1 = from_dense(eg.s, -sa);
    LaurentPoly g2 = from_dense(eg.t, -sb);
    Int c(1);
    for (const auto& [e, v] : g1.terms()) c = lcm(c, Int(v.get_den()));
    for (const auto& [e, v] : g2.terms()) c = lcm(c, Int(v.get_den()));
    BezoutCertificate cert{g1.scaled(Rat(c)), g2.scaled(Rat(c)), c};
    LaurentPoly check = cert.f1 * p + cert.f2 * q - LaurentPoly::constant(Rat(c));
    if (!check.is_zero()) throw InternalCheck("Bezout certificate does not re-multiply");
    return {LaurentPoly::constant(1), cert};
}

bool coprime(const LaurentPoly& p, const LaurentPoly& q) {
    return gcd_bezout(p, q).cert.has_value();
}

LaurentPoly cyclotomic(unsigned long n) {
    if (n == 0) throw ZeroPolynomial("cyclotomic(0)");
    // t^n - 1 divided by phi_d for all proper divisors d of n
    long sh = 0;
    Dense num(static_cast<std::size_t>(n) + 1);
    num[0] = Rat(-1);
    num[n] = Rat(1);
    for (unsigned long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        Dense phi_d = to_dense(cyclotomic(d), sh);
        auto [quot, rem] = dense_divmod(num, phi_d);
        if (!rem.empty()) throw InternalCheck("cyclotomic division not exact");
        num = std::move(quot);
    }
    LaurentPoly out = from_dense(num, 0);
    if (!out.integer_coeffs()) throw InternalCheck("cyclotomic not integral");
    return out;
}

Rat resultant(const LaurentPoly& p, const LaurentPoly& q) {
    long sa = 0, sb = 0;
    Dense a = to_dense(p, sa);
    Dense b = to_dense(q, sb);
    long m = deg(a), n = deg(b);
    if (m == 0 && n == 0) return Rat(1);
    std::size_t size = static_cast<std::size_t>(m + n);
    RatMatrix s(size, size);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j <= m; ++j) s(static_cast<std::size_t>(i), static_cast<std::size_t>(i + j)) = a[static_cast<std::size_t>(m - j)];
    for (long i = 0; i < m; ++i)
        for (long j = 0; j <= n; ++j) s(static_cast<std::size_t>(n + i), static_cast<std::size_t>(i + j)) = b[static_cast<std::size_t>(n - j)];
    return linalg::det(s);
}

Int resultant_order(const LaurentPoly& alex, unsigned long q) {
    if (alex.is_zero()) throw InvalidAlexander("zero Alexander polynomial");
    Rat at1 = alex.evaluate(Rat(1));
    if (at1 != 1 && at1 != -1) throw InvalidAlexander("Alexander polynomial must satisfy p(1) = ±1");
    if (q == 0) throw InvalidAlexander("cover degree must be positive");
    LaurentPoly nu;
    {
        std::map<long, Rat> m;
        for (unsigned long i = 0; i < q; ++i) m[static_cast<long>(i)] = Rat(1);
        nu = LaurentPoly::from_map(m);
    }
    Rat r = resultant(normalize(alex), nu);
    if (!is_integral(r)) throw InvalidAlexander("resultant is not an integer");
    Int out = r.get_num();
    if (out < 0) out = -out;
    if (out == 0) throw InvalidAlexander("vanishing resultant: cover homology infinite");
    return out;
}

}  // namespace dslice
