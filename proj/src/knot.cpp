#include "dslice/knot.hpp"

#include "dslice/linalg.hpp"

namespace dslice {

SeifertMatrix::SeifertMatrix(IntMatrix v, std::string n) : V(std::move(v)), name(std::move(n)) {
    if (!V.is_square()) throw InvalidSeifert("Seifert matrix must be square");
    Int u = linalg::det(V - V.transpose());
    if (u != 1 && u != -1)
        throw InvalidSeifert("V - V^T is not unimodular" + (name.empty() ? "" : " (" + name + ")"));
}

SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
    IntMatrix v(a.V.rows() + b.V.rows(), a.V.cols() + b.V.cols());
    v.set_block(0, 0, a.V);
    v.set_block(a.V.rows(), a.V.cols(), b.V);
    std::string n;
    if (!a.name.empty() && !b.name.empty()) n = a.name + "#" + b.name;
    return SeifertMatrix(std::move(v), std::move(n));
}

SeifertMatrix mirror(const SeifertMatrix& a) { return SeifertMatrix(-a.V.transpose(), a.name); }

TwoBridge::TwoBridge(Int p_, Int q_, std::string n) : p(std::move(p_)), q(std::move(q_)), name(std::move(n)) {
    if (p == 1 && q == 0) return;  // degenerate unknot record
    if (p < 1 || p % 2 == 0) throw BadFraction("two-bridge p must be odd and positive");
    if (q <= 0 || q >= p) throw BadFraction("two-bridge q must satisfy 0 < q < p");
    if (gcd(p, q) != 1) throw BadFraction("two-bridge p, q must be coprime");
}

SeifertMatrix TwoBridge::seifert() const {
    if (p == 1) return SeifertMatrix(IntMatrix(), name);
    // even continued fraction of p/q' under r = 2b - 1/r', b = nearest integer to r/2
    Int qe = (q % 2 == 0) ? q : q - p;
    Rat r = make_rat(p, qe);
    std::vector<Int> halves;
    for (;;) {
        Int b = rat_floor(r / 2 + Rat(1, 2));
        halves.push_back(b);
        if (r == Rat(2 * b)) break;
        r = 1 / (Rat(2 * b) - r);
    }
    std::size_t m = halves.size();
    if (m % 2 != 0) throw InternalCheck("odd-length even continued fraction");
    IntMatrix v(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        v(i, i) = halves[i];
        if (i + 1 < m) v(i, i + 1) = 1;
    }
    SeifertMatrix out(std::move(v), name);
    Int dp = linalg::det(out.V + out.V.transpose());
    if (abs(dp) != p) throw InternalCheck("two-bridge Seifert matrix determinant mismatch");
    return out;
}

TwoBridge TwoBridge::mirrored() const {
    if (p == 1) return *this;
    return TwoBridge(p, p - q, name);
}

FactRecord::FactRecord(std::string n, LaurentPoly alex, std::vector<FactDeclaration> decls)
    : name(std::move(n)), alexander(std::move(alex)), declarations(std::move(decls)) {
    if (alexander.is_zero()) throw InvalidAlexander("fact record needs a nonzero Alexander polynomial");
    Rat at1 = alexander.evaluate(Rat(1));
    if (at1 != 1 && at1 != -1)
        throw InvalidAlexander("fact record Alexander polynomial must satisfy p(1) = ±1: " + name);
    for (const auto& d : declarations)
        if (d.provenance.empty())
            throw MalformedRecord("declared fact without provenance in record " + name);
}

std::string desc_name(const KnotDesc& d) {
    return std::visit([](const auto& x) { return x.name; }, d);
}

LaurentPoly alexander(const KnotDesc& d) {
    if (const auto* s = std::get_if<SeifertMatrix>(&d)) return alexander_from_seifert(s->V);
    if (const auto* t = std::get_if<TwoBridge>(&d)) return alexander_from_seifert(t->seifert().V);
    return normalize(std::get<FactRecord>(d).alexander);
}

LaurentPoly alexander(const KnotExpr& e) {
    LaurentPoly out = LaurentPoly::constant(1);
    for (const auto& term : e.terms) {
        unsigned long m = static_cast<unsigned long>(term.multiplicity < 0 ? -term.multiplicity
                                                                           : term.multiplicity);
        if (m == 0) continue;
        out = out * alexander(term.desc).pow(m);
    }
    return normalize(out);
}

CoprimalityMatrix pairwise_coprime(const std::vector<LaurentPoly>& polys) {
    if (polys.size() < 2) throw MalformedInput("pairwise coprimality needs at least 2 polynomials");
    CoprimalityMatrix out;
    out.all_coprime = true;
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (std::size_t j = i + 1; j < polys.size(); ++j) {
            GcdResult g = gcd_bezout(polys[i], polys[j]);
            CoprimePair pair;
            pair.i = i;
            pair.j = j;
            pair.coprime = g.cert.has_value();
            if (g.cert)
                pair.cert = std::move(g.cert);
            else {
                pair.common = g.gcd;
                out.all_coprime = false;
            }
            out.pairs.push_back(std::move(pair));
        }
    return out;
}

}  // namespace dslice
