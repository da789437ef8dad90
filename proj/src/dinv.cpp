#include "dslice/dinv.hpp"

#include <sstream>

namespace dslice {

void DTable::set(const Element& a, DValue v) {
    Element key = host_.reduce(a);
    auto [it, fresh] = entries_.emplace(std::move(key), std::move(v));
    if (!fresh) throw MalformedRecord("duplicate d-record for one Spin^c structure");
}

std::optional<DValue> DTable::get(const Element& a) const {
    auto it = entries_.find(host_.reduce(a));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

bool DTable::complete() const { return Int(static_cast<unsigned long>(entries_.size())) == host_.order(); }

namespace {

Rat lens_rec(const Int& p, const Int& q, const Int& i) {
    if (p == 1) return Rat(0);
    Int num = 2 * i + 1 - p - q;
    Rat val = make_rat(num * num - p * q, 4 * p * q);
    Int p2 = q;
    Int q2;
    mpz_fdiv_r(q2.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    Int i2;
    mpz_fdiv_r(i2.get_mpz_t(), i.get_mpz_t(), q.get_mpz_t());
    return val - lens_rec(p2, q2, i2);
}

}  // namespace

std::vector<Rat> lens_d(const Int& p, const Int& q) {
    if (p < 1) throw BadFraction("lens space needs p >= 1");
    if (!p.fits_ulong_p()) throw BadFraction("lens parameter too large");
    if (p == 1) return {Rat(0)};
    Int qr;
    mpz_fdiv_r(qr.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    if (qr == 0 || gcd(p, qr) != 1) throw BadFraction("lens fraction p/q needs gcd(p,q) = 1");
    std::vector<Rat> out;
    unsigned long pl = p.get_ui();
    out.reserve(pl);
    for (unsigned long i = 0; i < pl; ++i) out.push_back(lens_rec(p, qr, Int(i)));
    return out;
}

Int lens_canonical_index(const Int& p, const Int& q) {
    if (p == 1) return Int(0);
    if (p % 2 == 0) throw BadFraction("canonical index needs odd p");
    Int qr;
    mpz_fdiv_r(qr.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    // the unique fixed point of i -> p + q - 1 - i (mod p): 2 i0 = q - 1 (mod p)
    Int half = (p + 1) / 2;
    Int i0;
    Int t = (qr - 1) * half;
    mpz_fdiv_r(i0.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
    Int mirror;
    Int m = p + qr - 1 - i0;
    mpz_fdiv_r(mirror.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    if (mirror != i0) throw InternalCheck("canonical index is not self-conjugate");
    return i0;
}

DTable two_bridge_dtable(const TwoBridge& k) {
    if (k.p == 1) {
        DTable t(LinkedGroup::trivial(2));
        t.set(Element{}, DValue::exact(Rat(0), "lens-space recursion, degenerate L(1,0)"));
        return t;
    }
    std::string prov;
    {
        std::ostringstream os;
        os << "lens-space recursion, L(" << k.p.get_str() << "," << k.q.get_str() << ")";
        prov = os.str();
    }
    LinkedGroup host = LinkedGroup::cyclic(2, k.p, frac_part(make_rat(-k.q, k.p)), k.p - 1);
    std::vector<Rat> d = lens_d(k.p, k.q);
    Int i0 = lens_canonical_index(k.p, k.q);
    DTable t(host);
    unsigned long pl = k.p.get_ui();
    unsigned long base = i0.get_ui();
    for (unsigned long r = 0; r < pl; ++r)
        t.set(Element{Int(r)}, DValue::exact(d[(base + r) % pl], prov));
    return t;
}

DTable ingest_dtable(const LinkedGroup& host, const std::vector<DRecord>& records) {
    DTable t(host);
    for (const DRecord& r : records) {
        if (r.element.size() != host.rank())
            throw ElementOutOfRange("d-record element has wrong number of coordinates");
        if (r.value.provenance.empty()) throw MalformedRecord("d-record without provenance");
        t.set(r.element, r.value);
    }
    return t;
}

DBarValue DBar::get(const Element& a) const {
    Element key = host_.reduce(a);
    bool zero = true;
    for (const Int& c : key)
        if (c != 0) zero = false;
    if (zero) return DBarValue{DBarValue::Kind::Exact, Rat(0), "normalization d-bar(0) = 0"};
    auto it = entries_.find(key);
    if (it == entries_.end()) return DBarValue{};
    return it->second;
}

DBar dbar(const DTable& t) {
    DBar out(t.host());
    std::optional<DValue> base = t.get(t.host().zero());
    if (!base || base->kind != DValue::Kind::Exact) return out;  // everything unknown but d-bar(0)
    const Rat v0 = base->value;
    for (const auto& [a, v] : t.entries()) {
        bool zero = true;
        for (const Int& c : a)
            if (c != 0) zero = false;
        if (zero) continue;
        if (v.kind == DValue::Kind::Exact) {
            out.set(a, DBarValue{DBarValue::Kind::Exact, Rat(v.value - v0),
                                 v.provenance + (base->provenance.empty() ? "" : "; basepoint: " + base->provenance)});
        } else {
            Rat shifted = v.value - v0;
            bool nonzero = false;
            std::string how;
            switch (v.rel) {
                case BoundRel::LE:
                    nonzero = shifted < 0;
                    how = "d <= " + rat_str(v.value);
                    break;
                case BoundRel::GE:
                    nonzero = shifted > 0;
                    how = "d >= " + rat_str(v.value);
                    break;
                case BoundRel::NE:
                    nonzero = shifted == 0;
                    how = "d != " + rat_str(v.value);
                    break;
            }
            if (nonzero)
                out.set(a, DBarValue{DBarValue::Kind::Nonzero, Rat(0),
                                     how + " with d(s0) = " + rat_str(v0) + "; " + v.provenance});
        }
    }
    return out;
}

DTable dtable_sum(const DTable& a, const DTable& b) {
    if (a.host().q() != b.host().q())
        throw MismatchedCover("d-table sum needs matching cover degree");
    LinkedGroup host = direct_sum(a.host(), b.host());
    DTable out(host);
    for (const auto& [xa, va] : a.entries())
        for (const auto& [xb, vb] : b.entries()) {
            Element key = xa;
            key.insert(key.end(), xb.begin(), xb.end());
            if (va.kind == DValue::Kind::Exact && vb.kind == DValue::Kind::Exact) {
                out.set(key, DValue::exact(Rat(va.value + vb.value), va.provenance + "; " + vb.provenance));
            } else if (va.kind == DValue::Kind::Exact && vb.kind == DValue::Kind::Bound) {
                out.set(key, DValue::bound(vb.rel, Rat(vb.value + va.value),
                                           vb.provenance + "; shifted by " + va.provenance));
            } else if (va.kind == DValue::Kind::Bound && vb.kind == DValue::Kind::Exact) {
                out.set(key, DValue::bound(va.rel, Rat(va.value + vb.value),
                                           va.provenance + "; shifted by " + vb.provenance));
            }
            // bound + bound stays unknown
        }
    return out;
}

}  // namespace dslice
