#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dslice/covers.hpp"
#include "dslice/knot.hpp"

namespace dslice {

enum class BoundRel { LE, GE, NE };

/// Correction-term datum for one Spin^c structure (s0 + a): an exact rational,
/// a one-sided bound, or nothing. Unknown entries are simply absent from tables;
/// they never count as zero.
struct DValue {
    enum class Kind { Exact, Bound };
    Kind kind = Kind::Exact;
    Rat value;
    BoundRel rel = BoundRel::LE;  // meaningful for Kind::Bound
    std::string provenance;

    static DValue exact(Rat v, std::string prov) {
        return DValue{Kind::Exact, std::move(v), BoundRel::LE, std::move(prov)};
    }
    static DValue bound(BoundRel r, Rat v, std::string prov) {
        return DValue{Kind::Bound, std::move(v), r, std::move(prov)};
    }
};

/// d-values on a host group, elements identified with Spin^c structures via a -> s0 + a.
class DTable {
public:
    explicit DTable(LinkedGroup host) : host_(std::move(host)) {}

    const LinkedGroup& host() const { return host_; }
    void set(const Element& a, DValue v);  // throws MalformedRecord on conflict
    std::optional<DValue> get(const Element& a) const;
    const std::map<Element, DValue>& entries() const { return entries_; }
    bool complete() const;

private:
    LinkedGroup host_;
    std::map<Element, DValue> entries_;
};

/// Correction terms of the lens space L(p,q) by the two-term recursion
/// d(L(1,0),0) = 0, d(L(p,q),i) = ((2i+1-p-q)^2 - pq)/(4pq) - d(L(q, p mod q), i mod q).
/// q is reduced mod p first; throws BadFraction unless gcd(p,q) = 1.
std::vector<Rat> lens_d(const Int& p, const Int& q);

/// The unique self-conjugate Spin^c index of L(p,q) for odd p (the canonical s0).
Int lens_canonical_index(const Int& p, const Int& q);

/// Complete table of exact d-values on the Z_p cover group of a two-bridge knot,
/// relabeled so that index 0 is the canonical s0.
DTable two_bridge_dtable(const TwoBridge& k);

struct DRecord {
    Element element;  // coordinates in the host SNF basis (reduced mod factors)
    DValue value;
};

/// External d-facts become first-class table entries with provenance.
DTable ingest_dtable(const LinkedGroup& host, const std::vector<DRecord>& records);

/// Normalized invariant d̄(a) = d(s0+a) - d(s0): exact where both are exact,
/// certified nonzero where a bound forces it, unknown otherwise. d̄(0) = 0 always.
struct DBarValue {
    enum class Kind { Exact, Nonzero, Unknown };
    Kind kind = Kind::Unknown;
    Rat value;  // for Exact
    std::string provenance;
};

class DBar {
public:
    explicit DBar(LinkedGroup host) : host_(std::move(host)) {}
    const LinkedGroup& host() const { return host_; }
    void set(const Element& a, DBarValue v) { entries_[a] = std::move(v); }
    DBarValue get(const Element& a) const;  // zero element -> Exact 0
    const std::map<Element, DBarValue>& entries() const { return entries_; }

private:
    LinkedGroup host_;
    std::map<Element, DBarValue> entries_;
};

DBar dbar(const DTable& t);

/// Table on the direct-sum group: Exact+Exact adds, Exact shifts a bound,
/// anything else is unknown.
DTable dtable_sum(const DTable& a, const DTable& b);

}  // namespace dslice
