#include "dslice/obstruct.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dslice {

std::string status_str(Status s) {
    switch (s) {
        case Status::Obstructed: return "OBSTRUCTED";
        case Status::NotObstructed: return "NOT_OBSTRUCTED";
        case Status::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

SubgroupInfo subgroup_info(const LinkedGroup& h, const Subgroup& p) {
    return SubgroupInfo{subgroup_generators(h, p), p.order};
}

namespace {

bool is_zero_elem(const Element& e) {
    for (const Int& c : e)
        if (c != 0) return false;
    return true;
}

CandidateOutcome scan_candidate(const LinkedGroup& h, const DBar& db, const Subgroup& m1,
                                const Subgroup* m2, std::vector<std::string>& prov) {
    CandidateOutcome out;
    out.m1 = subgroup_info(h, m1);
    if (m2) out.m2 = subgroup_info(h, *m2);

    std::set<Element> elems;
    for (const Element& e : subgroup_elements(h, m1)) elems.insert(e);
    if (m2)
        for (const Element& e : subgroup_elements(h, *m2)) elems.insert(e);

    bool all_zero = true;
    for (const Element& e : elems) {
        if (is_zero_elem(e)) continue;
        DBarValue v = db.get(e);
        switch (v.kind) {
            case DBarValue::Kind::Exact:
                if (v.value != 0) {
                    out.state = CandidateOutcome::State::Killed;
                    out.killer = e;
                    out.killer_note = "d-bar = " + rat_str(v.value) + " (" + v.provenance + ")";
                    prov.push_back(v.provenance);
                    return out;
                }
                if (!v.provenance.empty()) prov.push_back(v.provenance);
                break;
            case DBarValue::Kind::Nonzero:
                out.state = CandidateOutcome::State::Killed;
                out.killer = e;
                out.killer_note = "d-bar certified nonzero (" + v.provenance + ")";
                prov.push_back(v.provenance);
                return out;
            case DBarValue::Kind::Unknown:
                all_zero = false;
                out.unknowns.push_back(e);
                break;
        }
    }
    out.state = all_zero ? CandidateOutcome::State::Witness : CandidateOutcome::State::Undecided;
    return out;
}

Verdict assemble(const LinkedGroup& h, const DBar& db, std::vector<CandidateOutcome> outcomes,
                 std::vector<std::string> prov, const std::string& none_certificate) {
    Verdict v;
    v.host = h;
    for (const auto& [e, val] : db.entries()) v.dbar_entries[e] = val;
    v.candidates = std::move(outcomes);

    bool any_witness = false, all_killed = true;
    for (const auto& c : v.candidates) {
        if (c.state == CandidateOutcome::State::Witness) any_witness = true;
        if (c.state != CandidateOutcome::State::Killed) all_killed = false;
    }
    if (any_witness) {
        v.status = Status::NotObstructed;
        v.certificate = "witness with d-bar = 0 everywhere on it";
    } else if (v.candidates.empty()) {
        v.status = Status::Obstructed;
        v.certificate = none_certificate;
    } else if (all_killed) {
        v.status = Status::Obstructed;
        v.certificate = "every candidate contains an element with d-bar certified nonzero";
    } else {
        v.status = Status::Inconclusive;
        v.certificate = "unknown d-bar entries block a decision";
    }
    std::sort(prov.begin(), prov.end());
    prov.erase(std::unique(prov.begin(), prov.end()), prov.end());
    v.provenance = std::move(prov);
    return v;
}

}  // namespace

Verdict slice_check(const LinkedGroup& h, const DBar& db, const Int& cap) {
    std::vector<std::string> prov;
    std::vector<CandidateOutcome> outcomes;
    std::vector<Subgroup> mets = metabolizers(h, /*lambda_invariant=*/true, cap);
    for (const Subgroup& m : mets) outcomes.push_back(scan_candidate(h, db, m, nullptr, prov));

    std::string none_cert;
    if (mets.empty()) {
        if (metabolizers(h, false, cap).empty()) {
            std::ostringstream os;
            os << "no metabolizer: no isotropic subgroup of order^2 = " << h.order().get_str();
            none_cert = os.str();
        } else {
            none_cert = "no Lambda-invariant metabolizer";
        }
    }
    Verdict v = assemble(h, db, std::move(outcomes), std::move(prov), none_cert);
    v.mode = "slice";
    v.q = h.q();
    v.lambda_required = true;
    return v;
}

Verdict doubly_vanishing_check(const LinkedGroup& h, const DBar& db, bool require_lambda,
                               const Int& cap) {
    std::vector<std::string> prov;
    std::vector<CandidateOutcome> outcomes;
    std::vector<MetabolizerPair> pairs = metabolizer_pairs(h, require_lambda, cap);
    for (const MetabolizerPair& p : pairs)
        outcomes.push_back(scan_candidate(h, db, p.g1, &p.g2, prov));

    std::string none_cert;
    if (pairs.empty()) {
        std::ostringstream os;
        os << "no metabolizer pair spans the group (order " << h.order().get_str() << ")";
        none_cert = os.str();
    }
    Verdict v = assemble(h, db, std::move(outcomes), std::move(prov), none_cert);
    v.mode = "doubly-vanishing";
    v.q = h.q();
    v.lambda_required = require_lambda;
    return v;
}

namespace {

std::vector<DRecord> matching_records(const std::string& name, unsigned long q,
                                      const std::vector<DSource>& dsources) {
    std::vector<DRecord> out;
    for (const DSource& s : dsources)
        if (s.knot == name && s.q == q) out.insert(out.end(), s.records.begin(), s.records.end());
    return out;
}

}  // namespace

CoverData cover_data(const KnotTerm& term, unsigned long q, const std::vector<DSource>& dsources,
                     const CheckOptions& opt) {
    long mult = term.multiplicity;
    if (mult == 0) throw MalformedInput("summand with zero multiplicity");
    unsigned long copies = static_cast<unsigned long>(mult < 0 ? -mult : mult);

    if (const auto* tb = std::get_if<TwoBridge>(&term.desc)) {
        if (q == 2) {
            TwoBridge eff = mult < 0 ? tb->mirrored() : *tb;
            DTable acc = two_bridge_dtable(eff);
            for (unsigned long i = 1; i < copies; ++i) acc = dtable_sum(acc, two_bridge_dtable(eff));
            if (!matching_records(tb->name, q, dsources).empty())
                throw MalformedInput(
                    "d-records for a two-bridge knot are redundant: the lens-space table is complete");
            return CoverData{acc.host(), std::move(acc)};
        }
        SeifertMatrix base = tb->seifert();
        SeifertMatrix eff = mult < 0 ? mirror(base) : base;
        SeifertMatrix total = eff;
        for (unsigned long i = 1; i < copies; ++i) total = connected_sum(total, eff);
        LinkedGroup h = homology(build_presentation(total, q), opt.sign);
        DTable t(h);
        if (mult == 1) {
            std::vector<DRecord> recs = matching_records(tb->name, q, dsources);
            if (!recs.empty()) t = ingest_dtable(h, recs);
        }
        return CoverData{std::move(h), std::move(t)};
    }

    if (const auto* sm = std::get_if<SeifertMatrix>(&term.desc)) {
        SeifertMatrix eff = mult < 0 ? mirror(*sm) : *sm;
        SeifertMatrix total = eff;
        for (unsigned long i = 1; i < copies; ++i) total = connected_sum(total, eff);
        LinkedGroup h = homology(build_presentation(total, q), opt.sign);
        DTable t(h);
        if (mult == 1) {
            std::vector<DRecord> recs = matching_records(sm->name, q, dsources);
            if (!recs.empty()) t = ingest_dtable(h, recs);
        }
        return CoverData{std::move(h), std::move(t)};
    }

    throw MalformedInput("fact record '" + desc_name(term.desc) +
                         "' has no computable cover data; use declared facts via split");
}

CoverData cover_data(const KnotExpr& expr, unsigned long q, const std::vector<DSource>& dsources,
                     const CheckOptions& opt) {
    if (expr.terms.empty()) throw MalformedInput("empty knot expression");
    std::optional<CoverData> acc;
    for (const KnotTerm& term : expr.terms) {
        CoverData cd = cover_data(term, q, dsources, opt);
        if (!acc) {
            acc = std::move(cd);
        } else {
            DTable t = dtable_sum(acc->table, cd.table);
            acc = CoverData{t.host(), std::move(t)};
        }
    }
    return std::move(*acc);
}

SplitVerdict split_doubly_slice(const std::string& subject, const KnotExpr& e,
                                const std::vector<unsigned long>& qs,
                                const std::vector<DSource>& dsources, const CheckOptions& opt) {
    if (e.terms.size() < 2) throw MalformedInput("split needs at least 2 summand classes");
    SplitVerdict sv;
    sv.subject = subject;
    sv.lambda_required = opt.require_lambda;

    std::vector<LaurentPoly> polys;
    for (const KnotTerm& term : e.terms) {
        if (term.multiplicity == 0) throw MalformedInput("summand with zero multiplicity");
        unsigned long copies =
            static_cast<unsigned long>(term.multiplicity < 0 ? -term.multiplicity : term.multiplicity);
        ClassOutcome co;
        co.name = desc_name(term.desc);
        co.multiplicity = term.multiplicity;
        co.alexander = normalize(alexander(term.desc).pow(copies));
        polys.push_back(co.alexander);
        sv.classes.push_back(std::move(co));
    }

    sv.coprimality = pairwise_coprime(polys);
    if (!sv.coprimality.all_coprime) {
        sv.status = Status::Inconclusive;
        for (const CoprimePair& p : sv.coprimality.pairs)
            if (!p.coprime) {
                std::ostringstream os;
                os << "coprimality hypothesis fails between classes '" << sv.classes[p.i].name
                   << "' and '" << sv.classes[p.j].name << "': common factor " << p.common.str();
                sv.certificate = os.str();
                break;
            }
        return sv;
    }

    for (std::size_t idx = 0; idx < e.terms.size(); ++idx) {
        const KnotTerm& term = e.terms[idx];
        ClassOutcome& co = sv.classes[idx];

        if (const auto* fr = std::get_if<FactRecord>(&term.desc)) {
            if (term.multiplicity == 1 || term.multiplicity == -1) {
                for (const FactDeclaration& d : fr->declarations) {
                    if (!d.doubly_vanishing) {
                        co.status = Status::Obstructed;
                        co.decided_by_declaration = d;
                        std::string note = d.provenance;
                        if (term.multiplicity < 0)
                            note += " (mirror-invariant declaration applied to mirrored summand)";
                        sv.provenance.push_back(note);
                        break;
                    }
                    if (d.doubly_vanishing && d.q == 0) {
                        co.status = Status::NotObstructed;
                        co.decided_by_declaration = d;
                        sv.provenance.push_back(d.provenance);
                    }
                }
            }
        } else {
            bool all_not_obstructed = true;
            for (unsigned long q : qs) {
                CoverData cd = cover_data(term, q, dsources, opt);
                Verdict v = doubly_vanishing_check(cd.group, dbar(cd.table), opt.require_lambda,
                                                   opt.cap);
                v.subject = co.name;
                Status st = v.status;
                for (const std::string& p : v.provenance) sv.provenance.push_back(p);
                co.per_q.emplace(q, std::move(v));
                if (st == Status::Obstructed) {
                    co.status = Status::Obstructed;
                    break;
                }
                if (st != Status::NotObstructed) all_not_obstructed = false;
            }
            if (co.status != Status::Obstructed && !co.per_q.empty())
                co.status = all_not_obstructed ? Status::NotObstructed : Status::Inconclusive;
        }

        if (co.status == Status::Obstructed && !sv.obstructed_class) {
            sv.obstructed_class = idx;
            if (co.decided_by_declaration) {
                sv.obstructed_q = co.decided_by_declaration->q;
            } else {
                for (const auto& [q, v] : co.per_q)
                    if (v.status == Status::Obstructed) {
                        sv.obstructed_q = q;
                        break;
                    }
            }
        }
    }

    if (sv.obstructed_class) {
        sv.status = Status::Obstructed;
        const ClassOutcome& co = sv.classes[*sv.obstructed_class];
        std::ostringstream os;
        os << "summand class '" << co.name << "' fails doubly vanishing d-invariants";
        if (sv.obstructed_q != 0)
            os << " at q = " << sv.obstructed_q;
        else
            os << " at a declared prime power";
        os << "; its Alexander polynomial is coprime to the rest (Bezout certificates attached)";
        sv.certificate = os.str();
    } else {
        bool all_clear = true;
        for (const ClassOutcome& co : sv.classes)
            if (co.status != Status::NotObstructed) all_clear = false;
        sv.status = all_clear ? Status::NotObstructed : Status::Inconclusive;
        sv.certificate = all_clear
                             ? "every summand class has doubly vanishing d-invariants at the tested covers"
                             : "no obstruction found; some classes are undecided";
    }
    std::sort(sv.provenance.begin(), sv.provenance.end());
    sv.provenance.erase(std::unique(sv.provenance.begin(), sv.provenance.end()),
                        sv.provenance.end());
    return sv;
}

}  // namespace dslice
