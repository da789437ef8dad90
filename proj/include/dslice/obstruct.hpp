#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dslice/dinv.hpp"
#include "dslice/linkform.hpp"

namespace dslice {

enum class Status { Obstructed, NotObstructed, Inconclusive };
std::string status_str(Status s);

struct SubgroupInfo {
    std::vector<Element> generators;
    Int order;
};
SubgroupInfo subgroup_info(const LinkedGroup& h, const Subgroup& p);

/// Result of scanning one candidate metabolizer (or pair) against d̄.
struct CandidateOutcome {
    enum class State { Witness, Killed, Undecided };
    SubgroupInfo m1;
    std::optional<SubgroupInfo> m2;  // present for pair checks
    State state = State::Undecided;
    std::optional<Element> killer;   // element with d̄ certified nonzero
    std::string killer_note;
    std::vector<Element> unknowns;   // blocking elements
};

/// Outcome of an obstruction check. OBSTRUCTED never depends on unknown
/// entries; the verdict carries everything needed to re-run it.
struct Verdict {
    Status status = Status::Inconclusive;
    std::string mode;     // "slice" or "doubly-vanishing"
    std::string subject;
    unsigned long q = 0;
    bool lambda_required = false;
    std::string certificate;  // prose cause
    std::vector<CandidateOutcome> candidates;
    std::vector<std::string> provenance;
    std::optional<LinkedGroup> host;
    std::map<Element, DBarValue> dbar_entries;
};

/// Slice obstruction: NOT_OBSTRUCTED iff some Lambda-metabolizer has d̄ = 0
/// everywhere on it; OBSTRUCTED when there is no Lambda-metabolizer or every
/// one carries a certified-nonzero d̄; else INCONCLUSIVE.
Verdict slice_check(const LinkedGroup& h, const DBar& db, const Int& cap = Int(kDefaultEnumCap));

/// Doubly-vanishing obstruction over metabolizer pairs (direct-sum splittings),
/// Lambda-filtered when require_lambda is set.
Verdict doubly_vanishing_check(const LinkedGroup& h, const DBar& db, bool require_lambda,
                               const Int& cap = Int(kDefaultEnumCap));

struct DSource {
    std::string knot;
    unsigned long q = 0;
    std::vector<DRecord> records;
    std::string origin;  // file path for reports
};

struct CheckOptions {
    bool require_lambda = false;
    FormSign sign = FormSign::Minus;
    Int cap = Int(kDefaultEnumCap);
};

struct CoverData {
    LinkedGroup group;
    DTable table;
};

/// Group and d-table for one summand class (leaf with multiplicity) at cover
/// degree q. Seifert leaves use the cover pipeline; two-bridge leaves use the
/// lens-space table at q = 2 and their derived Seifert matrix otherwise.
/// Fact leaves have no cover data (MalformedInput).
CoverData cover_data(const KnotTerm& term, unsigned long q,
                     const std::vector<DSource>& dsources, const CheckOptions& opt);

/// Folds cover_data over all terms of the expression via direct sums.
CoverData cover_data(const KnotExpr& expr, unsigned long q,
                     const std::vector<DSource>& dsources, const CheckOptions& opt);

struct ClassOutcome {
    std::string name;
    long multiplicity = 1;
    LaurentPoly alexander;  // class polynomial, multiplicity included
    Status status = Status::Inconclusive;
    std::map<unsigned long, Verdict> per_q;
    std::optional<FactDeclaration> decided_by_declaration;
};

/// Main-Theorem contrapositive over a connected-sum expression.
struct SplitVerdict {
    Status status = Status::Inconclusive;
    std::string subject;
    bool lambda_required = false;
    CoprimalityMatrix coprimality;       // across summand classes
    std::vector<ClassOutcome> classes;
    std::optional<std::size_t> obstructed_class;
    unsigned long obstructed_q = 0;      // 0 = declared at unspecified prime power
    std::string certificate;
    std::vector<std::string> provenance;
};

/// Groups the expression's terms into summand classes, requires mutually
/// coprime class polynomials (else INCONCLUSIVE with the failing pair), then
/// reports OBSTRUCTED as soon as one class fails doubly-vanishing at some q.
SplitVerdict split_doubly_slice(const std::string& subject, const KnotExpr& e,
                                const std::vector<unsigned long>& qs,
                                const std::vector<DSource>& dsources,
                                const CheckOptions& opt);

}  // namespace dslice
