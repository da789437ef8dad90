#include "dslice/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace dslice::io {

namespace {

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        Int v;
        if (v.set_str(j.get<std::string>(), 10) != 0)
            throw MalformedInput("bad integer: " + j.dump());
        return v;
    }
    throw MalformedInput("expected integer, got " + j.dump());
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        try {
            return rat_parse(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw MalformedInput(e.what());
        }
    }
    throw MalformedInput("expected rational string, got " + j.dump());
}

json int_to_json(const Int& v) { return v.get_str(); }
json rat_to_json(const Rat& v) { return rat_str(v); }

json element_to_json(const Element& e) {
    json out = json::array();
    for (const Int& c : e) out.push_back(int_to_json(c));
    return out;
}

Element element_from_json(const json& j) {
    if (!j.is_array()) throw MalformedInput("element must be an array");
    Element e;
    for (const json& c : j) e.push_back(int_from_json(c));
    return e;
}

json poly_to_json(const LaurentPoly& p) {
    json out = json::object();
    for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = rat_to_json(c);
    return out;
}

LaurentPoly poly_from_json(const json& j) {
    if (!j.is_object()) throw MalformedInput("polynomial must be an exponent->coefficient map");
    std::map<long, Rat> m;
    for (auto it = j.begin(); it != j.end(); ++it) {
        long e = 0;
        try {
            e = std::stol(it.key());
        } catch (...) {
            throw MalformedInput("bad exponent key: " + it.key());
        }
        m[e] = rat_from_json(it.value());
    }
    return LaurentPoly::from_map(m);
}

json intmatrix_to_json(const IntMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
        out.push_back(row);
    }
    return out;
}

json ratmatrix_to_json(const RatMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m(i, j)));
        out.push_back(row);
    }
    return out;
}

std::string group_pretty(const LinkedGroup& h) {
    if (h.rank() == 0) return "trivial";
    std::string s;
    for (std::size_t i = 0; i < h.rank(); ++i) {
        if (i) s += " + ";
        s += "Z/" + h.factors()[i].get_str();
    }
    return s;
}

std::string elem_pretty(const Element& e) {
    std::string s = "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += e[i].get_str();
    }
    return s + ")";
}

std::string subgroup_pretty(const SubgroupInfo& s) {
    if (s.generators.empty()) return "<0>";
    std::string out = "<";
    for (std::size_t i = 0; i < s.generators.size(); ++i) {
        if (i) out += ", ";
        out += elem_pretty(s.generators[i]);
    }
    return out + ">";
}

}  // namespace

bool KnotFile::has(const std::string& name) const {
    return descs.count(name) > 0 || sums.count(name) > 0;
}

KnotFile parse_knot_file(const json& j) {
    if (!j.is_object() || !j.contains("knots") || !j["knots"].is_array())
        throw MalformedInput("knot file needs a top-level \"knots\" array");
    KnotFile kf;
    for (const json& rec : j["knots"]) {
        if (!rec.is_object() || !rec.contains("name") || !rec.contains("kind"))
            throw MalformedInput("knot record needs name and kind");
        std::string name = rec["name"].get<std::string>();
        if (kf.has(name)) throw MalformedInput("duplicate knot name: " + name);
        std::string kind = rec["kind"].get<std::string>();
        if (kind == "seifert") {
            if (!rec.contains("matrix") || !rec["matrix"].is_array())
                throw MalformedInput("seifert record needs a matrix: " + name);
            const json& rows = rec["matrix"];
            std::size_t n = rows.size();
            IntMatrix v(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                if (!rows[i].is_array() || rows[i].size() != n)
                    throw MalformedInput("seifert matrix must be square: " + name);
                for (std::size_t jj = 0; jj < n; ++jj) v(i, jj) = int_from_json(rows[i][jj]);
            }
            kf.descs.emplace(name, SeifertMatrix(std::move(v), name));
        } else if (kind == "two_bridge") {
            if (!rec.contains("p") || !rec.contains("q"))
                throw MalformedInput("two_bridge record needs p and q: " + name);
            kf.descs.emplace(name, TwoBridge(int_from_json(rec["p"]), int_from_json(rec["q"]), name));
        } else if (kind == "facts") {
            if (!rec.contains("alexander"))
                throw MalformedInput("facts record needs an alexander map: " + name);
            std::vector<FactDeclaration> decls;
            if (rec.contains("declarations")) {
                for (const json& d : rec["declarations"]) {
                    FactDeclaration fd;
                    fd.q = d.contains("q") ? d["q"].get<unsigned long>() : 0;
                    if (fd.q != 0 && !is_prime_power(fd.q))
                        throw MalformedInput("declared q must be 0 or a prime power: " + name);
                    if (!d.contains("doubly_vanishing") || !d["doubly_vanishing"].is_boolean())
                        throw MalformedInput("declaration needs doubly_vanishing: " + name);
                    fd.doubly_vanishing = d["doubly_vanishing"].get<bool>();
                    if (!d.contains("provenance"))
                        throw MalformedInput("declaration needs provenance: " + name);
                    fd.provenance = d["provenance"].get<std::string>();
                    decls.push_back(std::move(fd));
                }
            }
            kf.descs.emplace(name, FactRecord(name, poly_from_json(rec["alexander"]), std::move(decls)));
        } else if (kind == "sum") {
            if (!rec.contains("terms") || !rec["terms"].is_array())
                throw MalformedInput("sum record needs terms: " + name);
            std::vector<std::pair<std::string, long>> terms;
            for (const json& t : rec["terms"]) {
                if (!t.is_array() || t.size() != 2)
                    throw MalformedInput("sum term must be [name, multiplicity]: " + name);
                terms.emplace_back(t[0].get<std::string>(),
                                   static_cast<long>(int_from_json(t[1]).get_si()));
            }
            kf.sums.emplace(name, std::move(terms));
        } else {
            throw MalformedInput("unknown record kind: " + kind);
        }
        kf.order.push_back(name);
    }
    for (const auto& [name, terms] : kf.sums)
        for (const auto& [ref, mult] : terms)
            if (!kf.has(ref)) throw MalformedInput("sum '" + name + "' references undefined knot '" + ref + "'");
    return kf;
}

KnotFile load_knot_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open knot file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw MalformedInput("bad JSON in " + path + ": " + e.what());
    }
    return parse_knot_file(j);
}

namespace {

void resolve_into(const KnotFile& kf, const std::string& name, long mult, KnotExpr& out,
                  std::set<std::string>& visiting) {
    if (auto it = kf.descs.find(name); it != kf.descs.end()) {
        out.terms.push_back(KnotTerm{it->second, mult});
        return;
    }
    auto it = kf.sums.find(name);
    if (it == kf.sums.end()) throw MalformedInput("unknown knot: " + name);
    if (!visiting.insert(name).second) throw MalformedInput("cyclic sum definition: " + name);
    for (const auto& [ref, m] : it->second) resolve_into(kf, ref, mult * m, out, visiting);
    visiting.erase(name);
}

}  // namespace

KnotExpr resolve(const KnotFile& kf, const std::string& name) {
    KnotExpr e;
    std::set<std::string> visiting;
    resolve_into(kf, name, 1, e, visiting);
    return e;
}

KnotExpr parse_sum_expr(const KnotFile& kf, const std::string& expr) {
    KnotExpr out;
    std::set<std::string> visiting;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < expr.size() && std::isspace(static_cast<unsigned char>(expr[pos]))) ++pos;
    };
    bool expect_term = true;
    while (true) {
        skip_ws();
        if (pos == expr.size()) break;
        if (!expect_term) {
            if (expr[pos] != '+') throw MalformedInput("expected '+' in expression: " + expr);
            ++pos;
            expect_term = true;
            continue;
        }
        long mult = 1;
        skip_ws();
        if (pos < expr.size() && expr[pos] == '(') {
            ++pos;
            skip_ws();
            std::size_t start = pos;
            if (pos < expr.size() && (expr[pos] == '-' || expr[pos] == '+')) ++pos;
            while (pos < expr.size() && std::isdigit(static_cast<unsigned char>(expr[pos]))) ++pos;
            if (start == pos) throw MalformedInput("expected multiplicity in parentheses: " + expr);
            mult = std::stol(expr.substr(start, pos - start));
            skip_ws();
            if (pos == expr.size() || expr[pos] != ')')
                throw MalformedInput("unclosed multiplicity: " + expr);
            ++pos;
        } else if (pos < expr.size() &&
                   (std::isdigit(static_cast<unsigned char>(expr[pos])) || expr[pos] == '-')) {
            std::size_t start = pos;
            if (expr[pos] == '-') ++pos;
            while (pos < expr.size() && std::isdigit(static_cast<unsigned char>(expr[pos]))) ++pos;
            if (start + (expr[start] == '-' ? 1 : 0) == pos)
                throw MalformedInput("bad multiplicity in expression: " + expr);
            mult = std::stol(expr.substr(start, pos - start));
        }
        skip_ws();
        std::size_t start = pos;
        while (pos < expr.size() &&
               (std::isalnum(static_cast<unsigned char>(expr[pos])) || expr[pos] == '_'))
            ++pos;
        if (start == pos) throw MalformedInput("expected knot name in expression: " + expr);
        std::string name = expr.substr(start, pos - start);
        resolve_into(kf, name, mult, out, visiting);
        expect_term = false;
    }
    if (out.terms.empty()) throw MalformedInput("empty expression");
    return out;
}

DSource parse_d_records(const json& j) {
    if (!j.is_object() || !j.contains("knot") || !j.contains("q") || !j.contains("records"))
        throw MalformedRecord("d-record file needs knot, q, records");
    DSource s;
    s.knot = j["knot"].get<std::string>();
    s.q = j["q"].get<unsigned long>();
    for (const json& r : j["records"]) {
        if (!r.is_object() || !r.contains("element") || !r.contains("provenance"))
            throw MalformedRecord("each d-record needs element and provenance");
        DRecord rec;
        rec.element = element_from_json(r["element"]);
        std::string prov = r["provenance"].get<std::string>();
        if (prov.empty()) throw MalformedRecord("empty provenance in d-record");
        if (r.contains("value")) {
            rec.value = DValue::exact(rat_from_json(r["value"]), prov);
        } else if (r.contains("bound")) {
            const json& b = r["bound"];
            if (!b.is_object() || !b.contains("rel") || !b.contains("value"))
                throw MalformedRecord("bound needs rel and value");
            std::string rel = b["rel"].get<std::string>();
            BoundRel br;
            if (rel == "<=")
                br = BoundRel::LE;
            else if (rel == ">=")
                br = BoundRel::GE;
            else if (rel == "!=")
                br = BoundRel::NE;
            else
                throw MalformedRecord("bound rel must be <=, >= or !=");
            rec.value = DValue::bound(br, rat_from_json(b["value"]), prov);
        } else {
            throw MalformedRecord("d-record needs value or bound");
        }
        s.records.push_back(std::move(rec));
    }
    return s;
}

DSource load_d_records(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedRecord("cannot open d-record file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw MalformedRecord("bad JSON in " + path + ": " + e.what());
    }
    DSource s = parse_d_records(j);
    s.origin = path;
    return s;
}

json to_json(const LinkedGroup& h) {
    json out;
    out["q"] = h.q();
    json f = json::array();
    for (const Int& d : h.factors()) f.push_back(int_to_json(d));
    out["factors"] = f;
    out["gram"] = ratmatrix_to_json(h.gram());
    out["t_action"] = intmatrix_to_json(h.t_action());
    return out;
}

LinkedGroup group_from_json(const json& j) {
    if (!j.is_object()) throw MalformedInput("group must be an object");
    unsigned long q = j.at("q").get<unsigned long>();
    std::vector<Int> factors;
    for (const json& f : j.at("factors")) factors.push_back(int_from_json(f));
    std::size_t k = factors.size();
    RatMatrix gram(k, k);
    IntMatrix t(k, k);
    const json& gj = j.at("gram");
    const json& tj = j.at("t_action");
    if (gj.size() != k || tj.size() != k) throw MalformedInput("group matrices have wrong shape");
    for (std::size_t i = 0; i < k; ++i) {
        if (gj[i].size() != k || tj[i].size() != k)
            throw MalformedInput("group matrices have wrong shape");
        for (std::size_t c = 0; c < k; ++c) {
            gram(i, c) = rat_from_json(gj[i][c]);
            t(i, c) = int_from_json(tj[i][c]);
        }
    }
    return LinkedGroup::from_parts(q, std::move(factors), gram, t);
}

namespace {

json subgroup_info_to_json(const SubgroupInfo& s) {
    json out;
    out["order"] = int_to_json(s.order);
    json gens = json::array();
    for (const Element& g : s.generators) gens.push_back(element_to_json(g));
    out["generators"] = gens;
    return out;
}

SubgroupInfo subgroup_info_from_json(const json& j) {
    SubgroupInfo s;
    s.order = int_from_json(j.at("order"));
    for (const json& g : j.at("generators")) s.generators.push_back(element_from_json(g));
    return s;
}

json candidate_to_json(const CandidateOutcome& c) {
    json out;
    out["m1"] = subgroup_info_to_json(c.m1);
    if (c.m2) out["m2"] = subgroup_info_to_json(*c.m2);
    switch (c.state) {
        case CandidateOutcome::State::Witness: out["state"] = "witness"; break;
        case CandidateOutcome::State::Killed: out["state"] = "killed"; break;
        case CandidateOutcome::State::Undecided: out["state"] = "undecided"; break;
    }
    if (c.killer) {
        out["killer"] = element_to_json(*c.killer);
        out["note"] = c.killer_note;
    }
    if (!c.unknowns.empty()) {
        json u = json::array();
        for (const Element& e : c.unknowns) u.push_back(element_to_json(e));
        out["unknowns"] = u;
    }
    return out;
}

json dbar_to_json(const std::map<Element, DBarValue>& entries) {
    json out = json::array();
    for (const auto& [e, v] : entries) {
        json rec;
        rec["element"] = element_to_json(e);
        switch (v.kind) {
            case DBarValue::Kind::Exact:
                rec["kind"] = "exact";
                rec["value"] = rat_to_json(v.value);
                break;
            case DBarValue::Kind::Nonzero: rec["kind"] = "nonzero"; break;
            case DBarValue::Kind::Unknown: rec["kind"] = "unknown"; break;
        }
        rec["provenance"] = v.provenance;
        out.push_back(rec);
    }
    return out;
}

void dbar_from_json(const json& j, DBar& db) {
    for (const json& rec : j) {
        Element e = element_from_json(rec.at("element"));
        DBarValue v;
        std::string kind = rec.at("kind").get<std::string>();
        if (kind == "exact") {
            v.kind = DBarValue::Kind::Exact;
            v.value = rat_from_json(rec.at("value"));
        } else if (kind == "nonzero") {
            v.kind = DBarValue::Kind::Nonzero;
        } else {
            v.kind = DBarValue::Kind::Unknown;
        }
        if (rec.contains("provenance")) v.provenance = rec["provenance"].get<std::string>();
        db.set(e, v);
    }
}

}  // namespace

json report_json(const Verdict& v) {
    json out;
    out["tool"] = "dslice";
    out["report"] = "check";
    out["mode"] = v.mode;
    out["subject"] = v.subject;
    out["q"] = v.q;
    out["lambda"] = v.lambda_required;
    out["verdict"] = status_str(v.status);
    out["certificate"] = v.certificate;
    if (v.host) out["group"] = to_json(*v.host);
    out["dbar"] = dbar_to_json(v.dbar_entries);
    json cands = json::array();
    for (const CandidateOutcome& c : v.candidates) cands.push_back(candidate_to_json(c));
    out["candidates"] = cands;
    out["provenance"] = v.provenance;
    return out;
}

json report_json(const SplitVerdict& v) {
    json out;
    out["tool"] = "dslice";
    out["report"] = "split";
    out["subject"] = v.subject;
    out["lambda"] = v.lambda_required;
    out["verdict"] = status_str(v.status);
    out["certificate"] = v.certificate;
    json classes = json::array();
    for (const ClassOutcome& c : v.classes) {
        json cj;
        cj["name"] = c.name;
        cj["multiplicity"] = c.multiplicity;
        cj["alexander"] = poly_to_json(c.alexander);
        cj["status"] = status_str(c.status);
        if (c.decided_by_declaration) {
            json d;
            d["q"] = c.decided_by_declaration->q;
            d["doubly_vanishing"] = c.decided_by_declaration->doubly_vanishing;
            d["provenance"] = c.decided_by_declaration->provenance;
            cj["declaration"] = d;
        }
        json checks = json::object();
        for (const auto& [q, verdict] : c.per_q) checks[std::to_string(q)] = report_json(verdict);
        cj["checks"] = checks;
        classes.push_back(cj);
    }
    out["classes"] = classes;
    json cop;
    cop["all_coprime"] = v.coprimality.all_coprime;
    json pairs = json::array();
    for (const CoprimePair& p : v.coprimality.pairs) {
        json pj;
        pj["i"] = p.i;
        pj["j"] = p.j;
        pj["coprime"] = p.coprime;
        pj["poly_i"] = poly_to_json(v.classes[p.i].alexander);
        pj["poly_j"] = poly_to_json(v.classes[p.j].alexander);
        if (p.cert) {
            pj["f1"] = poly_to_json(p.cert->f1);
            pj["f2"] = poly_to_json(p.cert->f2);
            pj["c"] = int_to_json(p.cert->c);
        } else {
            pj["common"] = poly_to_json(p.common);
        }
        pairs.push_back(pj);
    }
    cop["pairs"] = pairs;
    out["coprimality"] = cop;
    if (v.obstructed_class) {
        out["obstructed_class"] = *v.obstructed_class;
        out["obstructed_q"] = v.obstructed_q;
    }
    out["provenance"] = v.provenance;
    return out;
}

std::string report_text(const Verdict& v) {
    std::ostringstream os;
    os << "check " << v.subject << "  (mode=" << v.mode << ", q=" << v.q
       << ", lambda=" << (v.lambda_required ? "yes" : "no") << ")\n";
    if (v.host) {
        os << "group: " << group_pretty(*v.host) << "  (order " << v.host->order().get_str()
           << ")\n";
        if (v.host->rank() > 0) {
            os << "gram (mod 1): " << v.host->gram().str() << "\n";
            os << "deck action: " << v.host->t_action().str() << "\n";
        }
    }
    os << "candidates: " << v.candidates.size() << "\n";
    for (const CandidateOutcome& c : v.candidates) {
        os << "  " << subgroup_pretty(c.m1);
        if (c.m2) os << " (+) " << subgroup_pretty(*c.m2);
        switch (c.state) {
            case CandidateOutcome::State::Witness: os << ": d-bar = 0 on every element"; break;
            case CandidateOutcome::State::Killed:
                os << ": killed by " << elem_pretty(*c.killer) << " -- " << c.killer_note;
                break;
            case CandidateOutcome::State::Undecided:
                os << ": undecided (" << c.unknowns.size() << " unknown d-bar entries";
                if (!c.unknowns.empty()) os << ", e.g. " << elem_pretty(c.unknowns.front());
                os << ")";
                break;
        }
        os << "\n";
    }
    os << "verdict: " << status_str(v.status) << "\n";
    os << "certificate: " << v.certificate << "\n";
    if (!v.provenance.empty()) {
        os << "provenance:\n";
        for (const std::string& p : v.provenance) os << "  - " << p << "\n";
    }
    return os.str();
}

std::string report_text(const SplitVerdict& v) {
    std::ostringstream os;
    os << "split " << v.subject << "  (lambda=" << (v.lambda_required ? "yes" : "no") << ")\n";
    os << "classes:\n";
    for (const ClassOutcome& c : v.classes) {
        os << "  " << c.multiplicity << " * " << c.name << "  alexander: " << c.alexander.str()
           << "  status: " << status_str(c.status);
        if (c.decided_by_declaration) os << "  [declared: " << c.decided_by_declaration->provenance << "]";
        os << "\n";
    }
    os << "coprimality: " << (v.coprimality.all_coprime ? "pairwise coprime" : "FAILS") << "\n";
    for (const CoprimePair& p : v.coprimality.pairs) {
        os << "  (" << v.classes[p.i].name << ", " << v.classes[p.j].name << "): ";
        if (p.coprime)
            os << "coprime, certificate c = " << p.cert->c.get_str() << ", f1 = " << p.cert->f1.str()
               << ", f2 = " << p.cert->f2.str();
        else
            os << "common factor " << p.common.str();
        os << "\n";
    }
    os << "verdict: " << status_str(v.status) << "\n";
    os << "certificate: " << v.certificate << "\n";
    if (!v.provenance.empty()) {
        os << "provenance:\n";
        for (const std::string& p : v.provenance) os << "  - " << p << "\n";
    }
    return os.str();
}

json cover_report_json(const std::string& subject, const LinkedGroup& h,
                       const std::vector<Subgroup>& mets,
                       const std::vector<MetabolizerPair>& pairs, bool lambda_only) {
    json out;
    out["tool"] = "dslice";
    out["report"] = "cover";
    out["subject"] = subject;
    out["q"] = h.q();
    out["lambda"] = lambda_only;
    out["group"] = to_json(h);
    json ms = json::array();
    for (const Subgroup& m : mets) {
        json mj = subgroup_info_to_json(subgroup_info(h, m));
        mj["lambda_invariant"] = subgroup_t_invariant(h, m);
        ms.push_back(mj);
    }
    out["metabolizers"] = ms;
    json ps = json::array();
    for (const MetabolizerPair& p : pairs) {
        json pj;
        pj["g1"] = subgroup_info_to_json(subgroup_info(h, p.g1));
        pj["g2"] = subgroup_info_to_json(subgroup_info(h, p.g2));
        ps.push_back(pj);
    }
    out["pairs"] = ps;
    return out;
}

std::string cover_report_text(const std::string& subject, const LinkedGroup& h,
                              const std::vector<Subgroup>& mets,
                              const std::vector<MetabolizerPair>& pairs, bool lambda_only) {
    std::ostringstream os;
    os << "cover " << subject << "  (q=" << h.q() << (lambda_only ? ", Lambda-invariant only" : "")
       << ")\n";
    os << "group: " << group_pretty(h) << "  (order " << h.order().get_str() << ")\n";
    if (h.rank() > 0) {
        os << "gram (mod 1): " << h.gram().str() << "\n";
        os << "deck action: " << h.t_action().str() << "\n";
    }
    os << "metabolizers: " << mets.size() << "\n";
    for (const Subgroup& m : mets) {
        SubgroupInfo info = subgroup_info(h, m);
        os << "  " << subgroup_pretty(info) << "  order " << m.order.get_str();
        if (subgroup_t_invariant(h, m)) os << "  [Lambda-invariant]";
        os << "\n";
    }
    os << "pairs: " << pairs.size() << "\n";
    for (const MetabolizerPair& p : pairs)
        os << "  {" << subgroup_pretty(subgroup_info(h, p.g1)) << ", "
           << subgroup_pretty(subgroup_info(h, p.g2)) << "}\n";
    return os.str();
}

namespace {

bool verify_check_report(const json& report, std::string& diagnostics) {
    LinkedGroup h = group_from_json(report.at("group"));
    DBar db(h);
    dbar_from_json(report.at("dbar"), db);
    std::string mode = report.at("mode").get<std::string>();
    bool lambda = report.at("lambda").get<bool>();
    Int cap = h.order();  // the report's own group is already enumerable
    Verdict re = mode == "slice" ? slice_check(h, db, cap)
                                 : doubly_vanishing_check(h, db, lambda, cap);
    std::string recorded = report.at("verdict").get<std::string>();
    if (status_str(re.status) != recorded) {
        diagnostics += "verdict mismatch: recorded " + recorded + ", recomputed " +
                       status_str(re.status) + "\n";
        return false;
    }
    const json& cands = report.at("candidates");
    if (cands.size() != re.candidates.size()) {
        diagnostics += "candidate count mismatch\n";
        return false;
    }
    for (std::size_t i = 0; i < re.candidates.size(); ++i) {
        json rec = candidate_to_json(re.candidates[i]);
        if (rec.at("state") != cands[i].at("state")) {
            diagnostics += "candidate state mismatch at index " + std::to_string(i) + "\n";
            return false;
        }
        if (rec.at("m1").at("generators") != cands[i].at("m1").at("generators")) {
            diagnostics += "candidate witness mismatch at index " + std::to_string(i) + "\n";
            return false;
        }
    }
    return true;
}

bool verify_cover_report(const json& report, std::string& diagnostics) {
    LinkedGroup h = group_from_json(report.at("group"));
    bool lambda_only = report.at("lambda").get<bool>();
    std::vector<Subgroup> mets = metabolizers(h, lambda_only, h.order());
    std::vector<MetabolizerPair> pairs = metabolizer_pairs(h, lambda_only, h.order());
    if (report.at("metabolizers").size() != mets.size()) {
        diagnostics += "metabolizer count mismatch\n";
        return false;
    }
    if (report.at("pairs").size() != pairs.size()) {
        diagnostics += "pair count mismatch\n";
        return false;
    }
    for (std::size_t i = 0; i < mets.size(); ++i) {
        json mj = subgroup_info_to_json(subgroup_info(h, mets[i]));
        if (mj.at("generators") != report.at("metabolizers").at(i).at("generators")) {
            diagnostics += "metabolizer mismatch at index " + std::to_string(i) + "\n";
            return false;
        }
    }
    return true;
}

bool verify_split_report(const json& report, std::string& diagnostics) {
    const json& cop = report.at("coprimality");
    for (const json& pj : cop.at("pairs")) {
        LaurentPoly pi = poly_from_json(pj.at("poly_i"));
        LaurentPoly pq = poly_from_json(pj.at("poly_j"));
        if (pj.at("coprime").get<bool>()) {
            LaurentPoly f1 = poly_from_json(pj.at("f1"));
            LaurentPoly f2 = poly_from_json(pj.at("f2"));
            Int c = int_from_json(pj.at("c"));
            LaurentPoly check = f1 * pi + f2 * pq - LaurentPoly::constant(Rat(c));
            if (!check.is_zero()) {
                diagnostics += "Bezout certificate fails to re-multiply\n";
                return false;
            }
            if (c <= 0) {
                diagnostics += "certificate constant not positive\n";
                return false;
            }
        } else {
            if (coprime(pi, pq)) {
                diagnostics += "recorded common factor but polynomials are coprime\n";
                return false;
            }
        }
    }
    std::string verdict = report.at("verdict").get<std::string>();
    if (verdict == "OBSTRUCTED") {
        if (!cop.at("all_coprime").get<bool>()) {
            diagnostics += "OBSTRUCTED without full coprimality\n";
            return false;
        }
        if (!report.contains("obstructed_class")) {
            diagnostics += "OBSTRUCTED without obstructed class\n";
            return false;
        }
        std::size_t idx = report.at("obstructed_class").get<std::size_t>();
        const json& cls = report.at("classes").at(idx);
        if (cls.at("status").get<std::string>() != "OBSTRUCTED") {
            diagnostics += "obstructed class status mismatch\n";
            return false;
        }
        if (cls.contains("declaration")) {
            if (cls.at("declaration").at("doubly_vanishing").get<bool>()) {
                diagnostics += "declaration does not obstruct\n";
                return false;
            }
            if (cls.at("declaration").at("provenance").get<std::string>().empty()) {
                diagnostics += "declaration without provenance\n";
                return false;
            }
        } else {
            unsigned long q = report.at("obstructed_q").get<unsigned long>();
            const json& checks = cls.at("checks");
            if (!checks.contains(std::to_string(q))) {
                diagnostics += "missing obstructing check report\n";
                return false;
            }
            const json& chk = checks.at(std::to_string(q));
            if (chk.at("verdict").get<std::string>() != "OBSTRUCTED") {
                diagnostics += "obstructing check report is not OBSTRUCTED\n";
                return false;
            }
            if (!verify_check_report(chk, diagnostics)) return false;
        }
    }
    // re-verify every embedded check report
    for (const json& cls : report.at("classes"))
        for (auto it = cls.at("checks").begin(); it != cls.at("checks").end(); ++it)
            if (!verify_check_report(it.value(), diagnostics)) return false;
    return true;
}

}  // namespace

bool verify_report(const json& report, std::string& diagnostics) {
    try {
        if (report.contains("reports")) {
            for (const json& r : report.at("reports"))
                if (!verify_report(r, diagnostics)) return false;
            return true;
        }
        std::string kind = report.at("report").get<std::string>();
        if (kind == "check") return verify_check_report(report, diagnostics);
        if (kind == "split") return verify_split_report(report, diagnostics);
        if (kind == "cover") return verify_cover_report(report, diagnostics);
        diagnostics += "unknown report kind: " + kind + "\n";
        return false;
    } catch (const json::exception& e) {
        diagnostics += std::string("malformed report: ") + e.what() + "\n";
        return false;
    } catch (const Error& e) {
        diagnostics += std::string("verification error: ") + e.what() + "\n";
        return false;
    }
}

}  // namespace dslice::io
