#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dslice/io.hpp"

namespace {

using namespace dslice;

struct GlobalOpts {
    std::string knots_path = "corpus/knots.json";
    std::string format = "text";
    std::string sign = "minus";
    std::string out_path;
    long cap = kDefaultEnumCap;
};

CheckOptions make_check_options(const GlobalOpts& g, bool lambda) {
    CheckOptions opt;
    opt.require_lambda = lambda;
    opt.sign = g.sign == "plus" ? FormSign::Plus : FormSign::Minus;
    opt.cap = Int(g.cap);
    return opt;
}

std::vector<unsigned long> q_list(std::vector<unsigned long> qs, unsigned long qmax) {
    if (qmax > 0)
        for (unsigned long q : prime_powers_up_to(qmax)) qs.push_back(q);
    if (qs.empty())
        for (unsigned long q : prime_powers_up_to(9)) qs.push_back(q);
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    for (unsigned long q : qs)
        if (!is_prime_power(q)) throw NotPrimePower("q = " + std::to_string(q) + " is not a prime power");
    return qs;
}

void emit(const GlobalOpts& g, const std::string& text, const io::json& j) {
    if (g.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
    if (!g.out_path.empty()) {
        std::ofstream out(g.out_path);
        if (!out) throw MalformedInput("cannot write report to " + g.out_path);
        out << j.dump(2) << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"dslice: branched-cover linking forms, correction-term tables, and "
                 "double-slice obstructions for knots"};
    app.require_subcommand(1);

    GlobalOpts g;
    if (const char* cap = std::getenv("DSLICE_ENUM_CAP")) g.cap = std::atol(cap);
    app.add_option("--knots", g.knots_path, "knot descriptor file")->capture_default_str();
    app.add_option("--cap", g.cap, "subgroup enumeration cap")->capture_default_str();
    app.add_option("--sign", g.sign, "linking form sign convention")
        ->check(CLI::IsMember({"minus", "plus"}))
        ->capture_default_str();
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--out", g.out_path, "also write the JSON report to this file");

    std::string knot_name, expr_text, report_path, mode = "doubly-vanishing";
    std::vector<unsigned long> qs;
    unsigned long qmax = 0;
    bool lambda = false;
    std::vector<std::string> d_files;

    CLI::App* cmd_alex = app.add_subcommand("alexander", "Alexander polynomial of a knot record");
    cmd_alex->add_option("knot", knot_name, "knot record name")->required();

    CLI::App* cmd_cover = app.add_subcommand(
        "cover", "branched cover homology, linking form, deck action, metabolizers");
    cmd_cover->add_option("knot", knot_name, "knot record name")->required();
    cmd_cover->add_option("--q", qs, "cover degree (prime power)")->required();
    cmd_cover->add_flag("--lambda", lambda, "restrict to Lambda-invariant metabolizers");

    CLI::App* cmd_check = app.add_subcommand("check", "run an obstruction check");
    cmd_check->add_option("knot", knot_name, "knot record name")->required();
    cmd_check->add_option("--q", qs, "cover degree(s)");
    cmd_check->add_option("--q-max", qmax, "check all prime powers up to this bound");
    cmd_check->add_option("--d", d_files, "d-record files");
    cmd_check->add_option("--mode", mode, "slice | doubly-vanishing | doubly-slice")
        ->check(CLI::IsMember({"slice", "doubly-vanishing", "doubly-slice"}))
        ->capture_default_str();
    cmd_check->add_flag("--lambda", lambda, "require Lambda-invariance of metabolizer pairs");

    CLI::App* cmd_split = app.add_subcommand(
        "split", "coprime-splitting double-slice obstruction on a connected sum");
    cmd_split->add_option("expr", expr_text, "sum expression, e.g. \"K + (-1)K3\"")->required();
    cmd_split->add_option("--q", qs, "cover degree(s)");
    cmd_split->add_option("--q-max", qmax, "check all prime powers up to this bound");
    cmd_split->add_option("--d", d_files, "d-record files");
    cmd_split->add_flag("--lambda", lambda, "require Lambda-invariance of metabolizer pairs");

    CLI::App* cmd_verify = app.add_subcommand("verify", "re-run the witnesses in a report file");
    cmd_verify->add_option("report", report_path, "report JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    if (cmd_verify->parsed()) {
        std::ifstream in(report_path);
        if (!in) throw MalformedInput("cannot open report: " + report_path);
        io::json j;
        try {
            in >> j;
        } catch (const io::json::exception& e) {
            throw MalformedInput(std::string("bad report JSON: ") + e.what());
        }
        std::string diagnostics;
        if (io::verify_report(j, diagnostics)) {
            std::cout << "verify " << report_path << ": OK\n";
            return 0;
        }
        std::cout << "verify " << report_path << ": FAILED\n" << diagnostics;
        return 1;
    }

    io::KnotFile kf = io::load_knot_file(g.knots_path);

    if (cmd_alex->parsed()) {
        KnotExpr e = io::resolve(kf, knot_name);
        LaurentPoly total = alexander(e);
        std::ostringstream os;
        os << "alexander " << knot_name << ": " << total.str() << "\n";
        io::json j;
        j["tool"] = "dslice";
        j["report"] = "alexander";
        j["subject"] = knot_name;
        j["alexander"] = total.str();
        if (e.terms.size() > 1 || e.terms.front().multiplicity != 1) {
            os << "factors:\n";
            io::json fs = io::json::array();
            for (const KnotTerm& t : e.terms) {
                LaurentPoly leaf = alexander(t.desc);
                os << "  " << t.multiplicity << " * " << desc_name(t.desc) << ": " << leaf.str()
                   << "\n";
                io::json f;
                f["name"] = desc_name(t.desc);
                f["multiplicity"] = t.multiplicity;
                f["alexander"] = leaf.str();
                fs.push_back(f);
            }
            j["factors"] = fs;
        }
        emit(g, os.str(), j);
        return 0;
    }

    if (cmd_cover->parsed()) {
        std::vector<unsigned long> list = q_list(qs, 0);
        if (list.size() != 1) throw MalformedInput("cover takes exactly one --q");
        unsigned long q = list.front();
        KnotExpr e = io::resolve(kf, knot_name);
        CheckOptions opt = make_check_options(g, lambda);
        CoverData cd = cover_data(e, q, {}, opt);
        std::vector<Subgroup> mets = metabolizers(cd.group, lambda, opt.cap);
        std::vector<MetabolizerPair> pairs = metabolizer_pairs(cd.group, lambda, opt.cap);
        emit(g, io::cover_report_text(knot_name, cd.group, mets, pairs, lambda),
             io::cover_report_json(knot_name, cd.group, mets, pairs, lambda));
        return 0;
    }

    std::vector<DSource> dsources;
    for (const std::string& f : d_files) dsources.push_back(io::load_d_records(f));
    CheckOptions opt = make_check_options(g, lambda);

    if (cmd_check->parsed()) {
        std::vector<unsigned long> list = q_list(qs, qmax);
        KnotExpr e = io::resolve(kf, knot_name);
        std::vector<Verdict> verdicts;
        for (unsigned long q : list) {
            CoverData cd = cover_data(e, q, dsources, opt);
            DBar db = dbar(cd.table);
            Verdict v = mode == "slice" ? slice_check(cd.group, db, opt.cap)
                                        : doubly_vanishing_check(cd.group, db, opt.require_lambda,
                                                                 opt.cap);
            v.subject = knot_name;
            verdicts.push_back(std::move(v));
        }
        std::ostringstream os;
        io::json container;
        if (verdicts.size() == 1) {
            container = io::report_json(verdicts.front());
            os << io::report_text(verdicts.front());
        } else {
            io::json arr = io::json::array();
            for (const Verdict& v : verdicts) {
                arr.push_back(io::report_json(v));
                os << io::report_text(v) << "\n";
            }
            container["tool"] = "dslice";
            container["reports"] = arr;
        }
        if (mode == "doubly-slice") {
            bool obstructed = false;
            for (const Verdict& v : verdicts) obstructed = obstructed || v.status == Status::Obstructed;
            os << "double-slice obstruction over q in {";
            for (std::size_t i = 0; i < list.size(); ++i) os << (i ? "," : "") << list[i];
            os << "}: " << (obstructed ? "OBSTRUCTED (not doubly slice)" : "no obstruction found")
               << "\n";
        }
        emit(g, os.str(), container);
        return 0;
    }

    if (cmd_split->parsed()) {
        std::vector<unsigned long> list = q_list(qs, qmax);
        KnotExpr e = io::parse_sum_expr(kf, expr_text);
        SplitVerdict sv = split_doubly_slice(expr_text, e, list, dsources, opt);
        emit(g, io::report_text(sv), io::report_json(sv));
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const dslice::GroupTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const dslice::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
