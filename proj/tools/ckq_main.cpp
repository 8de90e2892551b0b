// Command-line front end: candidate checks, admissibility sweeps, the
// kinematic-group report, and the classification catalog.
//
// Exit codes: 0 = admissible / ok / empty diff, 1 = inadmissible / nonempty
// diff, 2 = input error, 3 = candidate budget exceeded.

#include "ckq/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using namespace ckq;

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Perm parse_sigma(const std::string& text, int N) {
    if (text == "id") return perm_identity(N);
    Perm p;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            p.push_back(v);
        } catch (const std::exception&) {
            throw InvalidInput("sigma: bad token '" + tok + "'");
        }
    }
    if (static_cast<int>(p.size()) != N || !perm_valid(p))
        throw InvalidInput("sigma: '" + text + "' is not a permutation of 1.." +
                           std::to_string(N));
    return p;
}

// Slot lists: "1" (or "none"/"0") = unit, otherwise comma-separated slot
// indices; an optional leading 'i' per token ("i1,i2") is accepted so the
// single slot 1 stays expressible.
Mask parse_slots(const std::string& text, int N, const char* what) {
    if (text == "1" || text == "none" || text == "0" || text.empty()) return 0;
    Mask m = 0;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        std::string digits = (!tok.empty() && (tok[0] == 'i' || tok[0] == 'I'))
                                 ? tok.substr(1)
                                 : tok;
        int slot = 0;
        try {
            size_t used = 0;
            slot = std::stoi(digits, &used);
            if (used != digits.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw InvalidInput(std::string(what) + ": bad token '" + tok + "'");
        }
        if (slot < 1 || slot > N - 1)
            throw InvalidInput(std::string(what) + ": slot " + std::to_string(slot) +
                               " out of range 1.." + std::to_string(N - 1));
        m |= Signature::slot_bit(slot);
    }
    return m;
}

int default_threads() {
    if (const char* env = std::getenv("CKQ_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
    }
    return 0;  // auto
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw InvalidInput("cannot open output file '" + out_path + "'");
        f << text;
    }
}

json sigma_json(const std::optional<Perm>& s) {
    return s ? json(*s) : json(nullptr);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orthogonal quantum-group contraction checker"};
    app.require_subcommand(1);

    int n = 5;
    std::string sigma_text = "id";
    std::string j_text = "1";
    std::string J_text = "1";
    std::string mode_text = "full";
    std::string format = "table";
    std::string out_path;
    bool with_rtt = false;
    bool lenient = false;
    std::uint64_t budget = 0;
    int threads = default_threads();

    auto add_common = [&](CLI::App* cmd, bool with_n = true) {
        if (with_n) cmd->add_option("--n", n, "matrix size N (3..7)");
        cmd->add_option("--format", format, "output format: table|json")
            ->check(CLI::IsMember({"table", "json"}));
        cmd->add_option("--out", out_path, "write the report to a file");
        cmd->add_option("--threads", threads,
                        "worker threads (default: CKQ_THREADS or all cores)");
    };

    CLI::App* c_check = app.add_subcommand("check", "check one candidate");
    add_common(c_check);
    c_check->add_option("--sigma", sigma_text, "permutation: 'id' or one-line '1,4,3,5,2'");
    c_check->add_option("--j", j_text, "nilpotent slots, e.g. '2,3' ('1' = all unit)");
    c_check->add_option("--J", J_text, "deformation monomial slots ('1' = unit)");
    c_check->add_flag("--rtt", with_rtt, "also run the commutation-relations check");
    c_check->add_flag("--lenient", lenient, "disable the lost-equation rule");

    CLI::App* c_sweep = app.add_subcommand("sweep", "enumerate admissible contractions");
    add_common(c_sweep);
    std::string sweep_sigma_text;
    c_sweep->add_option("--sigma-mode", mode_text, "full|canonical")
        ->check(CLI::IsMember({"full", "canonical"}));
    c_sweep->add_option("--sigma", sweep_sigma_text,
                        "restrict the sweep to one permutation");
    c_sweep->add_flag("--rtt", with_rtt, "also run the commutation-relations check");
    c_sweep->add_flag("--lenient", lenient, "disable the lost-equation rule");
    c_sweep->add_option("--budget", budget, "max candidate count (0 = unlimited)");

    CLI::App* c_kin = app.add_subcommand("kinematics",
                                         "four-dimensional kinematic groups at N=5");
    add_common(c_kin, false);
    std::string kin_mode = "canonical";
    c_kin->add_option("--sigma-mode", kin_mode, "full|canonical")
        ->check(CLI::IsMember({"full", "canonical"}));

    CLI::App* c_cat = app.add_subcommand("catalog", "print the classification catalog");
    add_common(c_cat);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (n < 3 || n > 7) throw InvalidInput("--n must be in 3..7");

        if (c_check->parsed()) {
            Candidate c;
            c.N = n;
            c.sigma = parse_sigma(sigma_text, n);
            c.nil = parse_slots(j_text, n, "--j");
            c.J = parse_slots(J_text, n, "--J") & c.nil;
            Verdict v = check_candidate(c, with_rtt, !lenient);
            ReportDoc doc;
            doc.config = json{{"command", "check"},       {"n", n},
                              {"sigma", c.sigma},         {"j", mask_slots(c.nil)},
                              {"J", mask_slots(c.J)},     {"rtt", with_rtt},
                              {"strict", !lenient},       {"format", format}};
            doc.verdicts.push_back(make_verdict_entry(c, v));
            if (format == "json")
                emit(json(doc).dump(2) + "\n", out_path);
            else
                emit(render_verdict_table(doc), out_path);
            return v.admissible() ? 0 : 1;
        }

        if (c_sweep->parsed()) {
            SweepOptions opt;
            opt.mode = (mode_text == "full") ? SigmaMode::Full : SigmaMode::Canonical;
            if (!sweep_sigma_text.empty())
                opt.fixed_sigma = parse_sigma(sweep_sigma_text, n);
            opt.with_rtt = with_rtt;
            opt.strict = !lenient;
            opt.budget = budget;
            opt.threads = threads;
            SweepResult res = enumerate_admissible(n, opt);
            auto diff = compare_to_catalog(admissible_pairs(res), n);
            ReportDoc doc;
            doc.config = json{{"command", "sweep"},
                              {"n", n},
                              {"sigma_mode", mode_text},
                              {"sigma", sigma_json(opt.fixed_sigma)},
                              {"rtt", with_rtt},
                              {"strict", !lenient},
                              {"budget", budget},
                              {"format", format}};
            for (const auto& r : res.admissible)
                doc.verdicts.push_back(make_verdict_entry(r.c, r.v));
            DiffEntry de;
            for (auto p : diff.missing) de.missing.push_back(make_pair_entry(p));
            for (auto p : diff.extra) de.extra.push_back(make_pair_entry(p));
            doc.catalog_diff = de;
            if (format == "json")
                emit(json(doc).dump(2) + "\n", out_path);
            else
                emit(render_sweep_table(doc, res.examined), out_path);
            return diff.empty() ? 0 : 1;
        }

        if (c_kin->parsed()) {
            SweepOptions opt;
            opt.mode = (kin_mode == "full") ? SigmaMode::Full : SigmaMode::Canonical;
            opt.threads = threads;
            SweepResult res = enumerate_admissible(5, opt);
            KinematicsReport rep = kinematics_report(res);
            json config{{"command", "kinematics"},
                        {"n", 5},
                        {"sigma_mode", kin_mode},
                        {"format", format}};
            if (format == "json")
                emit(kinematics_json(rep, config).dump(2) + "\n", out_path);
            else
                emit(kinematics_table(rep), out_path);
            return 0;
        }

        if (c_cat->parsed()) {
            json config{{"command", "catalog"}, {"n", n}, {"format", format}};
            if (format == "json")
                emit(catalog_json(n, config).dump(2) + "\n", out_path);
            else
                emit(catalog_table(n), out_path);
            return 0;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
