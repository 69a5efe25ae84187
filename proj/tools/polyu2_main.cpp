// polyu2 command-line tool. All algebra goes through the C API (polyu2.h);
// this file only parses flags, fans out sweeps and assembles output.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "polyu2.h"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 2;

struct CliError {
    std::string message;
    int code = kExitUsage;
};

[[noreturn]] void fail(const std::string& message, int code = kExitUsage) {
    throw CliError{message, code};
}

[[noreturn]] void fail_status(pu2_status status) {
    fail(pu2_last_error(), static_cast<int>(status));
}

// Half-integers are written as twice-values "t/2" (e.g. 5/2) or bare
// integers; floats never enter j parsing.
int parse_j_twice(const std::string& token) {
    std::size_t slash = token.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t used = 0;
            int whole = std::stoi(token, &used);
            if (used != token.size()) fail("bad j value '" + token + "'");
            return 2 * whole;
        }
        if (token.substr(slash + 1) != "2") fail("j must be written as t/2 or an integer");
        std::size_t used = 0;
        int twice = std::stoi(token.substr(0, slash), &used);
        if (used != slash) fail("bad j value '" + token + "'");
        return twice;
    } catch (const std::invalid_argument&) {
        fail("bad j value '" + token + "'");
    } catch (const std::out_of_range&) {
        fail("j value out of range: '" + token + "'");
    }
}

// "a", "a..b" or comma lists thereof; expanded in half-integer steps,
// sorted ascending and deduplicated.
std::vector<int> expand_j_spec(const std::string& spec) {
    std::vector<int> twices;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t comma = spec.find(',', start);
        std::string token =
            comma == std::string::npos ? spec.substr(start) : spec.substr(start, comma - start);
        if (token.empty()) fail("empty j token in '" + spec + "'");
        std::size_t dots = token.find("..");
        if (dots == std::string::npos) {
            twices.push_back(parse_j_twice(token));
        } else {
            int lo = parse_j_twice(token.substr(0, dots));
            int hi = parse_j_twice(token.substr(dots + 2));
            if (hi < lo) fail("empty j range '" + token + "'");
            for (int t = lo; t <= hi; ++t) twices.push_back(t);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    std::sort(twices.begin(), twices.end());
    twices.erase(std::unique(twices.begin(), twices.end()), twices.end());
    for (int t : twices)
        if (t < 0) fail("j must be nonnegative");
    return twices;
}

pu2_mode parse_mode(const std::string& mode) {
    if (mode == "exact") return PU2_MODE_EXACT;
    if (mode == "float") return PU2_MODE_FLOAT;
    fail("mode must be 'exact' or 'float'");
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) fail("cannot open output file '" + out_path + "'", kExitUsage);
    file << text;
}

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { pu2_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

struct OwnedReport {
    pu2_report* ptr = nullptr;
    ~OwnedReport() { pu2_report_free(ptr); }
};

struct OwnedRep {
    pu2_rep* ptr = nullptr;
    ~OwnedRep() { pu2_rep_free(ptr); }
};

struct OwnedSpace {
    pu2_space* ptr = nullptr;
    ~OwnedSpace() { pu2_space_free(ptr); }
};

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

// Wraps multiple run documents; a single run stays unwrapped.
std::string render_runs(const std::string& command, std::vector<json>&& runs) {
    if (runs.size() == 1) return dump(runs.front());
    json doc;
    doc["schema"] = 1;
    doc["kind"] = "sweep";
    doc["command"] = command;
    doc["runs"] = std::move(runs);
    return dump(doc);
}

struct Options {
    std::string j_spec;
    std::vector<std::string> kappas;
    std::string mode = "exact";
    std::string format = "json";
    std::string out_path;
    std::string z;
    int n_max = 0;
    int cap = 0;
};

int run_dims(const Options& opt) {
    std::vector<int> j_twices = expand_j_spec(opt.j_spec);
    std::vector<std::string> kappas = opt.kappas.empty() ? std::vector<std::string>{""} : opt.kappas;
    pu2_mode mode = parse_mode(opt.mode);

    json rows = json::array();
    std::string csv = "j,kappa,dim,clean\n";
    for (const std::string& kappa : kappas) {
        for (int t : j_twices) {
            int dim = 0, clean = 0;
            pu2_status status = pu2_dimension(t, kappa.c_str(), mode, &dim, &clean);
            if (status != PU2_OK) fail_status(status);
            rows.push_back({{"j_twice", t}, {"kappa", kappa}, {"dim", dim}, {"clean", clean != 0}});
            // semicolons keep multi-parameter kappas inside one CSV cell
            std::string kappa_cell = kappa.empty() ? "()" : kappa;
            std::replace(kappa_cell.begin(), kappa_cell.end(), ',', ';');
            char line[128];
            std::snprintf(line, sizeof(line), "%.17g,%s,%d,%s\n", 0.5 * t, kappa_cell.c_str(),
                          dim, clean ? "true" : "false");
            csv += line;
        }
    }
    if (opt.format == "csv") {
        write_output(opt.out_path, csv);
    } else {
        json doc = {{"schema", 1}, {"kind", "dimension_table"},
                    {"mode", opt.mode}, {"rows", std::move(rows)}};
        write_output(opt.out_path, dump(doc));
    }
    return 0;
}

int run_rep(const Options& opt) {
    if (opt.format != "json") fail("rep emits JSON only");
    std::vector<int> j_twices = expand_j_spec(opt.j_spec);
    std::vector<std::string> kappas = opt.kappas.empty() ? std::vector<std::string>{""} : opt.kappas;
    pu2_mode mode = parse_mode(opt.mode);

    std::vector<json> runs;
    for (const std::string& kappa : kappas) {
        for (int t : j_twices) {
            OwnedRep rep;
            pu2_status status = pu2_rep_build(t, kappa.c_str(), mode, &rep.ptr);
            if (status != PU2_OK) fail_status(status);
            OwnedString text;
            status = pu2_rep_to_json(rep.ptr, &text.ptr);
            if (status != PU2_OK) fail_status(status);
            runs.push_back(json::parse(text.str()));
        }
    }
    write_output(opt.out_path, render_runs("rep", std::move(runs)));
    return 0;
}

int run_verify(const Options& opt) {
    if (opt.format != "json") fail("verify emits JSON only");
    std::vector<int> j_twices = expand_j_spec(opt.j_spec);
    std::vector<std::string> kappas = opt.kappas.empty() ? std::vector<std::string>{""} : opt.kappas;
    pu2_mode mode = parse_mode(opt.mode);

    bool all_passed = true;
    std::vector<json> runs;
    for (const std::string& kappa : kappas) {
        for (int t : j_twices) {
            OwnedRep rep;
            pu2_status status = pu2_rep_build(t, kappa.c_str(), mode, &rep.ptr);
            if (status != PU2_OK) fail_status(status);
            OwnedString text;
            int passed = 0;
            status = pu2_rep_verify_json(rep.ptr, &text.ptr, &passed);
            if (status != PU2_OK && status != PU2_VERIFY_FAILED) fail_status(status);
            all_passed = all_passed && passed != 0;
            runs.push_back(json::parse(text.str()));
        }
    }
    write_output(opt.out_path, render_runs("verify", std::move(runs)));
    if (!all_passed) std::cerr << "verification failed\n";
    return all_passed ? 0 : 1;
}

int run_contract(const Options& opt) {
    std::vector<int> j_twices = expand_j_spec(opt.j_spec);
    if (opt.kappas.size() > 1) fail("contract takes a single kappa vector");
    std::string kappa = opt.kappas.empty() ? "" : opt.kappas.front();
    pu2_mode mode = parse_mode(opt.mode);
    for (int t : j_twices)
        if (t < opt.n_max) fail("contract requires 2*j_min >= n_max");

    OwnedString text;
    pu2_status status = pu2_contract_table(opt.n_max, kappa.c_str(), j_twices.data(),
                                           static_cast<int>(j_twices.size()), mode,
                                           opt.format == "csv" ? 1 : 0, &text.ptr);
    if (status != PU2_OK) fail_status(status);
    write_output(opt.out_path, text.str());
    return 0;
}

int run_higgs(const Options& opt) {
    if (opt.format != "json") fail("higgs emits JSON only");
    if (opt.kappas.empty()) fail("higgs requires --kappa");
    pu2_mode mode = parse_mode(opt.mode);

    bool all_passed = true;
    std::vector<json> runs;
    for (const std::string& kappa : opt.kappas) {
        OwnedSpace space;
        pu2_status status = pu2_space_build(kappa.c_str(), opt.cap, mode, &space.ptr);
        if (status != PU2_OK) fail_status(status);
        OwnedString text;
        int passed = 0;
        status = pu2_space_report_json(space.ptr, &text.ptr, &passed);
        if (status != PU2_OK && status != PU2_VERIFY_FAILED) fail_status(status);
        all_passed = all_passed && passed != 0;
        runs.push_back(json::parse(text.str()));
    }
    write_output(opt.out_path, render_runs("higgs", std::move(runs)));
    if (!all_passed) std::cerr << "verification failed\n";
    return all_passed ? 0 : 1;
}

int run_coherent(const Options& opt) {
    if (opt.format != "json") fail("coherent emits JSON only");
    if (opt.kappas.empty()) fail("coherent requires --kappa");
    std::vector<int> j_twices = expand_j_spec(opt.j_spec);
    pu2_mode mode = parse_mode(opt.mode);

    std::vector<json> runs;
    for (const std::string& kappa : opt.kappas) {
        for (int t : j_twices) {
            OwnedString text;
            pu2_status status =
                pu2_coherent_json(t, kappa.c_str(), opt.z.c_str(), mode, &text.ptr);
            if (status != PU2_OK) fail_status(status);
            runs.push_back(json::parse(text.str()));
        }
    }
    write_output(opt.out_path, render_runs("coherent", std::move(runs)));
    return 0;
}

void add_common(CLI::App* cmd, Options& opt, bool with_kappa = true) {
    cmd->add_option("--mode", opt.mode, "scalar mode: exact or float")
        ->envname("POLYU2_MODE")
        ->check(CLI::IsMember({"exact", "float"}));
    cmd->add_option("--format", opt.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opt.out_path, "output file (default: stdout)");
    if (with_kappa)
        cmd->add_option("--kappa", opt.kappas,
                        "deformation parameters p/q[,p/q...]; repeat the flag to sweep");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"polynomial u(2) algebra toolkit"};
    app.set_version_flag("--version", pu2_version());
    app.require_subcommand(1);

    Options opt;

    CLI::App* dims = app.add_subcommand("dims", "dimension table from the positivity scan");
    dims->add_option("--j", opt.j_spec, "j as t/2, a list, or a range a..b")->required();
    add_common(dims, opt);

    CLI::App* rep = app.add_subcommand("rep", "representation matrices J0, J3, J+, J-");
    rep->add_option("--j", opt.j_spec, "j as t/2, a list, or a range a..b")->required();
    add_common(rep, opt);

    CLI::App* verify = app.add_subcommand("verify", "verify the structure relations");
    verify->add_option("--j", opt.j_spec, "j as t/2, a list, or a range a..b")->required();
    add_common(verify, opt);

    CLI::App* contract =
        app.add_subcommand("contract", "contraction table Phi_j(n)/(2j) vs Phi_inf(n)");
    contract->add_option("--j", opt.j_spec, "j as t/2, a list, or a range a..b")->required();
    contract->add_option("--nmax", opt.n_max, "largest level n in the table")->required();
    add_common(contract, opt);

    CLI::App* higgs =
        app.add_subcommand("higgs", "two-mode cubic algebra: sectors + commutator check");
    higgs->add_option("--cap", opt.cap, "per-mode occupation cap (required for kappa >= 0)");
    add_common(higgs, opt);

    CLI::App* coherent = app.add_subcommand("coherent", "coherent-state coefficients and norm");
    coherent->add_option("--j", opt.j_spec, "j as t/2, a list, or a range a..b")->required();
    coherent->add_option("--z", opt.z, "z as 're' (exact: rational) or 're,im' (float)");
    add_common(coherent, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        if (dims->parsed()) return run_dims(opt);
        if (rep->parsed()) return run_rep(opt);
        if (verify->parsed()) return run_verify(opt);
        if (contract->parsed()) return run_contract(opt);
        if (higgs->parsed()) return run_higgs(opt);
        if (coherent->parsed()) return run_coherent(opt);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return kExitUsage;
}
