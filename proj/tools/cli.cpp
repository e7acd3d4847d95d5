#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fkf/serialize.hpp"
#include "fkf/verifier.hpp"

namespace fkf::cli {

namespace {

struct RunConfig {
    std::string ansatz = "p4";
    int cycles = 1;
    int max_tower = 0; // 0 = derive from cycles
    std::string format = "json";
    std::string checks = "all";
    std::string out_path;
    std::string cache_dir;
};

Ansatz parse_ansatz(const std::string& s) {
    if (s == "p4") return Ansatz::P4;
    if (s == "a5") return Ansatz::A5;
    throw CLI::ValidationError("--ansatz", "must be p4 or a5");
}

CheckSet parse_checks(const std::string& s) {
    if (s == "all") return CheckSet::all();
    CheckSet cs = CheckSet::none();
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "jacobi")
            cs.jacobi = true;
        else if (item == "charpoly")
            cs.charpoly = true;
        else if (item == "conservation")
            cs.conservation = true;
        else if (item == "homogeneity")
            cs.homogeneity = true;
        else if (item == "crosscheck")
            cs.crosscheck = true;
        else
            throw CLI::ValidationError("--checks", "unknown check '" + item + "'");
    }
    return cs;
}

std::string default_cache_dir() {
    const char* env = std::getenv("FKF_CACHE_DIR");
    return env ? std::string(env) : std::string();
}

int effective_tower(const RunConfig& cfg) {
    return cfg.max_tower > 0 ? cfg.max_tower : required_tower(cfg.cycles);
}

void validate(const RunConfig& cfg) {
    if (cfg.cycles < 0) throw CLI::ValidationError("--cycles", "must be >= 0");
    if (cfg.max_tower > 0 && cfg.max_tower < required_tower(cfg.cycles))
        throw CLI::ValidationError("--max-tower", "must be >= " +
                                                      std::to_string(required_tower(cfg.cycles)) +
                                                      " for " + std::to_string(cfg.cycles) +
                                                      " cycles");
}

std::filesystem::path cache_path(const std::string& dir, Ansatz an, int cycles) {
    return std::filesystem::path(dir) / (std::string(ansatz_name(an)) + "-c" +
                                         std::to_string(cycles) + "-v" +
                                         std::to_string(schema_version) + ".json");
}

std::optional<KillingState> load_cached(const std::filesystem::path& path, Ansatz an, int cycles,
                                        std::ostream& err) {
    std::ifstream f(path);
    if (!f) return std::nullopt;
    try {
        KillingState st = state_from_json(nlohmann::json::parse(f));
        if (st.comps.ansatz == an && st.cycles_done == cycles) return st;
        err << "cache entry " << path.string() << " does not match the requested run\n";
    } catch (const std::exception& e) {
        err << "cache entry " << path.string() << " unreadable (" << e.what() << ")\n";
    }
    return std::nullopt;
}

// generate: a cached state is re-verified before reuse, anything suspect is
// recomputed. verify: a cached state is taken as the object under test, so
// corruption surfaces as check failures rather than a silent recompute.
KillingState obtain_state(const RunConfig& cfg, const Prolongation& pr, bool reverify_cache,
                          std::ostream& err) {
    Ansatz an = parse_ansatz(cfg.ansatz);
    std::string dir = cfg.cache_dir.empty() ? default_cache_dir() : cfg.cache_dir;
    std::filesystem::path path;
    if (!dir.empty()) {
        path = cache_path(dir, an, cfg.cycles);
        if (auto cached = load_cached(path, an, cfg.cycles, err)) {
            if (!reverify_cache) return *cached;
            if (all_pass(check_killing(*cached, pr))) return *cached;
            err << "cache entry " << path.string() << " failed re-verification; recomputing\n";
        }
    }
    KillingState st = ::fkf::run(an, cfg.cycles, pr);
    if (!dir.empty()) atomic_write_file(path.string(), state_to_json(st).dump(2) + "\n");
    return st;
}

void emit(const std::string& content, const std::string& out_path, std::ostream& out) {
    if (out_path.empty() || out_path == "-")
        out << content;
    else
        atomic_write_file(out_path, content);
}

int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Prolongation pr(effective_tower(cfg));
    KillingState st = obtain_state(cfg, pr, /*reverify_cache=*/true, err);
    std::string payload;
    if (cfg.format == "json")
        payload = state_to_json(st).dump(2) + "\n";
    else if (cfg.format == "latex")
        payload = state_to_latex(st);
    else
        payload = state_to_text(st);
    emit(payload, cfg.out_path, out);
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Prolongation pr(effective_tower(cfg));
    KillingState st = obtain_state(cfg, pr, /*reverify_cache=*/false, err);
    auto reports = check_killing(st, pr, parse_checks(cfg.checks));
    int fails = 0;
    for (const auto& r : reports) {
        out << report_to_json_line(r) << "\n";
        err << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << "  (" << r.detail << ")\n";
        if (!r.pass) ++fails;
    }
    err << reports.size() << " checks, " << fails << " failed\n";
    return fails == 0 ? 0 : 1;
}

int cmd_tables_tj(int max_j, const std::string& format, std::ostream& out) {
    Prolongation pr(std::max(max_j + 1, 12));
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (int j = 3; j <= max_j; ++j) {
            Poly rec = pr.tj(j, TjMethod::recursive);
            Poly clo = pr.tj(j, TjMethod::closed);
            nlohmann::json row;
            row["j"] = j;
            row["recursive"] = rec.to_string();
            row["closed"] = clo.to_string();
            row["agree"] = (rec == clo);
            rows.push_back(std::move(row));
        }
        out << rows.dump(2) << "\n";
    } else {
        for (int j = 3; j <= max_j; ++j) {
            Poly rec = pr.tj(j, TjMethod::recursive);
            Poly clo = pr.tj(j, TjMethod::closed);
            out << "T_" << j << " = " << rec.to_string()
                << (rec == clo ? "   [methods agree]" : "   [METHODS DISAGREE: closed = " +
                                                            clo.to_string() + "]")
                << "\n";
        }
    }
    return 0;
}

int cmd_tables_chi(int from, int to, const std::string& format, std::ostream& out) {
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (int k = from; k <= to; ++k) {
            nlohmann::json row;
            row["k"] = k;
            row["det"] = chi_det(k).get_str();
            row["eps_sum"] = chi_eps_sum(k).get_str();
            rows.push_back(std::move(row));
        }
        out << rows.dump(2) << "\n";
    } else {
        for (int k = from; k <= to; ++k) {
            Rational d = chi_det(k), e = chi_eps_sum(k);
            Rational ad = d < 0 ? Rational(-d) : d;
            out << "chi_" << k << " = " << d.get_str() << "  (eps-sum " << e.get_str() << ", |chi| "
                << ad.get_str() << ")\n";
        }
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact formal Killing field engine for the minimal Lagrangian system"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_state_opts = [&](CLI::App* cmd) {
        cmd->add_option("--ansatz", cfg.ansatz, "tower seed: p4 or a5")
            ->check(CLI::IsMember({"p4", "a5"}));
        cmd->add_option("--cycles", cfg.cycles, "number of period-6 cycles");
        cmd->add_option("--max-tower", cfg.max_tower, "prolongation tower bound");
        cmd->add_option("--out", cfg.out_path, "output path (default stdout)");
        cmd->add_option("--cache-dir", cfg.cache_dir,
                        "state cache directory (default $FKF_CACHE_DIR)");
    };

    CLI::App* gen = app.add_subcommand("generate", "compute a tower and serialize it");
    add_state_opts(gen);
    gen->add_option("--format", cfg.format, "json, latex or text")
        ->check(CLI::IsMember({"json", "latex", "text"}));

    CLI::App* ver = app.add_subcommand("verify", "run verification checks on a tower");
    add_state_opts(ver);
    ver->add_option("--checks", cfg.checks,
                    "all or comma list of jacobi,charpoly,conservation,homogeneity,crosscheck");

    CLI::App* tab = app.add_subcommand("tables", "print T_j or chi_k tables");
    tab->require_subcommand(1);
    int tj_max = 10, chi_from = 4, chi_to = 30;
    std::string tab_format = "text";
    CLI::App* tj = tab->add_subcommand("tj", "T_j by both methods with agreement flag");
    tj->add_option("--max", tj_max, "largest index j");
    tj->add_option("--format", tab_format)->check(CLI::IsMember({"json", "text"}));
    CLI::App* chi = tab->add_subcommand("chi", "even-order obstruction determinants");
    chi->add_option("--from", chi_from, "first k");
    chi->add_option("--to", chi_to, "last k");
    chi->add_option("--format", tab_format)->check(CLI::IsMember({"json", "text"}));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (gen->parsed() || ver->parsed()) {
            try {
                validate(cfg);
            } catch (const CLI::ParseError& e) {
                err << "usage error: " << e.what() << "\n";
                return 2;
            }
            return gen->parsed() ? cmd_generate(cfg, out, err) : cmd_verify(cfg, out, err);
        }
        if (tj->parsed()) {
            if (tj_max < 3) {
                err << "usage error: --max must be >= 3\n";
                return 2;
            }
            return cmd_tables_tj(tj_max, tab_format, out);
        }
        if (chi->parsed()) {
            if (chi_from < 4 || chi_to < chi_from) {
                err << "usage error: need 4 <= --from <= --to\n";
                return 2;
            }
            return cmd_tables_chi(chi_from, chi_to, tab_format, out);
        }
        err << "usage error: no subcommand\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const RangeError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "engine error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

} // namespace fkf::cli
