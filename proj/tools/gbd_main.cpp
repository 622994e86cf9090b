// Command-line front end for the Groebner basis decision library.
// Talks to the core exclusively through the C API in gbd/gbd.h.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gbd/gbd.h"
#include "json.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

struct SystemDeleter {
    void operator()(gbd_system* s) const { gbd_system_free(s); }
};
struct ReportDeleter {
    void operator()(gbd_report* r) const { gbd_report_free(r); }
};
using SystemPtr = std::unique_ptr<gbd_system, SystemDeleter>;
using ReportPtr = std::unique_ptr<gbd_report, ReportDeleter>;

std::string take_string(char* s) {
    std::string out = s ? s : "";
    gbd_string_free(s);
    return out;
}

int fail_usage(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return kExitUsage;
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

int env_threads() {
    const char* v = std::getenv("GBD_THREADS");
    if (!v)
        return 1;
    int n = std::atoi(v);
    return n > 0 ? n : 1;
}

SystemPtr load_system(const std::string& path, int& exit_code) {
    std::string text;
    if (!read_file(path, text)) {
        exit_code = fail_usage("cannot read '" + path + "'");
        return nullptr;
    }
    gbd_system* sys = nullptr;
    if (gbd_system_parse(text.c_str(), &sys) != GBD_OK) {
        exit_code = fail_usage(std::string(gbd_last_error()) + " in '" + path + "'");
        return nullptr;
    }
    exit_code = kExitTrue;
    return SystemPtr(sys);
}

int run_decide(const std::string& path, const std::string& mode, const std::string& order,
               bool no_rereduce, bool json) {
    int code = 0;
    SystemPtr sys = load_system(path, code);
    if (!sys)
        return code;
    if (!order.empty() && gbd_system_set_order(sys.get(), order.c_str()) != GBD_OK)
        return fail_usage(gbd_last_error());

    gbd_report* raw = nullptr;
    if (gbd_decide(sys.get(), mode.c_str(), no_rereduce ? 0 : 1, env_threads(), &raw) != GBD_OK)
        return fail_usage(gbd_last_error());
    ReportPtr report(raw);

    char* text = nullptr;
    auto status = json ? gbd_report_json(report.get(), &text) : gbd_report_text(report.get(), &text);
    if (status != GBD_OK)
        return fail_usage(gbd_last_error());
    std::cout << take_string(text);
    return gbd_report_is_groebner(report.get()) == 1 ? kExitTrue : kExitFalse;
}

int run_gen_pham(int m, int extra_vars, unsigned long long seed, bool gb, bool trivial_p,
                 const std::string& out_path) {
    gbd_system* raw_sys = nullptr;
    char* raw_factors = nullptr;
    if (gbd_generate_pham_like(m, extra_vars, seed, gb ? 1 : 0, trivial_p ? 1 : 0, &raw_sys,
                               &raw_factors) != GBD_OK)
        return fail_usage(gbd_last_error());
    SystemPtr sys(raw_sys);
    std::string factors = take_string(raw_factors);

    char* raw_text = nullptr;
    if (gbd_system_serialize(sys.get(), &raw_text) != GBD_OK)
        return fail_usage(gbd_last_error());
    std::string text = take_string(raw_text);

    if (out_path.empty()) {
        std::cout << text;
        if (!factors.empty())
            std::cerr << factors;
        return kExitTrue;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        return fail_usage("cannot write '" + out_path + "'");
    out << text;
    if (!factors.empty()) {
        std::ofstream side(out_path + ".factors", std::ios::binary);
        if (!side)
            return fail_usage("cannot write '" + out_path + ".factors'");
        side << factors;
        std::cerr << "wrote " << out_path << " and " << out_path << ".factors\n";
    } else {
        std::cerr << "wrote " << out_path << "\n";
    }
    return kExitTrue;
}

int run_bench(int m_min, int m_max, int seeds, const std::string& kind,
              const std::string& csv_path) {
    if (m_min < 2 || m_max < m_min)
        return fail_usage("need 2 <= m-min <= m-max");
    std::ostringstream csv;
    csv << "m,seed,mode,verdict,reductions,wall_ms\n";
    const std::vector<std::string> modes{"plain", "buchberger", "extended", "pham"};
    for (int m = m_min; m <= m_max; ++m) {
        for (int seed = 0; seed < seeds; ++seed) {
            bool gb = kind == "gb" || (kind == "mixed" && seed % 2 == 0);
            gbd_system* raw_sys = nullptr;
            if (gbd_generate_pham_like(m, 1, static_cast<unsigned long long>(seed), gb ? 1 : 0, 0,
                                       &raw_sys, nullptr) != GBD_OK)
                return fail_usage(gbd_last_error());
            SystemPtr sys(raw_sys);
            for (const auto& mode : modes) {
                auto start = std::chrono::steady_clock::now();
                gbd_report* raw = nullptr;
                if (gbd_decide(sys.get(), mode.c_str(), 1, env_threads(), &raw) != GBD_OK)
                    return fail_usage(gbd_last_error());
                ReportPtr report(raw);
                double ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - start)
                                .count();
                csv << m << ',' << seed << ',' << mode << ','
                    << (gbd_report_is_groebner(report.get()) == 1 ? "true" : "false") << ','
                    << gbd_report_reductions(report.get()) << ',' << ms << "\n";
            }
        }
    }
    if (csv_path.empty()) {
        std::cout << csv.str();
        return kExitTrue;
    }
    std::ofstream out(csv_path, std::ios::binary);
    if (!out)
        return fail_usage("cannot write '" + csv_path + "'");
    out << csv.str();
    std::cerr << "wrote " << csv_path << "\n";
    return kExitTrue;
}

int run_check_theory(const std::string& path, const std::string& factors_path, bool json) {
    int code = 0;
    SystemPtr sys = load_system(path, code);
    if (!sys)
        return code;
    std::string factors;
    if (!factors_path.empty() && !read_file(factors_path, factors))
        return fail_usage("cannot read '" + factors_path + "'");

    char* raw = nullptr;
    gbd_status status = gbd_check_theory(sys.get(), factors.c_str(), &raw);
    std::string out = take_string(raw);
    if (status == GBD_ERR_PRECONDITION) {
        std::cerr << "precondition failure: " << gbd_last_error() << "\n";
        return kExitPrecondition;
    }
    if (status != GBD_OK && status != GBD_ERR_CHECK_FAILED)
        return fail_usage(gbd_last_error());

    if (json) {
        std::cout << out;
    } else {
        auto doc = nlohmann::json::parse(out);
        for (const auto& f : doc["factors"])
            std::cout << "factor (" << f["i"] << "," << f["j"] << "): gcd_commutes="
                      << (f["gcd_commutes"].get<bool>() ? "yes" : "NO")
                      << " cofactor_coprime=" << (f["cofactor_coprime"].get<bool>() ? "yes" : "NO")
                      << "\n";
        for (const auto& c : doc["chain_matrix"])
            std::cout << "chain matrix k=" << c["k"] << ": "
                      << (c["pass"].get<bool>() ? "pass" : "FAIL") << " (lt det = "
                      << c["actual_lt"].get<std::string>() << ")\n";
        std::cout << (doc["pass"].get<bool>() ? "all checks pass\n" : "CHECK FAILURES\n");
    }
    return status == GBD_OK ? kExitTrue : kExitFalse;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Groebner basis decision tool"};
    app.require_subcommand(1);

    std::string path, mode = "extended", order;
    bool json = false, no_rereduce = false;
    auto* decide = app.add_subcommand("decide", "decide whether a system is a Groebner basis");
    decide->add_option("file", path, "system file")->required();
    decide->add_option("--mode", mode, "plain | buchberger | extended")
        ->check(CLI::IsMember({"plain", "buchberger", "extended"}));
    decide->add_option("--order", order, "override the ordering, e.g. 'grlex x y z'");
    decide->add_flag("--json", json, "emit the machine-readable report");
    decide->add_flag("--no-b3-rereduce", no_rereduce,
                     "never re-reduce cached chain edges against G'");

    int m = 4, extra_vars = 1, seeds = 10;
    unsigned long long seed = 0;
    bool no_gb = false, trivial_p = false;
    std::string out_path;
    auto* gen = app.add_subcommand("gen-pham", "generate a Pham-like system");
    gen->add_option("--m", m, "number of polynomials (>= 2)")->required();
    gen->add_option("--extra-vars", extra_vars, "shared tail variables");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_flag("--no-gb", no_gb, "perturb the system so it is not a Groebner basis");
    gen->add_flag("--trivial-p", trivial_p, "common factor 1 (plain Pham system)");
    gen->add_option("--out", out_path, "output file (stdout if omitted)");

    int m_min = 2, m_max = 6;
    std::string kind = "gb", csv_path;
    auto* bench = app.add_subcommand("bench", "reduction counts per mode over generated systems");
    bench->add_option("--m-min", m_min, "smallest m");
    bench->add_option("--m-max", m_max, "largest m");
    bench->add_option("--seeds", seeds, "seeds per m");
    bench->add_option("--kind", kind, "gb | nongb | mixed")
        ->check(CLI::IsMember({"gb", "nongb", "mixed"}));
    bench->add_option("--csv", csv_path, "CSV output file (stdout if omitted)");

    std::string factors_path;
    auto* check = app.add_subcommand("check-theory", "structural checks on a system");
    check->add_option("file", path, "system file")->required();
    check->add_option("--factors", factors_path, "factor sidecar file");
    check->add_flag("--json", json, "emit the machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (decide->parsed())
        return run_decide(path, mode, order, no_rereduce, json);
    if (gen->parsed())
        return run_gen_pham(m, extra_vars, seed, !no_gb, trivial_p, out_path);
    if (bench->parsed())
        return run_bench(m_min, m_max, seeds, kind, csv_path);
    if (check->parsed())
        return run_check_theory(path, factors_path, json);
    return kExitUsage;
}
