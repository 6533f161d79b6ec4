// polarforge command-line front end. Talks to the shared library through
// the C interface only; all orchestration here is flag parsing and file IO.

#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "polarforge.h"

using nlohmann::json;

namespace {

int fail(pf_status st, const std::string& context) {
    std::cerr << "error: " << context;
    const char* msg = pf_last_error();
    if (msg && *msg) std::cerr << ": " << msg;
    std::cerr << "\n";
    return (int)st;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << body;
}

uint64_t default_seed() {
    const char* env = std::getenv("POLARFORGE_SEED");
    if (env && *env) return std::strtoull(env, nullptr, 10);
    return 1;
}

std::string timestamp_utc() {
    char buf[32];
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json manifest_for(const std::string& subcommand, const json& params,
                  uint64_t seed) {
    json m;
    m["schema_version"] = 1;
    m["tool_version"] = pf_version();
    m["subcommand"] = subcommand;
    m["params"] = params;
    m["master_seed"] = seed;
    m["timestamp"] = timestamp_utc();
    return m;
}

struct ChannelFlags {
    std::string kind = "awgn";
    double eps = 0.5;
    double snr_db = 4.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--channel", kind, "Channel family: awgn or bec")
            ->check(CLI::IsMember({"awgn", "bec"}));
        cmd->add_option("--eps", eps, "BEC erasure probability");
        cmd->add_option("--snr-db", snr_db, "Design Eb/N0 in dB (awgn)");
    }
    json to_json(uint64_t n, uint64_t k) const {
        json j;
        j["kind"] = kind == "bec" ? "bec" : "awgn";
        if (kind == "bec") {
            j["eps"] = eps;
        } else {
            j["ebn0_db"] = snr_db;
            j["rate"] = (double)k / (double)n;
        }
        return j;
    }
};

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { pf_string_free(ptr); }
};

struct OwnedDesign {
    pf_design* ptr = nullptr;
    ~OwnedDesign() { pf_design_free(ptr); }
};

int load_design(const std::string& path, OwnedDesign& d) {
    std::string doc;
    try {
        doc = read_file(path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return (int)PF_EDATA;
    }
    pf_status st = pf_design_from_json(doc.c_str(), &d.ptr);
    if (st != PF_OK) return fail(st, "loading " + path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polarforge: polar code construction, analysis and simulation"};
    app.require_subcommand(1);

    // construct
    auto* c_cmd = app.add_subcommand("construct", "Build an information set");
    uint64_t c_n = 128, c_k = 64;
    std::string c_strategy = "reliability";
    double c_alpha = 100.0;
    int c_cap = -1;
    std::string c_out = "design.json";
    ChannelFlags c_ch;
    c_cmd->add_option("--n", c_n, "Blocklength (power of two)")->required();
    c_cmd->add_option("--k", c_k, "Information size")->required();
    c_cmd->add_option("--strategy", c_strategy, "reliability or mixed")
        ->check(CLI::IsMember({"reliability", "mixed"}));
    c_cmd->add_option("--alpha", c_alpha, "Mixed-cost weight (default 100)");
    c_cmd->add_option("--cap", c_cap, "Explicit degree cap (default: auto)");
    c_cmd->add_option("--out", c_out, "Output design file");
    c_ch.attach(c_cmd);

    // analyze
    auto* a_cmd = app.add_subcommand("analyze", "Weight spectrum and bounds");
    std::string a_design;
    bool a_csv = false;
    std::optional<double> a_snr, a_eps;
    a_cmd->add_option("--design", a_design, "Design file")->required();
    a_cmd->add_flag("--csv", a_csv, "Emit one CSV row instead of JSON");
    a_cmd->add_option("--override-snr-db", a_snr, "Re-evaluate at this Eb/N0");
    a_cmd->add_option("--override-eps", a_eps, "Re-evaluate on BEC(eps)");

    // sweep
    auto* w_cmd = app.add_subcommand("sweep", "Design-parameter staircase sweep");
    uint64_t w_n = 16, w_k = 8;
    std::string w_family = "bec";
    double w_rho_min = 0.5, w_rho_max = 14.0;
    unsigned w_points = 50;
    std::string w_out;
    w_cmd->add_option("--n", w_n)->required();
    w_cmd->add_option("--k", w_k)->required();
    w_cmd->add_option("--family", w_family, "bec (eps = exp(-rho)) or awgn (rho in dB)")
        ->check(CLI::IsMember({"bec", "awgn"}));
    w_cmd->add_option("--rho-min", w_rho_min);
    w_cmd->add_option("--rho-max", w_rho_max);
    w_cmd->add_option("--points", w_points, "Grid size (linear in rho)");
    w_cmd->add_option("--out", w_out, "CSV file (default stdout)");

    // simulate
    auto* s_cmd = app.add_subcommand("simulate", "Monte-Carlo BLER over BPSK-AWGN");
    std::string s_design, s_decoder = "sc", s_pre = "none", s_out;
    unsigned s_list = 8;
    std::vector<double> s_grid;
    uint64_t s_max_blocks = 10'000'000, s_target = 100;
    uint64_t s_seed = default_seed();
    unsigned s_workers = 1;
    bool s_exact = false, s_noiseless = false;
    int s_crc_len = 12;
    uint32_t s_crc_poly = 0xC06;
    s_cmd->add_option("--design", s_design, "Design file")->required();
    s_cmd->add_option("--decoder", s_decoder)->check(CLI::IsMember({"sc", "scl"}));
    s_cmd->add_option("--list", s_list, "SCL list size");
    s_cmd->add_option("--pre", s_pre, "Pretransform")
        ->check(CLI::IsMember({"none", "crc", "pac"}));
    s_cmd->add_option("--crc-len", s_crc_len);
    s_cmd->add_option("--crc-poly", s_crc_poly);
    s_cmd->add_option("--ebn0", s_grid, "Eb/N0 grid in dB")->required();
    s_cmd->add_option("--max-blocks", s_max_blocks);
    s_cmd->add_option("--target-errors", s_target);
    s_cmd->add_option("--seed", s_seed, "Master seed (env POLARFORGE_SEED)");
    s_cmd->add_option("--workers", s_workers);
    s_cmd->add_flag("--exact-llr", s_exact, "Exact boxplus instead of min-sum");
    s_cmd->add_flag("--noiseless", s_noiseless, "Smoke mode without noise");
    s_cmd->add_option("--out", s_out, "CSV file (default stdout)");

    // oracle-check
    auto* o_cmd = app.add_subcommand("oracle-check", "Brute-force validation suite");
    int o_max_m = 4;
    uint64_t o_sampled = 200, o_seed = default_seed();
    unsigned o_max_k = 20;
    o_cmd->add_option("--max-m", o_max_m, "Exhaustive budget (<= 4)");
    o_cmd->add_option("--sampled-sets", o_sampled, "Random sets at m = 5");
    o_cmd->add_option("--sample-max-k", o_max_k);
    o_cmd->add_option("--seed", o_seed);

    // compare
    auto* p_cmd = app.add_subcommand("compare", "Perturbation metrics of two designs");
    std::string p_a, p_b;
    std::optional<double> p_snr, p_eps;
    p_cmd->add_option("--a", p_a, "First design file")->required();
    p_cmd->add_option("--b", p_b, "Second design file")->required();
    p_cmd->add_option("--override-snr-db", p_snr);
    p_cmd->add_option("--override-eps", p_eps);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_cmd->parsed()) {
            json params;
            params["n"] = c_n;
            params["k"] = c_k;
            params["channel"] = c_ch.to_json(c_n, c_k);
            params["strategy"] = c_strategy;
            params["alpha"] = c_alpha;
            if (c_cap >= 0) params["degree_cap"] = c_cap;
            OwnedDesign d;
            pf_status st = pf_design_build(params.dump().c_str(), &d.ptr);
            if (st != PF_OK) return fail(st, "construct");
            OwnedString doc;
            if ((st = pf_design_to_json(d.ptr, &doc.ptr)) != PF_OK)
                return fail(st, "serializing design");
            json design = json::parse(doc.ptr);
            design["manifest"] = manifest_for("construct", params, default_seed());
            write_file(c_out, design.dump(2) + "\n");
            OwnedString rep;
            if ((st = pf_design_analyze(d.ptr, nullptr, &rep.ptr)) != PF_OK)
                return fail(st, "analyzing design");
            json r = json::parse(rep.ptr);
            std::cout << "n=" << c_n << " k=" << c_k << " strategy=" << c_strategy
                      << " wmin=" << r["wmin"].get<uint64_t>()
                      << " awmin=" << r["awmin"].get<std::string>()
                      << " sc_sum=" << r["sc_sum"].get<double>()
                      << " ub_wmin=" << r["ub_wmin"].get<double>() << "\n";
            return 0;
        }

        if (a_cmd->parsed()) {
            OwnedDesign d;
            if (int rc = load_design(a_design, d)) return rc;
            std::string override_json;
            if (a_eps) {
                json ch;
                ch["kind"] = "bec";
                ch["eps"] = *a_eps;
                override_json = ch.dump();
            } else if (a_snr) {
                json base = json::parse(read_file(a_design));
                json ch;
                ch["kind"] = "awgn";
                ch["ebn0_db"] = *a_snr;
                ch["rate"] = (double)base["k"].get<uint64_t>() /
                             (double)base["n"].get<uint64_t>();
                override_json = ch.dump();
            }
            OwnedString rep;
            pf_status st = pf_design_analyze(
                d.ptr, override_json.empty() ? nullptr : override_json.c_str(),
                &rep.ptr);
            if (st != PF_OK) return fail(st, "analyze");
            json r = json::parse(rep.ptr);
            if (a_csv) {
                double snr = r["channel"].value("ebn0_db", 0.0);
                std::cout << "n,k,strategy,snr_db,wmin,awmin,sc_sum,ub_wmin\n"
                          << r["n"].get<uint64_t>() << "," << r["k"].get<uint64_t>()
                          << "," << r["strategy"].get<std::string>() << "," << snr
                          << "," << r["wmin"].get<uint64_t>() << ","
                          << r["awmin"].get<std::string>() << ","
                          << r["sc_sum"].get<double>() << ","
                          << r["ub_wmin"].get<double>() << "\n";
            } else {
                std::cout << rep.ptr << "\n";
            }
            return 0;
        }

        if (w_cmd->parsed()) {
            if (w_points < 1) {
                std::cerr << "error: empty sweep grid\n";
                return (int)PF_EINVAL;
            }
            std::vector<double> grid;
            for (unsigned t = 0; t < w_points; ++t) {
                double frac = w_points == 1 ? 0.0 : (double)t / (w_points - 1);
                grid.push_back(w_rho_min + frac * (w_rho_max - w_rho_min));
            }
            json params;
            params["n"] = w_n;
            params["k"] = w_k;
            params["family"] = w_family;
            params["rho_grid"] = grid;
            OwnedString csv;
            pf_status st = pf_sweep_run(params.dump().c_str(), &csv.ptr);
            if (st != PF_OK) return fail(st, "sweep");
            if (w_out.empty()) {
                std::cout << csv.ptr;
            } else {
                write_file(w_out, csv.ptr);
                write_file(w_out + ".manifest.json",
                           manifest_for("sweep", params, default_seed()).dump(2) + "\n");
            }
            return 0;
        }

        if (s_cmd->parsed()) {
            json params;
            params["design_doc"] = read_file(s_design);
            params["decoder"] = s_decoder;
            params["list_size"] = s_list;
            params["pretransform"] = s_pre;
            params["crc_poly"] = s_crc_poly;
            params["crc_len"] = s_crc_len;
            params["ebn0_grid_db"] = s_grid;
            params["max_blocks"] = s_max_blocks;
            params["target_errors"] = s_target;
            params["seed"] = s_seed;
            params["workers"] = s_workers;
            params["exact_llr"] = s_exact;
            params["noiseless"] = s_noiseless;
            OwnedString csv;
            pf_status st = pf_simulate_run(params.dump().c_str(), &csv.ptr);
            if (st != PF_OK) return fail(st, "simulate");
            if (s_out.empty()) {
                std::cout << csv.ptr;
            } else {
                write_file(s_out, csv.ptr);
                json manifest_params = params;
                manifest_params.erase("design_doc");
                manifest_params["design_file"] = s_design;
                write_file(s_out + ".manifest.json",
                           manifest_for("simulate", manifest_params, s_seed).dump(2) +
                               "\n");
            }
            return 0;
        }

        if (o_cmd->parsed()) {
            json params;
            params["exhaustive_max_m"] = o_max_m;
            params["sampled_sets"] = o_sampled;
            params["sample_max_k"] = o_max_k;
            params["seed"] = o_seed;
            OwnedString rep;
            pf_status st = pf_oracle_check(params.dump().c_str(), &rep.ptr);
            if (st != PF_OK) return fail(st, "oracle-check");
            json r = json::parse(rep.ptr);
            std::cout << rep.ptr << "\n";
            return r["pass"].get<bool>() ? 0 : (int)PF_EINTERNAL;
        }

        if (p_cmd->parsed()) {
            OwnedDesign da, db;
            if (int rc = load_design(p_a, da)) return rc;
            if (int rc = load_design(p_b, db)) return rc;
            std::string override_json;
            if (p_eps) {
                json ch;
                ch["kind"] = "bec";
                ch["eps"] = *p_eps;
                override_json = ch.dump();
            } else if (p_snr) {
                json base = json::parse(read_file(p_a));
                json ch;
                ch["kind"] = "awgn";
                ch["ebn0_db"] = *p_snr;
                ch["rate"] = (double)base["k"].get<uint64_t>() /
                             (double)base["n"].get<uint64_t>();
                override_json = ch.dump();
            }
            OwnedString rep;
            pf_status st = pf_design_compare(
                da.ptr, db.ptr,
                override_json.empty() ? nullptr : override_json.c_str(), &rep.ptr);
            if (st != PF_OK) return fail(st, "compare");
            std::cout << rep.ptr << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return (int)PF_EDATA;
    }
    return 0;
}
