// Command-line front end: construct parity-check matrices, count
// (3,3)-absorbing sets, analyze sliding windows, and optimize assignments.
//
// Exit codes: 0 success, 1 usage error, 2 validation error, 3 method
// disagreement.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>

#include "sclift/counting.hpp"
#include "sclift/coupler.hpp"
#include "sclift/optimize.hpp"
#include "sclift/report_json.hpp"
#include "sclift/sha256.hpp"
#include "sclift/window.hpp"

using nlohmann::json;
using namespace sclift;

namespace {

constexpr const char* kVersion = "sclift 1.0.0";

json manifest_base(const std::string& command, const json& params, uint64_t seed) {
    return {{"tool", kVersion},
            {"command", command},
            {"parameters", params},
            {"seed", seed},
            {"inputs", json::object()},
            {"outputs", json::object()}};
}

void write_manifest(json& man, const std::string& path) {
    std::ofstream f(path);
    if (!f)
        throw std::runtime_error("cannot write manifest: " + path);
    f << man.dump(2) << "\n";
}

void add_output(json& man, const std::string& path) {
    man["outputs"][path] = sha256_file(path);
}
void add_input(json& man, const std::string& path) {
    man["inputs"][path] = sha256_file(path);
}

void write_json(const json& j, const std::string& path) {
    std::ofstream f(path);
    if (!f)
        throw std::runtime_error("cannot write: " + path);
    f << j.dump(2) << "\n";
}

std::vector<int> parse_csv_ints(const std::string& s) {
    std::vector<int> out;
    std::istringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        out.push_back(std::stoi(tok));
    return out;
}

BmMatrix load_bm_grid(const std::string& path, int gamma) {
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("cannot open Bm grid: " + path);
    BmMatrix bm;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ss(line);
        std::vector<int> row;
        int v;
        while (ss >> v)
            row.push_back(v);
        if (!row.empty())
            bm.entries.push_back(std::move(row));
    }
    if (static_cast<int>(bm.entries.size()) != gamma)
        throw std::runtime_error("Bm grid: expected " + std::to_string(gamma) + " rows");
    return bm;
}

void save_bm_grid(const BmMatrix& bm, const std::string& path) {
    std::ofstream f(path);
    if (!f)
        throw std::runtime_error("cannot write Bm grid: " + path);
    for (const auto& row : bm.entries) {
        for (size_t j = 0; j < row.size(); ++j)
            f << row[j] << (j + 1 < row.size() ? " " : "");
        f << "\n";
    }
}

LambdaPolicy parse_lambda(const std::string& s, int gamma, int p, int J) {
    if (s == "identity")
        return LambdaPolicy::identity();
    if (s.rfind("cyclic:", 0) == 0)
        return LambdaPolicy::cyclic(std::stoi(s.substr(7)));
    if (s.rfind("file:", 0) == 0) {
        std::ifstream f(s.substr(5));
        if (!f)
            throw std::runtime_error("cannot open lambda table: " + s.substr(5));
        std::vector<std::vector<Permutation>> table(
            gamma, std::vector<Permutation>(p, Permutation::identity(J)));
        std::string line;
        int idx = 0;
        while (std::getline(f, line)) {
            if (line.empty() || line[0] == '#')
                continue;
            if (idx >= gamma * p)
                throw std::runtime_error("lambda table: too many rows");
            table[idx / p][idx % p] = Permutation(parse_csv_ints(line));
            ++idx;
        }
        if (idx != gamma * p)
            throw std::runtime_error("lambda table: expected gamma*p rows");
        return LambdaPolicy::explicit_table(std::move(table));
    }
    throw CLI::ValidationError("--lambda", "expected identity, cyclic:<l> or file:<path>");
}

struct CountInputs {
    std::string spec_path;
    std::string alist_path;
};

int run_count(const CountInputs& in, const std::string& method, const std::string& out_path,
              const std::string& csv_path, int threads) {
    json man = manifest_base("count",
                             {{"method", method},
                              {"spec", in.spec_path},
                              {"alist", in.alist_path},
                              {"threads", threads}},
                             0);
    json result;
    long long line_total = -1, brute_total = -1;
    bool line_supported = true;
    std::string fallback_note;

    if (!in.spec_path.empty()) {
        add_input(man, in.spec_path);
        SCCodeSpec spec = SCCodeSpec::load(in.spec_path);
        std::optional<ScCode> sc;
        try {
            sc = ScCode::from_spec(spec);
        } catch (const std::exception& e) {
            line_supported = false;
            fallback_note = e.what();
        }
        if (spec.mode != CouplingMode::Terminated) {
            line_supported = false;
            fallback_note = "line counting operates on the terminated form";
        }
        if ((method == "line" || method == "both") && line_supported) {
            CountReport rep = spec.method == SCCodeSpec::Method::CuttingVector
                                  ? count_abs_cutting_vector(spec.xi, spec.p, spec.L)
                                  : count_abs_general(*sc);
            line_total = rep.total;
            result["line"] = to_json(rep);
        }
        if (method == "brute" || method == "both" || !line_supported) {
            CountReport rep;
            if (line_supported) {
                rep = count_abs_brute(*sc);
                if (spec.p <= 13 && spec.L <= 8) {
                    // confirm every counted cycle is a (3,3)-absorbing set
                    auto grid = sc->terminated_grid();
                    auto issues =
                        validate_families_absorbing(grid, enumerate_six_cycle_families(grid));
                    for (const auto& s : issues)
                        rep.discrepancies.push_back(s);
                }
            } else {
                // generic route: expand and run the bit-level search
                rep.method = "brute";
                rep.p = spec.p;
                rep.gamma = spec.gamma;
                rep.L = spec.L;
                rep.m = spec.m;
                BinaryMatrix H = build_matrix(spec);
                rep.total = count_six_cycles_bitlevel(H, threads);
                rep.discrepancies.push_back("line counting unsupported: " + fallback_note +
                                            "; fell back to brute force");
            }
            brute_total = rep.total;
            result["brute"] = to_json(rep);
        }
    } else {
        add_input(man, in.alist_path);
        BinaryMatrix H = import_alist_file(in.alist_path);
        line_supported = false;
        CountReport rep;
        rep.method = "brute";
        rep.total = count_six_cycles_bitlevel(H, threads);
        brute_total = rep.total;
        result["brute"] = to_json(rep);
        if (method == "line" || method == "both")
            result["brute"]["discrepancies"].push_back(
                "line counting needs a block-constant spec; fell back to brute force");
    }

    if (method == "both" && line_total >= 0 && brute_total >= 0) {
        json diff = json::array();
        if (line_total != brute_total)
            diff.push_back({{"line", line_total}, {"brute", brute_total}});
        result["diff"] = diff;
    }
    if (!in.spec_path.empty()) {
        // r1: count relative to L uncoupled copies of the base
        SCCodeSpec spec = SCCodeSpec::load(in.spec_path);
        long long total = line_total >= 0 ? line_total : brute_total;
        if (total >= 0 && spec.gamma == 3 && spec.p <= 62) {
            BmMatrix zeros;
            zeros.entries.assign(3, std::vector<int>(spec.p, 0));
            long long uncoupled =
                static_cast<long long>(spec.L) *
                count_total(ScCode::from_bm(zeros, spec.p, 1));
            long long g = std::gcd(total, uncoupled);
            result["r1"] = {{"num", total / std::max(1LL, g)},
                            {"den", uncoupled / std::max(1LL, g)},
                            {"uncoupled_total", uncoupled}};
        }
    }
    if (!out_path.empty()) {
        write_json(result, out_path);
        add_output(man, out_path);
        write_manifest(man, out_path + ".manifest.json");
    }
    std::cout << result.dump(2) << "\n";
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        csv << "method,total\n";
        if (line_total >= 0)
            csv << "line," << line_total << "\n";
        if (brute_total >= 0)
            csv << "brute," << brute_total << "\n";
    }
    if (method == "both" && line_total >= 0 && brute_total >= 0 && line_total != brute_total) {
        std::cerr << "method disagreement: line=" << line_total << " brute=" << brute_total
                  << "\n";
        return 3;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(kVersion) +
                 " - spatially coupled LDPC construction and absorbing-set analysis"};
    app.require_subcommand(1);

    // ---- construct ----
    auto* c = app.add_subcommand("construct", "build a parity-check matrix");
    int gamma = 3, p = 17, L = 10, m = 1, J = 1;
    std::string mode = "terminated", method = "cutting-vector", xi_str, bm_path,
                lambda_str = "identity", out_prefix = "code";
    uint64_t seed = 1;
    c->add_option("--gamma", gamma, "block rows of the AB base");
    c->add_option("--p", p, "prime modulus");
    c->add_option("--L", L, "coupling length");
    c->add_option("--m", m, "memory");
    c->add_option("--J", J, "terminal lift degree");
    c->add_option("--mode", mode)->check(CLI::IsMember({"tailbiting", "terminated"}));
    c->add_option("--method", method)
        ->check(CLI::IsMember({"cutting-vector", "bm", "random-i", "random-ii"}));
    c->add_option("--xi", xi_str, "cutting vector, comma separated");
    c->add_option("--bm", bm_path, "Bm grid file (gamma rows of p integers)");
    c->add_option("--lambda", lambda_str, "identity | cyclic:<l> | file:<path>");
    c->add_option("--seed", seed, "seed for random methods");
    c->add_option("--out", out_prefix, "output prefix");

    // ---- count ----
    auto* ct = app.add_subcommand("count", "count (3,3)-absorbing sets");
    CountInputs cin_paths;
    std::string count_method = "line", count_out, count_csv;
    int threads = 1;
    ct->add_option("--spec", cin_paths.spec_path, "SCCodeSpec file");
    ct->add_option("--alist", cin_paths.alist_path, "alist matrix (brute force only)");
    ct->add_option("--method", count_method)->check(CLI::IsMember({"line", "brute", "both"}));
    ct->add_option("--out", count_out, "JSON report path");
    ct->add_option("--csv", count_csv, "CSV summary path");
    ct->add_option("--threads", threads, "worker threads for brute force");

    // ---- window ----
    auto* w = app.add_subcommand("window", "sliding-window absorbing-set accounting");
    std::string win_spec, win_out, win_csv, win_method = "line", win_sweep;
    int win_S = 2, win_mode = 1, win_stride = 0;
    w->add_option("--spec", win_spec, "SCCodeSpec file")->required();
    w->add_option("--S", win_S, "window size in block-column groups")->required();
    w->add_option("--memory-mode", win_mode, "1 or 2");
    w->add_option("--stride", win_stride, "slide step in positions (0 = default)");
    w->add_option("--method", win_method)->check(CLI::IsMember({"line", "brute"}));
    w->add_option("--out", win_out, "JSON report path");
    w->add_option("--csv", win_csv, "CSV of per-position counts");
    w->add_option("--sweep-L", win_sweep,
                  "lo:hi -- emit an r2-vs-L CSV over coupling lengths instead");

    // ---- optimize ----
    auto* o = app.add_subcommand("optimize", "search assignments minimizing absorbing sets");
    int opt_p = 17, opt_L = 10, opt_m = 1, opt_beam = 64, opt_backtrack = 2;
    long long opt_budget = 1000000;
    uint64_t opt_seed = 1;
    std::string opt_target = "full", opt_out = "opt", opt_kind = "bm";
    o->add_option("--p", opt_p, "prime modulus");
    o->add_option("--L", opt_L, "coupling length");
    o->add_option("--m", opt_m, "memory (bm search)");
    o->add_option("--kind", opt_kind)->check(CLI::IsMember({"bm", "cutting-vector"}));
    o->add_option("--target", opt_target, "full | window:<S>");
    o->add_option("--beam", opt_beam);
    o->add_option("--backtrack", opt_backtrack);
    o->add_option("--budget", opt_budget);
    o->add_option("--seed", opt_seed);
    o->add_option("--out", opt_out, "output prefix");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (c->parsed()) {
            SCCodeSpec spec;
            spec.gamma = gamma;
            spec.p = p;
            spec.L = L;
            spec.m = m;
            spec.J = J;
            spec.mode = mode == "tailbiting" ? CouplingMode::Tailbiting
                                             : CouplingMode::Terminated;
            spec.seed = seed;
            if (method == "cutting-vector") {
                if (xi_str.empty())
                    throw CLI::RequiredError("--xi (with --method cutting-vector)");
                if (!bm_path.empty())
                    throw CLI::ValidationError("--bm", "conflicts with --method cutting-vector");
                spec.method = SCCodeSpec::Method::CuttingVector;
                spec.xi.xi = parse_csv_ints(xi_str);
            } else if (method == "bm") {
                if (bm_path.empty())
                    throw CLI::RequiredError("--bm (with --method bm)");
                if (!xi_str.empty())
                    throw CLI::ValidationError("--xi", "conflicts with --method bm");
                spec.method = SCCodeSpec::Method::Bm;
                spec.bm = load_bm_grid(bm_path, gamma);
                spec.lambda = parse_lambda(lambda_str, gamma, p, J);
            } else {
                if (!xi_str.empty() || !bm_path.empty())
                    throw CLI::ValidationError("--xi/--bm", "conflict with random methods");
                spec.method = method == "random-i" ? SCCodeSpec::Method::RandomI
                                                   : SCCodeSpec::Method::RandomII;
            }
            spec.validate();
            json man = manifest_base("construct",
                                     {{"gamma", gamma},
                                      {"p", p},
                                      {"L", L},
                                      {"m", m},
                                      {"J", J},
                                      {"mode", mode},
                                      {"method", method},
                                      {"xi", xi_str},
                                      {"bm", bm_path},
                                      {"lambda", lambda_str}},
                                     seed);
            if (!bm_path.empty())
                add_input(man, bm_path);
            BinaryMatrix H = build_matrix(spec);
            export_alist_file(H, out_prefix + ".alist");
            spec.save(out_prefix + ".spec");
            add_output(man, out_prefix + ".alist");
            add_output(man, out_prefix + ".spec");
            write_manifest(man, out_prefix + ".manifest.json");
            std::cout << "wrote " << out_prefix << ".alist (" << H.rows() << " x " << H.cols()
                      << ", " << H.ones() << " ones)\n";
            return 0;
        }
        if (ct->parsed()) {
            if (cin_paths.spec_path.empty() == cin_paths.alist_path.empty())
                throw CLI::ValidationError("--spec/--alist", "provide exactly one input");
            return run_count(cin_paths, count_method, count_out, count_csv, threads);
        }
        if (w->parsed()) {
            SCCodeSpec spec = SCCodeSpec::load(win_spec);
            ScCode sc = ScCode::from_spec(spec);
            WindowSpec ws{win_S, win_mode, win_stride};
            if (!win_sweep.empty()) {
                auto colon = win_sweep.find(':');
                if (colon == std::string::npos)
                    throw CLI::ValidationError("--sweep-L", "expected lo:hi");
                int lo = std::stoi(win_sweep.substr(0, colon));
                int hi = std::stoi(win_sweep.substr(colon + 1));
                if (lo < win_S || hi < lo)
                    throw std::invalid_argument("--sweep-L: need S <= lo <= hi");
                if (lo <= spec.m)
                    throw std::invalid_argument("--sweep-L: coupling length must exceed m");
                std::ostream* outp = &std::cout;
                std::ofstream csvf;
                if (!win_csv.empty()) {
                    csvf.open(win_csv);
                    outp = &csvf;
                }
                *outp << "L,S,windowed_total,standard_total,r2\n";
                for (int LL = lo; LL <= hi; ++LL) {
                    ScCode swept = sc;
                    swept.L = LL;
                    auto r = count_abs_windowed(swept, ws, win_method == "brute");
                    *outp << LL << "," << win_S << "," << r.total << "," << r.standard_total
                          << "," << static_cast<double>(r.r2_num) / r.r2_den << "\n";
                }
                return 0;
            }
            WindowReport rep = count_abs_windowed(sc, ws, win_method == "brute");
            json man = manifest_base(
                "window",
                {{"S", win_S}, {"memory-mode", win_mode}, {"stride", win_stride}}, 0);
            add_input(man, win_spec);
            json out = to_json(rep);
            if (!win_out.empty()) {
                write_json(out, win_out);
                add_output(man, win_out);
                write_manifest(man, win_out + ".manifest.json");
            }
            if (!win_csv.empty()) {
                std::ofstream csv(win_csv);
                csv << "anchor,count\n";
                for (size_t i = 0; i < rep.positions.size(); ++i)
                    csv << rep.positions[i].anchor << "," << rep.per_position[i] << "\n";
                csv << "total," << rep.total << "\n";
                csv << "standard," << rep.standard_total << "\n";
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (o->parsed()) {
            Objective obj;
            obj.p = opt_p;
            obj.L = opt_L;
            if (opt_target == "full") {
                obj.kind = Objective::Kind::Full;
            } else if (opt_target.rfind("window:", 0) == 0) {
                obj.kind = Objective::Kind::Windowed;
                obj.window.S = std::stoi(opt_target.substr(7));
                obj.window.memory_mode = opt_m;
            } else {
                throw CLI::ValidationError("--target", "expected full or window:<S>");
            }
            json man = manifest_base("optimize",
                                     {{"p", opt_p},
                                      {"L", opt_L},
                                      {"m", opt_m},
                                      {"kind", opt_kind},
                                      {"target", opt_target},
                                      {"beam", opt_beam},
                                      {"backtrack", opt_backtrack},
                                      {"budget", opt_budget}},
                                     opt_seed);
            if (opt_kind == "cutting-vector") {
                auto [xi, rep] = best_cutting_vector(opt_p, opt_L, obj);
                json out = {{"xi", xi.xi}, {"report", to_json(rep)}};
                write_json(out, opt_out + ".json");
                add_output(man, opt_out + ".json");
                write_manifest(man, opt_out + ".manifest.json");
                std::cout << out.dump(2) << "\n";
                return 0;
            }
            SearchConfig cfg;
            cfg.beam = opt_beam;
            cfg.backtrack = opt_backtrack;
            cfg.budget = opt_budget;
            cfg.seed = opt_seed;
            OptimizeResult r = optimize_bm(opt_p, opt_m, opt_L, obj, cfg);
            save_bm_grid(r.bm, opt_out + ".bm");
            SCCodeSpec spec;
            spec.gamma = 3;
            spec.p = opt_p;
            spec.L = opt_L;
            spec.m = opt_m;
            spec.J = 1;
            spec.method = SCCodeSpec::Method::Bm;
            spec.bm = r.bm;
            spec.save(opt_out + ".spec");
            json out = to_json(r);
            write_json(out, opt_out + ".json");
            add_output(man, opt_out + ".bm");
            add_output(man, opt_out + ".spec");
            add_output(man, opt_out + ".json");
            write_manifest(man, opt_out + ".manifest.json");
            std::cout << "best total: " << r.report.total << " after " << r.evaluations
                      << " evaluations\n";
            return 0;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
