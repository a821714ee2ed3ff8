// cwc -- command-line front end: bounds, exact oracle, construction,
// verification, degree analysis, and parameter sweeps.

#include "cwc/bounds.hpp"
#include "cwc/core.hpp"
#include "cwc/degrees.hpp"
#include "cwc/matching.hpp"
#include "cwc/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

struct ParamFlags {
    int q = 0, n = 0, d = 0, w = 0;

    void attach(CLI::App* cmd, bool with_n = true) {
        cmd->add_option("--q", q, "alphabet size")->required();
        if (with_n) cmd->add_option("--n", n, "code length")->required();
        cmd->add_option("--d", d, "minimum distance")->required();
        cmd->add_option("--w", w, "constant weight")->required();
    }
    cwc::CodeParams params() const { return cwc::CodeParams(q, n, d, w); }
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    os << content;
}

std::string csv_header() {
    return "n,q,d,w,t,x_size,code_size,johnson_floor,main_term,ratio,seed,restarts,elapsed_ms\n";
}

std::string csv_row(const cwc::CodeParams& p, const cwc::BuildReport& rep, std::uint64_t seed,
                    int restarts) {
    auto mt = cwc::main_term(p);
    cwc::Rational ratio = cwc::Rational(rep.code.size()) / mt.rational();
    std::ostringstream os;
    os << p.n << ',' << p.q << ',' << p.d << ',' << p.w << ',' << p.t() << ',' << rep.x_size << ','
       << rep.code.size() << ',' << cwc::johnson_bound(p).floor_value << ',' << mt.numerator << '/'
       << mt.denominator << ',' << cwc::format_fixed(ratio, 6) << ',' << seed << ',' << restarts
       << ',' << rep.elapsed.count() << '\n';
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constant-weight code toolkit: Johnson bounds, exact oracle, "
                 "randomized construction, verification, degree analysis"};
    app.require_subcommand(1);

    // bound
    auto* bound_cmd = app.add_subcommand("bound", "evaluate the Johnson-type upper bound");
    ParamFlags bound_p;
    bound_p.attach(bound_cmd);
    bool bound_json = false;
    bound_cmd->add_flag("--json", bound_json, "emit JSON");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "exact A_q(n,d,w) by clique search");
    ParamFlags oracle_p;
    oracle_p.attach(oracle_cmd);
    std::uint64_t max_nodes = 100000000ULL;
    std::string oracle_out;
    oracle_cmd->add_option("--max-nodes", max_nodes, "search node limit");
    oracle_cmd->add_option("--out", oracle_out, "write the witness code file");

    // construct
    auto* con_cmd = app.add_subcommand("construct", "build a code by randomized greedy matching");
    ParamFlags con_p;
    con_p.attach(con_cmd);
    std::uint64_t con_seed = 0;
    int con_restarts = 32;
    bool con_improve = false;
    std::string con_out, con_emit_b;
    con_cmd->add_option("--seed", con_seed, "RNG seed")->required();
    con_cmd->add_option("--restarts", con_restarts, "greedy restarts");
    con_cmd->add_flag("--improve", con_improve, "apply (1,2)-swap local search");
    con_cmd->add_option("--out", con_out, "write the code file");
    con_cmd->add_option("--emit-b", con_emit_b, "write the B-assignment file (even d)");

    // verify
    auto* ver_cmd = app.add_subcommand("verify", "verify a code file");
    std::string ver_file;
    ver_cmd->add_option("--file", ver_file, "code file")->required();

    // degrees
    auto* deg_cmd = app.add_subcommand("degrees", "V2 degree analysis");
    ParamFlags deg_p;
    deg_p.attach(deg_cmd);
    std::uint64_t deg_seed = 0;
    int deg_samples = 0;
    bool deg_exact = false;
    deg_cmd->add_option("--seed", deg_seed, "RNG seed")->required();
    deg_cmd->add_option("--samples", deg_samples, "Monte Carlo samples");
    deg_cmd->add_flag("--exact", deg_exact, "exact mean over all B (tiny n only)");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "construction sweep over n, CSV output");
    ParamFlags sweep_p;
    sweep_p.attach(sweep_cmd, /*with_n=*/false);
    int n_start = 0, n_end = 0, n_step = 1;
    std::uint64_t sweep_seed = 0;
    int sweep_restarts = 32;
    std::string sweep_csv;
    sweep_cmd->add_option("--n-start", n_start, "first n")->required();
    sweep_cmd->add_option("--n-end", n_end, "last n (inclusive)")->required();
    sweep_cmd->add_option("--n-step", n_step, "n increment");
    sweep_cmd->add_option("--seed", sweep_seed, "RNG seed")->required();
    sweep_cmd->add_option("--restarts", sweep_restarts, "greedy restarts per n");
    sweep_cmd->add_option("--csv", sweep_csv, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::ostringstream usage;
        usage << app.help();
        std::cerr << e.what() << "\n" << usage.str();
        return 2;
    }

    try {
        if (*bound_cmd) {
            cwc::CodeParams p = bound_p.params();
            auto bv = cwc::johnson_bound(p);
            const char* parity = p.even_d() ? "even" : "odd";
            if (bound_json) {
                nlohmann::ordered_json j;
                j["floor"] = bv.floor_value.str();
                j["numerator"] = bv.numerator.str();
                j["denominator"] = bv.denominator.str();
                j["t"] = p.t();
                j["parity"] = parity;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << bv.floor_value << " (" << bv.numerator << "/" << bv.denominator
                          << ") t=" << p.t() << " parity=" << parity << "\n";
            }
        } else if (*oracle_cmd) {
            cwc::CodeParams p = oracle_p.params();
            auto r = cwc::max_code_exact(p, max_nodes);
            std::cout << "A=" << r.value << " exact=" << (r.exhausted ? "true" : "false")
                      << " nodes=" << r.nodes_explored << "\n";
            if (!oracle_out.empty()) write_file(oracle_out, cwc::serialize_code(r.witness));
        } else if (*con_cmd) {
            cwc::CodeParams p = con_p.params();
            cwc::BuildReport rep = p.even_d()
                                       ? cwc::construct_code(p, con_seed, con_restarts, con_improve)
                                       : cwc::construct_code_odd(p, con_seed, con_restarts, con_improve);
            if (p.even_d()) {
                std::cout << csv_header() << csv_row(p, rep, con_seed, con_restarts);
            } else {
                std::cout << "code_size=" << rep.code.size() << " x_size=" << rep.x_size
                          << " johnson_floor=" << cwc::johnson_bound(p).floor_value << "\n";
            }
            if (!con_out.empty()) write_file(con_out, cwc::serialize_code(rep.code));
            if (!con_emit_b.empty()) {
                if (!p.even_d()) throw std::runtime_error("--emit-b requires even d");
                std::ostringstream os;
                cwc::write_bassignment(os, cwc::sample_B(p, con_seed));
                write_file(con_emit_b, os.str());
            }
        } else if (*ver_cmd) {
            std::ifstream is(ver_file, std::ios::binary);
            if (!is) throw std::runtime_error("cannot open " + ver_file);
            cwc::Code c = cwc::read_code(is);
            auto rep = cwc::verify_code(c);
            if (rep.pass()) {
                std::cout << "PASS\n";
            } else {
                std::cout << "FAIL " << rep.witness << "\n";
                return 1;
            }
        } else if (*deg_cmd) {
            cwc::CodeParams p = deg_p.params();
            std::cout << "n,q,d,w,t,mode,samples,expected,obs_min,obs_mean,obs_max,stderr,seed\n";
            auto prefix = [&](const std::string& mode, int samples) {
                std::ostringstream os;
                os << p.n << ',' << p.q << ',' << p.d << ',' << p.w << ',' << p.t() << ',' << mode
                   << ',' << samples << ',';
                return os.str();
            };
            if (deg_exact) {
                cwc::DegreeTuple v;
                for (int i = 1; i <= p.t(); ++i) v.pairs.emplace_back(i, 1);
                auto mean = cwc::exact_mean_degree_over_B(p, v);
                std::cout << prefix("exact-over-B", 0) << cwc::expected_degree(p) << ',' << mean
                          << ',' << mean << ',' << mean << ",0," << deg_seed << "\n";
            } else {
                auto rep = cwc::degree_concentration_mc(p, deg_samples, deg_seed);
                std::cout << prefix("monte-carlo", deg_samples) << rep.expected << ','
                          << rep.observed_min << ',' << rep.observed_mean << ',' << rep.observed_max
                          << ',' << rep.stderr_of_mean << ',' << deg_seed << "\n";
            }
        } else if (*sweep_cmd) {
            std::string csv = csv_header();
            for (int n = n_start; n <= n_end; n += n_step) {
                cwc::CodeParams p(sweep_p.q, n, sweep_p.d, sweep_p.w);
                auto rep = cwc::construct_code(p, sweep_seed, sweep_restarts, false);
                csv += csv_row(p, rep, sweep_seed, sweep_restarts);
                std::cerr << "n=" << n << " code=" << rep.code.size() << "\n";
            }
            write_file(sweep_csv, csv);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
