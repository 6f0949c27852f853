// sumset-lab: construct, verify, certify, and stress-test covering bound
// instances from the command line. All output is JSON; exit code 0 means
// pass/feasible, 1 a failed check or domain error, 2 a usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sumset/json_io.hpp"

namespace {

using sumset::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sumset::BadInput("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const json& j, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw sumset::BadInput("cannot open output file '" + output_path + "'");
    out << j.dump(2) << "\n";
}

sumset::Instance load_instance(const std::string& path) {
    return sumset::instance_from_json(sumset::parse_document(read_file(path)));
}

std::uint64_t resolve_cap(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("SUMSET_LAB_CAP")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw sumset::BadInput("SUMSET_LAB_CAP is not an unsigned integer");
        }
    }
    return sumset::Universe::kDefaultCap;
}

json error_object(const std::string& code, const std::string& message) {
    return json{{"error", json{{"code", code}, {"message", message}}}};
}

struct CertifyOpts {
    std::string input;
    std::string strategy = "lex";
    std::optional<std::uint64_t> seed;
    std::string output;
};

int run_certify(const CertifyOpts& opts) {
    const sumset::RepStrategy strategy = opts.strategy == "random"
                                             ? sumset::RepStrategy::SeededRandom
                                             : sumset::RepStrategy::Lexicographic;
    const sumset::Instance inst = load_instance(opts.input);
    const sumset::Certificate cert =
        sumset::certify(inst, strategy, opts.seed.value_or(0));
    emit(sumset::to_json(cert), opts.output);
    return cert.proved() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certification and search for sumset covering lower bounds"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand(
        "construct", "emit the sharp instance with |A| = n-t, |B| = n + C(t+1,2)");
    int c_n = 0, c_t = 0;
    std::string c_basis_path, c_output;
    construct->add_option("--n", c_n, "dimension")->required();
    construct->add_option("--t", c_t, "slack parameter, 0 <= t <= n-1")->required();
    construct->add_option("--input", c_basis_path, "JSON file with a basis under key 'S'");
    construct->add_option("--output", c_output, "write JSON here instead of stdout");

    // verify
    auto* verify = app.add_subcommand("verify", "check S+S within A+B for an instance file");
    std::string v_input, v_output;
    verify->add_option("--input", v_input, "instance JSON file")->required();
    verify->add_option("--output", v_output, "write JSON here instead of stdout");

    // certify
    auto* certify_cmd = app.add_subcommand("certify", "run the full proof pipeline on an instance");
    CertifyOpts cert_opts;
    certify_cmd->add_option("--input", cert_opts.input, "instance JSON file")->required();
    certify_cmd->add_option("--strategy", cert_opts.strategy, "representation choice")
        ->check(CLI::IsMember({"lex", "random"}));
    std::uint64_t cert_seed = 0;
    auto* seed_opt = certify_cmd->add_option("--seed", cert_seed, "seed for --strategy random");
    certify_cmd->add_option("--output", cert_opts.output, "write JSON here instead of stdout");

    // lemma-check
    auto* lemma = app.add_subcommand(
        "lemma-check", "exhaustively verify the counting bound over F_2^n (n <= 4)");
    int l_n = 0, l_workers = 1;
    std::string l_output;
    lemma->add_option("--n", l_n, "dimension, 2 <= n <= 4")->required();
    lemma->add_option("--workers", l_workers, "parallel workers over the outer range");
    lemma->add_option("--output", l_output, "write JSON here instead of stdout");

    // search / search-sum
    auto* search = app.add_subcommand("search", "exact minimum |B| over a finite universe");
    auto* search_sum =
        app.add_subcommand("search-sum", "exact minimum |A| + |B| over a finite universe");
    int s_n = 0, s_t = 0;
    long s_lo = -1, s_hi = 2, s_denom = 1;
    std::optional<std::uint64_t> s_cap;
    std::string s_output;
    for (CLI::App* cmd : {search, search_sum}) {
        cmd->add_option("--n", s_n, "dimension")->required();
        cmd->add_option("--lo", s_lo, "lowest coordinate (default -1)");
        cmd->add_option("--hi", s_hi, "highest coordinate (default 2)");
        cmd->add_option("--denom", s_denom, "coordinate denominator d (default 1)");
        cmd->add_option("--cap", s_cap, "universe size cap (default 10^6 or SUMSET_LAB_CAP)");
        cmd->add_option("--output", s_output, "write JSON here instead of stdout");
    }
    search->add_option("--t", s_t, "slack parameter, 0 <= t <= n-1")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(construct)) {
            std::vector<sumset::RatVec> basis;
            if (!c_basis_path.empty()) {
                json doc = sumset::parse_document(read_file(c_basis_path));
                const json& arr = doc.is_object() ? doc.at("S") : doc;
                if (!arr.is_array()) throw sumset::BadInput("basis file must hold an array 'S'");
                for (size_t k = 0; k < arr.size(); ++k)
                    basis.push_back(sumset::ratvec_from_json(arr[k], "S[" + std::to_string(k) + "]"));
            }
            const sumset::Instance inst = sumset::extremal_construction(
                c_n, c_t, basis.empty() ? nullptr : &basis);
            emit(sumset::to_json(inst), c_output);
            return 0;
        }
        if (app.got_subcommand(verify)) {
            const sumset::CoverReport report = sumset::verify_cover(load_instance(v_input));
            emit(sumset::to_json(report), v_output);
            return report.covered ? 0 : 1;
        }
        if (app.got_subcommand(certify_cmd)) {
            const bool seed_given = seed_opt->count() > 0;
            if (cert_opts.strategy == "random" && !seed_given)
                throw sumset::BadInput("--strategy random requires --seed");
            if (cert_opts.strategy == "lex" && seed_given)
                throw sumset::BadInput("--seed is only meaningful with --strategy random");
            if (seed_given) cert_opts.seed = cert_seed;
            return run_certify(cert_opts);
        }
        if (app.got_subcommand(lemma)) {
            const auto ce = sumset::exhaustive_lemma_check(l_n, l_workers);
            json out{{"n", l_n},
                     {"counterexample", ce ? sumset::to_json(*ce) : json(nullptr)}};
            emit(out, l_output);
            return ce ? 1 : 0;
        }
        if (app.got_subcommand(search) || app.got_subcommand(search_sum)) {
            sumset::Universe universe;
            universe.n = s_n;
            universe.lo = s_lo;
            universe.hi = s_hi;
            universe.denom = s_denom;
            universe.cap = resolve_cap(s_cap);
            if (app.got_subcommand(search)) {
                const sumset::SearchResult result = sumset::min_B_search(s_n, s_t, universe);
                emit(sumset::search_result_to_json(result, "minB"), s_output);
                return result.feasible ? 0 : 1;
            }
            const sumset::SearchResult result = sumset::min_sum_search(s_n, universe);
            emit(sumset::search_result_to_json(result, "minSum"), s_output);
            return result.feasible ? 0 : 1;
        }
    } catch (const sumset::BadInput& e) {
        std::cout << error_object(e.code(), e.what()).dump(2) << "\n";
        return 2;
    } catch (const sumset::NotCovered& e) {
        json err = error_object(e.code(), e.what());
        json missing = json::array();
        for (const auto& [i, j] : e.missing) missing.push_back(json::array({i, j}));
        err["error"]["missing"] = std::move(missing);
        std::cout << err.dump(2) << "\n";
        return 1;
    } catch (const sumset::Error& e) {
        std::cout << error_object(e.code(), e.what()).dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cout << error_object("Internal", e.what()).dump(2) << "\n";
        return 1;
    }
    return 2;
}
