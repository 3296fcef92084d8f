#include "ppsym/lgvpaths.hpp"
#include "ppsym/lozenge.hpp"
#include "ppsym/matrices.hpp"
#include "ppsym/planepart.hpp"
#include "ppsym/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace ppsym;

int cmd_verify(int max_n, bool with_oracles, int oracle_max_n, const std::string& json_path) {
    VerifyOptions options;
    options.max_n = max_n;
    options.with_oracles = with_oracles;
    options.oracle_max_n = oracle_max_n;
    const VerifyOutcome outcome = run_verify(options);

    for (const auto& entry : outcome.report["results"]) {
        int pass = 0, fail = 0, skipped = 0;
        std::string failures;
        for (const auto& [name, status] : entry["checks"].items()) {
            if (status == "pass") {
                ++pass;
            } else if (status == "fail") {
                ++fail;
                failures += " " + name;
            } else {
                ++skipped;
            }
        }
        std::cout << "n=" << entry["n"].get<std::string>() << " cssc="
                  << (entry.contains("cssc_det") ? entry["cssc_det"].get<std::string>() : "?")
                  << " tssc="
                  << (entry.contains("tssc_implied") ? entry["tssc_implied"].get<std::string>()
                                                     : "?")
                  << " checks: " << pass << " pass, " << fail << " fail, " << skipped
                  << " skipped" << (failures.empty() ? "" : " —" + failures) << "\n";
    }
    std::cout << "overall: " << outcome.report["overall"].get<std::string>() << "\n";

    if (!json_path.empty()) {
        if (json_path == "-") {
            std::cout << outcome.report.dump(2) << "\n";
        } else {
            std::ofstream out(json_path);
            if (!out) {
                std::cerr << "cannot write report to " << json_path << "\n";
                return 2;
            }
            out << outcome.report.dump(2) << "\n";
        }
    }
    return outcome.ok ? 0 : 1;
}

int cmd_matrix(const std::string& kind, int n, const std::string& format) {
    RationalMatrix m = kind == "U" ? build_U(n) : kind == "w" ? build_w(n) : build_st(n);
    std::cout << (format == "csv" ? matrix_csv(m) : matrix_json(m) + "\n");
    return 0;
}

int cmd_count(const std::string& klass, int n, const std::string& method) {
    const bool cssc = klass == "cssc";
    BigInt value;
    if (method == "det") {
        value = cssc ? cssc_det(n) : tssc_implied(n);
    } else if (method == "bruteforce") {
        value = cssc ? count_cssc_bruteforce(n) : count_tssc_bruteforce(n);
    } else if (method == "orbit") {
        if (!cssc) {
            throw std::invalid_argument("method 'orbit' only applies to class cssc");
        }
        value = count_cssc_via_orbit(n);
    } else {  // paths
        const BigInt via_paths =
            to_integer(Rational(pow2(static_cast<unsigned>(n))) * lstar(n));
        if (cssc) {
            value = via_paths;
        } else if (!perfect_square(via_paths, value)) {
            throw identity_error("path count " + via_paths.str() + " is not a perfect square");
        }
    }
    std::cout << value.str() << "\n";
    return 0;
}

int cmd_dump_graph(const std::string& kind, int n) {
    std::cout << graph_dump(kind == "orbit" ? orbit_graph(n) : build_K(n));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier for the symmetric plane-partition count identities"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run the identity chain over a range of n");
    int max_n = 10;
    bool with_oracles = false;
    int oracle_max_n = 3;
    std::string json_path;
    verify->add_option("--max-n", max_n, "largest n for the determinant chain")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--with-oracles", with_oracles, "also run the enumeration oracles");
    verify->add_option("--oracle-max-n", oracle_max_n, "largest n for the oracles")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");

    auto* matrix = app.add_subcommand("matrix", "print one of the matrices");
    std::string matrix_kind, matrix_format = "csv";
    int matrix_n = 1;
    matrix->add_option("kind", matrix_kind)->required()->check(CLI::IsMember({"U", "w", "st"}));
    matrix->add_option("n", matrix_n)->required()->check(CLI::PositiveNumber);
    matrix->add_option("--format", matrix_format)->check(CLI::IsMember({"csv", "json"}));

    auto* count = app.add_subcommand("count", "print a symmetry-class count");
    std::string count_class, count_method = "det";
    int count_n = 1;
    count->add_option("class", count_class)->required()->check(CLI::IsMember({"cssc", "tssc"}));
    count->add_option("n", count_n)->required()->check(CLI::PositiveNumber);
    count->add_option("--method", count_method)
        ->check(CLI::IsMember({"det", "bruteforce", "orbit", "paths"}));

    auto* dump = app.add_subcommand("dump-graph", "print a quotient graph as an edge list");
    std::string dump_kind;
    int dump_n = 1;
    dump->add_option("kind", dump_kind)->required()->check(CLI::IsMember({"orbit", "K"}));
    dump->add_option("n", dump_n)->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) {
            return cmd_verify(max_n, with_oracles, oracle_max_n, json_path);
        }
        if (*matrix) {
            return cmd_matrix(matrix_kind, matrix_n, matrix_format);
        }
        if (*count) {
            return cmd_count(count_class, count_n, count_method);
        }
        return cmd_dump_graph(dump_kind, dump_n);
    } catch (const ppsym::identity_error& e) {
        std::cerr << "identity failure: " << e.what() << "\n";
        return 1;
    } catch (const ppsym::guard_error& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
