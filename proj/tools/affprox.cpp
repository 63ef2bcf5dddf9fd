#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "affprox/affprox.hpp"

namespace {

using namespace affprox;

struct FileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(const std::string& text, const std::string& output_path) {
    std::cout << text;
    if (!output_path.empty()) {
        std::ofstream out(output_path, std::ios::binary);
        if (!out) throw FileError("cannot write '" + output_path + "'");
        out << text;
    }
}

std::vector<Rational> parse_csv_rationals(const std::string& csv) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = csv.find(',', start);
        out.push_back(parse_rational(csv.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

int run_solve(const std::string& file, const std::string& output) {
    const Instance inst = parse_instance(read_file(file));
    const auto started = std::chrono::steady_clock::now();
    const BestApproximation result =
        best_approximation(inst.domain, inst.map, inst.functional);
    if (!verify_solution(inst.domain, inst.map, inst.functional, result)) {
        throw InternalError("solution failed independent verification");
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - started);
    emit(serialize_report(SolutionReport{result, elapsed.count()}), output);
    return 0;
}

int run_gap(const std::string& file, const std::string& output) {
    const Instance inst = parse_instance(read_file(file));
    const GapCertificate gap = gap_constant(inst.domain, inst.map, inst.functional);
    ordered_json root;
    root["c"] = format_rational(gap.c);
    root["x"] = detail::json_of_point(gap.x);
    root["x_prime"] = detail::json_of_point(gap.x_prime);
    root["y"] = detail::json_of_point(gap.y);
    emit(root.dump(2) + "\n", output);
    return 0;
}

int run_envelope(const std::string& file, const std::string& at,
                 const std::string& output) {
    const Instance inst = parse_instance(read_file(file));
    const Point y(parse_csv_rationals(at));
    if (y.dim() != inst.dim_d) {
        throw ValidationError("--at point must have dimension dim_D");
    }
    const EnvelopeValue lower = lower_envelope(inst.domain, inst.map, inst.functional, y);
    const EnvelopeValue upper = upper_envelope(inst.domain, inst.map, inst.functional, y);
    ordered_json root;
    root["y"] = detail::json_of_point(y);
    root["f_lower"] = format_rational(lower.value);
    root["f_upper"] = format_rational(upper.value);
    root["r"] = format_rational(upper.value - lower.value);
    root["witness_lower"] = detail::json_of_point(lower.witness);
    root["witness_upper"] = detail::json_of_point(upper.witness);
    emit(root.dump(2) + "\n", output);
    return 0;
}

int run_check(const std::string& file, const std::vector<std::string>& h_args,
              const std::string& output) {
    const Instance inst = parse_instance(read_file(file));
    const AffineFunctional h(parse_csv_rationals(h_args[0]), parse_rational(h_args[1]));
    if (h.dim() != inst.dim_d) {
        throw ValidationError("--h coefficients must have dimension dim_D");
    }
    const Rational norm = norm_of_difference(inst.domain, inst.map, inst.functional, h);
    const Rational bound = gap_constant(inst.domain, inst.map, inst.functional).c / 2;
    if (norm < bound) {
        throw InternalError("candidate beats the lower bound; solver is inconsistent");
    }
    ordered_json root;
    ordered_json h_obj;
    h_obj["coeffs"] = detail::json_of_vector(h.coeffs);
    h_obj["constant"] = format_rational(h.constant);
    root["h"] = std::move(h_obj);
    root["norm"] = format_rational(norm);
    root["bound"] = format_rational(bound);
    root["verdict"] = "holds";
    emit(root.dump(2) + "\n", output);
    return 0;
}

int run_gen(std::uint64_t seed, std::size_t dim_c, std::size_t dim_d,
            std::size_t vertices, const std::string& output) {
    emit(serialize_instance(generate_instance(seed, dim_c, dim_d, vertices)), output);
    return 0;
}

int run_oracle(const std::string& file, int depth, const std::string& output) {
    const Instance inst = parse_instance(read_file(file));
    const Rational value = oracle_distance(inst.domain, inst.map, inst.functional, depth);
    ordered_json root;
    root["depth"] = depth;
    root["value"] = format_rational(value);
    emit(root.dump(2) + "\n", output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact Chebyshev-best approximation of an affine functional by "
        "functionals factoring through an affine quotient of a polytope"};
    app.require_subcommand(1);

    std::string file;
    std::string output;
    std::string at;
    std::vector<std::string> h_args;
    std::uint64_t seed = 0;
    std::size_t dim_c = 0;
    std::size_t dim_d = 0;
    std::size_t vertices = 0;
    int depth = 1;

    CLI::App* solve = app.add_subcommand("solve", "compute d, c, h0 and certificates");
    solve->add_option("file", file, "instance file")->required();
    solve->add_option("--output", output, "also write the report to this path");

    CLI::App* gap = app.add_subcommand("gap", "compute the gap constant c with witness");
    gap->add_option("file", file)->required();
    gap->add_option("--output", output);

    CLI::App* envelope =
        app.add_subcommand("envelope", "evaluate the fiber envelopes at a point");
    envelope->add_option("file", file)->required();
    envelope->add_option("--at", at, "comma-separated rational coordinates")->required();
    envelope->add_option("--output", output);

    CLI::App* check = app.add_subcommand("check", "norm of f - h.phi for a candidate h");
    check->add_option("file", file)->required();
    check->add_option("--h", h_args, "coefficients (comma-separated) and constant")
        ->expected(2)
        ->required();
    check->add_option("--output", output);

    CLI::App* gen = app.add_subcommand("gen", "generate a deterministic random instance");
    gen->add_option("--seed", seed)->required();
    gen->add_option("--dim-c", dim_c)->required();
    gen->add_option("--dim-d", dim_d)->required();
    gen->add_option("--vertices", vertices)->required();
    gen->add_option("--output", output);

    CLI::App* oracle = app.add_subcommand("oracle", "grid-search upper bound on d");
    oracle->add_option("file", file)->required();
    oracle->add_option("--depth", depth, "number of grid passes")->required();
    oracle->add_option("--output", output);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return run_solve(file, output);
        if (gap->parsed()) return run_gap(file, output);
        if (envelope->parsed()) return run_envelope(file, at, output);
        if (check->parsed()) return run_check(file, h_args, output);
        if (gen->parsed()) return run_gen(seed, dim_c, dim_d, vertices, output);
        if (oracle->parsed()) return run_oracle(file, depth, output);
    } catch (const FileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli_exit_code(e);
    }
    return 1;
}
