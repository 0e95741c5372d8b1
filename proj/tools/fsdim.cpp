// Command-line front end: entropy/divergence calculators, seeded sequence
// generation, Borel-normality checks, block-coder compression, and the
// finite-state dimension experiment harness.
//
// Exit codes: 0 success, 1 validation error (bad flags/content, or a
// rejected normality check), 2 I/O error. Results go to stdout or the
// requested output file; everything else goes to stderr.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fsdim/fsdim.hpp"

namespace {

using namespace fsdim;

void print_normality(std::ostream& os, const NormalityReport& report, const Alphabet& alphabet) {
    for (const NormalityRow& row : report.rows)
        os << "k=" << row.k << " max_deviation=" << format_fixed(row.max_deviation)
           << " worst_block=" << block_to_string(alphabet, row.k, row.worst_block) << '\n';
}

// Write a CSV report to the given path, or to stdout when the path is empty.
void emit_csv(const std::string& path, const DimEstimate& est) {
    if (path.empty()) {
        dim_report_csv(std::cout, est);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    dim_report_csv(out, est);
    out.flush();
    if (!out) throw IoError("cannot write report file: " + path);
}

BlockCoder make_cli_coder(const ProbMeasure& beta, const SymbolSeq& w, int k, bool empirical) {
    if (!empirical) return make_beta_shannon_coder(beta, k);
    // Two-pass empirical compression of a standalone file: count disjoint
    // k-blocks over the whole input, then code with the frozen Huffman table.
    return make_empirical_huffman_coder(w.alphabet(), block_census(w, 0, w.size(), k).counts, k);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-alphabet information measures and finite-state dimension estimation"};
    app.set_version_flag("--version", std::string("fsdim 1.0.0 (prng=") + kPrngId + ")");
    app.require_subcommand(1);

    std::string measure_path, alpha_path, beta_path, in_path, out_path, csv_path;
    std::string mode_name = "ideal";
    std::uint64_t n = 0, seed = 1;
    int k = 1, kmax = 8;
    double epsilon = 0.005;
    bool empirical = false, dump_code = false;

    CLI::App* cmd_entropy = app.add_subcommand("entropy", "Shannon entropy H of a measure");
    cmd_entropy->add_option("--measure", measure_path, "measure JSON file")->required();

    CLI::App* cmd_kl = app.add_subcommand("kl", "Kullback-Leibler divergence D(alpha||beta)");
    cmd_kl->add_option("--alpha", alpha_path, "source measure JSON file")->required();
    cmd_kl->add_option("--beta", beta_path, "reference measure JSON file")->required();

    CLI::App* cmd_selfinfo = app.add_subcommand("selfinfo", "Shannon self-information I_beta(w)");
    cmd_selfinfo->add_option("--measure", measure_path, "measure JSON file")->required();
    cmd_selfinfo->add_option("--in", in_path, "sequence file")->required();

    CLI::App* cmd_gen = app.add_subcommand("gen", "generate a seeded measure-distributed sequence");
    cmd_gen->add_option("--measure", measure_path, "measure JSON file")->required();
    cmd_gen->add_option("--n", n, "sequence length")->required();
    cmd_gen->add_option("--seed", seed, "64-bit seed (default 1)");
    cmd_gen->add_option("--out", out_path, "output sequence file")->required();

    CLI::App* cmd_normal = app.add_subcommand("check-normal", "empirical Borel-normality census");
    cmd_normal->add_option("--measure", measure_path, "measure JSON file")->required();
    cmd_normal->add_option("--in", in_path, "sequence file")->required();
    cmd_normal->add_option("--kmax", kmax, "maximum block length (default 8)");
    cmd_normal->add_option("--epsilon", epsilon, "acceptance tolerance (default 0.005)");

    CLI::App* cmd_compress = app.add_subcommand("compress", "compress with a k-block coder");
    cmd_compress->add_option("--beta", beta_path, "reference measure JSON file")->required();
    cmd_compress->add_option("--in", in_path, "sequence file")->required();
    cmd_compress->add_option("--k", k, "block length")->required();
    cmd_compress->add_flag("--empirical", empirical,
                           "Huffman-code the input's own block census instead of beta^k");
    cmd_compress->add_flag("--dump-code", dump_code, "print the codebook before the summary");

    CLI::App* cmd_dim = app.add_subcommand("dim", "estimate finite-state beta-dimensions");
    cmd_dim->add_option("--beta", beta_path, "reference measure JSON file")->required();
    cmd_dim->add_option("--in", in_path, "sequence file")->required();
    cmd_dim->add_option("--kmax", kmax, "maximum block length (default 8)");
    cmd_dim->add_option("--mode", mode_name, "ideal|integer (default ideal)");
    cmd_dim->add_option("--csv", csv_path, "CSV report path (default stdout)");

    CLI::App* cmd_experiment =
        app.add_subcommand("experiment", "generate, estimate, and compare with the predicted value");
    cmd_experiment->add_option("--alpha", alpha_path, "source measure JSON file")->required();
    cmd_experiment->add_option("--beta", beta_path, "reference measure JSON file")->required();
    cmd_experiment->add_option("--n", n, "sequence length")->required();
    cmd_experiment->add_option("--seed", seed, "64-bit seed (default 1)");
    cmd_experiment->add_option("--kmax", kmax, "maximum block length (default 8)");
    cmd_experiment->add_option("--mode", mode_name, "ideal|integer (default ideal)");
    cmd_experiment->add_option("--csv", csv_path, "CSV report path (default stdout)");

    CLI::App* cmd_predict = app.add_subcommand("predict", "divergence-formula value H/(H+D)");
    cmd_predict->add_option("--alpha", alpha_path, "source measure JSON file")->required();
    cmd_predict->add_option("--beta", beta_path, "reference measure JSON file")->required();

    try {
        app.parse(argc, argv);

        if (app.got_subcommand(cmd_entropy)) {
            std::cout << format_fixed(entropy(load_measure(measure_path))) << '\n';

        } else if (app.got_subcommand(cmd_kl)) {
            const ProbMeasure alpha = load_measure(alpha_path);
            const ProbMeasure beta = load_measure(beta_path);
            std::cout << format_fixed(kl_divergence(alpha, beta)) << '\n';

        } else if (app.got_subcommand(cmd_selfinfo)) {
            const ProbMeasure beta = load_measure(measure_path);
            const SymbolSeq w = read_sequence(in_path, beta.alphabet());
            std::cout << format_fixed(self_information(beta, w)) << '\n';

        } else if (app.got_subcommand(cmd_gen)) {
            const ProbMeasure alpha = load_measure(measure_path);
            const SymbolSeq w = generate(GenSpec{alpha, n, seed});
            write_sequence(out_path, w);
            std::cerr << "gen: wrote " << w.size() << " symbols to " << out_path << '\n';

        } else if (app.got_subcommand(cmd_normal)) {
            if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
            const ProbMeasure alpha = load_measure(measure_path);
            const SymbolSeq w = read_sequence(in_path, alpha.alphabet());
            const NormalityReport report = normality_report(w, alpha, kmax);
            print_normality(std::cout, report, alpha.alphabet());
            const bool ok = report.accepted(epsilon);
            std::cout << "verdict=" << (ok ? "accepted" : "rejected")
                      << " epsilon=" << format_fixed(epsilon) << '\n';
            return ok ? 0 : 1;

        } else if (app.got_subcommand(cmd_compress)) {
            const ProbMeasure beta = load_measure(beta_path);
            const SymbolSeq w = read_sequence(in_path, beta.alphabet());
            const BlockCoder coder = make_cli_coder(beta, w, k, empirical);
            if (dump_code) coder.spec().code.dump(std::cout, beta.alphabet());
            const FscOutput out = coder.compress(w);
            const double info = self_information(beta, w);
            std::cout << "coder=" << coder.descriptor() << " k=" << k << '\n'
                      << "bits=" << out.bits.size() << '\n'
                      << "info_bits=" << format_fixed(info) << '\n'
                      << "ratio=" << format_fixed(static_cast<double>(out.bits.size()) / info) << '\n'
                      << "final_state=" << out.final_state << '\n';

        } else if (app.got_subcommand(cmd_dim)) {
            const ProbMeasure beta = load_measure(beta_path);
            const SymbolSeq w = read_sequence(in_path, beta.alphabet());
            const DimEstimate est = estimate_dimensions(w, beta, kmax, parse_dim_mode(mode_name));
            emit_csv(csv_path, est);
            std::cerr << "dim: dim_lower=" << format_fixed(est.dim_lower_est)
                      << " dim_upper=" << format_fixed(est.dim_upper_est) << '\n';

        } else if (app.got_subcommand(cmd_experiment)) {
            const ProbMeasure alpha = load_measure(alpha_path);
            const ProbMeasure beta = load_measure(beta_path);
            const ExperimentReport report =
                divergence_experiment(alpha, beta, n, seed, kmax, parse_dim_mode(mode_name));
            emit_csv(csv_path, report.estimate);
            std::cerr << "experiment: n=" << report.n << " seed=" << report.seed
                      << " predicted=" << format_fixed(*report.estimate.predicted)
                      << " dim_lower=" << format_fixed(report.estimate.dim_lower_est)
                      << " dim_upper=" << format_fixed(report.estimate.dim_upper_est) << '\n';
            print_normality(std::cerr, report.normality, alpha.alphabet());

        } else if (app.got_subcommand(cmd_predict)) {
            const ProbMeasure alpha = load_measure(alpha_path);
            const ProbMeasure beta = load_measure(beta_path);
            std::cout << format_fixed(divergence_formula_value(alpha, beta)) << '\n';
        }
        return 0;

    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
