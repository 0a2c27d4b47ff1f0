// Command-line front end: sample codewords, corrupt them through the deletion
// channel, reconstruct from traces, print derived parameters, and run
// Monte-Carlo experiments to CSV.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tracerec/channel.hpp"
#include "tracerec/delimiter_code.hpp"
#include "tracerec/errors.hpp"
#include "tracerec/experiment.hpp"
#include "tracerec/lambert.hpp"
#include "tracerec/levenshtein.hpp"
#include "tracerec/reconstruct.hpp"
#include "tracerec/trace_code.hpp"

namespace {

using namespace tracerec;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

std::vector<BitString> read_sequences_from(const std::string& path) {
    if (path.empty() || path == "-") return read_bit_sequences(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
    return read_bit_sequences(in);
}

struct ParamFlags {
    std::size_t n = 0;
    double k = 0.0;
    double alpha = 1.0;
    int delta = 3;

    void attach(CLI::App* cmd) {
        cmd->add_option("--n", n, "codeword length")->required();
        cmd->add_option("--k", k, "channel constant k (p = k/n^alpha)")->required();
        cmd->add_option("--alpha", alpha, "channel exponent alpha", true);
        cmd->add_option("--delta", delta, "detection budget delta", true);
    }

    CodeParams derive() const { return derive_params(n, k, alpha, delta); }
};

int cmd_params(const ParamFlags& flags, std::optional<double> p_target) {
    const CodeParams cp = flags.derive();
    std::printf("n               %zu\n", cp.n);
    std::printf("k               %g\n", cp.k);
    std::printf("alpha           %g\n", cp.alpha);
    std::printf("delta           %d\n", cp.delta);
    std::printf("p               %.6g\n", cp.p);
    std::printf("ell             %zu\n", cp.ell);
    std::printf("detect_cap      %d\n", cp.detect_cap);
    std::printf("num_blocks      %zu\n", cp.num_blocks);
    std::printf("last_block_len  %zu\n", cp.last_block_len);
    std::printf("max_run         %zu\n", max_run_bound(cp));
    std::printf("info_bits       %zu\n", info_length(cp));
    std::printf("redundancy      %zu\n", delimiter_redundancy(cp));
    std::printf("rate            %.6g\n", code_rate(cp));
    const double target = p_target ? *p_target
                                   : std::pow(static_cast<double>(cp.n), 2.0 * cp.alpha - 1.0);
    try {
        const double ds = delta_star(cp.n, cp.alpha, target);
        std::printf("p_target        %.6g\n", target);
        std::printf("delta_star      %.6g\n", ds);
        std::printf("select_delta    %d\n", select_delta(cp.n, cp.alpha, target));
    } catch (const DomainError&) {
        std::printf("delta_star      undefined for p_target %.6g\n", target);
    }
    return kExitOk;
}

int cmd_sample(const ParamFlags& flags, const std::string& scheme_str,
               std::uint64_t seed, std::size_t count, std::size_t retry_limit) {
    const auto scheme = parse_scheme(scheme_str);
    if (!scheme) throw ConfigError("unknown scheme '" + scheme_str + "'");
    RandomStream rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        RandomStream sub = rng.substream(i);
        BitString x;
        switch (*scheme) {
            case Scheme::Blockwise: x = sample_codeword(flags.derive(), sub, retry_limit); break;
            case Scheme::CodedBma:
                x = sample_rll_sequence(flags.n, isqrt(flags.n), sub, retry_limit);
                break;
            case Scheme::UncodedBma:
                x.reserve(flags.n);
                for (std::size_t j = 0; j < flags.n; ++j) x.push_back(sub.next_bit());
                break;
        }
        std::cout << format_bitstring(x) << '\n';
    }
    return kExitOk;
}

int cmd_corrupt(const std::string& input, std::size_t t, std::uint64_t seed,
                std::optional<double> p, std::optional<double> k, double alpha) {
    const auto seqs = read_sequences_from(input);
    if (seqs.empty()) throw std::runtime_error("no input codeword");
    const BitString& x = seqs.front();
    double prob;
    if (p) {
        prob = *p;
    } else if (k) {
        prob = *k / std::pow(static_cast<double>(x.size()), alpha);
    } else {
        throw ConfigError("either --p or --k must be given");
    }
    const auto traces = generate_traces(x, ChannelSpec{prob, t}, RandomStream(seed));
    for (const Trace& y : traces) std::cout << format_bitstring(y.bits) << '\n';
    return kExitOk;
}

int cmd_reconstruct(const std::string& input, const std::string& scheme_str,
                    const ParamFlags& flags) {
    const auto scheme = parse_scheme(scheme_str);
    if (!scheme) throw ConfigError("unknown scheme '" + scheme_str + "'");
    const auto seqs = read_sequences_from(input);
    if (seqs.empty()) throw std::runtime_error("no input traces");
    std::vector<Trace> traces;
    traces.reserve(seqs.size());
    for (const auto& s : seqs) traces.push_back(Trace{s, flags.n});

    BitString xhat;
    if (*scheme == Scheme::Blockwise) {
        xhat = reconstruct_blockwise(traces, flags.derive());
    } else {
        xhat = reconstruct_bma(traces, flags.n);
    }
    std::cout << format_bitstring(xhat) << '\n';
    return kExitOk;
}

int cmd_experiment(const std::string& config_path, const std::string& output,
                   unsigned threads) {
    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot open config file '" + config_path + "'");
    const ExperimentConfig cfg = parse_config(in);
    const std::string csv = to_csv(run_experiment(cfg, threads));
    if (output.empty() || output == "-") {
        std::cout << csv;
    } else {
        std::ofstream out(output);
        if (!out) throw std::runtime_error("cannot open output file '" + output + "'");
        out << csv;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trace reconstruction code simulator"};
    app.require_subcommand(1);

    // params
    auto* params_cmd = app.add_subcommand("params", "print derived code parameters");
    ParamFlags params_flags;
    params_flags.attach(params_cmd);
    std::optional<double> p_target;
    params_cmd->add_option("--p-target", p_target,
                           "target error-decay rate for delta_star (default n^(2*alpha-1))");

    // sample
    auto* sample_cmd = app.add_subcommand("sample", "emit codewords, one per line");
    ParamFlags sample_flags;
    sample_flags.attach(sample_cmd);
    std::string sample_scheme = "ours";
    std::uint64_t sample_seed = 1;
    std::size_t sample_count = 1;
    std::size_t retry_limit = kDefaultRetryLimit;
    sample_cmd->add_option("--scheme", sample_scheme, "ours | coded-bma | uncoded-bma", true);
    sample_cmd->add_option("--seed", sample_seed, "random seed", true);
    sample_cmd->add_option("--count", sample_count, "number of codewords", true);
    sample_cmd->add_option("--retry-limit", retry_limit, "rejection sampling retry limit", true);

    // corrupt
    auto* corrupt_cmd = app.add_subcommand("corrupt", "send a codeword through the deletion channel");
    std::string corrupt_input;
    std::size_t corrupt_t = 1;
    std::uint64_t corrupt_seed = 1;
    std::optional<double> corrupt_p, corrupt_k;
    double corrupt_alpha = 1.0;
    corrupt_cmd->add_option("input", corrupt_input, "codeword file ('-' for stdin)");
    corrupt_cmd->add_option("--t", corrupt_t, "number of traces", true);
    corrupt_cmd->add_option("--seed", corrupt_seed, "random seed", true);
    corrupt_cmd->add_option("--p", corrupt_p, "deletion probability");
    corrupt_cmd->add_option("--k", corrupt_k, "channel constant (p = k/n^alpha)");
    corrupt_cmd->add_option("--alpha", corrupt_alpha, "channel exponent", true);

    // reconstruct
    auto* rec_cmd = app.add_subcommand("reconstruct", "reconstruct a codeword from traces");
    std::string rec_input, rec_scheme = "ours";
    ParamFlags rec_flags;
    rec_flags.attach(rec_cmd);
    rec_cmd->add_option("input", rec_input, "trace file ('-' for stdin)");
    rec_cmd->add_option("--scheme", rec_scheme, "ours | coded-bma | uncoded-bma", true);

    // experiment
    auto* exp_cmd = app.add_subcommand("experiment", "run a Monte-Carlo sweep, emit CSV");
    std::string exp_config, exp_output;
    unsigned exp_threads = 0;
    exp_cmd->add_option("--config", exp_config, "key=value config file")->required();
    exp_cmd->add_option("--output", exp_output, "CSV output file ('-' for stdout)");
    exp_cmd->add_option("--threads", exp_threads, "worker threads (0 = all cores)", true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (params_cmd->parsed()) return cmd_params(params_flags, p_target);
        if (sample_cmd->parsed())
            return cmd_sample(sample_flags, sample_scheme, sample_seed, sample_count, retry_limit);
        if (corrupt_cmd->parsed())
            return cmd_corrupt(corrupt_input, corrupt_t, corrupt_seed, corrupt_p, corrupt_k,
                               corrupt_alpha);
        if (rec_cmd->parsed()) return cmd_reconstruct(rec_input, rec_scheme, rec_flags);
        if (exp_cmd->parsed()) return cmd_experiment(exp_config, exp_output, exp_threads);
    } catch (const ParamError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitUsage;
}
