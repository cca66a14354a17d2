// mbf: proof-of-effort toolkit driving the library end to end: table
// management, challenge/proof round trips for both schemes, the trial
// distribution model, parameter planning, and adversary experiments.
//
// Exit codes: 0 success or verification accept, 1 verification reject
// (or an exhausted generator), 2 usage, parse, or I/O errors.

#include <CLI11.hpp>

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "mbf/adversary.hpp"
#include "mbf/cost_model.hpp"
#include "mbf/mbound.hpp"
#include "mbf/param_planner.hpp"
#include "mbf/range_proof.hpp"
#include "mbf/rng.hpp"
#include "mbf/table.hpp"
#include "mbf/walk.hpp"
#include "mbf/wire.hpp"

namespace {

namespace fs = std::filesystem;
using namespace mbf;

struct TableOpts {
    std::uint64_t seed = 1;
    std::uint64_t len = std::uint64_t{1} << 22;
    std::string file;
};

void add_table_opts(CLI::App* cmd, TableOpts& opts) {
    cmd->add_option("--table-seed", opts.seed, "table keystream seed");
    cmd->add_option("--table-len", opts.len, "table entry count (power of two, >= 1024)");
    cmd->add_option("--table-file", opts.file, "load the table from this file instead");
}

// Priority: explicit file, then a hit in $MBF_TABLE_CACHE, then a fresh
// build.  The chosen source is reported on stdout.
PublicTable acquire_table(const TableOpts& opts) {
    if (!opts.file.empty()) {
        PublicTable t = load_table(opts.file);
        std::printf("table: file %s (seed=%" PRIu64 " len=%" PRIu64 ")\n",
                    opts.file.c_str(), t.seed, t.len());
        return t;
    }
    if (const char* cache = std::getenv("MBF_TABLE_CACHE")) {
        fs::path candidate = fs::path(cache) / wire::table_cache_filename(opts.seed, opts.len);
        if (fs::exists(candidate)) {
            PublicTable t = load_table(candidate.string());
            if (t.seed == opts.seed && t.len() == opts.len) {
                std::printf("table: cache %s\n", candidate.c_str());
                return t;
            }
            std::fprintf(stderr, "warning: %s header disagrees with its name; rebuilding\n",
                         candidate.c_str());
        }
    }
    PublicTable t = build_table(opts.seed, opts.len);
    std::printf("table: built seed=%" PRIu64 " len=%" PRIu64 "\n", opts.seed, opts.len);
    return t;
}

Nonce make_nonce(bool seeded, std::uint64_t nonce_seed) {
    if (seeded) return nonce_from_seed(nonce_seed);
    std::random_device rd;
    Nonce nonce;
    for (std::size_t i = 0; i < nonce.size(); i += 4) {
        std::uint32_t word = rd();
        for (std::size_t b = 0; b < 4; ++b)
            nonce[i + b] = static_cast<std::uint8_t>(word >> (8 * b));
    }
    return nonce;
}

std::string nonce_hex(const Nonce& nonce) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    for (std::uint8_t b : nonce) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

void print_plan(const SchemePlan& plan) {
    if (plan.scheme == Scheme::MBound) {
        std::printf("scheme: mbound\n");
        std::printf("e: %d\n", plan.e);
    } else {
        std::printf("scheme: range\n");
        if (plan.e) std::printf("e: %d\nm: %d\n", plan.e, plan.m);
        std::printf("zeros: %d\n", plan.zeros);
        std::printf("range_len: %" PRIu64 "\n", plan.range_len);
    }
    std::printf("l: %u\n", plan.path_len);
    std::printf("expected_accesses: %.0f\n", plan.expected_accesses);
    std::printf("verify_accesses_min: %.0f\n", plan.verify_accesses_min);
    std::printf("verify_accesses_max: %.0f\n", plan.verify_accesses_max);
    std::printf("expected_indices: %.6g\n", plan.expected_indices);
    std::printf("expected_proof_bytes: %.6g\n", plan.expected_proof_bytes);
    std::printf("expected_proof_bytes_compact: %.6g\n", plan.expected_proof_bytes_compact);
    if (plan.scheme == Scheme::Range)
        std::printf("empty_proof_prob: %.6g\n", plan.empty_proof_prob);
}

void print_report(const ExperimentReport& r) {
    std::printf("attempts: %" PRIu64 "\n", r.outcome.attempts);
    std::printf("delivered: %" PRIu64 "\n", r.outcome.delivered);
    std::printf("total_trials_spent: %" PRIu64 "\n", r.outcome.total_trials_spent);
    std::printf("delivery_rate: simulated=%.6f closed_form=%.6f se=%.6f\n",
                r.outcome.delivery_rate, r.predicted_delivery_rate, r.delivery_rate_se);
    std::printf("trials_per_delivered: simulated=%.4f closed_form=%.4f se=%.4f\n",
                r.outcome.trials_per_delivered, r.predicted_trials_per_delivered,
                r.trials_per_delivered_se);
    if (r.predicted_trials_per_attempt > 0)
        std::printf("trials_per_attempt: closed_form=%.4f\n", r.predicted_trials_per_attempt);
    if (r.latency_bound_accesses > 0)
        std::printf("latency_bound_accesses: %.0f (serial expectation %.0f)\n",
                    r.latency_bound_accesses, r.serial_expected_accesses);
    std::printf("note: %s\n", r.note.c_str());
}

int cmd_table_build(const TableOpts& opts, const std::string& out_dir) {
    PublicTable t = build_table(opts.seed, opts.len);
    fs::create_directories(out_dir);
    fs::path path = fs::path(out_dir) / wire::table_cache_filename(opts.seed, opts.len);
    save_table(t, path.string());
    std::printf("seed: %" PRIu64 "\n", t.seed);
    std::printf("len: %" PRIu64 "\n", t.len());
    std::printf("bytes: %ju\n", static_cast<uintmax_t>(fs::file_size(path)));
    std::printf("file: %s\n", path.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"memory-bound proof-of-effort toolkit"};
    app.require_subcommand(1);

    std::string out_dir = ".";
    app.add_option("--output-dir", out_dir, "directory for data files")->capture_default_str();

    // table build
    TableOpts table_build_opts;
    auto* table_cmd = app.add_subcommand("table", "table management");
    table_cmd->require_subcommand(1);
    auto* build_cmd = table_cmd->add_subcommand("build", "build and save a table");
    build_cmd->add_option("--seed", table_build_opts.seed, "keystream seed");
    build_cmd->add_option("--len", table_build_opts.len, "entry count (power of two, >= 1024)");

    // challenge
    struct {
        std::string scheme = "mbound";
        unsigned e = 8;
        std::uint32_t l = 16;
        int m = -1;
        std::uint64_t max_trials = 0;
        std::uint64_t range_len = 0;
        int zeros = -1;
        bool nonce_seeded = false;
        std::uint64_t nonce_seed = 0;
    } chl;
    auto* challenge_cmd = app.add_subcommand("challenge", "issue a challenge file");
    challenge_cmd->add_option("--scheme", chl.scheme, "mbound | range")
        ->check(CLI::IsMember({"mbound", "range"}));
    challenge_cmd->add_option("--e", chl.e, "effort bits");
    challenge_cmd->add_option("--l", chl.l, "path length (fetches per walk)");
    challenge_cmd->add_option("--m", chl.m, "range: expected 2^m hits (zeros = e - m)");
    challenge_cmd->add_option("--max-trials", chl.max_trials, "mbound: generator cap, default 2^(2e)");
    challenge_cmd->add_option("--range-len", chl.range_len, "range: explicit range length");
    challenge_cmd->add_option("--zeros", chl.zeros, "range: explicit required zeros");
    auto* nonce_seed_opt = challenge_cmd->add_option("--nonce-seed", chl.nonce_seed,
                                                     "derive the nonce deterministically");

    // generate
    struct {
        std::string challenge_file;
        TableOpts table;
        unsigned threads = 1;
    } gen;
    auto* generate_cmd = app.add_subcommand("generate", "produce a proof for a challenge");
    generate_cmd->add_option("--challenge", gen.challenge_file, "challenge file")->required();
    add_table_opts(generate_cmd, gen.table);
    generate_cmd->add_option("--threads", gen.threads, "range generation workers");

    // verify
    struct {
        std::string challenge_file;
        std::string proof_file;
        TableOpts table;
        std::uint32_t sample_count = 8;
        std::uint32_t gap_count = 4;
        std::uint64_t audit_seed = 0;
        bool audit_seed_given = false;
    } ver;
    auto* verify_cmd = app.add_subcommand("verify", "check a proof against a challenge");
    verify_cmd->add_option("--challenge", ver.challenge_file, "challenge file")->required();
    verify_cmd->add_option("--proof", ver.proof_file, "proof file")->required();
    add_table_opts(verify_cmd, ver.table);
    verify_cmd->add_option("--sample-count", ver.sample_count, "range: indices to re-walk");
    verify_cmd->add_option("--gap-count", ver.gap_count, "range: gaps to search");
    auto* audit_seed_opt =
        verify_cmd->add_option("--audit-seed", ver.audit_seed, "range: audit sampling seed");

    // dist
    struct {
        std::vector<int> es{6, 12, 15, 18};
    } dist;
    auto* dist_cmd = app.add_subcommand("dist", "emit trial/cost histograms and summaries");
    dist_cmd->add_option("--e", dist.es, "effort values (repeat or comma-separate)")
        ->delimiter(',');

    // plan
    struct {
        std::string scheme = "mbound";
        int e = 15;
        std::uint32_t l = 4096;
        int m = -1;
        std::uint64_t range_len = 0;
        int zeros = -1;
        double t_fast = 1e-7;
        double speed_ratio = 5.0;
        double q_low = 0.05;
        double q_high = 0.95;
    } pl;
    auto* plan_cmd = app.add_subcommand("plan", "derived deployment figures");
    plan_cmd->add_option("--scheme", pl.scheme, "mbound | range")
        ->check(CLI::IsMember({"mbound", "range"}));
    plan_cmd->add_option("--e", pl.e, "effort bits");
    plan_cmd->add_option("--l", pl.l, "path length");
    plan_cmd->add_option("--m", pl.m, "range: expected 2^m hits; on mbound plans, also print equivalents");
    plan_cmd->add_option("--range-len", pl.range_len, "range: explicit range length");
    plan_cmd->add_option("--zeros", pl.zeros, "range: explicit required zeros");
    plan_cmd->add_option("--t-fast", pl.t_fast, "seconds per access, fast memory")
        ->capture_default_str();
    plan_cmd->add_option("--speed-ratio", pl.speed_ratio, "slow/fast access-time ratio")
        ->capture_default_str();
    plan_cmd->add_option("--q-low", pl.q_low, "deadline window lower quantile")
        ->capture_default_str();
    plan_cmd->add_option("--q-high", pl.q_high, "deadline window upper quantile")
        ->capture_default_str();

    // adversary
    struct {
        std::string scheme = "mbound";
        int e = 6;
        std::uint32_t l = 4;
        std::uint64_t threshold = 64;
        std::uint64_t budget = 1;
        std::uint64_t bound = 8;
        std::uint64_t n = 10000;
        std::uint64_t rng_seed = 1;
        std::uint64_t range_len = 1024;
        int zeros = 4;
        TableOpts table{1, 1024, ""};
    } adv;
    auto* adv_cmd = app.add_subcommand("adversary", "strategy experiments");
    adv_cmd->require_subcommand(1);
    auto* abort_cmd = adv_cmd->add_subcommand("early-abort", "give up past a trial threshold");
    auto* retry_cmd = adv_cmd->add_subcommand("perturb-retry", "retry cheap searches on fresh nonces");
    auto* select_cmd = adv_cmd->add_subcommand("selective-failure", "skip expensive challenges");
    for (CLI::App* cmd : {abort_cmd, retry_cmd, select_cmd}) {
        cmd->add_option("--e", adv.e, "effort bits");
        cmd->add_option("--l", adv.l, "path length");
        cmd->add_option("--n", adv.n, "messages/challenges to simulate");
        cmd->add_option("--rng-seed", adv.rng_seed, "experiment stream seed");
        add_table_opts(cmd, adv.table);
    }
    abort_cmd->add_option("--threshold", adv.threshold, "abort after this many trials");
    retry_cmd->add_option("--bound", adv.bound, "trials per perturbation");
    retry_cmd->add_option("--budget", adv.budget, "perturbations per message");
    select_cmd->add_option("--threshold", adv.threshold, "abandon searches past this");
    select_cmd->add_option("--scheme", adv.scheme, "mbound | range")
        ->check(CLI::IsMember({"mbound", "range"}));
    select_cmd->add_option("--range-len", adv.range_len, "range: challenge range length");
    select_cmd->add_option("--zeros", adv.zeros, "range: required zeros");

    // bench
    struct {
        unsigned min_log2 = 12;
        unsigned max_log2 = 22;
        std::uint32_t l = 64;
        std::uint64_t walks = 2048;
    } bench;
    auto* bench_cmd = app.add_subcommand(
        "bench", "per-access latency as the table outgrows caches (informational)");
    bench_cmd->add_option("--min-log2", bench.min_log2, "smallest table, log2 entries")
        ->capture_default_str();
    bench_cmd->add_option("--max-log2", bench.max_log2, "largest table, log2 entries")
        ->capture_default_str();
    bench_cmd->add_option("--l", bench.l, "path length")->capture_default_str();
    bench_cmd->add_option("--walks", bench.walks, "walks per size")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build_cmd->parsed()) return cmd_table_build(table_build_opts, out_dir);

        if (challenge_cmd->parsed()) {
            chl.nonce_seeded = nonce_seed_opt->count() > 0;
            Nonce nonce = make_nonce(chl.nonce_seeded, chl.nonce_seed);
            fs::create_directories(out_dir);
            fs::path path = fs::path(out_dir) / "challenge.bin";
            if (chl.scheme == "mbound") {
                MboundChallenge ch = make_mbound_challenge(nonce, chl.e, chl.l, chl.max_trials);
                wire::write_challenge(path.string(), ch);
                std::printf("scheme: mbound\nnonce: %s\ne: %u\nl: %u\nmax_trials: %" PRIu64 "\n",
                            nonce_hex(nonce).c_str(), chl.e, chl.l, ch.max_trials);
            } else {
                std::uint64_t range_len = chl.range_len;
                int zeros = chl.zeros;
                if (range_len == 0) range_len = std::uint64_t{1} << chl.e;
                if (zeros < 0) {
                    if (chl.m < 0)
                        throw std::invalid_argument("range challenge needs --zeros or --m");
                    zeros = static_cast<int>(chl.e) - chl.m;
                    if (zeros < 0)
                        throw std::invalid_argument("need m <= e");
                }
                RangeChallenge ch = make_range_challenge(nonce, range_len,
                                                         static_cast<unsigned>(zeros), chl.l);
                wire::write_challenge(path.string(), ch);
                std::printf("scheme: range\nnonce: %s\nrange_len: %" PRIu64 "\nzeros: %d\nl: %u\n",
                            nonce_hex(nonce).c_str(), range_len, zeros, chl.l);
            }
            std::printf("file: %s\n", path.c_str());
            return 0;
        }

        if (generate_cmd->parsed()) {
            wire::Challenge ch = wire::read_challenge(gen.challenge_file);
            PublicTable table = acquire_table(gen.table);
            fs::create_directories(out_dir);
            fs::path path = fs::path(out_dir) / "proof.bin";
            AccessCounter counter;
            if (auto* mb = std::get_if<MboundChallenge>(&ch)) {
                GenerationOutcome out = generate(table, *mb, &counter);
                if (!out.proof) {
                    std::printf("exhausted: %" PRIu64 "\naccesses: %" PRIu64 "\n",
                                out.trials_run, counter.fetches);
                    return 1;
                }
                wire::write_proof(path.string(), wire::MboundProofWire{out.proof->index});
                std::printf("index: %" PRIu64 "\ntrials_used: %" PRIu64 "\naccesses: %" PRIu64 "\n",
                            out.proof->index, out.proof->trials_used, counter.fetches);
            } else {
                const auto& rc = std::get<RangeChallenge>(ch);
                RangeProof proof = generate_range_proof(table, rc, gen.threads, &counter);
                wire::write_proof(path.string(), proof);
                std::printf("indices: %zu\naccesses: %" PRIu64 "\n", proof.indices.size(),
                            counter.fetches);
            }
            std::printf("file: %s\n", path.c_str());
            return 0;
        }

        if (verify_cmd->parsed()) {
            wire::Challenge ch = wire::read_challenge(ver.challenge_file);
            wire::Proof proof = wire::read_proof(ver.proof_file);
            PublicTable table = acquire_table(ver.table);
            AccessCounter counter;
            if (auto* mb = std::get_if<MboundChallenge>(&ch)) {
                auto* pw = std::get_if<wire::MboundProofWire>(&proof);
                if (!pw) throw std::runtime_error("proof scheme does not match the challenge");
                MboundVerdict v = verify(table, *mb, pw->index, &counter);
                std::printf("accesses: %" PRIu64 "\n", counter.fetches);
                if (v == MboundVerdict::Accept) {
                    std::printf("accept\n");
                    return 0;
                }
                std::printf("reject %s\n", to_string(v));
                return 1;
            }
            const auto& rc = std::get<RangeChallenge>(ch);
            auto* rp = std::get_if<RangeProof>(&proof);
            if (!rp) throw std::runtime_error("proof scheme does not match the challenge");
            ver.audit_seed_given = audit_seed_opt->count() > 0;
            std::uint64_t audit_seed = ver.audit_seed;
            if (!ver.audit_seed_given) {
                std::random_device rd;
                audit_seed = (static_cast<std::uint64_t>(rd()) << 32) | rd();
            }
            AuditPlan plan{ver.sample_count, ver.gap_count, audit_seed};
            RangeVerdict v = verify_range_proof(table, rc, *rp, plan, &counter);
            std::printf("accesses: %" PRIu64 "\n", counter.fetches);
            std::printf("expected_effort_accesses: %.1f\n",
                        verification_effort(rc, *rp, plan));
            if (v == RangeVerdict::Accept) {
                std::printf("accept\n");
                return 0;
            }
            std::printf("reject %s\n", to_string(v));
            return 1;
        }

        if (dist_cmd->parsed()) {
            using clock = std::chrono::steady_clock;
            auto start = clock::now();
            for (int e : dist.es) {
                TrialHistogram h = trial_distribution(e);
                emit_histogram_files(h, out_dir);
                fs::path summary = fs::path(out_dir) / ("e" + std::to_string(e)) / "summary.json";
                std::ofstream out(summary);
                if (!out) throw std::runtime_error("cannot open " + summary.string());
                out << histogram_summary_json(h) << '\n';
                std::printf("e=%d: total_cost=%.4f median=%" PRIu64
                            " tail2x=%.4f tail4x=%.4f files=%s/e%d/{tries,cost}.dat\n",
                            e, h.total_cost, quantile(e, 0.5), tail_cost_fraction(e, 2.0),
                            tail_cost_fraction(e, 4.0), out_dir.c_str(), e);
            }
            double secs = std::chrono::duration<double>(clock::now() - start).count();
            std::printf("elapsed_s: %.3f\n", secs);
            return 0;
        }

        if (plan_cmd->parsed()) {
            SchemePlan plan;
            if (pl.scheme == "mbound") {
                plan = plan_mbound(pl.e, pl.l);
                print_plan(plan);
                if (pl.m >= 0) {
                    RangeEquivalents eq = equivalent_range_params(plan, pl.m);
                    std::printf("equivalent_range_cost_preserving: range_len=%" PRIu64
                                " zeros=%d l=%u accesses=%.0f\n",
                                eq.cost_preserving.range_len, eq.cost_preserving.zeros,
                                eq.cost_preserving.path_len, eq.cost_preserving.expected_accesses);
                    std::printf("equivalent_range_halved_path_len: range_len=%" PRIu64
                                " zeros=%d l=%u accesses=%.0f\n",
                                eq.halved_path_len.range_len, eq.halved_path_len.zeros,
                                eq.halved_path_len.path_len, eq.halved_path_len.expected_accesses);
                }
            } else {
                if (pl.range_len > 0 || pl.zeros >= 0) {
                    if (pl.range_len == 0 || pl.zeros < 0)
                        throw std::invalid_argument("--range-len and --zeros go together");
                    plan = plan_range_raw(pl.range_len, pl.zeros, pl.l);
                } else {
                    if (pl.m < 0) throw std::invalid_argument("range plan needs --m");
                    plan = plan_range(pl.e, pl.m, pl.l);
                    std::printf("empty_proof_prob_uncorrected: %.6g\n",
                                empty_proof_probability(pl.e, pl.m, true));
                }
                print_plan(plan);
            }
            DeadlineWindow w = deadline_window(plan, pl.t_fast, pl.speed_ratio, pl.q_low, pl.q_high);
            std::printf("deadline_window: earliest_s=%.6g latest_s=%.6g spread=%.4g\n",
                        w.earliest_s, w.latest_s, w.latest_s / w.earliest_s);
            return 0;
        }

        if (abort_cmd->parsed() || retry_cmd->parsed() || select_cmd->parsed()) {
            PublicTable table = acquire_table(adv.table);
            ExperimentReport report;
            if (abort_cmd->parsed()) {
                MboundChallenge base = make_mbound_challenge(
                    nonce_from_seed(adv.rng_seed), static_cast<unsigned>(adv.e), adv.l);
                AdversaryPolicy policy{PolicyKind::EarlyAbort, adv.threshold, 1, 0};
                report = run_early_abort(table, base, policy, adv.n, adv.rng_seed);
                std::printf("experiment: early-abort e=%d threshold=%" PRIu64 " n=%" PRIu64 "\n",
                            adv.e, adv.threshold, adv.n);
                AbortReport ar = abort_analysis(adv.e, adv.threshold);
                std::printf("cost_per_attempt: closed_form=%.4f\n", ar.cost_per_attempt);
            } else if (retry_cmd->parsed()) {
                AdversaryPolicy policy{PolicyKind::PerturbRetry, 0, adv.budget, adv.bound};
                report = run_perturb_retry(table, nonce_from_seed(adv.rng_seed), adv.e, adv.l,
                                           policy, adv.n, adv.rng_seed);
                std::printf("experiment: perturb-retry e=%d bound=%" PRIu64 " budget=%" PRIu64
                            " n=%" PRIu64 "\n",
                            adv.e, adv.bound, adv.budget, adv.n);
            } else {
                AdversaryPolicy policy{PolicyKind::SelectiveFailure, adv.threshold, 1, 0};
                const Nonce stream = nonce_from_seed(adv.rng_seed);
                if (adv.scheme == "mbound") {
                    std::vector<MboundChallenge> challenges;
                    challenges.reserve(adv.n);
                    for (std::uint64_t i = 0; i < adv.n; ++i)
                        challenges.push_back(make_mbound_challenge(
                            derive_nonce(stream, i), static_cast<unsigned>(adv.e), adv.l));
                    report = run_selective_failure(table, challenges, policy, adv.rng_seed);
                } else {
                    std::vector<RangeChallenge> challenges;
                    challenges.reserve(adv.n);
                    for (std::uint64_t i = 0; i < adv.n; ++i)
                        challenges.push_back(make_range_challenge(
                            derive_nonce(stream, i), adv.range_len,
                            static_cast<unsigned>(adv.zeros), adv.l));
                    report = run_selective_failure(table, challenges, policy, adv.rng_seed);
                }
                std::printf("experiment: selective-failure scheme=%s threshold=%" PRIu64
                            " n=%" PRIu64 "\n",
                            adv.scheme.c_str(), adv.threshold, adv.n);
            }
            print_report(report);
            return 0;
        }

        if (bench_cmd->parsed()) {
            if (bench.min_log2 < 10 || bench.max_log2 > 28 || bench.min_log2 > bench.max_log2)
                throw std::invalid_argument("need 10 <= min-log2 <= max-log2 <= 28");
            std::printf("informational microbenchmark; no pass/fail semantics\n");
            std::printf("%-10s %-12s %-12s\n", "entries", "bytes", "ns_per_access");
            using clock = std::chrono::steady_clock;
            for (unsigned lg = bench.min_log2; lg <= bench.max_log2; lg += 2) {
                PublicTable table = build_table(7, std::uint64_t{1} << lg);
                const Nonce nonce = nonce_from_seed(lg);
                const WalkParams params{bench.l};
                volatile std::uint64_t sink = 0;
                for (std::uint64_t s = 0; s < 64; ++s) sink = sink + walk(table, nonce, s, params);
                auto start = clock::now();
                for (std::uint64_t s = 0; s < bench.walks; ++s)
                    sink = sink + walk(table, nonce, s, params);
                double ns = std::chrono::duration<double, std::nano>(clock::now() - start).count();
                std::printf("2^%-8u %-12" PRIu64 " %-12.2f\n", lg, (std::uint64_t{1} << lg) * 4,
                            ns / (static_cast<double>(bench.walks) * bench.l));
            }
            return 0;
        }
    } catch (const std::exception& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 2;
    }

    std::fprintf(stderr, "error: no subcommand handled\n");
    return 2;
}
