#include "filtra/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

#include "filtra/enumerate.hpp"

namespace filtra {
namespace {

using Clock = std::chrono::steady_clock;

constexpr const char* kIndexConvention = "xi is 0-based; class xi is Pi/Sigma^{omega,0}_{1+xi}";

unsigned resolve_jobs(unsigned jobs)
{
    if (jobs == 0) {
        jobs = std::max(1U, std::thread::hardware_concurrency());
    }
    return jobs;
}

// Calls body(i, worker) for every i < count on `jobs` threads.
template <class Body>
void parallel_for(std::size_t count, unsigned jobs, Body body)
{
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto run = [&](unsigned worker) {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                body(i, worker);
            } catch (...) {
                std::lock_guard lock(error_mu);
                if (!error) {
                    error = std::current_exception();
                }
                next = count;
            }
        }
    };
    if (jobs <= 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < jobs; ++w) {
            pool.emplace_back(run, w);
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

void require_sweep_size(const SweepConfig& config)
{
    if (config.n < 0 || config.n > kMaxExhaustive) {
        throw InputError("sweeps support 0 <= n <= " + std::to_string(kMaxExhaustive) + ", got " +
                         std::to_string(config.n));
    }
    if (config.n == kMaxExhaustive && !config.allow_large) {
        throw InputError("n = " + std::to_string(config.n) + " sweeps are long-running; pass --allow-large");
    }
    if (config.nu == 0) {
        throw InputError("nu must be >= 1");
    }
}

struct Universe {
    std::vector<Topology> topologies;
    std::vector<HierarchySnapshot> snapshots;
};

Universe build_universe(const SweepConfig& config, unsigned jobs)
{
    Universe u;
    u.topologies = enumerate_topologies(config.n, config.allow_large);
    u.snapshots.resize(u.topologies.size());
    parallel_for(u.topologies.size(), jobs,
                 [&](std::size_t i, unsigned) { u.snapshots[i] = HierarchySnapshot::build(u.topologies[i]); });
    return u;
}

class Progress {
public:
    Progress(std::ostream* out, std::size_t total) : out_(out), total_(total) {}

    void tick()
    {
        if (out_ == nullptr) {
            return;
        }
        const std::size_t done = ++done_;
        const std::size_t step = std::max<std::size_t>(1, total_ / 100);
        if (done % step == 0 || done == total_) {
            std::lock_guard lock(mu_);
            *out_ << "progress " << done << "/" << total_ << "\n" << std::flush;
        }
    }

private:
    std::ostream* out_;
    std::size_t total_;
    std::atomic<std::size_t> done_{0};
    std::mutex mu_;
};

void timed(CheckReport& r, Clock::time_point start)
{
    r.set_elapsed(std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start));
}

std::string alpha_key(const CheckReport& r)
{
    const auto& a = r.instance().at("alpha");
    return a.is_null() ? "absent" : std::to_string(a.get<std::uint64_t>());
}

// Per-worker accumulators; merged after the pool joins.
struct Partial {
    std::vector<CheckReport> reports;
    std::map<std::string, std::uint64_t> stabilization;
    std::uint64_t pairs = 0;
    std::uint64_t weak_chains = 0;
    std::uint64_t other_chains = 0;
};

nlohmann::json verdict_counts(const std::vector<CheckReport>& reports)
{
    nlohmann::json by_check = nlohmann::json::object();
    for (const CheckReport& r : reports) {
        auto& slot = by_check[r.check()];
        if (slot.is_null()) {
            slot = {{"pass", 0}, {"fail", 0}, {"vacuous", 0}};
        }
        slot[std::string(verdict_name(r.verdict()))] = slot[std::string(verdict_name(r.verdict()))].get<int>() + 1;
    }
    return by_check;
}

std::vector<CheckReport> merge(std::vector<Partial>& parts)
{
    std::vector<CheckReport> all;
    for (Partial& p : parts) {
        std::move(p.reports.begin(), p.reports.end(), std::back_inserter(all));
        p.reports.clear();
    }
    std::sort(all.begin(), all.end(), report_order);
    return all;
}

} // namespace

std::string_view check_kind_name(CheckKind k)
{
    switch (k) {
    case CheckKind::stab2: return "stab2";
    case CheckKind::stab3: return "stab3";
    case CheckKind::lemmas: return "lemmas";
    case CheckKind::minimality: return "minimality";
    }
    return "?";
}

SweepResult sweep(const SweepConfig& config)
{
    require_sweep_size(config);
    const auto started = Clock::now();
    const unsigned jobs = resolve_jobs(config.jobs);
    const Universe u = build_universe(config, jobs);
    const auto& tops = u.topologies;

    const bool chains_allowed = config.n <= kMaxLemmaSweep || config.allow_large;
    const bool want_lemmas = config.checks.contains(CheckKind::lemmas) && chains_allowed;
    const bool want_minimality = config.checks.contains(CheckKind::minimality) && chains_allowed;

    std::vector<Partial> parts(jobs);
    Progress progress(config.progress, tops.size());
    parallel_for(tops.size(), jobs, [&](std::size_t ti, unsigned worker) {
        Partial& out = parts[worker];
        const Topology& tau = tops[ti];
        for (std::size_t si = 0; si < tops.size(); ++si) {
            const Topology& sigma = tops[si];
            if (!sigma.is_coarser_than(tau)) {
                continue;
            }
            ++out.pairs;
            const auto key = [&](std::int64_t sub) {
                return std::vector<std::int64_t>{static_cast<std::int64_t>(ti), static_cast<std::int64_t>(si), sub};
            };
            const FiltrationSeq slowest = slowest_filtration(sigma, tau);
            const auto stab = stabilization_ordinal(slowest);
            ++out.stabilization[stab ? std::to_string(*stab) : "never"];

            auto emit = [&](CheckReport r, std::int64_t sub, Clock::time_point t0) {
                if (config.timing) {
                    timed(r, t0);
                }
                r.set_order_key(key(sub));
                out.reports.push_back(std::move(r));
            };
            if (config.checks.contains(CheckKind::stab2)) {
                const auto t0 = Clock::now();
                emit(check_theorem_stab2(u.snapshots[si], tau, slowest), 0, t0);
            }
            if (config.checks.contains(CheckKind::stab3)) {
                const auto t0 = Clock::now();
                emit(check_theorem_stab3(u.snapshots[si], tau, slowest), 0, t0);
            }
            if (!want_lemmas && !want_minimality) {
                continue;
            }
            const auto chains = chains_between(tops, sigma, tau, 3);
            if (want_minimality) {
                const auto t0 = Clock::now();
                emit(check_slowest_minimality(slowest, chains), 0, t0);
            }
            if (want_lemmas) {
                for (std::size_t c = 0; c < chains.size(); ++c) {
                    if (!is_weak_filtration(chains[c])) {
                        ++out.other_chains;
                        continue;
                    }
                    ++out.weak_chains;
                    const auto t0 = Clock::now();
                    for (CheckReport& r : lemma_reports(chains[c], config.nu)) {
                        emit(std::move(r), static_cast<std::int64_t>(c) + 1, t0);
                    }
                }
            }
        }
        progress.tick();
    });

    nlohmann::json summary{{"kind", "summary"}, {"n", config.n}, {"nu", config.nu}, {"topologies", tops.size()}};
    nlohmann::json checks = nlohmann::json::array();
    for (CheckKind k : config.checks) {
        checks.push_back(check_kind_name(k));
    }
    summary["checks"] = checks;

    std::uint64_t pairs = 0;
    std::uint64_t weak = 0;
    std::uint64_t other = 0;
    std::map<std::string, std::uint64_t> stabilization;
    for (const Partial& p : parts) {
        pairs += p.pairs;
        weak += p.weak_chains;
        other += p.other_chains;
        for (const auto& [k, v] : p.stabilization) {
            stabilization[k] += v;
        }
    }
    SweepResult result;
    result.reports = merge(parts);

    std::map<std::string, std::uint64_t> alpha_pi;
    std::map<std::string, std::uint64_t> alpha_sigma;
    std::uint64_t counts[3] = {0, 0, 0};
    for (const CheckReport& r : result.reports) {
        ++counts[static_cast<int>(r.verdict())];
        if (r.check() == "stab2") {
            ++alpha_pi[alpha_key(r)];
        } else if (r.check() == "stab3") {
            ++alpha_sigma[alpha_key(r)];
        }
    }
    std::uint64_t max_stab = 0;
    for (const auto& [k, v] : stabilization) {
        if (k != "never") {
            max_stab = std::max<std::uint64_t>(max_stab, std::stoull(k));
        }
    }
    summary["pairs"] = pairs;
    summary["pass"] = counts[static_cast<int>(Verdict::pass)];
    summary["fail"] = counts[static_cast<int>(Verdict::fail)];
    summary["vacuous"] = counts[static_cast<int>(Verdict::vacuous)];
    summary["by_check"] = verdict_counts(result.reports);
    summary["max_stabilization"] = max_stab;
    summary["stabilization_histogram"] = stabilization;
    if (config.checks.contains(CheckKind::stab2)) {
        summary["alpha_pi_histogram"] = alpha_pi;
    }
    if (config.checks.contains(CheckKind::stab3)) {
        summary["alpha_sigma_histogram"] = alpha_sigma;
    }
    if (want_lemmas) {
        summary["lemma_chains"] = {{"weak", weak}, {"not_weak", other}};
    }
    nlohmann::json skipped = nlohmann::json::array();
    if (config.checks.contains(CheckKind::lemmas) && !want_lemmas) {
        skipped.push_back("lemmas");
    }
    if (config.checks.contains(CheckKind::minimality) && !want_minimality) {
        skipped.push_back("minimality");
    }
    summary["skipped"] = skipped;
    summary["index_convention"] = kIndexConvention;
    if (config.timing) {
        summary["elapsed_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started).count();
    }
    result.summary = std::move(summary);
    return result;
}

SweepResult search_counterexample(const SweepConfig& config, Hypothesis dropped)
{
    require_sweep_size(config);
    const auto started = Clock::now();
    const unsigned jobs = resolve_jobs(config.jobs);
    const Universe u = build_universe(config, jobs);
    const auto& tops = u.topologies;

    struct Counts {
        std::vector<CheckReport> failures;
        std::uint64_t pairs = 0;
        std::uint64_t evaluated = 0;
        std::uint64_t vacuous = 0;
    };
    std::vector<Counts> parts(jobs);
    Progress progress(config.progress, tops.size());
    parallel_for(tops.size(), jobs, [&](std::size_t ti, unsigned worker) {
        Counts& out = parts[worker];
        const Topology& tau = tops[ti];
        for (std::size_t si = 0; si < tops.size(); ++si) {
            if (!tops[si].is_coarser_than(tau)) {
                continue;
            }
            ++out.pairs;
            const auto t0 = Clock::now();
            const FiltrationSeq slowest = slowest_filtration(tops[si], tau);
            for (CheckReport& r : probe_without(dropped, u.snapshots[si], tau, slowest)) {
                if (r.verdict() == Verdict::vacuous) {
                    ++out.vacuous;
                    continue;
                }
                ++out.evaluated;
                if (r.verdict() == Verdict::fail) {
                    if (config.timing) {
                        timed(r, t0);
                    }
                    r.set_order_key({static_cast<std::int64_t>(ti), static_cast<std::int64_t>(si)});
                    out.failures.push_back(std::move(r));
                }
            }
        }
        progress.tick();
    });

    SweepResult result;
    std::uint64_t pairs = 0;
    std::uint64_t evaluated = 0;
    std::uint64_t vacuous = 0;
    for (Counts& p : parts) {
        pairs += p.pairs;
        evaluated += p.evaluated;
        vacuous += p.vacuous;
        std::move(p.failures.begin(), p.failures.end(), std::back_inserter(result.reports));
    }
    std::sort(result.reports.begin(), result.reports.end(), report_order);
    result.summary = {{"kind", "search"},
                      {"n", config.n},
                      {"dropped", hypothesis_name(dropped)},
                      {"topologies", tops.size()},
                      {"pairs", pairs},
                      {"evaluated", evaluated},
                      {"vacuous", vacuous},
                      {"counterexamples", result.reports.size()},
                      {"index_convention", kIndexConvention}};
    if (config.timing) {
        result.summary["elapsed_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started).count();
    }
    return result;
}

} // namespace filtra
