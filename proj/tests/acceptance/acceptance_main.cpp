// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <filtra/baire.hpp>
#include <filtra/borel.hpp>
#include <filtra/checks.hpp>
#include <filtra/cli.hpp>
#include <filtra/enumerate.hpp>
#include <filtra/sweep.hpp>

#include "oracles.hpp"

using namespace filtra;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

oracle::Family opens_of(const Topology& t)
{
    return oracle::Family(t.opens().masks().begin(), t.opens().masks().end());
}

std::string cli(std::vector<std::string> args, int& code)
{
    std::ostringstream out;
    std::ostringstream err;
    code = cli::run(args, out, err);
    return out.str();
}

// 1. counts via the CLI, agreement with the relation-search enumerator
Outcome enumeration()
{
    Outcome o;
    const std::uint64_t expected[] = {1, 1, 4, 29, 355, 6942};
    for (int n = 0; n <= 5; ++n) {
        const auto t0 = Clock::now();
        int code = 0;
        const auto j = nlohmann::json::parse(cli({"enumerate", "--n", std::to_string(n), "--count-only"}, code));
        const double budget = n <= 4 ? 5.0 : 120.0;
        o.require(code == 0, "enumerate exit code");
        o.require(j.at("count") == expected[n], "count for n=" + std::to_string(n));
        o.require(seconds_since(t0) < budget, "enumeration time for n=" + std::to_string(n));

        const auto tops = enumerate_topologies(n);
        std::vector<oracle::Family> got;
        for (const Topology& t : tops) {
            got.push_back(opens_of(t));
        }
        std::sort(got.begin(), got.end());
        o.require(got == oracle::topologies_from_relations(n), "preorder oracle disagrees for n=" + std::to_string(n));
    }
    o.detail = o.ok ? "1, 1, 4, 29, 355, 6942 for n = 0..5, equal to the relation oracle" : o.detail;
    return o;
}

Outcome theorem_sweep(CheckKind kind)
{
    Outcome o;
    std::uint64_t passed = 0;
    for (int n = 0; n <= 4; ++n) {
        SweepConfig cfg;
        cfg.n = n;
        cfg.checks = {kind};
        cfg.jobs = 0;
        const auto t0 = Clock::now();
        const auto r = sweep(cfg);
        const double budget = n <= 3 ? 10.0 : 600.0;
        o.require(seconds_since(t0) < budget, "time budget at n=" + std::to_string(n));
        o.require(r.summary.at("fail") == 0, "fail verdicts at n=" + std::to_string(n));
        passed += r.summary.at("pass").get<std::uint64_t>();
    }
    if (o.ok) {
        o.detail = "0 failures, " + std::to_string(passed) + " non-vacuous passes over n <= 4";
    }
    return o;
}

Outcome lemma_suite()
{
    Outcome o;
    std::uint64_t chains = 0;
    for (int n = 0; n <= 3; ++n) {
        SweepConfig cfg;
        cfg.n = n;
        cfg.nu = 2;
        cfg.checks = {CheckKind::lemmas};
        cfg.jobs = 0;
        const auto r = sweep(cfg);
        o.require(r.summary.at("fail") == 0, "lemma failures at n=" + std::to_string(n));
        for (const char* name : {"lemma_inclusions", "lemma_slal", "lemma_stab", "lemma_last"}) {
            o.require(r.summary.at("by_check").contains(name), std::string("no reports for ") + name);
        }
        chains += r.summary.at("lemma_chains").at("weak").get<std::uint64_t>();
    }
    if (o.ok) {
        o.detail = "0 failures over " + std::to_string(chains) + " weak filtrations of length <= 3, nu = 2";
    }
    return o;
}

Outcome hierarchy_laws()
{
    Outcome o;
    for (int n = 0; n <= 3 && o.ok; ++n) {
        const GroundSet g{n};
        for (const Topology& t : enumerate_topologies(n)) {
            for (std::uint64_t nu = 1; nu <= 3; ++nu) {
                const auto p = p_levels(t, nu, nu);
                const auto s = s_levels(t, nu, nu);
                for (std::uint64_t xi = 0; xi <= nu; ++xi) {
                    o.require(s[xi] == p[xi].complements(), "S is not the complement of P");
                    if (xi < nu) {
                        o.require(s[xi].is_subfamily_of(p[xi + 1]), "S_xi not inside P_xi+1");
                        o.require(p[xi].is_subfamily_of(s[xi + 1]), "P_xi not inside S_xi+1");
                    }
                    if (nu < 3) {
                        o.require(p[xi].is_subfamily_of(p_level(t, LevelIndex(nu + 1, xi))), "P not monotone in nu");
                    }
                }
            }
            const SetFamily algebra = [&] {
                oracle::Family a = oracle::algebra(n, opens_of(t));
                return SetFamily(g, std::vector<std::uint64_t>(a.begin(), a.end()));
            }();
            o.require(kappa_borel(t) == algebra, "Borel family differs from the generated algebra");
            SetFamily pis(g);
            SetFamily sigmas(g);
            for (std::uint64_t xi = 0; xi <= 4; ++xi) {
                const SetFamily pi = pi_class(t, xi);
                const SetFamily sigma = sigma_class(t, xi);
                o.require(sigma == pi.complements(), "Sigma class is not the complement of the Pi class");
                if (xi >= 1) {
                    // finite intersections of complements of earlier classes, and dually
                    const SetFamily below_pi = pis.complements();
                    const SetFamily below_sigma = sigmas.complements();
                    o.require(pi == intersection_closure(below_pi), "Pi class characterization");
                    o.require(sigma == union_closure(below_sigma), "Sigma class characterization");
                }
                pis = pis.united(pi);
                sigmas = sigmas.united(sigma);
            }
            const auto snap = HierarchySnapshot::build(t);
            const auto top = snap.stabilization() + 1;
            o.require(snap.pi_union_below(top) == algebra, "union of Pi classes differs from the Borel family");
            o.require(snap.sigma_union_below(top) == algebra, "union of Sigma classes differs from the Borel family");
        }
    }
    if (o.ok) {
        o.detail = "duality, level inclusions, class characterizations and Borel equality hold for n <= 3";
    }
    return o;
}

Outcome baire()
{
    Outcome o;
    std::uint64_t count = 0;
    for (int n = 0; n <= 4; ++n) {
        for (const Topology& t : enumerate_topologies(n)) {
            o.require(is_kappa_baire(t), "a topology is not Baire");
            ++count;
        }
    }
    std::uint64_t checked = 0;
    for (int n = 0; n <= 3; ++n) {
        const auto tops = enumerate_topologies(n);
        for (const Topology& t : tops) {
            const SetFamily borel = kappa_borel(t);
            for (const Topology& finer : tops) {
                if (!t.is_coarser_than(finer)) {
                    continue;
                }
                for (PointSet a : borel.sets()) {
                    o.require(has_kappa_baire_property(finer, a), "a Borel set lacks the Baire property");
                    ++checked;
                }
            }
        }
    }
    if (o.ok) {
        o.detail = std::to_string(count) + " topologies Baire; " + std::to_string(checked) +
                   " Borel sets have the Baire property in finer topologies";
    }
    return o;
}

Outcome minimality()
{
    Outcome o;
    std::uint64_t filtrations = 0;
    for (int n = 2; n <= 3; ++n) {
        const auto tops = enumerate_topologies(n);
        for (const Topology& tau : tops) {
            for (const Topology& sigma : tops) {
                if (!sigma.is_coarser_than(tau)) {
                    continue;
                }
                const auto chains = chains_between(tops, sigma, tau, 3);
                const auto r = check_slowest_minimality(slowest_filtration(sigma, tau), chains);
                o.require(r.verdict() != Verdict::fail, "slowest filtration is not stagewise minimal");
                filtrations += r.instance().at("checked").get<std::uint64_t>();
            }
        }
    }
    if (o.ok) {
        o.detail = "0 violations over " + std::to_string(filtrations) + " filtrations of length <= 3";
    }
    return o;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome fixtures()
{
    Outcome o;
    const std::string dir = FILTRA_FIXTURE_DIR;
    for (const std::string name : {"sierpinski_discrete", "indiscrete_discrete"}) {
        int code = 0;
        const std::string got = cli({"filtration", "--input", dir + "/" + name + ".json"}, code);
        o.require(code == 0, name + ": exit code");
        o.require(got == read_file(dir + "/" + name + ".expected.json"), name + ": output differs from fixture");
    }
    int code = 0;
    const auto sd = nlohmann::json::parse(cli({"filtration", "--input", dir + "/sierpinski_discrete.json"}, code));
    o.require(sd.at("alpha_pi") == 2 && sd.at("stabilization") == 1, "Sierpinski to discrete values");
    const auto id = nlohmann::json::parse(cli({"filtration", "--input", dir + "/indiscrete_discrete.json"}, code));
    o.require(id.at("stab2").at("verdict") == "vacuous", "indiscrete to discrete verdict");
    for (const auto& stage : id.at("stages")) {
        o.require(stage == id.at("sigma"), "indiscrete to discrete filtration is not constant");
    }
    if (o.ok) {
        o.detail = "both fixtures bit-exact";
    }
    return o;
}

Outcome determinism()
{
    Outcome o;
    for (const std::string n : {"3", "4"}) {
        int c1 = 0;
        int c8 = 0;
        const std::string one = cli({"check", "--n", n, "--jobs", "1"}, c1);
        const std::string eight = cli({"check", "--n", n, "--jobs", "8"}, c8);
        o.require(c1 == 0 && c8 == 0, "sweep exit code at n=" + n);
        o.require(!one.empty() && one == eight, "report streams differ at n=" + n);
    }
    if (o.ok) {
        o.detail = "--jobs 1 and --jobs 8 streams byte-identical for n = 3, 4";
    }
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 enumeration counts", enumeration},
        {"2 basis-level stabilization sweep", [] { return theorem_sweep(CheckKind::stab2); }},
        {"3 pi-basis stabilization sweep", [] { return theorem_sweep(CheckKind::stab3); }},
        {"4 slight-set lemma suite", lemma_suite},
        {"5 hierarchy laws", hierarchy_laws},
        {"6 Baire properties", baire},
        {"7 minimality of the slowest filtration", minimality},
        {"8 worked micro-instances", fixtures},
        {"9 determinism", determinism},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::ostringstream secs;
        secs.precision(2);
        secs << std::fixed << seconds_since(t0);
        std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << name << ": " << o.detail << " (" << secs.str()
                  << " s)\n";
        failures += o.ok ? 0 : 1;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
