#include "filtra/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "filtra/borel.hpp"
#include "filtra/checks.hpp"
#include "filtra/enumerate.hpp"
#include "filtra/json_io.hpp"
#include "filtra/slight.hpp"
#include "filtra/sweep.hpp"

namespace filtra::cli {
namespace {

constexpr int kMaxHierarchyGround = 8;
constexpr const char* kIndexConvention = "xi is 0-based; class xi is Pi/Sigma^{omega,0}_{1+xi}";

nlohmann::json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot read " + path);
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

struct PairInput {
    Topology sigma;
    Topology tau;
    std::optional<FiltrationSeq> given;
};

PairInput read_pair(const std::string& path)
{
    const nlohmann::json j = read_json(path);
    if (!j.is_object() || !j.contains("sigma") || !j.contains("tau")) {
        throw InputError(path + ": expected an object with \"sigma\" and \"tau\"");
    }
    PairInput p{topology_from_json(j.at("sigma")), topology_from_json(j.at("tau")), std::nullopt};
    p.sigma.ground().require_same(p.tau.ground());
    if (j.contains("stages")) {
        std::vector<Topology> stages;
        for (const auto& s : j.at("stages")) {
            stages.push_back(topology_from_json(s));
        }
        p.given = FiltrationSeq(p.sigma, p.tau, std::move(stages));
    }
    return p;
}

nlohmann::json stages_json(const FiltrationSeq& f)
{
    nlohmann::json out = nlohmann::json::array();
    for (const Topology& t : f.stages()) {
        out.push_back(to_json(t));
    }
    return out;
}

nlohmann::json optional_json(std::optional<std::uint64_t> v)
{
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json family_by_xi(const std::vector<SetFamily>& fams)
{
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t xi = 0; xi < fams.size(); ++xi) {
        out.push_back({{"xi", xi}, {"class_index", xi + 1}, {"sets", to_json(fams[xi])}});
    }
    return out;
}

// Writes JSON lines either to `out` or to the file at `path`.
class LineSink {
public:
    LineSink(const std::string& path, std::ostream& fallback) : stream_(&fallback)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw InputError("cannot write " + path);
            }
            stream_ = &file_;
        }
    }
    void line(const nlohmann::json& j) { *stream_ << j.dump() << '\n'; }
    void flush(const std::string& path)
    {
        stream_->flush();
        if (!*stream_) {
            throw std::runtime_error("write failed for " + (path.empty() ? std::string("stdout") : path));
        }
    }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

int cmd_enumerate(int n, bool count_only, bool allow_large, std::ostream& out)
{
    if (count_only) {
        const std::size_t count = count_topologies(n, allow_large);
        out << nlohmann::json{{"n", n}, {"count", count}}.dump() << '\n';
        return kExitOk;
    }
    const auto tops = enumerate_topologies(n, allow_large);
    for (const Topology& t : tops) {
        out << to_json(t).dump() << '\n';
    }
    out << nlohmann::json{{"kind", "summary"}, {"n", n}, {"count", tops.size()}}.dump() << '\n';
    return kExitOk;
}

int cmd_filtration(const std::string& input, std::ostream& out)
{
    const PairInput p = read_pair(input);
    const FiltrationSeq slowest = slowest_filtration(p.sigma, p.tau);
    const HierarchySnapshot snap = HierarchySnapshot::build(p.sigma);
    const auto stab = stabilization_ordinal(slowest);

    nlohmann::json j{{"sigma", to_json(p.sigma)},
                     {"tau", to_json(p.tau)},
                     {"stages", stages_json(slowest)},
                     {"stabilization", stab ? nlohmann::json(*stab) : nlohmann::json("never")},
                     {"is_filtration", is_filtration(slowest)},
                     {"alpha_pi", optional_json(min_pi_basis_level(snap, p.tau))},
                     {"alpha_sigma", optional_json(min_sigma_pibasis_level(snap, p.tau))},
                     {"stab2", check_theorem_stab2(snap, p.tau, slowest).to_json()},
                     {"stab3", check_theorem_stab3(snap, p.tau, slowest).to_json()},
                     {"index_convention", kIndexConvention}};
    if (p.given) {
        nlohmann::json g{{"stages", stages_json(*p.given)},
                         {"is_filtration", is_filtration(*p.given)},
                         {"is_weak_filtration", is_weak_filtration(*p.given)}};
        if (auto v = find_filtration_violation(*p.given, false)) {
            g["violation"] = {{"alpha", v->alpha}, {"xi", v->xi}, {"closed_set", to_json(v->closed_set)}};
        } else {
            g["violation"] = nullptr;
        }
        j["given"] = std::move(g);
    }
    out << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_hierarchy(const std::string& input, std::uint64_t xi_max, std::ostream& out)
{
    const Topology t = topology_from_json(read_json(input));
    if (t.ground().size() > kMaxHierarchyGround) {
        throw InputError("hierarchy listings are limited to n <= " + std::to_string(kMaxHierarchyGround));
    }
    const HierarchySnapshot snap = HierarchySnapshot::build(t, HierarchyOptions{xi_max, {}});
    std::vector<SetFamily> pi;
    std::vector<SetFamily> sigma;
    const std::uint64_t last = std::max<std::uint64_t>(xi_max, snap.stabilization());
    for (std::uint64_t xi = 0; xi <= last; ++xi) {
        pi.push_back(snap.pi_class(xi));
        sigma.push_back(snap.sigma_class(xi));
    }
    nlohmann::json j{{"topology", to_json(t)},
                     {"stabilization", snap.stabilization()},
                     {"pi_classes", family_by_xi(pi)},
                     {"sigma_classes", family_by_xi(sigma)},
                     {"borel", to_json(snap.borel())},
                     {"index_convention", kIndexConvention}};
    out << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_slight(const std::string& input, std::uint64_t nu, std::ostream& out)
{
    const PairInput p = read_pair(input);
    const FiltrationSeq f = p.given ? *p.given : slowest_filtration(p.sigma, p.tau);
    const SlightFamilies s = SlightFamilies::compute(f, nu);
    nlohmann::json fams = nlohmann::json::array();
    for (std::size_t xi = 0; xi <= s.top(); ++xi) {
        fams.push_back({{"xi", xi}, {"minus", to_json(s.minus(xi))}, {"plus", to_json(s.plus(xi))}});
    }
    nlohmann::json j{{"stages", stages_json(f)},
                     {"tau", to_json(f.tau())},
                     {"nu", nu},
                     {"top", s.top()},
                     {"is_filtration", s.is_filtration()},
                     {"families", std::move(fams)}};
    out << j.dump(2) << '\n';
    return kExitOk;
}

int emit(const SweepResult& r, const std::string& output, bool timing, std::ostream& out, bool failures_found)
{
    LineSink sink(output, out);
    for (const CheckReport& rep : r.reports) {
        sink.line(rep.to_json(timing));
    }
    sink.line(r.summary);
    sink.flush(output);
    return failures_found ? kExitFailures : kExitOk;
}

std::set<CheckKind> parse_theorem(const std::string& which)
{
    if (which == "all") {
        return {CheckKind::stab2, CheckKind::stab3, CheckKind::lemmas, CheckKind::minimality};
    }
    for (CheckKind k : {CheckKind::stab2, CheckKind::stab3, CheckKind::lemmas, CheckKind::minimality}) {
        if (check_kind_name(k) == which) {
            return {k};
        }
    }
    throw InputError("unknown theorem '" + which + "'");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Finite-model checks for filtrations between topologies", "filtra"};
    app.require_subcommand(1);

    int n = 0;
    bool count_only = false;
    bool allow_large = false;
    std::string input;
    std::uint64_t xi_max = 0;
    std::uint64_t nu = 2;
    std::string theorem = "all";
    unsigned jobs = 1;
    std::string output;
    bool timing = false;
    std::string drop;

    auto* enumerate = app.add_subcommand("enumerate", "List or count all topologies on n points");
    enumerate->add_option("--n", n, "Number of points")->required()->check(CLI::Range(0, kMaxEnumerable));
    enumerate->add_flag("--count-only", count_only, "Print only the count");
    enumerate->add_flag("--allow-large", allow_large, "Permit n = 6");

    auto* filtration = app.add_subcommand("filtration", "Slowest filtration for a pair of topologies");
    filtration->add_option("--input", input, "pair.json with sigma and tau")->required();

    auto* hierarchy = app.add_subcommand("hierarchy", "Borel hierarchy classes of a topology");
    hierarchy->add_option("--input", input, "topology JSON")->required();
    hierarchy->add_option("--xi-max", xi_max, "List classes at least up to this index");

    auto* slight = app.add_subcommand("slight", "Slight-set families of a (weak) filtration");
    slight->add_option("--input", input, "pair.json with sigma, tau and optional stages")->required();
    slight->add_option("--nu", nu, "Finite cardinal nu >= 1")->required()->check(CLI::PositiveNumber);

    auto* check = app.add_subcommand("check", "Exhaustive theorem and lemma sweep");
    check->add_option("--n", n, "Number of points")->required()->check(CLI::Range(0, kMaxExhaustive));
    check->add_option("--theorem", theorem, "stab2, stab3, lemmas, minimality or all")
        ->check(CLI::IsMember({"stab2", "stab3", "lemmas", "minimality", "all"}));
    check->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
    check->add_option("--output", output, "Write JSON lines to this file");
    check->add_option("--nu", nu, "nu for the lemma suite")->check(CLI::PositiveNumber);
    check->add_flag("--allow-large", allow_large, "Permit n = 5 and lemma sweeps beyond n = 3");
    check->add_flag("--timing", timing, "Include timings in the reports");

    auto* search = app.add_subcommand("search", "Counterexample search with one hypothesis dropped");
    search->add_option("--n", n, "Number of points")->required()->check(CLI::Range(0, kMaxExhaustive));
    search->add_option("--drop", drop, "Hypothesis to drop")
        ->required()
        ->check(CLI::IsMember({"none", "semiregularity", "pi-semiregularity", "basis-level"}));
    search->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
    search->add_option("--output", output, "Write JSON lines to this file");
    search->add_flag("--allow-large", allow_large, "Permit n = 5");
    search->add_flag("--timing", timing, "Include timings in the reports");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "filtra: " << e.what() << '\n';
        for (auto* sub : app.get_subcommands()) {
            err << sub->help();
        }
        return kExitUsage;
    }

    try {
        if (enumerate->parsed()) {
            return cmd_enumerate(n, count_only, allow_large, out);
        }
        if (filtration->parsed()) {
            return cmd_filtration(input, out);
        }
        if (hierarchy->parsed()) {
            return cmd_hierarchy(input, xi_max, out);
        }
        if (slight->parsed()) {
            return cmd_slight(input, nu, out);
        }
        SweepConfig config;
        config.n = n;
        config.nu = nu;
        config.jobs = jobs;
        config.allow_large = allow_large;
        config.timing = timing;
        if (n >= kMaxExhaustive) {
            config.progress = &err;
        }
        if (check->parsed()) {
            config.checks = parse_theorem(theorem);
            const SweepResult r = sweep(config);
            return emit(r, output, timing, out, r.summary.at("fail").get<std::uint64_t>() > 0);
        }
        const SweepResult r = search_counterexample(config, parse_hypothesis(drop));
        return emit(r, output, timing, out, !r.reports.empty());
    } catch (const InputError& e) {
        err << "filtra: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "filtra: " << e.what() << '\n';
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        err << "filtra: malformed JSON: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "filtra: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace filtra::cli
