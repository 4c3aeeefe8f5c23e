#include "filtra/checks.hpp"

#include <string>

#include "filtra/json_io.hpp"
#include "filtra/slight.hpp"

namespace filtra {
namespace {

Topology join_below(const FiltrationSeq& f, std::uint64_t alpha)
{
    std::vector<Topology> below;
    for (std::uint64_t xi = 0; xi < alpha; ++xi) {
        below.push_back(f.stage(xi));
    }
    return join_topologies(below);
}

// first nonempty τ-open set without a nonempty `coarse`-open subset
std::optional<PointSet> uncovered_open(const Topology& tau, const Topology& coarse)
{
    for (PointSet b : tau.opens().sets()) {
        if (!b.empty() && coarse.interior(b).empty()) {
            return b;
        }
    }
    return std::nullopt;
}

nlohmann::json alpha_json(std::optional<std::uint64_t> alpha)
{
    return alpha ? nlohmann::json(*alpha) : nlohmann::json(nullptr);
}

CheckReport stab2_conclusion(const char* name, nlohmann::json inst, const FiltrationSeq& slowest, std::uint64_t alpha)
{
    const Topology& reached = slowest.stage(alpha);
    if (reached == slowest.tau()) {
        return CheckReport::passed(name, std::move(inst));
    }
    return CheckReport::failed(name, std::move(inst), {{"stage_index", alpha}, {"stage", to_json(reached)}});
}

CheckReport stab3_conclusion(const char* name, nlohmann::json inst, const FiltrationSeq& slowest,
                             std::uint64_t alpha)
{
    const Topology& tau = slowest.tau();
    if (auto b = uncovered_open(tau, join_below(slowest, alpha))) {
        return CheckReport::failed(name, std::move(inst), {{"open", to_json(*b)}, {"against", "join below alpha"}});
    }
    if (auto b = uncovered_open(tau, slowest.stage(alpha - 1))) {
        return CheckReport::failed(name, std::move(inst), {{"open", to_json(*b)}, {"against", "stage alpha-1"}});
    }
    return CheckReport::passed(name, std::move(inst));
}

// conclusions with α = ω: τ is the join of all stages / π-dense in it
CheckReport stab2_omega(nlohmann::json inst, const FiltrationSeq& slowest)
{
    const Topology joined = join_prefix(slowest, OrdinalPlus::omega());
    if (joined == slowest.tau()) {
        return CheckReport::passed("stab2_omega", std::move(inst));
    }
    return CheckReport::failed("stab2_omega", std::move(inst), {{"join", to_json(joined)}});
}

CheckReport stab3_omega(nlohmann::json inst, const FiltrationSeq& slowest)
{
    const Topology joined = join_prefix(slowest, OrdinalPlus::omega());
    if (auto b = uncovered_open(slowest.tau(), joined)) {
        return CheckReport::failed("stab3_omega", std::move(inst), {{"open", to_json(*b)}, {"join", to_json(joined)}});
    }
    return CheckReport::passed("stab3_omega", std::move(inst));
}

// Aggregates per-instance verdicts of one lemma into a single report.
class Tally {
public:
    explicit Tally(std::string check) : check_(std::move(check)) {}

    void add(const CheckReport& r)
    {
        ++checked_;
        if (r.verdict() == Verdict::vacuous) {
            ++vacuous_;
        } else if (r.verdict() == Verdict::fail) {
            if (failed_++ == 0) {
                first_failure_ = nlohmann::json{{"instance", r.instance()}, {"witness", *r.witness()}};
            }
        }
    }

    CheckReport finish(nlohmann::json inst) const
    {
        inst["checked"] = checked_;
        inst["vacuous"] = vacuous_;
        if (failed_ > 0) {
            nlohmann::json w = first_failure_;
            w["failures"] = failed_;
            return CheckReport::failed(check_, std::move(inst), std::move(w));
        }
        if (checked_ == vacuous_) {
            return CheckReport::vacuous(check_, std::move(inst), "no instance met the hypotheses");
        }
        return CheckReport::passed(check_, std::move(inst));
    }

private:
    std::string check_;
    std::uint64_t checked_ = 0;
    std::uint64_t vacuous_ = 0;
    std::uint64_t failed_ = 0;
    nlohmann::json first_failure_;
};

nlohmann::json chain_json(const FiltrationSeq& f)
{
    nlohmann::json stages = nlohmann::json::array();
    for (const Topology& t : f.stages()) {
        stages.push_back(to_json(t));
    }
    return stages;
}

} // namespace

nlohmann::json pair_instance(const Topology& sigma, const Topology& tau)
{
    return nlohmann::json{{"sigma", to_json(sigma)}, {"tau", to_json(tau)}};
}

CheckReport check_theorem_stab2(const HierarchySnapshot& sigma, const Topology& tau, const FiltrationSeq& slowest)
{
    const auto alpha = min_pi_basis_level(sigma, tau);
    auto inst = pair_instance(sigma.base_topology(), tau);
    inst["alpha"] = alpha_json(alpha);
    if (!alpha) {
        return CheckReport::vacuous("stab2", std::move(inst), "neighbourhood basis inside the Borel hierarchy of sigma");
    }
    if (!is_semiregular(tau)) {
        return CheckReport::vacuous("stab2", std::move(inst), "tau semiregular");
    }
    return stab2_conclusion("stab2", std::move(inst), slowest, *alpha);
}

CheckReport check_theorem_stab2(const Topology& sigma, const Topology& tau)
{
    return check_theorem_stab2(HierarchySnapshot::build(sigma), tau, slowest_filtration(sigma, tau));
}

CheckReport check_theorem_stab3(const HierarchySnapshot& sigma, const Topology& tau, const FiltrationSeq& slowest)
{
    const auto alpha = min_sigma_pibasis_level(sigma, tau);
    auto inst = pair_instance(sigma.base_topology(), tau);
    inst["alpha"] = alpha_json(alpha);
    if (!alpha) {
        return CheckReport::vacuous("stab3", std::move(inst),
                                    "neighbourhood pi-basis inside the Borel hierarchy of sigma");
    }
    if (!is_pi_semiregular(tau)) {
        return CheckReport::vacuous("stab3", std::move(inst), "tau pi-semiregular");
    }
    return stab3_conclusion("stab3", std::move(inst), slowest, *alpha);
}

CheckReport check_theorem_stab3(const Topology& sigma, const Topology& tau)
{
    return check_theorem_stab3(HierarchySnapshot::build(sigma), tau, slowest_filtration(sigma, tau));
}

std::string_view hypothesis_name(Hypothesis h)
{
    switch (h) {
    case Hypothesis::none: return "none";
    case Hypothesis::semiregularity: return "semiregularity";
    case Hypothesis::pi_semiregularity: return "pi-semiregularity";
    case Hypothesis::basis_level: return "basis-level";
    }
    return "?";
}

Hypothesis parse_hypothesis(std::string_view name)
{
    for (Hypothesis h : {Hypothesis::none, Hypothesis::semiregularity, Hypothesis::pi_semiregularity,
                         Hypothesis::basis_level}) {
        if (hypothesis_name(h) == name) {
            return h;
        }
    }
    throw InputError("unknown hypothesis '" + std::string(name) +
                     "' (expected none, semiregularity, pi-semiregularity or basis-level)");
}

std::vector<CheckReport> probe_without(Hypothesis dropped, const HierarchySnapshot& sigma, const Topology& tau,
                                       const FiltrationSeq& slowest)
{
    std::vector<CheckReport> out;
    auto inst = pair_instance(sigma.base_topology(), tau);
    switch (dropped) {
    case Hypothesis::none:
        out.push_back(check_theorem_stab2(sigma, tau, slowest));
        out.push_back(check_theorem_stab3(sigma, tau, slowest));
        break;
    case Hypothesis::semiregularity: {
        const auto alpha = min_pi_basis_level(sigma, tau);
        inst["alpha"] = alpha_json(alpha);
        if (!alpha) {
            out.push_back(CheckReport::vacuous("stab2", std::move(inst),
                                               "neighbourhood basis inside the Borel hierarchy of sigma"));
        } else {
            out.push_back(stab2_conclusion("stab2", std::move(inst), slowest, *alpha));
        }
        break;
    }
    case Hypothesis::pi_semiregularity: {
        const auto alpha = min_sigma_pibasis_level(sigma, tau);
        inst["alpha"] = alpha_json(alpha);
        if (!alpha) {
            out.push_back(CheckReport::vacuous("stab3", std::move(inst),
                                               "neighbourhood pi-basis inside the Borel hierarchy of sigma"));
        } else {
            out.push_back(stab3_conclusion("stab3", std::move(inst), slowest, *alpha));
        }
        break;
    }
    case Hypothesis::basis_level:
        if (is_semiregular(tau)) {
            out.push_back(stab2_omega(inst, slowest));
        } else {
            out.push_back(CheckReport::vacuous("stab2_omega", inst, "tau semiregular"));
        }
        if (is_pi_semiregular(tau)) {
            out.push_back(stab3_omega(inst, slowest));
        } else {
            out.push_back(CheckReport::vacuous("stab3_omega", inst, "tau pi-semiregular"));
        }
        break;
    }
    return out;
}

std::vector<FiltrationSeq> chains_between(std::span<const Topology> universe, const Topology& sigma,
                                          const Topology& tau, std::size_t max_length)
{
    std::vector<const Topology*> between;
    for (const Topology& t : universe) {
        if (sigma.is_coarser_than(t) && t.is_coarser_than(tau)) {
            between.push_back(&t);
        }
    }
    std::vector<FiltrationSeq> out;
    std::vector<Topology> stages{sigma};
    auto grow = [&](auto& self) -> void {
        out.emplace_back(sigma, tau, stages);
        if (stages.size() >= max_length) {
            return;
        }
        for (const Topology* t : between) {
            if (stages.back().is_coarser_than(*t)) {
                stages.push_back(*t);
                self(self);
                stages.pop_back();
            }
        }
    };
    if (max_length > 0) {
        grow(grow);
    }
    return out;
}

std::vector<CheckReport> lemma_reports(const FiltrationSeq& f, std::uint64_t nu)
{
    const nlohmann::json inst{{"stages", chain_json(f)}, {"tau", to_json(f.tau())}, {"nu", nu}};
    const SlightFamilies s = SlightFamilies::compute(f, nu);
    const GroundSet g = f.tau().ground();
    const std::uint64_t subsets = g.subset_count();

    std::vector<CheckReport> out;
    {
        CheckReport r = verify_slight_invariants(s);
        r.add_detail("stages", inst["stages"]);
        r.add_detail("tau", inst["tau"]);
        out.push_back(std::move(r));
    }
    Tally slal("lemma_slal");
    Tally stab("lemma_stab");
    Tally last("lemma_last");
    for (std::size_t xi = 0; xi <= s.top(); ++xi) {
        for (std::uint64_t a = 0; a < subsets; ++a) {
            slal.add(verify_lemma_slal(s, xi, PointSet{a}));
            // B ranges over subsets of A; other B are vacuous by definition
            for (std::uint64_t b = a;; b = (b - 1) & a) {
                stab.add(verify_lemma_stab(s, xi, PointSet{a}, PointSet{b}));
                if (b == 0) {
                    break;
                }
            }
        }
    }
    for (std::size_t beta = 1; beta <= s.top(); ++beta) {
        for (std::size_t gamma = 0; gamma < beta; ++gamma) {
            for (std::uint64_t a = 0; a < subsets; ++a) {
                for (PointSet b : f.tau().opens().sets()) {
                    last.add(verify_lemma_last(s, gamma, beta, PointSet{a}, b));
                }
            }
        }
    }
    out.push_back(slal.finish(inst));
    out.push_back(stab.finish(inst));
    out.push_back(last.finish(inst));
    return out;
}

CheckReport check_slowest_minimality(const FiltrationSeq& slowest, std::span<const FiltrationSeq> candidates)
{
    auto inst = pair_instance(slowest.sigma(), slowest.tau());
    std::uint64_t checked = 0;
    std::uint64_t skipped = 0;
    for (const FiltrationSeq& f : candidates) {
        if (!is_filtration(f)) {
            ++skipped;
            continue;
        }
        ++checked;
        for (std::size_t xi = 0; xi < f.length(); ++xi) {
            if (!slowest.stage(xi).is_coarser_than(f.stage(xi))) {
                inst["checked"] = checked;
                return CheckReport::failed("minimality", std::move(inst),
                                           {{"filtration", chain_json(f)}, {"stage_index", xi},
                                            {"slowest_stage", to_json(slowest.stage(xi))}});
            }
        }
    }
    inst["checked"] = checked;
    inst["not_filtrations"] = skipped;
    if (checked == 0) {
        return CheckReport::vacuous("minimality", std::move(inst), "some candidate is a filtration");
    }
    return CheckReport::passed("minimality", std::move(inst));
}

} // namespace filtra
