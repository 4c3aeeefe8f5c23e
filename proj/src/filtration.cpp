#include "filtra/filtration.hpp"

#include <string>

namespace filtra {

OrdinalPlus OrdinalPlus::finite(std::uint64_t value)
{
    if (value == 0) {
        throw InputError("ordinal must be >= 1");
    }
    return OrdinalPlus{value};
}

std::uint64_t OrdinalPlus::value() const
{
    if (is_omega()) {
        throw InputError("omega has no finite value");
    }
    return value_;
}

OrdinalPlus OrdinalPlus::oplus_one() const
{
    return is_omega() ? *this : OrdinalPlus{value_ + 1};
}

std::string OrdinalPlus::to_string() const
{
    return is_omega() ? "omega" : std::to_string(value_);
}

FiltrationSeq::FiltrationSeq(Topology sigma, Topology tau, std::vector<Topology> stages)
    : tau_(std::move(tau)), stages_(std::move(stages))
{
    sigma.ground().require_same(tau_.ground());
    if (stages_.empty()) {
        throw InputError("filtration needs at least one stage");
    }
    if (!(stages_.front() == sigma)) {
        throw InputError("stage 0 differs from sigma");
    }
    for (std::size_t i = 0; i < stages_.size(); ++i) {
        const std::string at = "stage " + std::to_string(i);
        if (stages_[i].ground() != tau_.ground()) {
            throw InputError(at + ": ground mismatch");
        }
        if (!stages_[i].is_coarser_than(tau_)) {
            throw InputError(at + ": not contained in tau");
        }
        if (i > 0 && !stages_[i - 1].is_coarser_than(stages_[i])) {
            throw InputError(at + ": does not contain the previous stage");
        }
    }
}

FiltrationSeq FiltrationSeq::trivial(const Topology& sigma, const Topology& tau, std::size_t length)
{
    std::vector<Topology> stages{sigma};
    while (stages.size() < length) {
        stages.push_back(tau);
    }
    return FiltrationSeq(sigma, tau, std::move(stages));
}

const Topology& FiltrationSeq::stage(std::size_t xi) const
{
    if (xi < stages_.size()) {
        return stages_[xi];
    }
    if (!stationary_tail_) {
        throw InputError("stage " + std::to_string(xi) + " beyond the stored sequence");
    }
    return stages_.back();
}

FiltrationSeq FiltrationSeq::padded(std::size_t length) const
{
    std::vector<Topology> stages = stages_;
    while (stages.size() < length) {
        stages.push_back(tau_);
    }
    return FiltrationSeq(sigma(), tau_, std::move(stages));
}

std::optional<FiltrationViolation> find_filtration_violation(const FiltrationSeq& f, bool weak)
{
    const Topology& tau = f.tau();
    const auto stages = f.stages();
    for (std::size_t alpha = 1; alpha < stages.size(); ++alpha) {
        for (std::size_t xi = 0; xi < alpha; ++xi) {
            const SetFamily closed_sets = stages[xi].closed_sets();
            for (PointSet closed : closed_sets.sets()) {
                const PointSet fine = tau.interior(closed);
                const PointSet coarse = stages[alpha].interior(closed);
                const bool ok = weak ? fine.subset_of(tau.closure(coarse)) : coarse == fine;
                if (!ok) {
                    return FiltrationViolation{alpha, xi, closed};
                }
            }
        }
    }
    return std::nullopt;
}

bool is_filtration(const FiltrationSeq& f)
{
    return !find_filtration_violation(f, false).has_value();
}

bool is_weak_filtration(const FiltrationSeq& f)
{
    return !find_filtration_violation(f, true).has_value();
}

Topology slowest_successor(const Topology& tau, std::span<const Topology> prefix)
{
    if (prefix.empty()) {
        throw InputError("slowest successor needs a nonempty prefix");
    }
    std::vector<std::uint64_t> gens;
    for (const Topology& stage : prefix) {
        tau.ground().require_same(stage.ground());
        const SetFamily closed_sets = stage.closed_sets();
        for (PointSet closed : closed_sets.sets()) {
            const PointSet core = tau.interior(closed);
            for (PointSet u : stage.opens().sets()) {
                gens.push_back((u & core).bits());
            }
        }
    }
    return generate_topology(tau.ground(), SetFamily(tau.ground(), std::move(gens)));
}

FiltrationSeq slowest_filtration(const Topology& sigma, const Topology& tau)
{
    if (!sigma.is_coarser_than(tau)) {
        throw InputError("sigma is not coarser than tau");
    }
    std::vector<Topology> stages{sigma};
    while (!(stages.back() == tau)) {
        Topology next = slowest_successor(tau, stages);
        const bool fixpoint = next == stages.back();
        stages.push_back(std::move(next));
        if (fixpoint) {
            break;
        }
    }
    FiltrationSeq f(sigma, tau, std::move(stages));
    f.stationary_tail_ = true;
    return f;
}

Topology join_prefix(const FiltrationSeq& f, OrdinalPlus alpha)
{
    const auto stages = f.stages();
    if (alpha.is_omega()) {
        return join_topologies(stages);
    }
    if (alpha.value() > stages.size()) {
        throw InputError("join prefix " + alpha.to_string() + " exceeds " + std::to_string(stages.size()) +
                         " stored stages");
    }
    return join_topologies(stages.first(alpha.value()));
}

std::optional<std::size_t> stabilization_ordinal(const FiltrationSeq& f)
{
    const auto stages = f.stages();
    for (std::size_t xi = 0; xi < stages.size(); ++xi) {
        if (stages[xi] == f.tau()) {
            return xi;
        }
    }
    return std::nullopt;
}

} // namespace filtra
