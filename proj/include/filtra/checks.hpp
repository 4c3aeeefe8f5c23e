#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "filtra/borel.hpp"
#include "filtra/filtration.hpp"
#include "filtra/report.hpp"

namespace filtra {

/// {"sigma": ..., "tau": ...} in the topology JSON form.
nlohmann::json pair_instance(const Topology& sigma, const Topology& tau);

/// With α = min_pi_basis_level(σ, τ): vacuous when α is absent or τ is not
/// semiregular, otherwise passes iff the slowest filtration has τ at stage α.
CheckReport check_theorem_stab2(const Topology& sigma, const Topology& tau);
CheckReport check_theorem_stab2(const HierarchySnapshot& sigma, const Topology& tau, const FiltrationSeq& slowest);

/// With α = min_sigma_pibasis_level(σ, τ): vacuous when α is absent or τ is
/// not π-semiregular, otherwise passes iff every nonempty τ-open set contains
/// a nonempty open set of ⋁_{ξ<α} (σ,τ)_ξ and one of (σ,τ)_{α-1}.
CheckReport check_theorem_stab3(const Topology& sigma, const Topology& tau);
CheckReport check_theorem_stab3(const HierarchySnapshot& sigma, const Topology& tau, const FiltrationSeq& slowest);

/// Hypotheses that counterexample search may drop.
enum class Hypothesis { none, semiregularity, pi_semiregularity, basis_level };

std::string_view hypothesis_name(Hypothesis h);
/// Throws InputError for unknown names.
Hypothesis parse_hypothesis(std::string_view name);

/// Evaluates the theorem conclusions that stay meaningful once `dropped` is
/// removed from the hypotheses.  Reports are vacuous where the remaining
/// hypotheses fail.
std::vector<CheckReport> probe_without(Hypothesis dropped, const HierarchySnapshot& sigma, const Topology& tau,
                                       const FiltrationSeq& slowest);

/// Every ⊆-chain (σ, ρ_1, ..., ρ_k) with k + 1 <= max_length stages, drawn from
/// `universe` and lying below τ.  Chains follow the order of `universe`.
std::vector<FiltrationSeq> chains_between(std::span<const Topology> universe, const Topology& sigma,
                                          const Topology& tau, std::size_t max_length);

/// One aggregated report per lemma (lemma_inclusions, lemma_slal, lemma_stab,
/// lemma_last) over every instance of the weak filtration `f` at the given ν.
/// Each report carries "checked" and "vacuous" instance counts.  Throws
/// PreconditionError when `f` is not a weak filtration.
std::vector<CheckReport> lemma_reports(const FiltrationSeq& f, std::uint64_t nu);

/// Stagewise (σ,τ)_ξ ⊆ f_ξ over the given filtrations, aggregated into one
/// report.  Non-filtrations are skipped and counted.
CheckReport check_slowest_minimality(const FiltrationSeq& slowest, std::span<const FiltrationSeq> candidates);

} // namespace filtra
