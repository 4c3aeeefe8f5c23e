#pragma once

#include <cstdint>
#include <vector>

#include "filtra/filtration.hpp"
#include "filtra/report.hpp"
#include "filtra/set_family.hpp"

namespace filtra {

/// ξ₋-slight and ξ₊-slight families of a weak filtration for a fixed finite ν,
/// for 0 ≤ ξ ≤ min(ν, m).
///
/// minus(0) = {∅}.  For ξ > 0, minus(ξ) is the least family closed under
/// subsets and unions of ≤ ν members that contains plus(γ) for γ < ξ and the
/// τ_ξ-closed sets with empty τ-interior.  plus(ξ) holds the sets covered by
/// τ_ξ-open U with A ∩ U in minus(ξ).
class SlightFamilies {
public:
    /// Throws InputError for ν = 0 or n > 12, PreconditionError when `f` is
    /// not a weak filtration.
    static SlightFamilies compute(const FiltrationSeq& f, std::uint64_t nu);

    const FiltrationSeq& filtration() const { return filtration_; }
    std::uint64_t nu() const { return nu_; }
    /// Largest ξ with families: min(ν, m).
    std::size_t top() const { return minus_.size() - 1; }
    const SetFamily& minus(std::size_t xi) const;
    const SetFamily& plus(std::size_t xi) const;
    /// P^ν_ξ over σ, for ξ ≤ top().
    const SetFamily& p_level(std::size_t xi) const;
    bool is_filtration() const { return is_filtration_; }

private:
    SlightFamilies(FiltrationSeq f, std::uint64_t nu) : filtration_(std::move(f)), nu_(nu) {}
    void require_index(std::size_t xi) const;

    FiltrationSeq filtration_;
    std::uint64_t nu_;
    std::vector<SetFamily> minus_;
    std::vector<SetFamily> plus_;
    std::vector<SetFamily> p_levels_;
    bool is_filtration_ = false;
};

inline SlightFamilies compute_slight(const FiltrationSeq& f, std::uint64_t nu)
{
    return SlightFamilies::compute(f, nu);
}

/// X ∖ ⋃{U : U τ_ξ-open, A ∩ U ξ₋-slight}.
PointSet c_xi(const SlightFamilies& s, std::size_t xi, PointSet a);

/// A ∈ P^ν_ξ ⇒ F = c_ξ(A) is τ_ξ-closed, A ∖ F is ξ₊-slight, F ∖ A is ξ₋-slight.
CheckReport verify_lemma_slal(const SlightFamilies& s, std::size_t xi, PointSet a);
/// A ∈ P^ν_ξ, B ⊆ A, B ∩ U not ξ₊-slight for every τ_ξ-open U meeting B
/// ⇒ cl_{τ_ξ}(B) ∖ A is ξ₋-slight.
CheckReport verify_lemma_stab(const SlightFamilies& s, std::size_t xi, PointSet a, PointSet b);
/// For a filtration, γ < β ≤ min(ν, m), A ∈ P^ν_γ, B τ-open with B ∖ A
/// meager: V = int_{τ_β}(cl_{τ_γ}(A ∩ B)) satisfies B ⊆ V and V ∖ A meager.
CheckReport verify_lemma_last(const SlightFamilies& s, std::size_t gamma, std::size_t beta, PointSet a, PointSet b);
/// Monotonicity in ξ, meagerness of slight sets, and the closure properties
/// the definitions promise.
CheckReport verify_slight_invariants(const SlightFamilies& s);

} // namespace filtra
