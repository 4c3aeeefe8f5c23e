#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "filtra/topology.hpp"

namespace filtra {

/// A finite ordinal α ≥ 1, or the symbolic limit stage ω.
class OrdinalPlus {
public:
    static OrdinalPlus finite(std::uint64_t value);
    static OrdinalPlus omega() { return OrdinalPlus{0}; }

    bool is_omega() const { return value_ == 0; }
    /// Throws InputError for ω.
    std::uint64_t value() const;
    /// α⊕1: α+1 for finite (successor) α, ω for ω.
    OrdinalPlus oplus_one() const;
    std::string to_string() const;

    bool operator==(const OrdinalPlus&) const = default;

private:
    explicit OrdinalPlus(std::uint64_t v) : value_(v) {}
    std::uint64_t value_; // 0 encodes ω
};

/// The first m+1 stages τ_0 = σ ⊆ τ_1 ⊆ ... ⊆ τ_m ⊆ τ of a sequence of
/// topologies.
class FiltrationSeq {
public:
    /// Throws InputError naming the first stage that breaks the chain
    /// conditions.
    FiltrationSeq(Topology sigma, Topology tau, std::vector<Topology> stages);

    /// (σ, τ, τ, ...) with `length` stages.
    static FiltrationSeq trivial(const Topology& sigma, const Topology& tau, std::size_t length);

    const Topology& sigma() const { return stages_.front(); }
    const Topology& tau() const { return tau_; }
    std::span<const Topology> stages() const { return stages_; }
    /// m + 1.
    std::size_t length() const { return stages_.size(); }
    std::size_t last_index() const { return stages_.size() - 1; }

    /// True when every stage past the last stored one equals it (set by
    /// slowest_filtration once it reaches a fixpoint or τ).
    bool stationary_tail() const { return stationary_tail_; }
    /// τ_ξ; past the stored stages only when stationary_tail() holds.
    const Topology& stage(std::size_t xi) const;

    /// Extends to `length` stages by τ_ξ = τ for the new indices.
    FiltrationSeq padded(std::size_t length) const;

private:
    friend FiltrationSeq slowest_filtration(const Topology&, const Topology&);

    Topology tau_;
    std::vector<Topology> stages_;
    bool stationary_tail_ = false;
};

/// A closed set F of some stage ξ < α whose τ_α-interior is computed wrongly.
struct FiltrationViolation {
    std::size_t alpha;
    std::size_t xi;
    PointSet closed_set;
};

/// First violation of int_{τ_α}(F) = int_τ(F) (or, when `weak`, of
/// int_{τ_α}(F) being τ-dense in int_τ(F)).
std::optional<FiltrationViolation> find_filtration_violation(const FiltrationSeq& f, bool weak);
bool is_filtration(const FiltrationSeq& f);
bool is_weak_filtration(const FiltrationSeq& f);

/// Topology generated by U ∩ int_τ(F) with U open and F closed in some stage
/// of `prefix`.  Applied to (σ,τ)_0..(σ,τ)_{ξ-1} it yields (σ,τ)_ξ.
Topology slowest_successor(const Topology& tau, std::span<const Topology> prefix);

/// (σ,τ)_0, (σ,τ)_1, ... up to the first stage equal to τ or equal to its
/// predecessor; the result has a stationary tail.
FiltrationSeq slowest_filtration(const Topology& sigma, const Topology& tau);

/// ⋁_{ξ<α} τ_ξ.  Finite α must satisfy α ≤ m+1; ω joins all stored stages.
Topology join_prefix(const FiltrationSeq& f, OrdinalPlus alpha);

/// Least ξ with τ_ξ = τ, nullopt when no stored stage equals τ.
std::optional<std::size_t> stabilization_ordinal(const FiltrationSeq& f);

} // namespace filtra
