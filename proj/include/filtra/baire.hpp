#pragma once

#include <string>

#include "filtra/point_set.hpp"
#include "filtra/topology.hpp"

namespace filtra {

/// The infinite cardinal κ, written ℵ_index (ℵ_0 = ω).
///
/// On a finite ground set every union of nowhere dense sets is a finite union,
/// so every admissible κ induces the same meager ideal.  The parameter is
/// carried through the API but does not change any result.
class Kappa {
public:
    static constexpr Kappa omega() { return Kappa{0}; }
    static constexpr Kappa aleph(unsigned index) { return Kappa{index}; }

    constexpr unsigned aleph_index() const { return index_; }
    std::string name() const { return index_ == 0 ? "omega" : "aleph_" + std::to_string(index_); }

    constexpr bool operator==(const Kappa&) const = default;

private:
    constexpr explicit Kappa(unsigned index) : index_(index) {}
    unsigned index_;
};

bool is_nowhere_dense(const Topology& t, PointSet a);
bool is_kappa_meager(const Topology& t, PointSet a, Kappa k = Kappa::omega());
/// The union of all κ-meager sets; on a finite space it is itself meager, so
/// the meager sets are exactly its subsets.
PointSet largest_meager_set(const Topology& t, Kappa k = Kappa::omega());
/// Complement of every κ-meager set is dense.
bool is_kappa_baire(const Topology& t, Kappa k = Kappa::omega());
/// a = (U ∖ M1) ∪ M2 for some open U and κ-meager M1, M2.
bool has_kappa_baire_property(const Topology& t, PointSet a, Kappa k = Kappa::omega());

} // namespace filtra
