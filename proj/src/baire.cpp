#include "filtra/baire.hpp"

namespace filtra {

bool is_nowhere_dense(const Topology& t, PointSet a)
{
    return t.interior(t.closure(a)).empty();
}

bool is_kappa_meager(const Topology& t, PointSet a, Kappa)
{
    // finite unions of nowhere dense sets are nowhere dense
    return is_nowhere_dense(t, a);
}

PointSet largest_meager_set(const Topology& t, Kappa k)
{
    PointSet m;
    for (int x = 0; x < t.ground().size(); ++x) {
        if (is_kappa_meager(t, PointSet::singleton(x), k)) {
            m |= PointSet::singleton(x);
        }
    }
    return m;
}

bool is_kappa_baire(const Topology& t, Kappa k)
{
    // closure is monotone, so the largest meager set is the only one to test
    const GroundSet g = t.ground();
    return t.closure(g.complement(largest_meager_set(t, k))) == g.full();
}

bool has_kappa_baire_property(const Topology& t, PointSet a, Kappa k)
{
    t.ground().require(a);
    // with U fixed the meager parts are forced: M2 = a ∖ U and M1 = U ∖ a
    for (PointSet u : t.opens().sets()) {
        if (is_kappa_meager(t, a - u, k) && is_kappa_meager(t, u - a, k)) {
            return true;
        }
    }
    return false;
}

} // namespace filtra
