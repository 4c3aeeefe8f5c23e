#include "filtra/slight.hpp"

#include <string>

#include "filtra/baire.hpp"
#include "filtra/borel.hpp"
#include "filtra/json_io.hpp"

namespace filtra {
namespace {

constexpr int kMaxSlightGround = 12;

// least family ⊇ seed closed under subsets and unions of ≤ ν members
SetFamily ideal_closure(const SetFamily& seed, std::uint64_t nu)
{
    SetFamily fam = downward_closure(seed);
    for (;;) {
        SetFamily next = downward_closure(bounded_unions(fam, nu));
        if (next == fam) {
            return fam;
        }
        fam = std::move(next);
    }
}

// sets A with a cover by `stage`-open U such that A ∩ U ∈ minus
SetFamily locally(const SetFamily& minus, const Topology& stage)
{
    const GroundSet g = stage.ground();
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 0; m < g.subset_count(); ++m) {
        const PointSet a{m};
        bool covered = true;
        for (int x : a.points()) {
            bool found = false;
            for (PointSet u : stage.opens().sets()) {
                if (u.contains(x) && minus.contains(a & u)) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                covered = false;
                break;
            }
        }
        if (covered) {
            out.push_back(m);
        }
    }
    return make_sorted_family(g, std::move(out));
}

nlohmann::json lemma_instance(const char* lemma, std::size_t xi, PointSet a)
{
    return nlohmann::json{{"lemma", lemma}, {"xi", xi}, {"a", to_json(a)}};
}

} // namespace

SlightFamilies SlightFamilies::compute(const FiltrationSeq& f, std::uint64_t nu)
{
    if (nu == 0) {
        throw InputError("slight families need nu >= 1");
    }
    const GroundSet g = f.tau().ground();
    if (g.size() > kMaxSlightGround) {
        throw InputError("slight families are materialized only for n <= " + std::to_string(kMaxSlightGround));
    }
    if (!is_weak_filtration(f)) {
        throw PreconditionError("slight families require a weak filtration");
    }
    SlightFamilies s(f, nu);
    s.is_filtration_ = filtra::is_filtration(f);
    const std::size_t top = static_cast<std::size_t>(std::min<std::uint64_t>(nu, f.last_index()));

    s.minus_.push_back(SetFamily(g, {PointSet{}}));
    s.plus_.push_back(locally(s.minus_[0], f.stage(0)));
    for (std::size_t xi = 1; xi <= top; ++xi) {
        const Topology& stage = f.stage(xi);
        SetFamily gens(g);
        for (std::size_t gamma = 0; gamma < xi; ++gamma) {
            gens = gens.united(s.plus_[gamma]);
        }
        std::vector<std::uint64_t> thin;
        const SetFamily closed_sets = stage.closed_sets();
        for (PointSet closed : closed_sets.sets()) {
            if (f.tau().interior(closed).empty()) {
                thin.push_back(closed.bits());
            }
        }
        gens = gens.united(SetFamily(g, std::move(thin)));
        s.minus_.push_back(ideal_closure(gens, nu));
        s.plus_.push_back(locally(s.minus_.back(), stage));
    }
    s.p_levels_ = p_levels(f.sigma(), nu, top);
    return s;
}

void SlightFamilies::require_index(std::size_t xi) const
{
    if (xi > top()) {
        throw InputError("xi=" + std::to_string(xi) + " beyond computed slight families (top " +
                         std::to_string(top()) + ")");
    }
}

const SetFamily& SlightFamilies::minus(std::size_t xi) const
{
    require_index(xi);
    return minus_[xi];
}

const SetFamily& SlightFamilies::plus(std::size_t xi) const
{
    require_index(xi);
    return plus_[xi];
}

const SetFamily& SlightFamilies::p_level(std::size_t xi) const
{
    require_index(xi);
    return p_levels_[xi];
}

PointSet c_xi(const SlightFamilies& s, std::size_t xi, PointSet a)
{
    const Topology& stage = s.filtration().stage(xi);
    const SetFamily& minus = s.minus(xi);
    stage.ground().require(a);
    PointSet covered;
    for (PointSet u : stage.opens().sets()) {
        if (minus.contains(a & u)) {
            covered |= u;
        }
    }
    return stage.ground().complement(covered);
}

CheckReport verify_lemma_slal(const SlightFamilies& s, std::size_t xi, PointSet a)
{
    auto inst = lemma_instance("slal", xi, a);
    if (xi > s.top()) {
        return CheckReport::vacuous("lemma_slal", inst, "xi <= min(nu, m)");
    }
    if (!s.p_level(xi).contains(a)) {
        return CheckReport::vacuous("lemma_slal", inst, "A in P^nu_xi");
    }
    const PointSet f = c_xi(s, xi, a);
    const bool closed = s.filtration().stage(xi).is_closed(f);
    const bool outer = s.plus(xi).contains(a - f);
    const bool inner = s.minus(xi).contains(f - a);
    if (closed && outer && inner) {
        return CheckReport::passed("lemma_slal", inst);
    }
    return CheckReport::failed("lemma_slal", inst,
                               {{"F", to_json(f)},
                                {"F_closed", closed},
                                {"A_minus_F_plus_slight", outer},
                                {"F_minus_A_minus_slight", inner}});
}

CheckReport verify_lemma_stab(const SlightFamilies& s, std::size_t xi, PointSet a, PointSet b)
{
    auto inst = lemma_instance("stab", xi, a);
    inst["b"] = to_json(b);
    if (xi > s.top()) {
        return CheckReport::vacuous("lemma_stab", inst, "xi <= min(nu, m)");
    }
    if (!s.p_level(xi).contains(a)) {
        return CheckReport::vacuous("lemma_stab", inst, "A in P^nu_xi");
    }
    if (!b.subset_of(a)) {
        return CheckReport::vacuous("lemma_stab", inst, "B subset of A");
    }
    const Topology& stage = s.filtration().stage(xi);
    for (PointSet u : stage.opens().sets()) {
        const PointSet part = b & u;
        if (!part.empty() && s.plus(xi).contains(part)) {
            return CheckReport::vacuous("lemma_stab", inst, "B cap U not xi+-slight for each tau_xi-open U meeting B");
        }
    }
    const PointSet excess = stage.closure(b) - a;
    if (s.minus(xi).contains(excess)) {
        return CheckReport::passed("lemma_stab", inst);
    }
    return CheckReport::failed("lemma_stab", inst, {{"closure_minus_A", to_json(excess)}});
}

CheckReport verify_lemma_last(const SlightFamilies& s, std::size_t gamma, std::size_t beta, PointSet a, PointSet b)
{
    auto inst = lemma_instance("last", gamma, a);
    inst.erase("xi");
    inst["gamma"] = gamma;
    inst["beta"] = beta;
    inst["b"] = to_json(b);
    const FiltrationSeq& f = s.filtration();
    const Topology& tau = f.tau();
    if (!s.is_filtration()) {
        return CheckReport::vacuous("lemma_last", inst, "sequence is a filtration");
    }
    if (!(gamma < beta) || beta > s.top()) {
        return CheckReport::vacuous("lemma_last", inst, "gamma < beta <= min(nu, m)");
    }
    if (!s.p_level(gamma).contains(a)) {
        return CheckReport::vacuous("lemma_last", inst, "A in P^nu_gamma");
    }
    if (!tau.is_open(b)) {
        return CheckReport::vacuous("lemma_last", inst, "B tau-open");
    }
    if (!is_kappa_meager(tau, b - a)) {
        return CheckReport::vacuous("lemma_last", inst, "B minus A kappa-meager");
    }
    const PointSet v = f.stage(beta).interior(f.stage(gamma).closure(a & b));
    const bool covers = b.subset_of(v);
    const bool thin = is_kappa_meager(tau, v - a);
    if (covers && thin) {
        return CheckReport::passed("lemma_last", inst);
    }
    return CheckReport::failed("lemma_last", inst,
                               {{"V", to_json(v)}, {"B_subset_V", covers}, {"V_minus_A_meager", thin}});
}

CheckReport verify_slight_invariants(const SlightFamilies& s)
{
    const nlohmann::json inst{{"lemma", "inclusions"}, {"nu", s.nu()}, {"top", s.top()}};
    const Topology& tau = s.filtration().tau();
    const GroundSet g = tau.ground();
    auto fail = [&](std::string property, std::size_t xi, PointSet witness) {
        return CheckReport::failed("lemma_inclusions", inst,
                                   {{"property", std::move(property)}, {"xi", xi}, {"set", to_json(witness)}});
    };
    auto first_missing = [](const SetFamily& sub, const SetFamily& sup) {
        for (PointSet m : sub.sets()) {
            if (!sup.contains(m)) {
                return m;
            }
        }
        return PointSet{};
    };

    if (!(s.minus(0) == SetFamily(g, {PointSet{}}))) {
        return fail("only the empty set is 0-minus-slight", 0, PointSet{});
    }
    for (std::size_t xi = 0; xi <= s.top(); ++xi) {
        const SetFamily& minus = s.minus(xi);
        const SetFamily& plus = s.plus(xi);
        if (SetFamily down = downward_closure(minus); !(down == minus)) {
            return fail("minus family closed under subsets", xi, first_missing(down, minus));
        }
        if (SetFamily up = bounded_unions(minus, s.nu()); !(up == minus)) {
            return fail("minus family closed under unions of <= nu sets", xi, first_missing(up, minus));
        }
        for (std::size_t gamma = 0; gamma < xi; ++gamma) {
            const SetFamily lower = s.minus(gamma).united(s.plus(gamma));
            const SetFamily upper = minus.common(plus);
            if (!lower.is_subfamily_of(upper)) {
                return fail("gamma-slight sets are xi-slight (both kinds)", xi, first_missing(lower, upper));
            }
        }
        const SetFamily slight = minus.united(plus);
        for (PointSet m : slight.sets()) {
            if (!is_kappa_meager(tau, m)) {
                return fail("slight sets are meager", xi, m);
            }
        }
        const Topology& stage = s.filtration().stage(xi);
        for (std::uint64_t bits = 0; bits < g.subset_count(); ++bits) {
            const PointSet a{bits};
            const PointSet c = c_xi(s, xi, a);
            if (!stage.is_closed(c)) {
                return fail("c_xi(A) is tau_xi-closed", xi, a);
            }
            if (!plus.contains(a - c)) {
                return fail("A minus c_xi(A) is xi+-slight", xi, a);
            }
        }
    }
    return CheckReport::passed("lemma_inclusions", inst);
}

} // namespace filtra
