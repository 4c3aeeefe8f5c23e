#include <doctest.h>

#include <filtra/baire.hpp>
#include <filtra/checks.hpp>
#include <filtra/slight.hpp>

#include "helpers.hpp"

using namespace filtra;
using testing::ps;

namespace {

const Topology S = Topology::sierpinski();
const Topology D = Topology::discrete(2);
const Topology I = Topology::indiscrete(2);

oracle::Slight reference(const FiltrationSeq& f, unsigned nu, unsigned top)
{
    std::vector<oracle::Family> stages;
    for (const Topology& t : f.stages()) {
        stages.push_back(testing::opens(t));
    }
    return oracle::slight(f.tau().ground().size(), stages, testing::opens(f.tau()), nu, top);
}

} // namespace

TEST_CASE("families on the Sierpinski to discrete filtration")
{
    const auto s = compute_slight(slowest_filtration(S, D), 2);
    CHECK(s.top() == 1);
    CHECK(s.minus(0) == SetFamily(GroundSet{2}, {0}));
    // {1} is τ_1-closed but τ-open, so nothing puts it into minus(1)
    CHECK_FALSE(s.minus(1).contains(ps(2)));
    CHECK(s.minus(1) == SetFamily(GroundSet{2}, {0}));
    CHECK(s.plus(1) == SetFamily(GroundSet{2}, {0}));
    CHECK(s.is_filtration());
    CHECK(c_xi(s, 0, ps(2)) == ps(2));
    CHECK(c_xi(s, 1, ps(0)) == ps(0));
    CHECK(c_xi(s, 1, ps(3)) == ps(3));
}

TEST_CASE("a filtration with nontrivial slight sets")
{
    // σ = indiscrete on 2 points, τ = Sierpinski: {1} is τ-nowhere dense
    const FiltrationSeq f = FiltrationSeq::trivial(I, S, 3);
    const auto s = compute_slight(f, 2);
    CHECK(s.top() == 2);
    CHECK(s.minus(1).contains(ps(2)));
    CHECK(s.plus(1).contains(ps(2)));
    CHECK_FALSE(s.minus(2).contains(ps(1)));
    const auto ref = reference(f, 2, 2);
    for (std::size_t xi = 0; xi <= 2; ++xi) {
        CHECK(testing::fam(s.minus(xi)) == ref.minus[xi]);
        CHECK(testing::fam(s.plus(xi)) == ref.plus[xi]);
    }
}

TEST_CASE("input checking")
{
    const auto f = slowest_filtration(S, D);
    CHECK_THROWS_AS(compute_slight(f, 0), InputError);
    CHECK_THROWS_AS(compute_slight(FiltrationSeq(S, D, {S, S}), 2), PreconditionError);
    const Topology big = Topology::discrete(13);
    CHECK_THROWS_AS(compute_slight(FiltrationSeq(big, big, {big}), 2), InputError);
    const auto s = compute_slight(f, 2);
    CHECK_THROWS_AS(s.minus(2), InputError);
    CHECK_THROWS_AS(c_xi(s, 0, ps(4)), InputError);
}

TEST_CASE("lemma verifier examples")
{
    const auto s = compute_slight(slowest_filtration(S, D), 2);
    CHECK(verify_lemma_slal(s, 0, ps(2)).verdict() == Verdict::pass);
    const auto not_in_level = verify_lemma_slal(s, 0, ps(1));
    CHECK(not_in_level.verdict() == Verdict::vacuous);
    CHECK_FALSE(not_in_level.hypothesis().empty());
    CHECK(verify_lemma_stab(s, 0, ps(2), ps(0)).verdict() == Verdict::pass);
    CHECK(verify_lemma_stab(s, 0, ps(2), ps(1)).verdict() == Verdict::vacuous);
    CHECK(verify_lemma_last(s, 0, 1, ps(2), ps(2)).verdict() == Verdict::pass);
    CHECK(verify_lemma_last(s, 0, 1, ps(2), ps(0)).verdict() == Verdict::pass);
    CHECK(verify_lemma_last(s, 1, 1, ps(2), ps(2)).verdict() == Verdict::vacuous);
    CHECK(verify_slight_invariants(s).verdict() == Verdict::pass);

    const auto weak_only = compute_slight(FiltrationSeq::trivial(I, S, 2), 2);
    CHECK(weak_only.is_filtration());
}

TEST_CASE("families match the naive fixpoint on every weak chain with n <= 3")
{
    std::size_t compared = 0;
    for (int n = 0; n <= 3; ++n) {
        const auto& all = testing::all_topologies(n);
        for (const Topology& tau : all) {
            for (const Topology& sigma : all) {
                if (!sigma.is_coarser_than(tau)) {
                    continue;
                }
                for (const FiltrationSeq& f : chains_between(all, sigma, tau, 3)) {
                    if (!is_weak_filtration(f)) {
                        CHECK_THROWS_AS(compute_slight(f, 2), PreconditionError);
                        continue;
                    }
                    for (unsigned nu : {1U, 2U, 3U}) {
                        const auto s = compute_slight(f, nu);
                        const auto ref = reference(f, nu, static_cast<unsigned>(s.top()));
                        for (std::size_t xi = 0; xi <= s.top(); ++xi) {
                            REQUIRE(testing::fam(s.minus(xi)) == ref.minus[xi]);
                            REQUIRE(testing::fam(s.plus(xi)) == ref.plus[xi]);
                            for (PointSet m : s.minus(xi).sets()) {
                                CHECK(is_kappa_meager(tau, m));
                            }
                        }
                        CHECK(verify_slight_invariants(s).verdict() == Verdict::pass);
                        ++compared;
                    }
                }
            }
        }
    }
    CHECK(compared > 1000);
}
