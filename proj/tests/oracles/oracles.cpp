#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

std::vector<Family> topologies_from_relations(int n)
{
    std::vector<std::pair<int, int>> off;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) {
                off.emplace_back(i, j);
            }
        }
    }
    std::vector<Family> out;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << off.size()); ++pick) {
        bool le[8][8] = {};
        for (int i = 0; i < n; ++i) {
            le[i][i] = true;
        }
        for (std::size_t k = 0; k < off.size(); ++k) {
            if ((pick >> k) & 1U) {
                le[off[k].first][off[k].second] = true;
            }
        }
        bool transitive = true;
        for (int i = 0; i < n && transitive; ++i) {
            for (int j = 0; j < n && transitive; ++j) {
                for (int k = 0; k < n && transitive; ++k) {
                    if (le[i][j] && le[j][k] && !le[i][k]) {
                        transitive = false;
                    }
                }
            }
        }
        if (!transitive) {
            continue;
        }
        // up-sets: x in U and x <= y imply y in U
        out.push_back(all_subsets(n, [&](Mask m) {
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    if (((m >> i) & 1U) && le[i][j] && !((m >> j) & 1U)) {
                        return false;
                    }
                }
            }
            return true;
        }));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Family> topologies_from_families(int n)
{
    // candidate members other than ∅ and X
    std::vector<Mask> middle;
    for (Mask m = 1; m < full(n); ++m) {
        middle.push_back(m);
    }
    std::vector<Family> out;
    if (n == 0) {
        return {Family{0}};
    }
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << middle.size()); ++pick) {
        Family fam{0, full(n)};
        for (std::size_t k = 0; k < middle.size(); ++k) {
            if ((pick >> k) & 1U) {
                fam.insert(middle[k]);
            }
        }
        bool closed = true;
        for (Mask a : fam) {
            for (Mask b : fam) {
                if (!fam.contains(a | b) || !fam.contains(a & b)) {
                    closed = false;
                }
            }
        }
        if (closed) {
            out.push_back(fam);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Family generated(int n, const Family& subbasis)
{
    Family fam = subbasis;
    fam.insert(0);
    fam.insert(full(n));
    for (bool grew = true; grew;) {
        grew = false;
        const Family snapshot = fam;
        for (Mask a : snapshot) {
            for (Mask b : snapshot) {
                grew |= fam.insert(a | b).second;
                grew |= fam.insert(a & b).second;
            }
        }
    }
    return fam;
}

Mask interior(const Family& opens, Mask a)
{
    Mask out = 0;
    for (Mask u : opens) {
        if ((u & ~a) == 0) {
            out |= u;
        }
    }
    return out;
}

Mask closure(int n, const Family& opens, Mask a)
{
    Mask out = full(n);
    for (Mask u : opens) {
        const Mask closed = full(n) & ~u;
        if ((a & ~closed) == 0) {
            out &= closed;
        }
    }
    return out;
}

bool nowhere_dense(int n, const Family& opens, Mask a)
{
    return interior(opens, closure(n, opens, a)) == 0;
}

bool baire_property(int n, const Family& opens, Mask a)
{
    const Family meager = all_subsets(n, [&](Mask m) { return nowhere_dense(n, opens, m); });
    for (Mask u : opens) {
        for (Mask m1 : meager) {
            for (Mask m2 : meager) {
                if (((u & ~m1) | m2) == a) {
                    return true;
                }
            }
        }
    }
    return false;
}

namespace {

// all results of folding `op` over nonempty subfamilies of `src` of size <= nu
Family bounded(const std::vector<Mask>& src, unsigned nu, const std::function<Mask(Mask, Mask)>& op)
{
    Family out;
    std::vector<std::size_t> idx;
    std::function<void(std::size_t, Mask)> go = [&](std::size_t start, Mask acc) {
        if (!idx.empty()) {
            out.insert(acc);
        }
        if (idx.size() == nu) {
            return;
        }
        for (std::size_t i = start; i < src.size(); ++i) {
            idx.push_back(i);
            go(i + 1, idx.size() == 1 ? src[i] : op(acc, src[i]));
            idx.pop_back();
        }
    };
    go(0, 0);
    return out;
}

std::vector<Family> levels(int n, const Family& level0, unsigned nu, unsigned xi_max,
                           const std::function<Mask(Mask, Mask)>& op)
{
    std::vector<Family> out{level0};
    for (unsigned xi = 1; xi <= xi_max; ++xi) {
        std::vector<Mask> comps;
        for (const Family& f : out) {
            for (Mask m : f) {
                comps.push_back(full(n) & ~m);
            }
        }
        std::sort(comps.begin(), comps.end());
        comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
        out.push_back(bounded(comps, nu, op));
    }
    return out;
}

} // namespace

std::vector<Family> p_levels(int n, const Family& opens, unsigned nu, unsigned xi_max)
{
    Family closed;
    for (Mask u : opens) {
        closed.insert(full(n) & ~u);
    }
    return levels(n, closed, nu, xi_max, [](Mask a, Mask b) { return a & b; });
}

std::vector<Family> s_levels(int n, const Family& opens, unsigned nu, unsigned xi_max)
{
    return levels(n, opens, nu, xi_max, [](Mask a, Mask b) { return a | b; });
}

Family algebra(int n, const Family& opens)
{
    std::vector<Mask> atoms;
    Mask seen = 0;
    for (int x = 0; x < n; ++x) {
        if ((seen >> x) & 1U) {
            continue;
        }
        Mask atom = 0;
        for (int y = 0; y < n; ++y) {
            bool same = true;
            for (Mask u : opens) {
                same = same && (((u >> x) & 1U) == ((u >> y) & 1U));
            }
            if (same) {
                atom |= Mask{1} << y;
            }
        }
        seen |= atom;
        atoms.push_back(atom);
    }
    Family out;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << atoms.size()); ++pick) {
        Mask m = 0;
        for (std::size_t k = 0; k < atoms.size(); ++k) {
            if ((pick >> k) & 1U) {
                m |= atoms[k];
            }
        }
        out.insert(m);
    }
    return out;
}

Slight slight(int n, const std::vector<Family>& stages, const Family& tau, unsigned nu, unsigned top)
{
    auto locally = [&](const Family& minus, const Family& stage) {
        return all_subsets(n, [&](Mask a) {
            for (int x = 0; x < n; ++x) {
                if (!((a >> x) & 1U)) {
                    continue;
                }
                bool found = false;
                for (Mask u : stage) {
                    found = found || (((u >> x) & 1U) && minus.contains(a & u));
                }
                if (!found) {
                    return false;
                }
            }
            return true;
        });
    };
    Slight s;
    s.minus.push_back(Family{0});
    s.plus.push_back(locally(s.minus[0], stages[0]));
    for (unsigned xi = 1; xi <= top; ++xi) {
        const Family& stage = stages[std::min<std::size_t>(xi, stages.size() - 1)];
        Family fam;
        for (unsigned g = 0; g < xi; ++g) {
            fam.insert(s.plus[g].begin(), s.plus[g].end());
        }
        for (Mask u : stage) {
            const Mask closed = full(n) & ~u;
            if (interior(tau, closed) == 0) {
                fam.insert(closed);
            }
        }
        fam.insert(0);
        for (bool grew = true; grew;) {
            grew = false;
            const std::vector<Mask> snapshot(fam.begin(), fam.end());
            for (Mask m : bounded(snapshot, nu, [](Mask a, Mask b) { return a | b; })) {
                grew |= fam.insert(m).second;
            }
            for (Mask m : snapshot) {
                for (Mask sub = m;; sub = (sub - 1) & m) {
                    grew |= fam.insert(sub).second;
                    if (sub == 0) {
                        break;
                    }
                }
            }
        }
        s.minus.push_back(fam);
        s.plus.push_back(locally(fam, stage));
    }
    return s;
}

} // namespace oracle
