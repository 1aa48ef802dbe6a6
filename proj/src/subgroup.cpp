#include "cgt/subgroup.hpp"

#include <algorithm>
#include <random>

#include "cgt/errors.hpp"

namespace cgt {

using Index = Subgroup::Index;

namespace {

constexpr Index kOutside = UINT32_MAX;

Subgroup make_subgroup(const EnumeratedGroup& g, std::vector<Index> members,
                       std::vector<Index> gens) {
    Subgroup s;
    s.parent = g;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    s.mask.assign(g.order(), 0);
    for (Index m : members) s.mask[m] = 1;
    s.members = std::move(members);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (!gens.empty() && gens.front() == 0) gens.erase(gens.begin());
    s.generators = std::move(gens);
    return s;
}

// BFS closure of {identity} u seed under right multiplication by the seed.
// Returns false (leaving `out` unspecified) once more than `bound` elements
// appear.
bool close_into(const EnumeratedGroup& g, const std::vector<Index>& seed,
                std::uint64_t bound, std::vector<Index>& out, std::vector<char>& mask) {
    mask.assign(g.order(), 0);
    out.clear();
    out.push_back(0);
    mask[0] = 1;
    for (std::size_t head = 0; head < out.size(); ++head) {
        const Index x = out[head];
        for (Index t : seed) {
            const Index y = g.mult(x, t);
            if (!mask[y]) {
                mask[y] = 1;
                out.push_back(y);
                if (out.size() > bound) return false;
            }
        }
    }
    return true;
}

std::vector<Index> greedy_subgroup_gens(const EnumeratedGroup& g,
                                        const std::vector<Index>& members) {
    std::vector<Index> gens;
    std::vector<Index> reached{0};
    std::vector<char> mask;
    mask.assign(g.order(), 0);
    mask[0] = 1;
    for (Index m : members) {
        if (mask[m]) continue;
        gens.push_back(m);
        close_into(g, gens, g.order(), reached, mask);
    }
    return gens;
}

} // namespace

Subgroup full_group(const EnumeratedGroup& g) {
    std::vector<Index> members(g.order());
    for (Index i = 0; i < g.order(); ++i) members[i] = i;
    std::vector<Index> gens = g.generators();
    if (gens.empty() && g.order() > 1) gens = greedy_subgroup_gens(g, members);
    return make_subgroup(g, std::move(members), std::move(gens));
}

Subgroup trivial_subgroup(const EnumeratedGroup& g) {
    return make_subgroup(g, {0}, {});
}

Subgroup subgroup_from_members(const EnumeratedGroup& g, std::vector<Index> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::vector<Index> gens = greedy_subgroup_gens(g, members);
    return make_subgroup(g, std::move(members), std::move(gens));
}

Subgroup subgroup_closure(const EnumeratedGroup& g, const std::vector<Index>& seed) {
    std::vector<Index> out;
    std::vector<char> mask;
    close_into(g, seed, g.order(), out, mask);
    std::vector<Index> gens = seed;
    return make_subgroup(g, std::move(out), std::move(gens));
}

std::optional<Subgroup> subgroup_closure_bounded(const EnumeratedGroup& g,
                                                 const std::vector<Index>& seed,
                                                 std::uint64_t bound) {
    std::vector<Index> out;
    std::vector<char> mask;
    if (!close_into(g, seed, bound, out, mask)) return std::nullopt;
    return make_subgroup(g, std::move(out), seed);
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
    const Subgroup& small = a.order() <= b.order() ? a : b;
    const Subgroup& big = a.order() <= b.order() ? b : a;
    std::vector<Index> members;
    for (Index m : small.members)
        if (big.contains(m)) members.push_back(m);
    return subgroup_from_members(a.parent, std::move(members));
}

Subgroup centralizer(const EnumeratedGroup& g, Index x, const Subgroup* within) {
    return centralizer_of_set(g, {x}, within);
}

Subgroup centralizer_of_set(const EnumeratedGroup& g, const std::vector<Index>& xs,
                            const Subgroup* within) {
    std::vector<Index> members;
    auto commutes_with_all = [&](Index h) {
        for (Index x : xs)
            if (g.mult(h, x) != g.mult(x, h)) return false;
        return true;
    };
    if (within) {
        for (Index h : within->members)
            if (commutes_with_all(h)) members.push_back(h);
    } else {
        for (Index h = 0; h < g.order(); ++h)
            if (commutes_with_all(h)) members.push_back(h);
    }
    return subgroup_from_members(g, std::move(members));
}

Subgroup center(const EnumeratedGroup& g) {
    return centralizer_of_set(g, g.generators(), nullptr);
}

Subgroup normal_closure(const EnumeratedGroup& g, const std::vector<Index>& seed,
                        const Subgroup* within) {
    const std::vector<Index>& ag = within ? within->generators : g.generators();
    std::vector<Index> w;
    for (Index s : seed)
        if (s != 0) w.push_back(s);
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    if (w.empty()) return trivial_subgroup(g);

    std::vector<Index> out;
    std::vector<char> mask;
    close_into(g, w, g.order(), out, mask);
    for (;;) {
        std::vector<Index> add;
        for (Index x : w)
            for (Index t : ag) {
                const Index c = g.conjugate(x, t);
                if (!mask[c]) {
                    mask[c] = 1; // reuse as "queued" to dedup within the round
                    add.push_back(c);
                }
            }
        if (add.empty()) break;
        w.insert(w.end(), add.begin(), add.end());
        close_into(g, w, g.order(), out, mask);
    }
    return make_subgroup(g, std::move(out), std::move(w));
}

Subgroup derived_subgroup(const EnumeratedGroup& g, const Subgroup* within) {
    const std::vector<Index>& gens = within ? within->generators : g.generators();
    std::vector<Index> seed;
    for (Index a : gens)
        for (Index b : gens)
            seed.push_back(g.commutator(a, b));
    return normal_closure(g, seed, within);
}

Subgroup commutator_of_pair(const EnumeratedGroup& g, const Subgroup& a, const Subgroup& b) {
    std::vector<Index> seed;
    for (Index x : a.members)
        for (Index y : b.members) {
            const Index c = g.commutator(x, y);
            if (c != 0) seed.push_back(c);
        }
    return subgroup_closure(g, seed);
}

bool is_normal_in(const EnumeratedGroup& g, const Subgroup& h, const Subgroup* ambient) {
    const std::vector<Index>& ag = ambient ? ambient->generators : g.generators();
    for (Index t : ag)
        for (Index x : h.generators)
            if (!h.contains(g.conjugate(x, t))) return false;
    return true;
}

bool is_abelian_subgroup(const EnumeratedGroup& g, const Subgroup& h) {
    for (Index a : h.generators)
        for (Index b : h.generators)
            if (g.mult(a, b) != g.mult(b, a)) return false;
    return true;
}

bool is_cyclic_subgroup(const EnumeratedGroup& g, const Subgroup& h) {
    for (Index m : h.members)
        if (g.element_order(m) == h.order()) return true;
    return false;
}

Subgroup conjugate_subgroup(const EnumeratedGroup& g, const Subgroup& h, Index t) {
    std::vector<Index> members;
    members.reserve(h.members.size());
    for (Index m : h.members) members.push_back(g.conjugate(m, t));
    std::vector<Index> gens;
    for (Index x : h.generators) gens.push_back(g.conjugate(x, t));
    return make_subgroup(g, std::move(members), std::move(gens));
}

std::uint64_t product_set_size(const Subgroup& a, const Subgroup& b) {
    const Subgroup& small = a.order() <= b.order() ? a : b;
    const Subgroup& big = a.order() <= b.order() ? b : a;
    std::uint64_t common = 0;
    for (Index m : small.members)
        if (big.contains(m)) ++common;
    return std::uint64_t(a.order()) * b.order() / common;
}

namespace {

struct QuotState {
    EnumeratedGroup parent;
    std::vector<Index> reps;
    std::vector<Index> proj; // parent canonical -> coset number
};

} // namespace

QuotientResult quotient_group(const EnumeratedGroup& g, const Subgroup& n) {
    for (Index t : g.generators())
        for (Index x : n.members)
            if (!n.contains(g.conjugate(x, t)))
                throw NotNormal("subgroup of order " + std::to_string(n.order()) +
                                " is not normal in group of order " + std::to_string(g.order()));

    auto st = std::make_shared<QuotState>();
    st->parent = g;
    st->proj.assign(g.order(), kOutside);
    for (Index x = 0; x < g.order(); ++x) {
        if (st->proj[x] != kOutside) continue;
        const Index r = Index(st->reps.size());
        st->reps.push_back(x);
        for (Index m : n.members) st->proj[g.mult(x, m)] = r;
    }

    const Index q = Index(st->reps.size());
    std::vector<Index> raw_gens;
    for (Index t : g.generators()) raw_gens.push_back(st->proj[t]);
    const QuotState* sp = st.get();
    EnumeratedGroup quot = EnumeratedGroup::from_callable(
        q,
        [sp](Index i, Index j) {
            return sp->proj[sp->parent.mult(sp->reps[i], sp->reps[j])];
        },
        0, std::move(raw_gens), st);

    QuotientResult res;
    res.projection.resize(g.order());
    for (Index x = 0; x < g.order(); ++x)
        res.projection[x] = quot.canonical_index(st->proj[x]);
    res.group = quot;

    std::vector<Index> kernel;
    for (Index x = 0; x < g.order(); ++x)
        if (res.projection[x] == 0) kernel.push_back(x);
    if (kernel != n.members)
        throw InternalCheckFailed("quotient kernel differs from the given normal subgroup");
    std::mt19937 rng(777);
    for (int i = 0; i < 64; ++i) {
        const Index a = Index(rng() % g.order());
        const Index b = Index(rng() % g.order());
        if (res.projection[g.mult(a, b)] != quot.mult(res.projection[a], res.projection[b]))
            throw InternalCheckFailed("coset projection is not multiplicative");
    }
    return res;
}

namespace {

struct MatState {
    EnumeratedGroup parent;
    std::vector<Index> members;
    std::vector<Index> from_parent;
};

} // namespace

MaterializedSubgroup materialize(const Subgroup& h) {
    auto st = std::make_shared<MatState>();
    st->parent = h.parent;
    st->members = h.members;
    st->from_parent.assign(h.parent.order(), kOutside);
    for (Index i = 0; i < h.order(); ++i) st->from_parent[h.members[i]] = i;

    std::vector<Index> raw_gens;
    for (Index x : h.generators) raw_gens.push_back(st->from_parent[x]);
    const MatState* sp = st.get();
    EnumeratedGroup grp = EnumeratedGroup::from_callable(
        h.order(),
        [sp](Index i, Index j) {
            return sp->from_parent[sp->parent.mult(sp->members[i], sp->members[j])];
        },
        0, std::move(raw_gens), st);

    MaterializedSubgroup res;
    res.to_parent.resize(grp.order());
    res.from_parent.assign(h.parent.order(), kOutside);
    for (Index c = 0; c < grp.order(); ++c) {
        const Index p = h.members[grp.raw_index(c)];
        res.to_parent[c] = p;
        res.from_parent[p] = c;
    }
    res.group = grp;
    return res;
}

} // namespace cgt
