#include "cgt/algebra.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "cgt/errors.hpp"
#include "cgt/numutil.hpp"

namespace cgt {

using Index = Subgroup::Index;

namespace {

bool is_pure_power_of(std::uint64_t value, std::uint64_t p) {
    while (value % p == 0) value /= p;
    return value == 1;
}

bool normalizes(const EnumeratedGroup& g, const Subgroup& s, Index x) {
    for (Index t : s.generators)
        if (!s.contains(g.conjugate(t, x))) return false;
    return true;
}

std::vector<Index> with_extra(const std::vector<Index>& gens, Index y) {
    std::vector<Index> out = gens;
    out.push_back(y);
    return out;
}

} // namespace

Subgroup sylow_subgroup(const EnumeratedGroup& g, std::uint64_t p, const Subgroup* within) {
    const std::uint64_t ho = within ? within->order() : g.order();
    const std::uint64_t target = p_part(ho, p);
    if (target == 1) return trivial_subgroup(g);

    std::vector<Index> pe;
    auto consider = [&](Index x) {
        if (x != 0 && is_pure_power_of(g.element_order(x), p)) pe.push_back(x);
    };
    if (within)
        for (Index x : within->members) consider(x);
    else
        for (Index x = 0; x < g.order(); ++x) consider(x);

    Subgroup p_sub = trivial_subgroup(g);
    while (p_sub.order() < target) {
        Index found = UINT32_MAX;
        for (Index x : pe)
            if (!p_sub.contains(x) && normalizes(g, p_sub, x)) {
                found = x;
                break;
            }
        if (found == UINT32_MAX)
            throw InternalCheckFailed("p-subgroup ascent stalled below the full p-part");
        p_sub = subgroup_closure(g, with_extra(p_sub.generators, found));
    }
    return p_sub;
}

namespace {

std::vector<std::uint64_t> effective_primes(std::uint64_t order,
                                            const std::vector<std::uint64_t>& pi) {
    std::vector<std::uint64_t> eff;
    for (std::uint64_t p : pi)
        if (order % p == 0) eff.push_back(p);
    std::sort(eff.begin(), eff.end());
    eff.erase(std::unique(eff.begin(), eff.end()), eff.end());
    return eff;
}

} // namespace

std::optional<Subgroup> try_hall_subgroup(const EnumeratedGroup& g,
                                          const std::vector<std::uint64_t>& pi,
                                          std::uint64_t seed, const Subgroup* within) {
    const std::uint64_t ho = within ? within->order() : g.order();
    const std::vector<std::uint64_t> eff = effective_primes(ho, pi);
    const std::uint64_t target = pi_part(ho, eff);
    if (target == 1) return trivial_subgroup(g);
    if (target == ho) return within ? *within : full_group(g);
    if (eff.size() == 1) return sylow_subgroup(g, eff[0], within);

    auto is_pi_order = [&](std::uint64_t o) {
        for (std::uint64_t p : eff)
            while (o % p == 0) o /= p;
        return o == 1;
    };
    std::vector<Index> pe;
    auto consider = [&](Index x) {
        if (x != 0 && is_pi_order(g.element_order(x))) pe.push_back(x);
    };
    if (within)
        for (Index x : within->members) consider(x);
    else
        for (Index x = 0; x < g.order(); ++x) consider(x);
    if (pe.size() + 1 < target) return std::nullopt;

    auto admissible = [&](const Subgroup& s) { return target % s.order() == 0; };

    // Randomized starts, each followed by a deterministic greedy ascent that
    // prefers candidates normalizing the current subgroup.
    std::uint64_t mixed = seed * 0x9E3779B97F4A7C15ull + 0x2545F4914F6CDD1Dull;
    for (std::uint64_t p : eff) mixed = mixed * 1000003ull + p;
    std::mt19937_64 rng(mixed);

    const int kAttempts = 200;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        std::vector<Index> start;
        const int picks = 1 + (attempt % 2);
        for (int i = 0; i < picks; ++i) start.push_back(pe[rng() % pe.size()]);
        auto cur = subgroup_closure_bounded(g, start, target);
        if (!cur || !admissible(*cur)) continue;
        bool improved = true;
        while (improved && cur->order() < target) {
            improved = false;
            for (int pass = 0; pass < 2 && !improved; ++pass)
                for (Index y : pe) {
                    if (cur->contains(y)) continue;
                    if (pass == 0 && !normalizes(g, *cur, y)) continue;
                    auto ext = subgroup_closure_bounded(g, with_extra(cur->generators, y), target);
                    if (ext && admissible(*ext) && ext->order() > cur->order()) {
                        cur = ext;
                        improved = true;
                        break;
                    }
                }
        }
        if (cur->order() == target) return cur;
    }

    // Exhaustive sweep over small generating tuples, small groups only.
    if (ho <= 5000) {
        std::vector<Subgroup> cyc;
        cyc.reserve(pe.size());
        for (Index x : pe) {
            Subgroup c = subgroup_closure(g, {x});
            if (c.order() == target) return c;
            cyc.push_back(std::move(c));
        }
        for (std::size_t i = 0; i < pe.size(); ++i)
            for (std::size_t j = i + 1; j < pe.size(); ++j) {
                if (cyc[i].contains(pe[j])) continue;
                auto s = subgroup_closure_bounded(g, {pe[i], pe[j]}, target);
                if (s && s->order() == target) return s;
            }
        std::uint64_t budget = 200000;
        for (std::size_t i = 0; i < pe.size() && budget; ++i)
            for (std::size_t j = i + 1; j < pe.size() && budget; ++j) {
                if (cyc[i].contains(pe[j])) continue;
                for (std::size_t k = j + 1; k < pe.size() && budget; ++k) {
                    if (cyc[i].contains(pe[k]) || cyc[j].contains(pe[k])) continue;
                    --budget;
                    auto s = subgroup_closure_bounded(g, {pe[i], pe[j], pe[k]}, target);
                    if (s && s->order() == target) return s;
                }
            }
    }
    return std::nullopt;
}

Subgroup hall_subgroup(const EnumeratedGroup& g, const std::vector<std::uint64_t>& pi,
                       std::uint64_t seed, const Subgroup* within) {
    auto res = try_hall_subgroup(g, pi, seed, within);
    if (!res) {
        std::string names;
        for (std::uint64_t p : pi) names += (names.empty() ? "" : ",") + std::to_string(p);
        throw HallNotFound("no Hall {" + names + "}-subgroup found in group of order " +
                           std::to_string(within ? within->order() : g.order()));
    }
    return *res;
}

Subgroup p_core(const EnumeratedGroup& g, std::uint64_t p) {
    Subgroup core = trivial_subgroup(g);
    std::vector<char> processed(g.order(), 0);
    for (Index x = 1; x < g.order(); ++x) {
        if (processed[x] || core.contains(x)) continue;
        if (!is_pure_power_of(g.element_order(x), p)) continue;
        // one normal closure per conjugacy class
        std::vector<Index> cls{x};
        processed[x] = 1;
        for (std::size_t head = 0; head < cls.size(); ++head)
            for (Index t : g.generators()) {
                const Index c = g.conjugate(cls[head], t);
                if (!processed[c]) {
                    processed[c] = 1;
                    cls.push_back(c);
                }
            }
        Subgroup ncl = normal_closure(g, {x});
        if (is_pure_power_of(ncl.order(), p)) {
            std::vector<Index> gens = core.generators;
            gens.insert(gens.end(), ncl.generators.begin(), ncl.generators.end());
            core = subgroup_closure(g, gens);
        }
    }
    return core;
}

Subgroup fitting_subgroup(const EnumeratedGroup& g) {
    std::vector<Index> gens;
    for (std::uint64_t p : prime_divisors(g.order())) {
        Subgroup c = p_core(g, p);
        gens.insert(gens.end(), c.generators.begin(), c.generators.end());
    }
    return subgroup_closure(g, gens);
}

FittingData fitting_series(const EnumeratedGroup& g) {
    FittingData data;
    data.fitting = fitting_subgroup(g);

    EnumeratedGroup cur = g;
    Subgroup f = data.fitting;
    std::uint64_t cum = 1;
    int steps = 0;
    for (;;) {
        if (f.order() == 1) {
            if (cur.order() == 1) {
                data.height = steps;
                data.solvable = true;
            } else {
                data.height = std::nullopt;
                data.solvable = false;
            }
            return data;
        }
        cum *= f.order();
        data.series_orders.push_back(cum);
        ++steps;
        if (f.order() == cur.order()) {
            data.height = steps;
            data.solvable = true;
            return data;
        }
        cur = quotient_group(cur, f).group;
        f = fitting_subgroup(cur);
    }
}

bool is_solvable(const EnumeratedGroup& g) {
    Subgroup d = full_group(g);
    for (;;) {
        Subgroup next = derived_subgroup(g, &d);
        if (next.order() == d.order()) return d.order() == 1;
        d = next;
    }
}

bool is_abelian_group(const EnumeratedGroup& g) {
    for (Index a : g.generators())
        for (Index b : g.generators())
            if (g.mult(a, b) != g.mult(b, a)) return false;
    return true;
}

bool is_nilpotent_group(const EnumeratedGroup& g) {
    for (std::uint64_t p : prime_divisors(g.order())) {
        Subgroup s = sylow_subgroup(g, p);
        if (!is_normal_in(g, s)) return false;
    }
    return true;
}

bool is_p_nilpotent(const EnumeratedGroup& g, std::uint64_t p) {
    std::uint64_t m = g.order();
    while (m % p == 0) m /= p;
    if (m == g.order()) return true;

    std::vector<Index> coprime;
    for (Index x = 0; x < g.order(); ++x)
        if (g.element_order(x) % p != 0) coprime.push_back(x);
    if (coprime.size() != m) return false;

    std::vector<Index> gens;
    auto closed = subgroup_closure_bounded(g, gens, m);
    for (Index x : coprime) {
        if (closed->contains(x)) continue;
        gens.push_back(x);
        closed = subgroup_closure_bounded(g, gens, m);
        if (!closed) return false;
    }
    return closed->members == coprime;
}

Subgroup frattini_of_p_group(const EnumeratedGroup& g, const Subgroup& p_sub,
                             std::uint64_t p) {
    if (!is_pure_power_of(p_sub.order(), p))
        throw NotAPGroup("subgroup of order " + std::to_string(p_sub.order()) +
                         " is not a " + std::to_string(p) + "-group");
    Subgroup d = derived_subgroup(g, &p_sub);
    std::vector<Index> seed = d.generators;
    for (Index x : p_sub.members) seed.push_back(g.power(x, p));
    return subgroup_closure(g, seed);
}

} // namespace cgt
