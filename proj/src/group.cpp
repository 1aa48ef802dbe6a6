#include "cgt/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>

#include "cgt/errors.hpp"
#include "cgt/numutil.hpp"

namespace cgt {

namespace {

using Index = EnumeratedGroup::Index;

// ---------------------------------------------------------------- perm groups

struct PermState {
    std::uint32_t degree = 0;
    std::vector<std::vector<std::uint16_t>> elems; // 0-based image vectors
    std::unordered_map<std::string, Index> lookup;
};

std::string perm_key(const std::vector<std::uint16_t>& p) {
    return std::string(reinterpret_cast<const char*>(p.data()), p.size() * sizeof(std::uint16_t));
}

// (p * q)(i) = q[p[i]]: apply p first, then q.
std::vector<std::uint16_t> perm_compose(const std::vector<std::uint16_t>& p,
                                        const std::vector<std::uint16_t>& q) {
    std::vector<std::uint16_t> r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
    return r;
}

struct RawGroup {
    Index n = 1;
    std::function<Index(Index, Index)> raw_mult;
    Index id_raw = 0;
    std::vector<Index> raw_gens;
    std::shared_ptr<void> state;
    bool full_assoc_check = false;
};

RawGroup build_perm(const PermSpec& spec, std::uint64_t cap) {
    auto st = std::make_shared<PermState>();
    st->degree = spec.degree;

    std::vector<std::vector<std::uint16_t>> gens;
    for (const auto& g : spec.generators) {
        std::vector<std::uint16_t> p(spec.degree);
        for (std::uint32_t i = 0; i < spec.degree; ++i) p[i] = std::uint16_t(g[i] - 1);
        gens.push_back(std::move(p));
    }

    std::vector<std::uint16_t> id(spec.degree);
    std::iota(id.begin(), id.end(), 0);
    st->elems.push_back(id);
    st->lookup.emplace(perm_key(id), 0);

    // Breadth-first closure under right multiplication by the generators.
    for (std::size_t head = 0; head < st->elems.size(); ++head) {
        for (const auto& g : gens) {
            auto prod = perm_compose(st->elems[head], g);
            auto key = perm_key(prod);
            if (st->lookup.find(key) == st->lookup.end()) {
                if (st->elems.size() + 1 > cap)
                    throw OrderExceedsCap(st->elems.size() + 1, cap);
                st->lookup.emplace(std::move(key), Index(st->elems.size()));
                st->elems.push_back(std::move(prod));
            }
        }
    }

    RawGroup raw;
    raw.n = Index(st->elems.size());
    raw.id_raw = 0;
    for (const auto& g : gens) raw.raw_gens.push_back(st->lookup.at(perm_key(g)));
    PermState* sp = st.get();
    raw.raw_mult = [sp](Index a, Index b) {
        return sp->lookup.at(perm_key(perm_compose(sp->elems[a], sp->elems[b])));
    };
    raw.state = std::move(st);
    return raw;
}

// ----------------------------------------------------------- extension groups

struct ExtState {
    std::vector<std::uint32_t> base_orders, actor_orders;
    std::uint32_t base_count = 1, actor_count = 1, width = 0;
    std::vector<std::uint32_t> digits;      // width digits per raw element
    std::vector<std::uint64_t> action_mult; // [actor_index * base_k + i]
};

RawGroup build_extension(const ExtensionSpec& spec, std::uint64_t cap) {
    auto st = std::make_shared<ExtState>();
    std::uint64_t order = 1;
    for (std::uint64_t v : spec.base_orders) {
        order *= v;
        if (order > cap) throw OrderExceedsCap(order, cap);
        st->base_orders.push_back(std::uint32_t(v));
    }
    for (std::uint64_t v : spec.actor_orders) {
        order *= v;
        if (order > cap) throw OrderExceedsCap(order, cap);
        st->actor_orders.push_back(std::uint32_t(v));
    }
    const std::size_t k = st->base_orders.size();
    const std::size_t l = st->actor_orders.size();
    st->width = std::uint32_t(k + l);
    for (std::uint32_t v : st->base_orders) st->base_count *= v;
    for (std::uint32_t v : st->actor_orders) st->actor_count *= v;

    const Index n = Index(order);
    st->digits.resize(std::size_t(n) * st->width);
    {
        std::vector<std::uint32_t> radix;
        for (std::uint32_t v : st->base_orders) radix.push_back(v);
        for (std::uint32_t v : st->actor_orders) radix.push_back(v);
        for (Index x = 0; x < n; ++x) {
            Index rem = x;
            for (std::size_t i = 0; i < radix.size(); ++i) {
                st->digits[std::size_t(x) * st->width + i] = rem % radix[i];
                rem /= radix[i];
            }
        }
    }
    // Per actor tuple, the combined multiplier each base factor sees.
    st->action_mult.resize(std::size_t(st->actor_count) * std::max<std::size_t>(k, 1));
    for (std::uint32_t a = 0; a < st->actor_count; ++a) {
        std::uint32_t rem = a;
        std::vector<std::uint32_t> ad(l);
        for (std::size_t j = 0; j < l; ++j) {
            ad[j] = rem % st->actor_orders[j];
            rem /= st->actor_orders[j];
        }
        for (std::size_t i = 0; i < k; ++i) {
            const std::uint64_t ni = st->base_orders[i];
            std::uint64_t m = 1 % std::max<std::uint64_t>(ni, 1);
            for (std::size_t j = 0; j < l; ++j) {
                if (ni > 1) m = (m * pow_mod(spec.action[j][i] % ni, ad[j], ni)) % ni;
            }
            st->action_mult[std::size_t(a) * k + i] = m;
        }
    }

    RawGroup raw;
    raw.n = n;
    raw.id_raw = 0;
    // Unit vector per non-trivial factor, base factors first.
    {
        std::uint32_t place = 1;
        for (std::size_t i = 0; i < k; ++i) {
            if (st->base_orders[i] > 1) raw.raw_gens.push_back(place);
            place *= st->base_orders[i];
        }
        for (std::size_t j = 0; j < l; ++j) {
            if (st->actor_orders[j] > 1) raw.raw_gens.push_back(place);
            place *= st->actor_orders[j];
        }
    }
    ExtState* sp = st.get();
    const std::uint32_t kk = std::uint32_t(k);
    raw.raw_mult = [sp, kk](Index x, Index y) -> Index {
        const std::uint32_t* dx = &sp->digits[std::size_t(x) * sp->width];
        const std::uint32_t* dy = &sp->digits[std::size_t(y) * sp->width];
        const std::uint32_t ax = x / sp->base_count;
        const std::uint64_t* am = &sp->action_mult[std::size_t(ax) * kk];
        Index base = 0, place = 1;
        for (std::uint32_t i = 0; i < kk; ++i) {
            const std::uint32_t ni = sp->base_orders[i];
            const std::uint32_t di = std::uint32_t((dx[i] + am[i] * dy[i]) % ni);
            base += di * place;
            place *= ni;
        }
        Index actor = 0;
        place = 1;
        for (std::uint32_t j = 0; j < sp->actor_orders.size(); ++j) {
            const std::uint32_t mj = sp->actor_orders[j];
            actor += ((dx[kk + j] + dy[kk + j]) % mj) * place;
            place *= mj;
        }
        return base + sp->base_count * actor;
    };
    raw.state = std::move(st);
    return raw;
}

// -------------------------------------------------------------- direct groups

struct DirectState {
    std::vector<EnumeratedGroup> factors;
    std::vector<std::uint32_t> orders;
    std::uint32_t width = 0;
    std::vector<std::uint32_t> digits;
};

RawGroup build_direct(const DirectSpec& spec, std::uint64_t cap) {
    auto st = std::make_shared<DirectState>();
    std::uint64_t order = 1;
    for (const auto& f : spec.factors) {
        st->factors.push_back(EnumeratedGroup::from_spec(f, cap));
        order *= st->factors.back().order();
        if (order > cap) throw OrderExceedsCap(order, cap);
        st->orders.push_back(st->factors.back().order());
    }
    st->width = std::uint32_t(st->factors.size());
    const Index n = Index(order);
    st->digits.resize(std::size_t(n) * st->width);
    for (Index x = 0; x < n; ++x) {
        Index rem = x;
        for (std::size_t i = 0; i < st->orders.size(); ++i) {
            st->digits[std::size_t(x) * st->width + i] = rem % st->orders[i];
            rem /= st->orders[i];
        }
    }

    RawGroup raw;
    raw.n = n;
    raw.id_raw = 0;
    {
        std::uint32_t place = 1;
        for (std::size_t i = 0; i < st->factors.size(); ++i) {
            for (Index g : st->factors[i].generators()) raw.raw_gens.push_back(g * place);
            place *= st->orders[i];
        }
    }
    DirectState* sp = st.get();
    raw.raw_mult = [sp](Index x, Index y) -> Index {
        const std::uint32_t* dx = &sp->digits[std::size_t(x) * sp->width];
        const std::uint32_t* dy = &sp->digits[std::size_t(y) * sp->width];
        Index out = 0, place = 1;
        for (std::uint32_t i = 0; i < sp->width; ++i) {
            out += sp->factors[i].mult(dx[i], dy[i]) * place;
            place *= sp->orders[i];
        }
        return out;
    };
    raw.state = std::move(st);
    return raw;
}

// --------------------------------------------------------------- table groups

RawGroup build_table(const TableSpec& spec, std::uint64_t cap) {
    const std::size_t n = spec.table.size();
    if (n > cap) throw OrderExceedsCap(n, cap);
    auto st = std::make_shared<std::vector<std::vector<std::uint32_t>>>(spec.table);

    Index id = n; // sentinel
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x)
            ok = (*st)[e][x] == x && (*st)[x][e] == x;
        if (ok) { id = Index(e); break; }
    }
    if (id == n) throw MalformedSpec("table spec: no identity element");

    RawGroup raw;
    raw.n = Index(n);
    raw.id_raw = id;
    // Generators are chosen greedily after canonicalization; see finalize.
    auto* sp = st.get();
    raw.raw_mult = [sp](Index a, Index b) { return (*sp)[a][b]; };
    raw.state = std::move(st);
    raw.full_assoc_check = n <= EnumeratedGroup::kFullAssocCap;
    return raw;
}

} // namespace

// ------------------------------------------------------------------ finalize

std::shared_ptr<const EnumeratedGroup::Detail> EnumeratedGroup::trivial_detail() {
    static const std::shared_ptr<const Detail> t = [] {
        auto d = std::make_shared<Detail>();
        d->n = 1;
        d->table = {0};
        d->inv = {0};
        d->orders = {1};
        return d;
    }();
    return t;
}

EnumeratedGroup EnumeratedGroup::finalize(Index n,
                                          std::function<Index(Index, Index)> raw_mult,
                                          Index id_raw,
                                          const std::vector<Index>& raw_gens,
                                          std::shared_ptr<void> state,
                                          bool full_assoc_check) {
    auto d = std::make_shared<Detail>();
    d->n = n;
    d->state = std::move(state);

    // Element orders and inverses over the raw indexing.  Walking each cyclic
    // subgroup once labels all its elements in one pass.
    std::vector<std::uint32_t> raw_orders(n, 0);
    std::vector<Index> raw_inv(n, 0);
    raw_orders[id_raw] = 1;
    raw_inv[id_raw] = id_raw;
    std::vector<Index> path;
    for (Index x = 0; x < n; ++x) {
        if (raw_orders[x] != 0) continue;
        path.clear();
        path.push_back(x);
        Index cur = raw_mult(x, x);
        while (cur != id_raw) {
            path.push_back(cur);
            cur = raw_mult(cur, x);
        }
        // path[m-1] = x^m, so ord = |path| + 1 and (x^k)^-1 = x^(ord-k).
        const std::uint32_t ord = std::uint32_t(path.size()) + 1;
        for (std::uint32_t k = 1; k < ord; ++k) {
            const Index xe = path[k - 1];
            if (raw_orders[xe] == 0) raw_orders[xe] = ord / std::uint32_t(std::gcd(ord, k));
            raw_inv[xe] = path[ord - k - 1];
        }
    }

    // Canonical order: by (element order, raw discovery index).
    std::vector<Index> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](Index a, Index b) {
        return raw_orders[a] < raw_orders[b];
    });
    d->to_raw = perm;
    d->to_canon.resize(n);
    for (Index i = 0; i < n; ++i) d->to_canon[perm[i]] = i;

    d->orders.resize(n);
    d->inv.resize(n);
    for (Index i = 0; i < n; ++i) {
        d->orders[i] = raw_orders[perm[i]];
        d->inv[i] = d->to_canon[raw_inv[perm[i]]];
    }
    for (Index g : raw_gens) {
        const Index c = d->to_canon[g];
        if (c != 0 && std::find(d->gens.begin(), d->gens.end(), c) == d->gens.end())
            d->gens.push_back(c);
    }
    std::sort(d->gens.begin(), d->gens.end());

    if (n <= kTableCacheCap) {
        d->table.resize(std::size_t(n) * n);
        for (Index a = 0; a < n; ++a)
            for (Index b = 0; b < n; ++b)
                d->table[std::size_t(a) * n + b] = d->to_canon[raw_mult(d->to_raw[a], d->to_raw[b])];
    } else {
        d->raw_mult = std::move(raw_mult);
    }

    EnumeratedGroup g;
    g.d_ = d;

    // Associativity: full scan for small explicit tables, random triples
    // otherwise.  Structural backends are associative by construction; this
    // guards against table typos and backend bugs alike.
    if (full_assoc_check) {
        for (Index a = 0; a < n; ++a)
            for (Index b = 0; b < n; ++b)
                for (Index c = 0; c < n; ++c)
                    if (g.mult(g.mult(a, b), c) != g.mult(a, g.mult(b, c)))
                        throw MalformedSpec("table spec: multiplication is not associative");
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<Index> dist(0, n - 1);
        for (int t = 0; t < 64; ++t) {
            const Index a = dist(rng), b = dist(rng), c = dist(rng);
            if (g.mult(g.mult(a, b), c) != g.mult(a, g.mult(b, c)))
                throw InternalCheckFailed("associativity spot check failed");
        }
    }
    return g;
}

EnumeratedGroup EnumeratedGroup::from_callable(Index n,
                                               std::function<Index(Index, Index)> raw_mult,
                                               Index id_raw,
                                               std::vector<Index> raw_generators,
                                               std::shared_ptr<void> state) {
    return finalize(n, std::move(raw_mult), id_raw, raw_generators, std::move(state), false);
}

namespace {

// Greedy generating set for groups whose spec does not provide one.
std::vector<Index> greedy_generators(const EnumeratedGroup& g) {
    const Index n = g.order();
    std::vector<char> in(n, 0);
    in[0] = 1;
    std::vector<Index> members{0};
    std::vector<Index> gens;
    for (Index x = 1; x < n; ++x) {
        if (in[x]) continue;
        gens.push_back(x);
        // Re-close under the enlarged generating set.
        std::vector<Index> queue = members;
        in[x] = 1;
        members.push_back(x);
        queue.push_back(x);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (Index s : gens) {
                const Index y = g.mult(queue[head], s);
                if (!in[y]) {
                    in[y] = 1;
                    members.push_back(y);
                    queue.push_back(y);
                }
            }
        }
        if (members.size() == n) break;
    }
    return gens;
}

} // namespace

EnumeratedGroup EnumeratedGroup::from_spec(const GroupSpec& spec, std::uint64_t cap) {
    spec.validate();
    if (auto proj = spec.projected_order(); proj && *proj > cap)
        throw OrderExceedsCap(*proj, cap);

    RawGroup raw = std::visit([cap](const auto& node) -> RawGroup {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, PermSpec>) return build_perm(node, cap);
        else if constexpr (std::is_same_v<T, TableSpec>) return build_table(node, cap);
        else if constexpr (std::is_same_v<T, ExtensionSpec>) return build_extension(node, cap);
        else return build_direct(node, cap);
    }, spec.node);

    EnumeratedGroup g = finalize(raw.n, std::move(raw.raw_mult), raw.id_raw, raw.raw_gens,
                                 std::move(raw.state), raw.full_assoc_check);
    if (g.generators().empty() && g.order() > 1) {
        auto d = std::make_shared<Detail>(*g.d_);
        d->gens = greedy_generators(g);
        g.d_ = d;
    }
    return g;
}

EnumeratedGroup::Index EnumeratedGroup::power(Index x, std::uint64_t e) const {
    const std::uint32_t ord = element_order(x);
    e %= ord;
    Index r = 0;
    Index base = x;
    while (e > 0) {
        if (e & 1) r = mult(r, base);
        base = mult(base, base);
        e >>= 1;
    }
    return r;
}

} // namespace cgt
