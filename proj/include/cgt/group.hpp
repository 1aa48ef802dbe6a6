#pragma once

// Materialized finite groups.  Elements are dense indices 0..order-1 with a
// canonical ordering: sorted by (element order, discovery index), so index 0
// is always the identity and every "least element" tie-break is deterministic
// across runs.
//
// Groups of order <= kTableCacheCap carry a full multiplication table; larger
// groups multiply on demand through their structural backend (permutation
// composition, mixed-radix arithmetic, coset representatives, ...).
// EnumeratedGroup is a cheap value type: copies share immutable state.

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "cgt/group_spec.hpp"

namespace cgt {

class EnumeratedGroup {
public:
    using Index = std::uint32_t;

    static constexpr std::uint64_t kDefaultCap = 100000;
    // Above this order, no n x n table is cached.
    static constexpr std::uint32_t kTableCacheCap = 5000;
    // Full associativity check for table specs up to this order.
    static constexpr std::uint32_t kFullAssocCap = 256;

    EnumeratedGroup() = default;

    // Materialize a validated spec.  Throws MalformedSpec or OrderExceedsCap.
    static EnumeratedGroup from_spec(const GroupSpec& spec,
                                     std::uint64_t cap = kDefaultCap);

    // Build from an arbitrary multiplication callable over raw indices
    // 0..n-1 with identity at id_raw.  `state` keeps whatever the callable
    // captures alive.  Used for quotients and materialized subgroups.
    static EnumeratedGroup from_callable(Index n,
                                         std::function<Index(Index, Index)> raw_mult,
                                         Index id_raw,
                                         std::vector<Index> raw_generators,
                                         std::shared_ptr<void> state = nullptr);

    Index order() const { return d_->n; }

    Index mult(Index a, Index b) const {
        const Detail& d = *d_;
        if (!d.table.empty()) return d.table[std::size_t(a) * d.n + b];
        return d.to_canon[d.raw_mult(d.to_raw[a], d.to_raw[b])];
    }

    Index inverse(Index a) const { return d_->inv[a]; }

    // g^-1 * x * g
    Index conjugate(Index x, Index g) const {
        return mult(mult(inverse(g), x), g);
    }

    // a^-1 * b^-1 * a * b
    Index commutator(Index a, Index b) const {
        return mult(mult(inverse(a), inverse(b)), mult(a, b));
    }

    Index power(Index x, std::uint64_t e) const;

    std::uint32_t element_order(Index a) const { return d_->orders[a]; }
    const std::vector<std::uint32_t>& element_orders() const { return d_->orders; }

    const std::vector<Index>& generators() const { return d_->gens; }

    bool has_cached_table() const { return !d_->table.empty(); }

    // Translate between backend (raw) and canonical indices.
    Index raw_index(Index canonical) const {
        return d_->to_raw.empty() ? canonical : d_->to_raw[canonical];
    }
    Index canonical_index(Index raw) const {
        return d_->to_canon.empty() ? raw : d_->to_canon[raw];
    }

    // Identity of the underlying shared state; lets callers detect copies.
    const void* state_id() const { return d_.get(); }

private:
    struct Detail {
        Index n = 1;
        std::vector<Index> table;      // canonical, size n*n when cached
        std::function<Index(Index, Index)> raw_mult;
        std::vector<Index> to_raw;     // canonical -> raw
        std::vector<Index> to_canon;   // raw -> canonical
        std::vector<Index> inv;        // canonical
        std::vector<std::uint32_t> orders; // canonical
        std::vector<Index> gens;       // canonical
        std::shared_ptr<void> state;
    };

    static EnumeratedGroup finalize(Index n,
                                    std::function<Index(Index, Index)> raw_mult,
                                    Index id_raw,
                                    const std::vector<Index>& raw_gens,
                                    std::shared_ptr<void> state,
                                    bool full_assoc_check);

    std::shared_ptr<const Detail> d_ = trivial_detail();
    static std::shared_ptr<const Detail> trivial_detail();
};

} // namespace cgt
