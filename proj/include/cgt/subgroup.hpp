#pragma once

// Subgroups as sorted member lists over a parent EnumeratedGroup, plus the
// elementary operations on them.  All functions are deterministic; every
// "pick an element" choice takes the least canonical index.

#include <cstdint>
#include <optional>
#include <vector>

#include "cgt/group.hpp"

namespace cgt {

struct Subgroup {
    using Index = EnumeratedGroup::Index;

    EnumeratedGroup parent;
    std::vector<Index> members;    // sorted ascending, always contains 0
    std::vector<char> mask;        // size parent.order()
    std::vector<Index> generators; // generate members; empty for the trivial subgroup

    Index order() const { return Index(members.size()); }
    bool contains(Index x) const { return mask[x] != 0; }
    bool is_trivial() const { return members.size() == 1; }
    bool same_members(const Subgroup& other) const { return members == other.members; }
};

Subgroup full_group(const EnumeratedGroup& g);
Subgroup trivial_subgroup(const EnumeratedGroup& g);

// Subgroup with known member set; generators are found greedily.
Subgroup subgroup_from_members(const EnumeratedGroup& g, std::vector<Subgroup::Index> members);

// <seed>: closure of the seed under multiplication.
Subgroup subgroup_closure(const EnumeratedGroup& g, const std::vector<Subgroup::Index>& seed);

// As above but abandons the walk once more than `bound` elements appear.
std::optional<Subgroup> subgroup_closure_bounded(const EnumeratedGroup& g,
                                                 const std::vector<Subgroup::Index>& seed,
                                                 std::uint64_t bound);

Subgroup intersection(const Subgroup& a, const Subgroup& b);

// Centralizer of x (or of a set) inside `within` (whole group when null).
Subgroup centralizer(const EnumeratedGroup& g, Subgroup::Index x,
                     const Subgroup* within = nullptr);
Subgroup centralizer_of_set(const EnumeratedGroup& g, const std::vector<Subgroup::Index>& xs,
                            const Subgroup* within = nullptr);

Subgroup center(const EnumeratedGroup& g);

// Smallest subgroup containing the seed that is normal in `within`
// (whole group when null; `within` must contain the seed).
Subgroup normal_closure(const EnumeratedGroup& g, const std::vector<Subgroup::Index>& seed,
                        const Subgroup* within = nullptr);

// Commutator subgroup of `within` (whole group when null).
Subgroup derived_subgroup(const EnumeratedGroup& g, const Subgroup* within = nullptr);

// Subgroup generated by all commutators [a, b], a in A, b in B.
Subgroup commutator_of_pair(const EnumeratedGroup& g, const Subgroup& a, const Subgroup& b);

// True iff h^t = h for every generator t of `ambient` (whole group when null).
bool is_normal_in(const EnumeratedGroup& g, const Subgroup& h, const Subgroup* ambient = nullptr);

bool is_abelian_subgroup(const EnumeratedGroup& g, const Subgroup& h);
bool is_cyclic_subgroup(const EnumeratedGroup& g, const Subgroup& h);

Subgroup conjugate_subgroup(const EnumeratedGroup& g, const Subgroup& h, Subgroup::Index t);

// |A * B| as a plain product set (A, B need not normalize each other).
std::uint64_t product_set_size(const Subgroup& a, const Subgroup& b);

// G/N with the projection map (parent canonical index -> quotient canonical
// index).  Verifies normality (throws NotNormal), then spot-checks the
// projection is a homomorphism and that its kernel is exactly N.
struct QuotientResult {
    EnumeratedGroup group;
    std::vector<Subgroup::Index> projection;
};
QuotientResult quotient_group(const EnumeratedGroup& g, const Subgroup& n);

// A subgroup as a standalone group, with index maps in both directions.
struct MaterializedSubgroup {
    EnumeratedGroup group;
    std::vector<Subgroup::Index> to_parent;   // local canonical -> parent canonical
    std::vector<Subgroup::Index> from_parent; // parent canonical -> local, UINT32_MAX outside
};
MaterializedSubgroup materialize(const Subgroup& h);

} // namespace cgt
