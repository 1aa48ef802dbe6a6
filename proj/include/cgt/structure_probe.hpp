#pragma once

// Structure predicates feeding the classifier: the normal-Sylow prime set,
// the characteristic subgroup K_p, central reduction, the Frobenius kernel
// criterion, and the two-component structure test for disconnected graphs.

#include <cstdint>
#include <vector>

#include "cgt/group.hpp"
#include "cgt/subgroup.hpp"

namespace cgt {

// Primes p dividing |G| whose Sylow p-subgroup is normal.
std::vector<std::uint64_t> normal_sylow_set(const EnumeratedGroup& g);

// The normal p-complement of [G,P]: the p'-elements of [G,P], required to
// form a subgroup K with [K,P] = K.  Throws NoNormalComplement when either
// requirement fails (which signals the defining hypotheses do not hold for
// this group and prime).
Subgroup k_p(const EnumeratedGroup& g, std::uint64_t p);

// Iterated central stripping: while some non-trivial cyclic central subgroup
// meets the derived subgroup trivially, factor out the one with the least
// canonical generator.  Each step must preserve the set of distinct class
// sizes (InternalCheckFailed otherwise).
struct ReducedForm {
    EnumeratedGroup reduced_group;
    Subgroup stripped_center;                    // subgroup of the original group
    std::vector<std::uint64_t> steps;            // orders of the stripped cyclic factors
    std::vector<EnumeratedGroup::Index> projection; // original -> reduced, canonical
    bool already_reduced() const { return steps.empty(); }
};
ReducedForm reduce(const EnumeratedGroup& g);

// Kernel criterion: 1 < K < H, K normal, and C_H(k) <= K for every
// non-trivial k in K.  Throws NotNormal.
bool frobenius_with_kernel(const EnumeratedGroup& h, const Subgroup& k);

// For a reduced group with disconnected graph: G = AB with A normal, A and B
// abelian Hall subgroups of coprime order, and G/Z(G) Frobenius with kernel
// AZ/Z.  Components are given as prime lists; both orientations are tried.
struct DisconnectedStructure {
    bool holds = false;
    std::uint64_t kernel_order = 0;    // |A| for the passing orientation
    std::vector<std::uint64_t> kernel_primes;
};
DisconnectedStructure disconnected_structure(const EnumeratedGroup& g,
                                             const std::vector<std::uint64_t>& component_a,
                                             const std::vector<std::uint64_t>& component_b,
                                             std::uint64_t seed = 0);

} // namespace cgt
