#pragma once

// Sylow and Hall subgroups, cores, the Fitting series, and the structural
// predicates built on them.

#include <cstdint>
#include <optional>
#include <vector>

#include "cgt/subgroup.hpp"

namespace cgt {

// A Sylow p-subgroup of `within` (whole group when null).  Deterministic:
// grows a p-subgroup by adjoining the least p-element that normalizes it.
Subgroup sylow_subgroup(const EnumeratedGroup& g, std::uint64_t p,
                        const Subgroup* within = nullptr);

// A Hall pi-subgroup of `within`: order equal to the full pi-part, or
// HallNotFound.  Randomized ascent (seeded, bounded attempts) followed by an
// exhaustive small-tuple sweep for groups of order <= 5000.
Subgroup hall_subgroup(const EnumeratedGroup& g, const std::vector<std::uint64_t>& pi,
                       std::uint64_t seed = 0, const Subgroup* within = nullptr);

std::optional<Subgroup> try_hall_subgroup(const EnumeratedGroup& g,
                                          const std::vector<std::uint64_t>& pi,
                                          std::uint64_t seed = 0,
                                          const Subgroup* within = nullptr);

// Largest normal p-subgroup.
Subgroup p_core(const EnumeratedGroup& g, std::uint64_t p);

// Product of the p-cores over all primes dividing |G|.
Subgroup fitting_subgroup(const EnumeratedGroup& g);

// Iterated Fitting quotients.  series_orders[i] is the order of the i-th
// preimage in G, strictly increasing; height is absent when the series stalls
// before reaching G (which happens exactly when G is not solvable).
struct FittingData {
    Subgroup fitting;
    std::vector<std::uint64_t> series_orders;
    std::optional<int> height;
    bool solvable = false;
};
FittingData fitting_series(const EnumeratedGroup& g);

bool is_solvable(const EnumeratedGroup& g);
bool is_abelian_group(const EnumeratedGroup& g);
bool is_nilpotent_group(const EnumeratedGroup& g);

// True iff the p'-elements form a subgroup (the normal p-complement).
bool is_p_nilpotent(const EnumeratedGroup& g, std::uint64_t p);

// Frattini subgroup of a p-group given as a subgroup view; throws NotAPGroup.
Subgroup frattini_of_p_group(const EnumeratedGroup& g, const Subgroup& p_sub,
                             std::uint64_t p);

} // namespace cgt
