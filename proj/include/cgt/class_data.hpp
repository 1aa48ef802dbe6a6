#pragma once

// Conjugacy classes and their size data.  Two independent routes exist:
//
//   * flooding: orbit of each element under conjugation by the generators,
//     O(|G| * #gens), serial;
//   * centralizers: per-element centralizer order scan, O(|G|^2), with the
//     outer loop parallelized under OpenMP.
//
// conjugacy_classes() uses flooding and, for groups up to
// kCentralizerCrossCheckCap, re-derives the size multiset through the second
// route; disagreement raises InternalCheckFailed.

#include <cstdint>
#include <vector>

#include "cgt/group.hpp"

namespace cgt {

struct ClassData {
    using Index = EnumeratedGroup::Index;

    std::vector<Index> class_of;        // element -> class id
    std::vector<Index> representatives; // least element per class, ascending
    std::vector<std::uint64_t> sizes;   // by class id
    std::vector<std::uint64_t> sorted_sizes;

    std::size_t class_count() const { return representatives.size(); }
};

inline constexpr std::uint32_t kCentralizerCrossCheckCap = 2048;

ClassData conjugacy_classes(const EnumeratedGroup& g);

std::vector<std::uint64_t> class_size_multiset_by_flooding(const EnumeratedGroup& g);
std::vector<std::uint64_t> class_size_multiset_by_centralizers(const EnumeratedGroup& g);

} // namespace cgt
