#include "cgt/class_data.hpp"

#include <algorithm>
#include <map>

#include "cgt/errors.hpp"

namespace cgt {

using Index = EnumeratedGroup::Index;

namespace {

ClassData classes_by_flooding(const EnumeratedGroup& g) {
    const Index n = g.order();
    ClassData cd;
    cd.class_of.assign(n, UINT32_MAX);
    std::vector<Index> orbit;
    for (Index x = 0; x < n; ++x) {
        if (cd.class_of[x] != UINT32_MAX) continue;
        const Index id = Index(cd.representatives.size());
        cd.representatives.push_back(x);
        orbit.clear();
        orbit.push_back(x);
        cd.class_of[x] = id;
        for (std::size_t head = 0; head < orbit.size(); ++head)
            for (Index t : g.generators()) {
                const Index c = g.conjugate(orbit[head], t);
                if (cd.class_of[c] == UINT32_MAX) {
                    cd.class_of[c] = id;
                    orbit.push_back(c);
                }
            }
        cd.sizes.push_back(orbit.size());
    }
    cd.sorted_sizes = cd.sizes;
    std::sort(cd.sorted_sizes.begin(), cd.sorted_sizes.end());
    return cd;
}

} // namespace

std::vector<std::uint64_t> class_size_multiset_by_flooding(const EnumeratedGroup& g) {
    return classes_by_flooding(g).sorted_sizes;
}

std::vector<std::uint64_t> class_size_multiset_by_centralizers(const EnumeratedGroup& g) {
    const Index n = g.order();
    std::vector<std::uint64_t> per(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (std::int64_t xs = 0; xs < std::int64_t(n); ++xs) {
        const Index x = Index(xs);
        std::uint64_t cent = 0;
        for (Index t = 0; t < n; ++t)
            if (g.mult(t, x) == g.mult(x, t)) ++cent;
        per[x] = n / cent;
    }

    // A class of size s contributes s elements of per-element size s.
    std::map<std::uint64_t, std::uint64_t> count;
    for (std::uint64_t s : per) ++count[s];
    std::vector<std::uint64_t> multiset;
    for (const auto& [size, elems] : count) {
        if (elems % size != 0)
            throw InternalCheckFailed("per-element class sizes do not split into whole classes");
        for (std::uint64_t i = 0; i < elems / size; ++i) multiset.push_back(size);
    }
    return multiset;
}

ClassData conjugacy_classes(const EnumeratedGroup& g) {
    ClassData cd = classes_by_flooding(g);
    if (g.order() <= kCentralizerCrossCheckCap &&
        cd.sorted_sizes != class_size_multiset_by_centralizers(g))
        throw InternalCheckFailed("class size multiset differs between flooding and centralizers");
    return cd;
}

} // namespace cgt
