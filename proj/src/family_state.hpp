#ifndef QMZV_SRC_FAMILY_STATE_HPP
#define QMZV_SRC_FAMILY_STATE_HPP

#include <map>
#include <mutex>
#include <string>
#include <utility>

#include <qmzv/families.hpp>
#include <qmzv/index.hpp>
#include <qmzv/series.hpp>
#include <qmzv/stuffle.hpp>

namespace qmzv::detail
{

struct FamilyState
{
    std::string name;
    PolyFamily::SupportFn support;
    PolyFamily::GeneratorFn generator;

    std::mutex mutex;
    std::map<int, Poly> polys;
    std::map<std::pair<int, int>, ReductionCoeffs> reductions;

    static constexpr std::size_t kExpansionCacheLimit = 4096;
    std::map<std::pair<Index, std::size_t>, QSeries> expansions;
};

} // namespace qmzv::detail

#endif
