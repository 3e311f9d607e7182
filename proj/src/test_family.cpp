#include "pgraphon/test_family.hpp"

#include <utility>

#include "pgraphon/errors.hpp"

namespace pgraphon {

TestFamily::TestFamily(WeightSpacePtr space, std::vector<std::vector<double>> functions)
    : space_(std::move(space)), functions_(std::move(functions)) {
    if (!space_) throw InputError("test family without a weight space");
    if (functions_.empty()) throw InputError("test family must contain f_0 = 1");
    const int m = space_->size();
    for (const auto& f : functions_) {
        if (static_cast<int>(f.size()) != m)
            throw InputError("test function length does not match the space");
        for (double v : f)
            if (!(v >= 0.0 && v <= 1.0)) throw InputError("test functions must map into [0,1]");
    }
    for (double v : functions_[0])
        if (v != 1.0) throw InputError("f_0 must be identically one");
    // Separation of points: no two points may see the same column of values.
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            bool separated = false;
            for (const auto& f : functions_)
                if (f[i] != f[j]) {
                    separated = true;
                    break;
                }
            if (!separated) throw InputError("test family does not separate the space's points");
        }
}

TestFamilyPtr canonical_family(WeightSpacePtr space) {
    const int m = space->size();
    std::vector<std::vector<double>> fns;
    fns.emplace_back(m, 1.0);
    for (int k = 0; k < m; ++k) {
        std::vector<double> ind(m, 0.0);
        ind[k] = 1.0;
        fns.push_back(std::move(ind));
    }
    return std::make_shared<const TestFamily>(std::move(space), std::move(fns));
}

}  // namespace pgraphon
