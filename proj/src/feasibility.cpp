#include "mpp/feasibility.hpp"

#include <algorithm>

namespace mpp {

std::string describe(const FeasibilityVerdict& fv) {
    if (fv.feasible) return "feasible";
    return "divisor " + std::to_string(fv.divisor) + " has " +
           std::to_string(fv.multiples) + " multiples, bound " +
           std::to_string(fv.bound);
}

std::vector<int> divisors(int v) {
    if (v <= 0) throw invalid_input("v must be positive");
    std::vector<int> small, large;
    for (int d = 1; static_cast<long long>(d) * d <= v; ++d) {
        if (v % d != 0) continue;
        small.push_back(d);
        if (d != v / d) large.push_back(v / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

static void require_cyclic_range(const LengthList& list) {
    if (list.empty()) throw invalid_input("empty length list");
    if (!list.cyclic_range())
        throw invalid_input("length " + std::to_string(list.max_length()) +
                            " exceeds n = " + std::to_string(list.n()) +
                            "; not a cyclic length list");
}

std::vector<FeasibilityVerdict> check_condition_all(const LengthList& list) {
    require_cyclic_range(list);
    int v = static_cast<int>(list.v());
    std::vector<FeasibilityVerdict> violations;
    for (int d : divisors(v)) {
        long long mult = list.count_multiples(d);
        long long bound = (v - d) / 2;
        if (mult > bound)
            violations.push_back({false, d, mult, bound});
    }
    return violations;
}

FeasibilityVerdict check_condition(const LengthList& list) {
    auto violations = check_condition_all(list);
    if (violations.empty()) return {};
    return violations.front();
}

}  // namespace mpp
