#pragma once

#include <algorithm>
#include <map>

namespace polardisc {

template <class C>
std::vector<std::pair<C, long>> lower_hull(const std::vector<std::pair<C, long>>& pts) {
    std::vector<std::pair<C, long>> chain;
    if (pts.empty()) return chain;
    // leftmost point per row
    std::map<long, C> row;
    for (const auto& [a, j] : pts) {
        auto it = row.find(j);
        if (it == row.end() || a < it->second) row[j] = a;
    }
    C amin = row.begin()->second;
    for (const auto& [j, a] : row) amin = std::min(amin, a);
    long jtop = 0;
    for (const auto& [j, a] : row)
        if (a == amin) {
            jtop = j;
            break;
        }
    long jlow = row.begin()->first;
    for (auto it = row.rbegin(); it != row.rend(); ++it) {
        long j = it->first;
        if (j > jtop || j < jlow) continue;
        std::pair<C, long> p{it->second, j};
        while (chain.size() >= 2) {
            const auto& q = chain[chain.size() - 2];
            const auto& r = chain.back();
            // pop r if slope(q, r) >= slope(r, p), slopes as a-increase per unit drop in j
            C lhs = (r.first - q.first) * C(r.second - p.second);
            C rhs = (p.first - r.first) * C(q.second - r.second);
            if (lhs >= rhs) chain.pop_back();
            else break;
        }
        chain.push_back(p);
    }
    return chain;
}

}  // namespace polardisc
