#include "orlab/intervals.hpp"

#include <algorithm>
#include <stdexcept>

namespace orlab {

IntervalFamily IntervalFamily::all(int n) {
    if (n < 1) throw std::invalid_argument("IntervalFamily: n must be >= 1");
    return IntervalFamily(Kind::all, n);
}

IntervalFamily IntervalFamily::dyadic_shifted(int n) {
    if (n < 1) throw std::invalid_argument("IntervalFamily: n must be >= 1");
    IntervalFamily fam(Kind::dyadic_shifted, n);
    fam.dyadic_list();  // built here so sharing across threads stays read-only
    return fam;
}

IntervalFamily IntervalFamily::auto_family(int n, int all_cutoff) {
    return n <= all_cutoff ? all(n) : dyadic_shifted(n);
}

const std::vector<IntervalFamily::Interval>& IntervalFamily::dyadic_list() const {
    if (!cache_.empty() || n_ == 0) return cache_;
    std::vector<Interval> out;
    for (int len = 1; len < 2 * n_; len *= 2) {
        const int L = std::min(len, n_);
        const int shifts[4] = {0, L / 4, L / 2, (3 * L) / 4};
        for (int s : shifts) {
            for (int start = s - L; start < n_; start += L) {
                const int lo = std::max(start, 0);
                const int hi = std::min(start + L, n_);
                if (hi - lo >= 1) out.push_back(Interval{lo, hi - lo});
            }
            if (L == 1) break;  // shifts collapse for unit cells
        }
        if (len >= n_) break;
    }
    // drop duplicates from clipped/overlapping shifted copies
    std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) {
        return a.lo != b.lo ? a.lo < b.lo : a.len < b.len;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Interval& a, const Interval& b) {
                              return a.lo == b.lo && a.len == b.len;
                          }),
              out.end());
    cache_ = std::move(out);
    return cache_;
}

}  // namespace orlab
