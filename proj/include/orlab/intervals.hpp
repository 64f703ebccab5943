#pragma once

#include <vector>

namespace orlab {

// Families of grid-aligned cell intervals [lo, lo+len). The quadratic family
// enumerates every interval; the dyadic family uses length-2^k blocks at
// offset 0 plus three shifted copies per scale, which approximates any sup
// over intervals within a fixed factor at a linearithmic cost.
class IntervalFamily {
public:
    struct Interval {
        int lo;
        int len;
    };

    enum class Kind { all, dyadic_shifted };

    static IntervalFamily all(int n);
    static IntervalFamily dyadic_shifted(int n);
    // all intervals up to the cutoff, dyadic + shifts above it
    static IntervalFamily auto_family(int n, int all_cutoff);

    Kind kind() const { return kind_; }
    int n() const { return n_; }

    template <typename F>
    void for_each(F&& fn) const {
        if (kind_ == Kind::all) {
            for (int lo = 0; lo < n_; ++lo)
                for (int hi = lo + 1; hi <= n_; ++hi) fn(Interval{lo, hi - lo});
        } else {
            for (const auto& iv : dyadic_list()) fn(iv);
        }
    }

    const std::vector<Interval>& dyadic_list() const;

private:
    IntervalFamily(Kind k, int n) : kind_(k), n_(n) {}
    Kind kind_;
    int n_;
    mutable std::vector<Interval> cache_;
};

}  // namespace orlab
