#pragma once

#include <cstddef>
#include <vector>

#include "ivmlab/errors.hpp"

namespace ivmlab {

struct Interval {
    std::size_t start = 0;
    std::size_t length = 0;
    std::size_t end() const { return start + length; }
    bool operator==(const Interval&) const = default;
};

// Contiguous, disjoint intervals covering [0, covered()). The standard
// generator emits, for each n >= 1 in order, exactly 2^n intervals of
// length n, truncated to the intervals that fit below the horizon.
class IntervalPartition {
public:
    static IntervalPartition standard(std::size_t horizon)
    {
        IntervalPartition p;
        p.generator_ = "standard";
        std::size_t start = 0;
        for (std::size_t n = 1;; ++n) {
            std::size_t count = std::size_t(1) << n;
            for (std::size_t k = 0; k < count; ++k) {
                if (start + n > horizon)
                    return p;
                p.intervals_.push_back({start, n});
                start += n;
            }
        }
    }

    static IntervalPartition from_intervals(std::vector<Interval> intervals)
    {
        IntervalPartition p;
        p.generator_ = "custom";
        std::size_t expect = 0;
        for (const Interval& iv : intervals) {
            if (iv.start != expect)
                throw BadParams("intervals must be contiguous from 0");
            expect = iv.end();
        }
        p.intervals_ = std::move(intervals);
        return p;
    }

    const std::vector<Interval>& intervals() const { return intervals_; }
    std::size_t covered() const { return intervals_.empty() ? 0 : intervals_.back().end(); }
    const std::string& generator() const { return generator_; }

private:
    std::vector<Interval> intervals_;
    std::string generator_;
};

} // namespace ivmlab
