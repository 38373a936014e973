#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ivmlab/capital.hpp"
#include "ivmlab/errors.hpp"

namespace ivmlab {

// Allowed wager amounts. A strategy with wager set V may stake w in V while
// its capital is at least min-positive(V); below that it must abstain.
class WagerSet {
public:
    // all non-negative integer wagers (integer-valued strategies)
    static WagerSet integers()
    {
        WagerSet v;
        v.all_integers_ = true;
        v.zero_ = true;
        return v;
    }

    static WagerSet finite(std::vector<long long> positive, bool zero_allowed)
    {
        WagerSet v;
        v.zero_ = zero_allowed;
        std::sort(positive.begin(), positive.end());
        positive.erase(std::unique(positive.begin(), positive.end()), positive.end());
        if (positive.empty() || positive.front() < 1)
            throw BadParams("wager set needs at least one positive value, all >= 1");
        v.positive_ = std::move(positive);
        return v;
    }

    static WagerSet singleton(long long v) { return finite({v}, false); }

    bool is_all_integers() const { return all_integers_; }
    bool allows_zero() const { return zero_; }

    long long min_positive() const { return all_integers_ ? 1 : positive_.front(); }
    long long max_positive() const { return all_integers_ ? -1 : positive_.back(); } // -1 = unbounded

    bool contains(const Rational& wager) const
    {
        if (wager == 0)
            return zero_;
        if (!is_integer(wager) || wager < 0)
            return false;
        if (all_integers_)
            return true;
        if (wager > positive_.back())
            return false;
        long long w = rational_num(wager).convert_to<long long>();
        return std::binary_search(positive_.begin(), positive_.end(), w);
    }

    std::string to_string() const
    {
        if (all_integers_)
            return "integers";
        std::string s = "{";
        if (zero_)
            s += "0,";
        for (std::size_t i = 0; i < positive_.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(positive_[i]);
        }
        s += '}';
        return s;
    }

    bool operator==(const WagerSet&) const = default;

private:
    bool all_integers_ = false;
    bool zero_ = false;
    std::vector<long long> positive_;
};

} // namespace ivmlab
