#pragma once

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

#include "ivmlab/bitstring.hpp"
#include "ivmlab/rng.hpp"

namespace ivmlab {

// One enumerated string together with the stage at which it appears.
struct StagedString {
    BitString s;
    std::size_t stage = 0;
    bool operator==(const StagedString&) const = default;
};

// Finite staged family of string sets W_0..W_{count-1}: a desk-scale stand-in
// for an effective enumeration. Membership at stage t is monotone in t.
class SimEnumeration {
public:
    SimEnumeration() = default;
    explicit SimEnumeration(std::vector<std::vector<StagedString>> sets) : sets_(std::move(sets)) {}

    static SimEnumeration empty_sets(std::size_t count)
    {
        return SimEnumeration(std::vector<std::vector<StagedString>>(count));
    }

    static SimEnumeration seeded(std::uint64_t seed, std::size_t indices, std::size_t max_strings,
        std::size_t max_len = 8, std::size_t max_stage = 24)
    {
        std::vector<std::vector<StagedString>> sets(indices);
        for (std::size_t e = 0; e < indices; ++e) {
            CounterRng rng(seed, e);
            std::size_t count = 1 + rng.below(max_strings);
            for (std::size_t i = 0; i < count; ++i) {
                StagedString item;
                std::size_t len = 1 + rng.below(max_len);
                for (std::size_t b = 0; b < len; ++b)
                    item.s.push_back((rng.next() & 3) != 0); // bias toward 1s
                item.stage = rng.below(max_stage + 1);
                sets[e].push_back(std::move(item));
            }
        }
        return SimEnumeration(std::move(sets));
    }

    std::size_t count() const { return sets_.size(); }
    const std::vector<StagedString>& set(std::size_t e) const { return sets_.at(e); }

    // Earliest length k such that tau|k is in F_e, i.e. min over enumerated
    // s that are prefixes of tau of max(|s|, stage(s)); SIZE_MAX when none.
    std::size_t member_from(std::size_t e, const BitString& tau) const
    {
        std::size_t best = npos;
        for (const StagedString& item : sets_.at(e)) {
            if (!item.s.is_prefix_of(tau))
                continue;
            std::size_t from = std::max(item.s.size(), item.stage);
            best = std::min(best, from);
        }
        return best;
    }

    // text format, one line per string: "<index> <stage> <bits>"; '#' comments
    void save(std::ostream& os) const
    {
        for (std::size_t e = 0; e < sets_.size(); ++e)
            for (const StagedString& item : sets_[e])
                os << e << ' ' << item.stage << ' ' << (item.s.empty() ? "-" : item.s.to_string()) << '\n';
    }

    static SimEnumeration load(std::istream& is)
    {
        std::vector<std::vector<StagedString>> sets;
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty() || line[0] == '#')
                continue;
            std::istringstream ls(line);
            std::size_t e, stage;
            std::string bits;
            if (!(ls >> e >> stage >> bits))
                throw BadParams("bad enumeration line: " + line);
            if (sets.size() <= e)
                sets.resize(e + 1);
            sets[e].push_back({bits == "-" ? BitString() : BitString::from_string(bits), stage});
        }
        return SimEnumeration(std::move(sets));
    }

    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

private:
    std::vector<std::vector<StagedString>> sets_;
};

struct FMembership {
    bool in_f = false;     // tau extends some string enumerated by stage |tau|
    bool in_f_min = false; // in_f and no strict prefix of tau is
};

// F_e membership with the stage cut at |tau|. F_e is closed upward, so a
// strict prefix is in F_e exactly when membership starts before |tau|.
inline FMembership f_sets(const SimEnumeration& en, std::size_t e, const BitString& tau)
{
    std::size_t from = en.member_from(e, tau);
    return FMembership{from <= tau.size(), from == tau.size()};
}

// permit(ε) = 4; permit(σa) = min({permit(σ)+1} ∪ {4e+4 : σa in F_e^min})
inline long long permit_value(const SimEnumeration& en, const BitString& sigma)
{
    long long permit = 4;
    BitString prefix;
    prefix.reserve(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        prefix.push_back(sigma[i]);
        long long next = permit + 1;
        for (std::size_t e = 0; e < en.count(); ++e)
            if (f_sets(en, e, prefix).in_f_min)
                next = std::min(next, 4 * static_cast<long long>(e) + 4);
        permit = next;
    }
    return permit;
}

} // namespace ivmlab
