#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ivmlab/bitstring.hpp"
#include "ivmlab/capital.hpp"
#include "ivmlab/strategy.hpp"

namespace ivmlab {

namespace detail {

    inline void validate_exact_bet(const ExactBet& b, const Rational& capital, std::size_t at)
    {
        if (b.stake < 0)
            throw StakeExceedsCapital("negative stake at position " + std::to_string(at));
        if (b.stake > capital)
            throw StakeExceedsCapital("stake " + rational_to_string(b.stake) + " exceeds capital "
                + rational_to_string(capital) + " at position " + std::to_string(at));
        if (b.side != 0 && b.side != 1)
            throw BadParams("bet side must be 0 or 1");
    }

    inline void validate_fraction(double rho, std::size_t at)
    {
        if (!(rho >= -1.0 && rho <= 1.0))
            throw StakeExceedsCapital("stake fraction " + std::to_string(rho)
                + " outside [-1,1] at position " + std::to_string(at));
    }

    // relative closeness with graceful zero handling, for log-domain checks
    inline bool close_rel(double a, double b, double tol)
    {
        double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
        return std::fabs(a - b) <= tol * scale;
    }

} // namespace detail

// Capital trace M(x|0), ..., M(x|n) under the strategy's induced capital
// function. Exact strategies yield exact values.
inline std::vector<Capital> evaluate_capital(const Strategy& s, const BitString& x)
{
    std::vector<Capital> trace;
    trace.reserve(x.size() + 1);
    if (s.flavor == Flavor::exact) {
        auto cur = s.cursor();
        trace.emplace_back(cur->capital());
        for (std::size_t i = 0; i < x.size(); ++i) {
            detail::validate_exact_bet(cur->bet(), cur->capital(), i);
            cur->advance(x[i]);
            trace.emplace_back(cur->capital());
        }
    } else {
        auto cur = s.log_cursor();
        trace.emplace_back(cur->capital());
        for (std::size_t i = 0; i < x.size(); ++i) {
            detail::validate_fraction(cur->stake_fraction(), i);
            cur->advance(x[i]);
            trace.emplace_back(cur->capital());
        }
    }
    return trace;
}

struct CheckResult {
    bool ok = true;
    std::string witness; // offending prefix, when !ok
    std::string detail;
};

// Verifies M(σ) == (M(σ0) + M(σ1)) / 2 for every |σ| < depth, and that
// cursor state replayed fresh from the root matches the cloned state
// (rule is a pure function of the prefix). Exact flavor: exact equality;
// log flavor: relative tolerance.
inline CheckResult check_fairness(const Strategy& s, std::size_t depth, double log_tol = 1e-9)
{
    CheckResult res;
    BitString path;

    if (s.flavor == Flavor::exact) {
        auto fresh_capital = [&](const BitString& p) {
            auto c = s.cursor();
            for (std::size_t i = 0; i < p.size(); ++i)
                c->advance(p[i]);
            return c->capital();
        };
        std::function<bool(const ExactCursor&)> walk = [&](const ExactCursor& node) -> bool {
            if (path.size() >= depth) {
                if (node.capital() != fresh_capital(path)) {
                    res = {false, path.to_string(), "cloned state diverges from fresh replay"};
                    return false;
                }
                return true;
            }
            Rational sum = 0;
            std::unique_ptr<ExactCursor> kids[2];
            for (int a = 0; a < 2; ++a) {
                kids[a] = node.clone();
                kids[a]->advance(a);
                sum += kids[a]->capital();
            }
            if (sum != 2 * node.capital()) {
                res = {false, path.to_string(),
                    "M(s0)+M(s1) = " + rational_to_string(sum) + " != 2*M(s) = "
                        + rational_to_string(2 * node.capital())};
                return false;
            }
            for (int a = 0; a < 2; ++a) {
                path.push_back(a);
                bool ok = walk(*kids[a]);
                path = path.prefix(path.size() - 1);
                if (!ok)
                    return false;
            }
            return true;
        };
        auto root = s.cursor();
        walk(*root);
    } else {
        std::function<bool(const LogCursor&)> walk = [&](const LogCursor& node) -> bool {
            if (path.size() >= depth)
                return true;
            std::unique_ptr<LogCursor> kids[2];
            double sum = 0;
            for (int a = 0; a < 2; ++a) {
                kids[a] = node.clone();
                kids[a]->advance(a);
                sum += kids[a]->capital().value();
            }
            if (!detail::close_rel(sum / 2.0, node.capital().value(), log_tol)) {
                res = {false, path.to_string(), "average of children off by more than tolerance"};
                return false;
            }
            for (int a = 0; a < 2; ++a) {
                path.push_back(a);
                bool ok = walk(*kids[a]);
                path = path.prefix(path.size() - 1);
                if (!ok)
                    return false;
            }
            return true;
        };
        auto root = s.log_cursor();
        walk(*root);
    }
    return res;
}

// The V-valued clauses, checked on the whole tree up to depth:
//   capital <  min(V): the wager must be 0 (forced abstention)
//   capital >= min(V): the wager must belong to V
inline CheckResult check_v_valued(const Strategy& s, const WagerSet& v, std::size_t depth)
{
    if (s.flavor != Flavor::exact)
        throw BadParams("check_v_valued needs an exact-flavor strategy");
    CheckResult res;
    BitString path;
    std::function<bool(const ExactCursor&)> walk = [&](const ExactCursor& node) -> bool {
        if (path.size() >= depth)
            return true;
        auto child = node.clone();
        child->advance(1);
        Rational wager = child->capital() - node.capital();
        if (wager < 0)
            wager = -wager;
        if (node.capital() < v.min_positive()) {
            if (wager != 0) {
                res = {false, path.to_string(),
                    "capital " + rational_to_string(node.capital()) + " below min(V)="
                        + std::to_string(v.min_positive()) + " but wagered " + rational_to_string(wager)};
                return false;
            }
        } else if (!v.contains(wager)) {
            res = {false, path.to_string(),
                "wager " + rational_to_string(wager) + " not in V=" + v.to_string()};
            return false;
        }
        auto child0 = node.clone();
        child0->advance(0);
        for (int a = 0; a < 2; ++a) {
            path.push_back(a);
            bool ok = walk(a == 0 ? *child0 : *child);
            path = path.prefix(path.size() - 1);
            if (!ok)
                return false;
        }
        return true;
    };
    auto root = s.cursor();
    walk(*root);
    return res;
}

// Sum over all length-n words of 2^-n * M(σ); equals M(ε) for any fair rule.
inline Capital mean_preservation(const Strategy& s, std::size_t n)
{
    if (n > 16)
        throw BadParams("mean_preservation limited to n <= 16");
    if (s.flavor == Flavor::exact) {
        Rational sum = 0;
        std::function<void(const ExactCursor&, std::size_t)> walk = [&](const ExactCursor& node, std::size_t left) {
            if (left == 0) {
                sum += node.capital();
                return;
            }
            for (int a = 0; a < 2; ++a) {
                auto kid = node.clone();
                kid->advance(a);
                walk(*kid, left - 1);
            }
        };
        auto root = s.cursor();
        walk(*root, n);
        return Capital(sum / pow2_rational(n));
    }
    double sum = 0;
    std::function<void(const LogCursor&, std::size_t)> walk = [&](const LogCursor& node, std::size_t left) {
        if (left == 0) {
            sum += node.capital().value();
            return;
        }
        for (int a = 0; a < 2; ++a) {
            auto kid = node.clone();
            kid->advance(a);
            walk(*kid, left - 1);
        }
    };
    auto root = s.log_cursor();
    walk(*root, n);
    double mean = sum / std::ldexp(1.0, static_cast<int>(n));
    return Capital(mean > 0 ? LogCapital::from_ln(std::log(mean)) : LogCapital::zero_value());
}

// A deterministic bit supplier; limit == npos means unbounded.
struct BitSource {
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
    std::string name;
    std::size_t limit = npos;
    std::function<int(std::size_t)> bit;
};

inline BitSource source_from_bits(BitString x)
{
    auto data = std::make_shared<BitString>(std::move(x));
    return BitSource{"bits", data->size(), [data](std::size_t i) { return data->at(i); }};
}

inline BitSource source_all(int b)
{
    return BitSource{b ? "ones" : "zeros", BitSource::npos, [b](std::size_t) { return b; }};
}

inline BitSource source_alternating()
{
    return BitSource{"alternating01", BitSource::npos, [](std::size_t i) { return static_cast<int>(i & 1); }};
}

// Non-decreasing unbounded integer function, by closed form or table.
struct OrderFn {
    std::string name;
    std::function<long long(std::size_t)> value;
};

inline OrderFn order_log2()
{
    return {"log2", [](std::size_t n) {
                long long v = 0;
                for (std::size_t x = n; x > 1; x >>= 1)
                    ++v;
                return v;
            }};
}

inline OrderFn order_sqrt()
{
    return {"sqrt", [](std::size_t n) { return static_cast<long long>(std::sqrt(static_cast<double>(n))); }};
}

inline OrderFn order_table(std::vector<long long> t)
{
    auto data = std::make_shared<std::vector<long long>>(std::move(t));
    return {"table", [data](std::size_t n) { return (*data)[std::min(n, data->size() - 1)]; }};
}

struct PlainAtHorizon {
    Rational threshold;
};
struct SchnorrOrder {
    OrderFn order;
    std::size_t count = 1; // surrogate for "infinitely many"
};
struct KurtzOrder {
    OrderFn order;
};
using SuccessCriterion = std::variant<PlainAtHorizon, SchnorrOrder, KurtzOrder>;

struct GameOutcome {
    std::vector<Capital> trace; // length horizon + 1
    bool success = false;
    std::optional<std::size_t> broke_at; // capital below min wager from here on
};

// Plays the strategy against horizon bits from the source and applies the
// finite-horizon success surrogate.
inline GameOutcome run_game(const Strategy& s, const BitSource& source, std::size_t horizon,
    const SuccessCriterion& criterion)
{
    if (horizon < 1)
        throw BadParams("run_game needs horizon >= 1");
    if (source.limit != BitSource::npos && source.limit < horizon)
        throw SourceExhausted("source '" + source.name + "' has only " + std::to_string(source.limit)
            + " bits, horizon " + std::to_string(horizon));

    GameOutcome out;
    BitString played;
    played.reserve(horizon);
    for (std::size_t i = 0; i < horizon; ++i)
        played.push_back(source.bit(i));
    out.trace = evaluate_capital(s, played);

    auto value_at = [&](std::size_t n) { return out.trace[n].approx(); };

    struct Visitor {
        const GameOutcome& out;
        std::function<double(std::size_t)> value_at;

        bool operator()(const PlainAtHorizon& c) const
        {
            for (const Capital& v : out.trace) {
                if (v.flavor == Flavor::exact) {
                    if (v.exact >= c.threshold)
                        return true;
                } else if (!v.logv.zero && v.logv.value() >= to_double(c.threshold)) {
                    return true;
                }
            }
            return false;
        }
        bool operator()(const SchnorrOrder& c) const
        {
            std::size_t hits = 0;
            long long prev = std::numeric_limits<long long>::min();
            for (std::size_t n = 0; n < out.trace.size(); ++n) {
                long long f = c.order.value(n);
                if (f < prev)
                    throw BadParams("order function '" + c.order.name + "' decreases at n=" + std::to_string(n));
                prev = f;
                if (static_cast<double>(f) < value_at(n))
                    ++hits;
            }
            return hits >= c.count;
        }
        bool operator()(const KurtzOrder& c) const
        {
            long long prev = std::numeric_limits<long long>::min();
            for (std::size_t n = 0; n < out.trace.size(); ++n) {
                long long f = c.order.value(n);
                if (f < prev)
                    throw BadParams("order function '" + c.order.name + "' decreases at n=" + std::to_string(n));
                prev = f;
                if (!(static_cast<double>(f) < value_at(n)))
                    return false;
            }
            return true;
        }
    };
    out.success = std::visit(Visitor{out, value_at}, criterion);

    if (s.flavor == Flavor::exact && s.wagers) {
        Rational minv(s.wagers->min_positive());
        std::size_t last_live = out.trace.size();
        for (std::size_t n = 0; n < out.trace.size(); ++n)
            if (out.trace[n].exact >= minv)
                last_live = n;
        if (last_live + 1 < out.trace.size())
            out.broke_at = last_live + 1;
        else if (last_live == out.trace.size()) // never had min capital
            out.broke_at = 0;
    }
    return out;
}

struct LlnReport {
    double max_tail_deviation = 0.0; // max over window of |#zeros(x|n) - n/2| / n
    std::size_t at_n = 0;
    std::size_t window_start = 0;
    double epsilon = 0.05;
    bool pass = false;
};

// Law-of-large-numbers deviation over the final quarter of the word.
inline LlnReport check_lln(const BitString& x, double epsilon = 0.05)
{
    if (x.empty())
        throw BadParams("check_lln needs a nonempty word");
    LlnReport rep;
    rep.epsilon = epsilon;
    rep.window_start = std::max<std::size_t>(1, (3 * x.size()) / 4);
    std::size_t zeros = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        zeros += (x[i] == 0);
        std::size_t n = i + 1;
        if (n < rep.window_start)
            continue;
        double dev = std::fabs(static_cast<double>(zeros) - n / 2.0) / static_cast<double>(n);
        if (dev > rep.max_tail_deviation) {
            rep.max_tail_deviation = dev;
            rep.at_n = n;
        }
    }
    rep.pass = rep.max_tail_deviation <= epsilon;
    return rep;
}

// True iff x agrees with `bit` on every listed position, i.e. the list
// witnesses a monochromatic set inside x (refuting bi-immunity).
inline bool check_bi_immune_witness(const BitString& x, const std::vector<std::size_t>& positions, int bit)
{
    for (std::size_t p : positions) {
        if (p >= x.size())
            throw BadParams("witness position " + std::to_string(p) + " outside word of length "
                + std::to_string(x.size()));
        if (x[p] != bit)
            return false;
    }
    return true;
}

} // namespace ivmlab
