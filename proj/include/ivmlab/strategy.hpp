#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "ivmlab/bitstring.hpp"
#include "ivmlab/capital.hpp"
#include "ivmlab/wagers.hpp"

namespace ivmlab {

// Stake and side for the next position. The induced capital function is
// M(σa) = M(σ) + stake if a == side, M(σ) - stake otherwise, which is fair
// by construction.
struct ExactBet {
    Rational stake;
    int side = 1;
};

// Walks one path of the game tree. State after k advances is a pure
// function of the consumed prefix, so clones and fresh replays must agree.
class ExactCursor {
public:
    virtual ~ExactCursor() = default;
    virtual ExactBet bet() const = 0;
    virtual void advance(int bit) = 0;
    virtual const Rational& capital() const = 0;
    virtual std::unique_ptr<ExactCursor> clone() const = 0;
};

// Log-domain counterpart for real-valued strategies; the rule is the signed
// fraction of current capital staked on outcome 1.
class LogCursor {
public:
    virtual ~LogCursor() = default;
    virtual double stake_fraction() const = 0; // in [-1, 1]
    virtual void advance(int bit) = 0;
    virtual LogCapital capital() const = 0;
    virtual std::unique_ptr<LogCursor> clone() const = 0;
};

template <class Derived>
class ExactCursorBase : public ExactCursor {
public:
    std::unique_ptr<ExactCursor> clone() const final
    {
        return std::make_unique<Derived>(static_cast<const Derived&>(*this));
    }
};

template <class Derived>
class LogCursorBase : public LogCursor {
public:
    std::unique_ptr<LogCursor> clone() const final
    {
        return std::make_unique<Derived>(static_cast<const Derived&>(*this));
    }
};

// A betting strategy: initial capital plus a deterministic rule, packaged
// as a cursor factory. Metadata laces it into the checkers and games.
struct Strategy {
    std::string name;
    Flavor flavor = Flavor::exact;

    Rational initial_exact = 1;
    double initial_ln = 0.0;

    std::function<std::unique_ptr<ExactCursor>()> exact_factory;
    std::function<std::unique_ptr<LogCursor>()> log_factory;

    std::optional<WagerSet> wagers;        // declared wager set, when V-valued
    std::optional<long long> max_wager;    // declared max bet (finitely-valued)
    std::optional<std::size_t> trim_n0;    // set by the sqrt trimming wrapper

    std::unique_ptr<ExactCursor> cursor() const
    {
        if (flavor != Flavor::exact || !exact_factory)
            throw BadParams("strategy '" + name + "' has no exact cursor");
        return exact_factory();
    }

    std::unique_ptr<LogCursor> log_cursor() const
    {
        if (flavor != Flavor::log_domain || !log_factory)
            throw BadParams("strategy '" + name + "' has no log cursor");
        return log_factory();
    }
};

} // namespace ivmlab
