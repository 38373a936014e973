#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ivmlab/errors.hpp"

namespace ivmlab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r)
{
    return boost::multiprecision::denominator(r) == 1;
}

inline Integer rational_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer rational_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational pow2_rational(std::size_t k)
{
    return Rational(Integer(1) << k);
}

inline Rational parse_rational(const std::string& s)
{
    try {
        Rational r(s);
        return r;
    } catch (const std::exception&) {
        throw BadParams("cannot parse rational '" + s + "'");
    }
}

inline std::string rational_to_string(const Rational& r)
{
    if (is_integer(r))
        return rational_num(r).str();
    return rational_num(r).str() + "/" + rational_den(r).str();
}

// Capital tracked as ln(value). value == 0 is a tagged state, not a number;
// ln_with_sentinel() renders it as -1 (the convention used by the
// drift estimators), everything else keeps genuine logs.
struct LogCapital {
    double ln = 0.0;
    bool zero = false;

    static LogCapital one() { return LogCapital{0.0, false}; }
    static LogCapital from_ln(double l) { return LogCapital{l, false}; }
    static LogCapital zero_value() { return LogCapital{0.0, true}; }

    double value() const { return zero ? 0.0 : std::exp(ln); }
    double ln_with_sentinel() const { return zero ? -1.0 : ln; }

    // multiply the underlying value by f >= 0
    void apply_factor(double f)
    {
        if (zero)
            return;
        if (f <= 0.0) {
            zero = true;
            ln = 0.0;
            return;
        }
        ln += std::log(f);
    }
};

enum class Flavor { exact, log_domain };

// One capital value, exact or log-domain, for traces and serialization.
struct Capital {
    Flavor flavor = Flavor::exact;
    Rational exact;
    LogCapital logv;

    Capital() = default;
    explicit Capital(Rational v) : flavor(Flavor::exact), exact(std::move(v)) {}
    explicit Capital(LogCapital v) : flavor(Flavor::log_domain), logv(v) {}

    double approx() const
    {
        return flavor == Flavor::exact ? to_double(exact) : logv.value();
    }
};

inline std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// columns: n,capital_exact_num,capital_exact_den,log_capital
// (empty fields for the flavor that does not apply)
inline void write_trace_csv(std::ostream& os, const std::vector<Capital>& trace)
{
    os << "n,capital_exact_num,capital_exact_den,log_capital\n";
    for (std::size_t n = 0; n < trace.size(); ++n) {
        const Capital& c = trace[n];
        os << n << ',';
        if (c.flavor == Flavor::exact)
            os << rational_num(c.exact) << ',' << rational_den(c.exact) << ',';
        else
            os << ",," << format_double(c.logv.ln_with_sentinel());
        os << '\n';
    }
}

} // namespace ivmlab
