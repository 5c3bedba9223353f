#pragma once

#include <optional>
#include <string>

#include "pathwheel/rational.hpp"

namespace pw::formula {

// Closed-form Ramsey values for paths versus wheels, paths and cycles,
// plus the independent min-characterization oracle used to cross-check
// the wheel formula. Everything here is exact integer/rational work.

enum class Regime { TrivialN2, SmallWheel, MidWheel, LargeWheel };
enum class Branch { AlphaLeGamma, AlphaGtGamma, NotApplicable };

std::string to_string(Regime r);
std::string to_string(Branch b);

struct RamseyBreakdown {
    long long value = 0;
    Regime regime = Regime::LargeWheel;
    Rational alpha;     // (m-1)/(n-1), meaningful only for the large-wheel regime
    long long beta = 0; // ceil(alpha)
    Rational gamma;     // beta^2/(beta+1)
    Branch branch = Branch::NotApplicable;
    long long s = 0;    // m+n-value
};

struct IntervalSumQuery {
    long long x = 0; // candidate sum, >= 0
    long long lo = 0;
    long long hi = 0; // lo > hi is the empty interval
};

// n mod 2 for n >= 0.
int parity(long long n);

// Membership of x in the set of finite sums of integers drawn with
// repetition from {lo..hi} intersected with the positive integers.
// The empty sum 0 is always a member; an empty interval represents {0}.
bool interval_sum_member(const IntervalSumQuery& q);
bool interval_sum_member(long long x, long long lo, long long hi);

// Large-wheel value (m >= 2n+1) with the full alpha/beta/gamma breakdown.
// Branch test is done by integer cross-multiplication:
// alpha <= gamma  <=>  (m-1)(beta+1) <= (n-1)beta^2.
RamseyBreakdown t_large(long long n, long long m);

// Independent characterization of the same value: the least t that is not
// an interval sum from [t-m+1, n-1]. Scans t = 1,2,...; values past m+n
// would be an internal error.
long long t_min_char(long long n, long long m);

// Full dispatcher over all regimes (n >= 2, m >= 3).
RamseyBreakdown ramsey_path_wheel(long long n, long long m);

// Path versus path, symmetric in its arguments (a, b >= 2).
long long ramsey_path_path(long long a, long long b);

// Path versus cycle (n >= 2, m >= 3).
long long ramsey_path_cycle(long long n, long long m);

// Simplified closed form available when m mod (n-1) is 0, 1 or 2:
// residue 1 gives m+n-1, residues 0 and 2 give m+n-2. Empty otherwise.
// Requires n >= 3, m >= 2n+1.
std::optional<long long> residue_value(long long n, long long m);

// Upper bound on the deficiency s = m+n-t for n >= 5: floor((n+5)/4).
long long s_bound(long long n);

} // namespace pw::formula
