#include "pathwheel/formula.hpp"

#include <stdexcept>

namespace pw::formula {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

long long ceil_div(long long a, long long b) { // a >= 0, b >= 1
    return (a + b - 1) / b;
}

} // namespace

std::string to_string(Regime r) {
    switch (r) {
        case Regime::TrivialN2: return "trivial-n2";
        case Regime::SmallWheel: return "small-wheel";
        case Regime::MidWheel: return "mid-wheel";
        case Regime::LargeWheel: return "large-wheel";
    }
    return "?";
}

std::string to_string(Branch b) {
    switch (b) {
        case Branch::AlphaLeGamma: return "alpha-le-gamma";
        case Branch::AlphaGtGamma: return "alpha-gt-gamma";
        case Branch::NotApplicable: return "not-applicable";
    }
    return "?";
}

int parity(long long n) {
    require(n >= 0, "parity: n must be nonnegative");
    return static_cast<int>(n % 2);
}

bool interval_sum_member(long long x, long long lo, long long hi) {
    require(x >= 0, "interval_sum_member: x must be nonnegative");
    if (x == 0) return true; // the empty sum
    if (hi < 1) return false;
    long long effective_lo = lo < 1 ? 1 : lo;
    if (effective_lo > hi) return false;
    // x is a sum of k parts from [effective_lo, hi] for some k >= 1 iff
    // k*effective_lo <= x <= k*hi; the least k that can reach x is
    // ceil(x/hi), and growing k only raises the lower edge.
    return ceil_div(x, hi) * effective_lo <= x;
}

bool interval_sum_member(const IntervalSumQuery& q) {
    return interval_sum_member(q.x, q.lo, q.hi);
}

RamseyBreakdown t_large(long long n, long long m) {
    require(n >= 2, "t_large: n must be at least 2");
    require(m >= 2 * n + 1, "t_large: m must be at least 2n+1");
    RamseyBreakdown b;
    b.regime = Regime::LargeWheel;
    b.alpha = Rational(m - 1, n - 1);
    b.beta = b.alpha.ceil();
    b.gamma = Rational(b.beta * b.beta, b.beta + 1);
    // alpha <= gamma  <=>  (m-1)(beta+1) <= (n-1)beta^2, all well inside int64
    if ((m - 1) * (b.beta + 1) <= (n - 1) * b.beta * b.beta) {
        b.branch = Branch::AlphaLeGamma;
        b.value = (n - 1) * b.beta + 1;
    } else {
        b.branch = Branch::AlphaGtGamma;
        b.value = (m - 1) / b.beta + m;
    }
    b.s = m + n - b.value;
    return b;
}

long long t_min_char(long long n, long long m) {
    require(n >= 2, "t_min_char: n must be at least 2");
    require(m >= 2 * n + 1, "t_min_char: m must be at least 2n+1");
    for (long long t = 1; t <= m + n; ++t)
        if (!interval_sum_member(t, t - m + 1, n - 1)) return t;
    throw std::logic_error("t_min_char: no value up to m+n, impossible");
}

RamseyBreakdown ramsey_path_wheel(long long n, long long m) {
    require(n >= 2, "ramsey_path_wheel: n must be at least 2");
    require(m >= 3, "ramsey_path_wheel: m must be at least 3");
    if (n == 2) {
        // K_{1,m} colorings: m vertices with no edge avoid P_2, and the
        // complement K_m has no W_m (needs m+1 vertices); m+1 forces one.
        RamseyBreakdown b;
        b.regime = Regime::TrivialN2;
        b.branch = Branch::NotApplicable;
        b.value = m + 1;
        b.s = m + n - b.value;
        return b;
    }
    if (m >= 2 * n + 1) return t_large(n, m);
    RamseyBreakdown b;
    b.branch = Branch::NotApplicable;
    if (m <= n + 1) {
        b.regime = Regime::SmallWheel;
        b.value = (m % 2 == 1) ? 3 * n - 2 : 2 * n - 1;
    } else {
        b.regime = Regime::MidWheel;
        b.value = (m % 2 == 1) ? 3 * n - 2 : m + n - 2;
    }
    b.s = m + n - b.value;
    return b;
}

long long ramsey_path_path(long long a, long long b) {
    require(a >= 2 && b >= 2, "ramsey_path_path: both orders must be at least 2");
    long long n = a < b ? a : b;
    long long m = a < b ? b : a;
    return m + n / 2 - 1;
}

long long ramsey_path_cycle(long long n, long long m) {
    require(n >= 2, "ramsey_path_cycle: n must be at least 2");
    require(m >= 3, "ramsey_path_cycle: m must be at least 3");
    bool odd = (m % 2 == 1);
    if (n >= m) return odd ? 2 * n - 1 : n + m / 2 - 1;
    long long base = m + n / 2 - 1;
    if (odd && 2 * n - 1 > base) return 2 * n - 1;
    return base;
}

std::optional<long long> residue_value(long long n, long long m) {
    require(n >= 3, "residue_value: n must be at least 3");
    require(m >= 2 * n + 1, "residue_value: m must be at least 2n+1");
    long long r = m % (n - 1);
    if (r == 1) return m + n - 1;
    if (r == 0 || r == 2) return m + n - 2;
    return std::nullopt;
}

long long s_bound(long long n) {
    require(n >= 5, "s_bound: n must be at least 5");
    return (n + 5) / 4;
}

} // namespace pw::formula
