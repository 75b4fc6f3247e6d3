#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bsi/cmatrix.hpp"

namespace bsi {

/// A point of the time lattice ((1/N) N0)^d: coordinate i is nums[i] / N.
///
/// Floor and fractional parts are exact integer quantities, so every branch
/// decision downstream ({s} + {t} >= 1 and friends) is free of rounding.
class GridTime {
public:
    GridTime(std::int64_t denom, std::vector<std::int64_t> nums);

    /// Parses "k1/N,k2/N,..." with a single shared denominator.
    static GridTime parse(std::string_view text);
    static GridTime zero(std::int64_t denom, std::size_t d) { return {denom, std::vector<std::int64_t>(d, 0)}; }
    /// n in axis `axis` (0-based), zero elsewhere.
    static GridTime axis_integer(std::int64_t denom, std::size_t d, std::size_t axis, std::int64_t n);

    std::int64_t denom() const noexcept { return denom_; }
    std::size_t dim() const noexcept { return nums_.size(); }
    const std::vector<std::int64_t>& nums() const noexcept { return nums_; }
    std::int64_t num(std::size_t i) const { return nums_.at(i); }

    std::int64_t floor(std::size_t i) const { return nums_.at(i) / denom_; }
    /// Numerator of the fractional part, in [0, N).
    std::int64_t frac_num(std::size_t i) const { return nums_.at(i) % denom_; }
    double value(std::size_t i) const { return static_cast<double>(nums_.at(i)) / static_cast<double>(denom_); }

    std::string to_string() const;

    friend GridTime operator+(const GridTime& a, const GridTime& b);
    friend bool operator==(const GridTime& a, const GridTime& b) = default;

private:
    std::int64_t denom_;
    std::vector<std::int64_t> nums_;
};

/// Lexicographic enumeration of T_N^d with axis 0 slowest.
class TorusBasis {
public:
    TorusBasis(std::int64_t n, std::size_t d);

    std::int64_t n() const noexcept { return n_; }
    std::size_t d() const noexcept { return d_; }
    std::size_t size() const noexcept { return size_; }

    std::size_t index(const std::vector<std::int64_t>& coords) const;
    std::vector<std::int64_t> coords(std::size_t index) const;

private:
    std::int64_t n_;
    std::size_t d_;
    std::size_t size_;
};

/// Koopman shift by k/N along `axis` (1-based): delta_m -> delta_{m + k e_axis mod N}.
CMatrix koopman_u(std::int64_t n, std::size_t d, std::size_t axis, std::int64_t k);

/// Indicator projection along `axis` (1-based): keeps delta_m iff m_axis < N - (k mod N).
CMatrix projector_p(std::int64_t n, std::size_t d, std::size_t axis, std::int64_t k);

/// Right-hand operator of the commutation relation P(s)U(t) = U(t) Q(s,t), d = 1.
CMatrix bscr_q(std::int64_t n, std::int64_t s_num, std::int64_t t_num);

/// ||P(s)U(t) - U(t)Q(s,t)|| for s = s_num/N, t = t_num/N on l2(T_N).
double bscr_check(std::int64_t n, std::int64_t s_num, std::int64_t t_num);

struct TracePoint {
    double theta;
    cplx value;
};

/// Samples of U(t)* P(s) U(t) f on the grid theta_m = 2 pi m / N.
std::vector<TracePoint> bscr_trace(std::int64_t n, std::int64_t s_num, std::int64_t t_num,
                                   const std::vector<cplx>& f);

/// CSV with header "theta,re,im", one row per grid point.
std::string trace_to_csv(const std::vector<TracePoint>& rows);

}  // namespace bsi
