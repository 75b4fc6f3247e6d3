#include "bsi/torus.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bsi/errors.hpp"
#include "bsi/linalg.hpp"
#include "bsi/limits.hpp"

namespace bsi {

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
    const std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

std::int64_t parse_int(std::string_view s, std::string_view context) {
    std::int64_t v = 0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || s.empty()) {
        throw InputError("grid time: cannot parse integer '" + std::string(s) + "' in '" + std::string(context) + "'");
    }
    return v;
}

void check_axis(std::size_t d, std::size_t axis) {
    if (d == 0) throw InputError("torus dimension d must be at least 1");
    if (axis < 1 || axis > d) {
        throw InputError("axis " + std::to_string(axis) + " out of range 1.." + std::to_string(d));
    }
}

// Reusable shift/project builder: entries are exactly 0 or 1.
CMatrix shift_matrix(const TorusBasis& basis, std::size_t axis0, std::int64_t k) {
    const std::size_t n = basis.size();
    CMatrix u(n, n);
    const std::int64_t shift = mod_floor(k, basis.n());
    for (std::size_t src = 0; src < n; ++src) {
        auto c = basis.coords(src);
        c[axis0] = (c[axis0] + shift) % basis.n();
        u(basis.index(c), src) = 1.0;
    }
    return u;
}

}  // namespace

GridTime::GridTime(std::int64_t denom, std::vector<std::int64_t> nums) : denom_(denom), nums_(std::move(nums)) {
    if (denom_ < 1) throw InputError("grid time denominator must be >= 1, got " + std::to_string(denom_));
    if (nums_.empty()) throw InputError("grid time needs at least one coordinate");
    for (auto k : nums_) {
        if (k < 0) throw InputError("grid time numerators must be nonnegative, got " + std::to_string(k));
    }
}

GridTime GridTime::parse(std::string_view text) {
    std::vector<std::int64_t> nums;
    std::int64_t denom = -1;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string_view item =
            text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        const std::size_t slash = item.find('/');
        if (slash == std::string_view::npos) {
            throw InputError("grid time item '" + std::string(item) + "' is not of the form k/N");
        }
        const std::int64_t k = parse_int(item.substr(0, slash), text);
        const std::int64_t n = parse_int(item.substr(slash + 1), text);
        if (denom == -1) {
            denom = n;
        } else if (n != denom) {
            throw InputError("grid time '" + std::string(text) + "' mixes denominators " + std::to_string(denom) +
                             " and " + std::to_string(n));
        }
        nums.push_back(k);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return GridTime(denom, std::move(nums));
}

GridTime GridTime::axis_integer(std::int64_t denom, std::size_t d, std::size_t axis, std::int64_t n) {
    std::vector<std::int64_t> nums(d, 0);
    nums.at(axis) = n * denom;
    return GridTime(denom, std::move(nums));
}

std::string GridTime::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < nums_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(nums_[i]) + "/" + std::to_string(denom_);
    }
    return out;
}

GridTime operator+(const GridTime& a, const GridTime& b) {
    if (a.denom_ != b.denom_ || a.dim() != b.dim()) {
        throw InputError("cannot add grid times " + a.to_string() + " and " + b.to_string());
    }
    std::vector<std::int64_t> nums(a.dim());
    for (std::size_t i = 0; i < nums.size(); ++i) nums[i] = a.nums_[i] + b.nums_[i];
    return GridTime(a.denom_, std::move(nums));
}

TorusBasis::TorusBasis(std::int64_t n, std::size_t d) : n_(n), d_(d), size_(0) {
    if (n < 1) throw InputError("grid resolution N must be >= 1");
    if (d < 1) throw InputError("torus dimension d must be >= 1");
    std::size_t sz = 0;
    if (!checked_pow(static_cast<std::size_t>(n), d, max_matrix_entries(), sz)) {
        throw InputError("N^d = " + std::to_string(n) + "^" + std::to_string(d) +
                         " exceeds the size cap; reduce N or d, or raise BSI_MAX_ENTRIES");
    }
    size_ = sz;
}

std::size_t TorusBasis::index(const std::vector<std::int64_t>& coords) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < d_; ++i) idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(mod_floor(coords[i], n_));
    return idx;
}

std::vector<std::int64_t> TorusBasis::coords(std::size_t index) const {
    std::vector<std::int64_t> c(d_);
    for (std::size_t i = d_; i-- > 0;) {
        c[i] = static_cast<std::int64_t>(index % static_cast<std::size_t>(n_));
        index /= static_cast<std::size_t>(n_);
    }
    return c;
}

CMatrix koopman_u(std::int64_t n, std::size_t d, std::size_t axis, std::int64_t k) {
    check_axis(d, axis);
    const TorusBasis basis(n, d);
    check_entry_budget(basis.size(), basis.size(), "koopman_u");
    return shift_matrix(basis, axis - 1, k);
}

CMatrix projector_p(std::int64_t n, std::size_t d, std::size_t axis, std::int64_t k) {
    check_axis(d, axis);
    const TorusBasis basis(n, d);
    check_entry_budget(basis.size(), basis.size(), "projector_p");
    const std::int64_t cutoff = n - mod_floor(k, n);
    CMatrix p(basis.size(), basis.size());
    for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        if (basis.coords(idx)[axis - 1] < cutoff) p(idx, idx) = 1.0;
    }
    return p;
}

CMatrix bscr_q(std::int64_t n, std::int64_t s_num, std::int64_t t_num) {
    const CMatrix pt = projector_p(n, 1, 1, t_num);
    const CMatrix pst = projector_p(n, 1, 1, s_num + t_num);
    const bool below_one = mod_floor(s_num, n) + mod_floor(t_num, n) < n;
    if (below_one) return CMatrix::identity(static_cast<std::size_t>(n)) - (pt - pst);
    return pst - pt;
}

double bscr_check(std::int64_t n, std::int64_t s_num, std::int64_t t_num) {
    const CMatrix u = koopman_u(n, 1, 1, t_num);
    const CMatrix lhs = projector_p(n, 1, 1, s_num) * u;
    const CMatrix rhs = u * bscr_q(n, s_num, t_num);
    const CMatrix diff = lhs - rhs;
    return diff.max_abs() == 0.0 ? 0.0 : op_norm(diff);
}

std::vector<TracePoint> bscr_trace(std::int64_t n, std::int64_t s_num, std::int64_t t_num,
                                   const std::vector<cplx>& f) {
    if (f.size() != static_cast<std::size_t>(n)) {
        throw InputError("bscr_trace: f has length " + std::to_string(f.size()) + ", expected N = " +
                         std::to_string(n));
    }
    const CMatrix u = koopman_u(n, 1, 1, t_num);
    const CMatrix op = u.adjoint() * projector_p(n, 1, 1, s_num) * u;
    const auto g = bsi::apply(op, f);
    std::vector<TracePoint> rows;
    rows.reserve(g.size());
    for (std::size_t m = 0; m < g.size(); ++m) {
        rows.push_back({2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n), g[m]});
    }
    return rows;
}

std::string trace_to_csv(const std::vector<TracePoint>& rows) {
    std::ostringstream os;
    os.precision(17);
    os << "theta,re,im\n";
    for (const auto& r : rows) os << r.theta << ',' << r.value.real() << ',' << r.value.imag() << '\n';
    return os.str();
}

}  // namespace bsi
