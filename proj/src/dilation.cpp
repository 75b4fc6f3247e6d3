#include "bsi/dilation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "bsi/errors.hpp"
#include "bsi/linalg.hpp"

namespace bsi {

namespace {

std::string fmt_g(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double unitary_deviation(const CMatrix& u) {
    const std::size_t n = u.rows();
    const CMatrix id = CMatrix::identity(n);
    const CMatrix a = u.adjoint() * u - id;
    const CMatrix b = u * u.adjoint() - id;
    const double da = a.max_abs() == 0.0 ? 0.0 : op_norm(a);
    const double db = b.max_abs() == 0.0 ? 0.0 : op_norm(b);
    return std::max(da, db);
}

double norm_or_zero(const CMatrix& a) { return a.max_abs() == 0.0 ? 0.0 : op_norm(a); }

}  // namespace

CMatrix elementary(std::size_t row, std::size_t col) {
    if (row > 1 || col > 1) throw InputError("elementary: indices must be 0 or 1");
    CMatrix e(2, 2);
    e(row, col) = 1.0;
    return e;
}

ParrottTuple parrott_tuple(const CMatrix& r1, const CMatrix& r2, const ParrottOptions& opts) {
    if (!r1.is_square() || !r2.is_square() || r1.rows() != r2.rows()) {
        throw InputError("parrott_tuple: R1 and R2 must be square matrices of equal size");
    }
    const double u1 = unitary_deviation(r1);
    if (u1 > opts.tol.eps) {
        throw InputError("parrott_tuple: R1 is not unitary (deviation " + std::to_string(u1) + ")");
    }
    if (opts.require_r2_unitary) {
        const double u2 = unitary_deviation(r2);
        if (u2 > opts.tol.eps) {
            throw InputError("parrott_tuple: R2 is not unitary (deviation " + std::to_string(u2) + ")");
        }
    } else if (op_norm(r2) > 1.0 + opts.tol.eps) {
        throw InputError("parrott_tuple: R2 is not a contraction");
    }

    std::vector<std::string> warnings;
    if (norm_or_zero(r1 * r2 - r2 * r1) <= opts.tol.eps) {
        warnings.emplace_back(
            "R1 and R2 commute: the tuple is still a commuting contraction triple, but the non-dilatability "
            "hypothesis (non-commuting unitaries) fails");
    }

    const CMatrix e21 = elementary(1, 0);
    std::vector<CMatrix> mats{kron(r1, e21), kron(r2, e21), kron(CMatrix::identity(r1.rows()), e21)};
    return {ContractionTuple(std::move(mats), opts.tol), std::move(warnings)};
}

PowerDilationReport power_dilation_verify(const ContractionTuple& s, const DilationCandidate& cand, Tolerance tol) {
    const std::size_t d = s.d();
    const std::size_t n = s.dim();
    if (cand.v.size() != d) {
        throw InputError("power_dilation_verify: candidate has " + std::to_string(cand.v.size()) +
                         " unitaries, tuple has d = " + std::to_string(d));
    }
    const std::size_t big = cand.r.rows();
    if (cand.r.cols() != n) {
        throw InputError("power_dilation_verify: r must have " + std::to_string(n) + " columns, has " +
                         std::to_string(cand.r.cols()));
    }
    for (const auto& v : cand.v) {
        if (v.rows() != big || v.cols() != big) {
            throw InputError("power_dilation_verify: every V_i must be " + std::to_string(big) + "x" +
                             std::to_string(big));
        }
    }

    PowerDilationReport rep;
    for (const auto& v : cand.v) rep.unitarity_dev = std::max(rep.unitarity_dev, unitary_deviation(v));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            rep.commutation_dev = std::max(rep.commutation_dev, norm_or_zero(cand.v[i] * cand.v[j] - cand.v[j] * cand.v[i]));
    rep.isometry_dev = norm_or_zero(cand.r.adjoint() * cand.r - CMatrix::identity(n));

    std::vector<PowerTable> s_pows, v_pows;
    for (std::size_t i = 0; i < d; ++i) {
        s_pows.emplace_back(s[i]);
        v_pows.emplace_back(cand.v[i]);
    }
    const CMatrix r_adj = cand.r.adjoint();
    std::vector<unsigned> idx(d, 0);
    rep.worst_index = idx;
    bool done = false;
    while (!done) {
        CMatrix lhs = CMatrix::identity(n);
        CMatrix mid = CMatrix::identity(big);
        for (std::size_t i = 0; i < d; ++i) {
            lhs = lhs * s_pows[i].get(idx[i]);
            mid = mid * v_pows[i].get(idx[i]);
        }
        const double dev = norm_or_zero(lhs - r_adj * mid * cand.r);
        if (dev > rep.max_deviation) {
            rep.max_deviation = dev;
            rep.worst_index = idx;
        }
        ++rep.indices_checked;
        done = true;
        for (std::size_t i = d; i-- > 0;) {
            if (++idx[i] <= cand.n_max) {
                done = false;
                break;
            }
            idx[i] = 0;
        }
    }
    rep.pass = rep.max_deviation <= tol.eps && rep.unitarity_dev <= tol.eps && rep.commutation_dev <= tol.eps &&
               rep.isometry_dev <= tol.eps;
    return rep;
}

DilationCandidate egervary_dilation(const CMatrix& s, unsigned m, Tolerance tol) {
    if (!s.is_square()) throw InputError("egervary_dilation: matrix must be square");
    if (m < 1) throw InputError("egervary_dilation: m must be >= 1");
    const double nrm = op_norm(s);
    if (nrm > 1.0 + tol.eps) {
        throw InputError("egervary_dilation: ||S|| = " + std::to_string(nrm) + " > 1 + tol; not a contraction");
    }
    const std::size_t n = s.rows();
    const std::size_t blocks = static_cast<std::size_t>(m) + 1;
    check_entry_budget(blocks * n, blocks * n, "egervary_dilation");

    const CMatrix id = CMatrix::identity(n);
    const CMatrix s_adj = s.adjoint();
    // Both defects come from one eigendecomposition S*S = X diag(lambda) X*:
    //   D_S = X diag(d) X*,  D_S* = I - S X diag(h) X* S*,
    // with d = sqrt(1 - lambda) and h = 1 / (1 + d) = (1 - d) / lambda. Separate square
    // roots of I - S*S and I - SS* disagree by O(sqrt(eps)) when ||S|| = 1, which breaks
    // the intertwining S D_S = D_S* S that unitarity of V depends on.
    const auto eig = hermitian_eigen(s_adj * s);
    const CMatrix& x = *eig.vectors;
    std::vector<cplx> d(n), h(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double dv = std::sqrt(std::max(0.0, 1.0 - eig.values[i]));
        d[i] = dv;
        h[i] = 1.0 / (1.0 + dv);
    }
    const CMatrix defect = x * CMatrix::diagonal(d) * x.adjoint();
    const CMatrix defect_adj = id - s * (x * CMatrix::diagonal(h) * x.adjoint()) * s_adj;

    //  [ S    0 ... 0  D_S* ]
    //  [ D_S  0 ... 0  -S*  ]
    //  [ 0    I        0    ]
    //  [        ...         ]
    //  [ 0    ...   I  0    ]
    CMatrix v(blocks * n, blocks * n);
    auto put = [&](std::size_t br, std::size_t bc, const CMatrix& blk, double sign) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) v(br * n + a, bc * n + b) = sign * blk(a, b);
    };
    put(0, 0, s, 1.0);
    put(0, m, defect_adj, 1.0);
    put(1, 0, defect, 1.0);
    put(1, m, s_adj, -1.0);
    for (std::size_t k = 2; k < blocks; ++k) put(k, k - 1, id, 1.0);

    CMatrix r(blocks * n, n);
    for (std::size_t a = 0; a < n; ++a) r(a, a) = 1.0;

    DilationCandidate cand{{std::move(v)}, std::move(r), m};
    const ContractionTuple single({s}, tol);
    const auto rep = power_dilation_verify(single, cand, tol);
    if (!rep.pass) {
        throw NumericalError("egervary_dilation: construction failed verification (power deviation " +
                             fmt_g(rep.max_deviation) + ", unitarity " + fmt_g(rep.unitarity_dev) + ", isometry " + fmt_g(rep.isometry_dev) +
                             ")");
    }
    return cand;
}

}  // namespace bsi
