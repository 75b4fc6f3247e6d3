#include "bsi/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <tuple>

#include "bsi/errors.hpp"
#include "bsi/linalg.hpp"

namespace bsi {

namespace {

std::size_t checked_total_dim(std::int64_t n, std::size_t d, std::size_t dim) {
    std::size_t torus = 0;
    if (!checked_pow(static_cast<std::size_t>(n), d, max_matrix_entries(), torus)) {
        throw InputError("N^d = " + std::to_string(n) + "^" + std::to_string(d) + " exceeds the size cap");
    }
    check_entry_budget(torus * dim, torus * dim, "discretised semigroup");
    return torus;
}

// Frobenius distance when it already certifies the bound, else the exact operator norm.
double deviation(const CMatrix& a, const CMatrix& b, double tol) {
    const double f = frobenius_distance(a, b);
    return f <= tol ? f : op_norm(a - b);
}

// floor and fractional part of x, snapping values within rounding of an integer.
std::pair<std::int64_t, double> split_snapped(double x) {
    const double r = std::nearbyint(x);
    if (std::abs(x - r) <= 1e-12 * std::max(1.0, std::abs(x))) return {static_cast<std::int64_t>(r), 0.0};
    const double fl = std::floor(x);
    return {static_cast<std::int64_t>(fl), x - fl};
}

void check_time(const DiscretizedSemigroup& sg, const GridTime& t) {
    if (t.denom() != sg.n()) {
        throw InputError("grid time " + t.to_string() + " has denominator " + std::to_string(t.denom()) +
                         ", semigroup uses N = " + std::to_string(sg.n()));
    }
    if (t.dim() != sg.base().d()) {
        throw InputError("grid time " + t.to_string() + " has " + std::to_string(t.dim()) +
                         " coordinates, tuple has d = " + std::to_string(sg.base().d()));
    }
}

// One block per source basis vector of the torus: target index and operator.
struct BlockAction {
    std::vector<std::size_t> target;
    std::vector<std::size_t> block_of_source;
    std::vector<CMatrix> blocks;
};

std::vector<PowerTable> power_tables(const ContractionTuple& base) {
    std::vector<PowerTable> tables;
    tables.reserve(base.d());
    for (const auto& s : base.mats()) tables.emplace_back(s);
    return tables;
}

BlockAction block_action(const DiscretizedSemigroup& sg, const GridTime& t, std::vector<PowerTable>& tables) {
    check_time(sg, t);
    const std::size_t d = sg.base().d();
    const std::int64_t n = sg.n();
    const TorusBasis basis(n, d);

    // kappa only takes the values floor(t_i) and floor(t_i) + 1, so a bitmask
    // over axes identifies the block.
    std::map<unsigned long, std::size_t> mask_to_block;
    BlockAction act;
    act.target.resize(basis.size());
    act.block_of_source.resize(basis.size());
    for (std::size_t src = 0; src < basis.size(); ++src) {
        auto coords = basis.coords(src);
        unsigned long mask = 0;
        std::vector<std::int64_t> powers(d);
        for (std::size_t i = 0; i < d; ++i) {
            powers[i] = kappa(t.num(i), coords[i], n);
            if (powers[i] != t.floor(i)) mask |= (1ul << i);
            coords[i] += t.num(i);
        }
        act.target[src] = basis.index(coords);
        auto it = mask_to_block.find(mask);
        if (it == mask_to_block.end()) {
            CMatrix block = tables[0].get(static_cast<std::size_t>(powers[0]));
            for (std::size_t i = 1; i < d; ++i) block = block * tables[i].get(static_cast<std::size_t>(powers[i]));
            it = mask_to_block.emplace(mask, act.blocks.size()).first;
            act.blocks.push_back(std::move(block));
        }
        act.block_of_source[src] = it->second;
    }
    return act;
}

BlockAction block_action(const DiscretizedSemigroup& sg, const GridTime& t) {
    auto tables = power_tables(sg.base());
    return block_action(sg, t, tables);
}

// Writes the block-permutation matrix of an action into out, which has the full size.
void fill_action(const BlockAction& act, std::size_t dim, CMatrix& out) {
    std::fill(out.data().begin(), out.data().end(), cplx{});
    for (std::size_t src = 0; src < act.target.size(); ++src) {
        const CMatrix& block = act.blocks[act.block_of_source[src]];
        const std::size_t r0 = act.target[src] * dim;
        const std::size_t c0 = src * dim;
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = 0; b < dim; ++b) out(r0 + a, c0 + b) = block(a, b);
    }
}

// T(s) T(t) as an action: delta_src goes through t's target, then s's target.
BlockAction compose(const BlockAction& s, const BlockAction& t) {
    BlockAction out;
    out.target.resize(t.target.size());
    out.block_of_source.resize(t.target.size());
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> products;
    for (std::size_t src = 0; src < t.target.size(); ++src) {
        const std::size_t mid = t.target[src];
        out.target[src] = s.target[mid];
        const auto key = std::make_pair(s.block_of_source[mid], t.block_of_source[src]);
        auto it = products.find(key);
        if (it == products.end()) {
            it = products.emplace(key, out.blocks.size()).first;
            out.blocks.push_back(s.blocks[key.first] * t.blocks[key.second]);
        }
        out.block_of_source[src] = it->second;
    }
    return out;
}

// Operator-norm deviation of two actions; the block Frobenius sum equals the dense one.
double action_deviation(const BlockAction& a, const BlockAction& b, std::size_t dim, double tol) {
    double acc = 0.0;
    bool same_targets = true;
    for (std::size_t src = 0; src < a.target.size(); ++src) {
        if (a.target[src] != b.target[src]) {
            same_targets = false;
            break;
        }
        const double f = frobenius_distance(a.blocks[a.block_of_source[src]], b.blocks[b.block_of_source[src]]);
        acc += f * f;
    }
    if (same_targets && std::sqrt(acc) <= tol) return std::sqrt(acc);
    const std::size_t n = a.target.size() * dim;
    CMatrix da(n, n), db(n, n);
    fill_action(a, dim, da);
    fill_action(b, dim, db);
    return deviation(da, db, tol);
}

}  // namespace

ContractionTuple::ContractionTuple(std::vector<CMatrix> mats, Tolerance tol) : mats_(std::move(mats)), tol_(tol) {
    if (mats_.empty()) throw InputError("contraction tuple must contain at least one matrix (d >= 1)");
    const std::size_t n = mats_.front().rows();
    for (std::size_t i = 0; i < mats_.size(); ++i) {
        const auto& m = mats_[i];
        if (m.rows() != n || m.cols() != n) {
            throw InputError("tuple entry " + std::to_string(i + 1) + " is " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + ", expected " + std::to_string(n) + "x" + std::to_string(n));
        }
        const double nrm = op_norm(m);
        max_norm_ = std::max(max_norm_, nrm);
        if (nrm > 1.0 + tol_.eps) {
            throw InputError("tuple entry " + std::to_string(i + 1) + " has norm " + std::to_string(nrm) +
                             " > 1 + tol; not a contraction");
        }
    }
    for (std::size_t i = 0; i < mats_.size(); ++i)
        for (std::size_t j = i + 1; j < mats_.size(); ++j) {
            const CMatrix comm = mats_[i] * mats_[j] - mats_[j] * mats_[i];
            const double c = comm.max_abs() == 0.0 ? 0.0 : op_norm(comm);
            max_commutator_ = std::max(max_commutator_, c);
            if (c > tol_.eps) {
                throw InputError("tuple entries " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                 " do not commute (||[S_i,S_j]|| = " + std::to_string(c) + ")");
            }
        }
}

DiscretizedSemigroup::DiscretizedSemigroup(ContractionTuple base, std::int64_t n)
    : base_(std::move(base)), n_(n), torus_size_(0) {
    if (n_ < 1) throw InputError("grid resolution N must be >= 1, got " + std::to_string(n_));
    torus_size_ = checked_total_dim(n_, base_.d(), base_.dim());
}

std::int64_t kappa(std::int64_t k, std::int64_t k_prime, std::int64_t n) {
    if (n < 1) throw InputError("kappa: denominator must be >= 1");
    if (k < 0 || k_prime < 0) throw InputError("kappa: numerators must be nonnegative");
    return k / n + ((k % n) + (k_prime % n) >= n ? 1 : 0);
}

PowerTable::PowerTable(const CMatrix& s) {
    if (!s.is_square()) throw InputError("PowerTable: matrix must be square");
    powers_.push_back(CMatrix::identity(s.rows()));
    powers_.push_back(s);
}

const CMatrix& PowerTable::get(std::size_t k) {
    while (powers_.size() <= k) powers_.push_back(powers_.back() * powers_[1]);
    return powers_[k];
}

CMatrix eval_discretized(const DiscretizedSemigroup& sg, const GridTime& t) {
    CMatrix out(sg.total_dim(), sg.total_dim());
    fill_action(block_action(sg, t), sg.base().dim(), out);
    return out;
}

CMatrix compress_discretized(const DiscretizedSemigroup& sg, const GridTime& t) {
    const BlockAction act = block_action(sg, t);
    const std::size_t dim = sg.base().dim();
    // Every target appears exactly once, so <1 (x) eta, T (1 (x) xi)> sums one block per source.
    std::vector<std::size_t> counts(act.blocks.size(), 0);
    for (auto b : act.block_of_source) ++counts[b];
    CMatrix out(dim, dim);
    for (std::size_t b = 0; b < act.blocks.size(); ++b) {
        CMatrix term = act.blocks[b];
        term *= static_cast<double>(counts[b]);
        out += term;
    }
    out *= 1.0 / static_cast<double>(act.target.size());
    return out;
}

CMatrix multilinear_compress(const ContractionTuple& s, const std::vector<double>& t) {
    if (t.size() != s.d()) {
        throw InputError("multilinear_compress: time has " + std::to_string(t.size()) + " coordinates, tuple has d = " +
                         std::to_string(s.d()));
    }
    CMatrix out = CMatrix::identity(s.dim());
    for (std::size_t i = 0; i < s.d(); ++i) {
        if (!std::isfinite(t[i]) || t[i] < 0.0) {
            throw InputError("multilinear_compress: times must be finite and nonnegative");
        }
        const double fl = std::floor(t[i]);
        const double fr = t[i] - fl;
        const CMatrix low = power(s[i], static_cast<unsigned>(fl));
        CMatrix factor = cplx{1.0 - fr} * low;
        if (fr != 0.0) factor += cplx{fr} * (low * s[i]);
        out = out * factor;
    }
    return out;
}

BlendResult scaled_blend(const LatticeSamples& samples, double eps, const std::vector<double>& t) {
    if (!(eps > 0.0) || !std::isfinite(eps)) throw InputError("scaled_blend: eps must be positive and finite");
    if (t.empty()) throw InputError("scaled_blend: time vector is empty");
    if (samples.empty()) throw InputError("scaled_blend: no samples supplied");
    const std::size_t d = t.size();
    if (d > 30) throw InputError("scaled_blend: d too large for corner enumeration");

    const std::vector<std::int64_t> origin(d, 0);
    if (auto it = samples.find(origin); it != samples.end()) {
        const CMatrix& s0 = it->second;
        if (!s0.is_square() || frobenius_distance(s0, CMatrix::identity(s0.rows())) > kDefaultTol) {
            throw InputError("scaled_blend: the sample at the origin must be the identity");
        }
    }

    std::vector<std::int64_t> base(d);
    std::vector<double> frac(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (!std::isfinite(t[i]) || t[i] < 0.0) throw InputError("scaled_blend: times must be finite and nonnegative");
        std::tie(base[i], frac[i]) = split_snapped(t[i] / eps);
    }

    const std::size_t dim = samples.begin()->second.rows();
    BlendResult out{CMatrix(dim, dim), {}};
    for (unsigned long mask = 0; mask < (1ul << d); ++mask) {
        BlendWeight w{std::vector<int>(d), 1.0, std::vector<double>(d)};
        std::vector<std::int64_t> key(d);
        for (std::size_t i = 0; i < d; ++i) {
            const int e = static_cast<int>((mask >> i) & 1ul);
            w.e[i] = e;
            w.weight *= e ? frac[i] : 1.0 - frac[i];
            key[i] = base[i] + e;
            w.shifted[i] = static_cast<double>(key[i]) * eps;
        }
        if (w.weight != 0.0) {
            auto it = samples.find(key);
            if (it == samples.end()) {
                std::string k;
                for (std::size_t i = 0; i < d; ++i) k += (i ? "," : "") + std::to_string(key[i]);
                throw InputError("scaled_blend: missing lattice sample at (" + k + ")");
            }
            CMatrix term = it->second;
            term *= w.weight;
            out.value += term;
        }
        out.weights.push_back(std::move(w));
    }
    return out;
}

std::vector<std::vector<double>> cube_time_grid(std::size_t d, double tmax, int steps) {
    if (d < 1) throw InputError("time grid needs d >= 1");
    if (steps < 1) throw InputError("time grid needs steps >= 1");
    if (!(tmax >= 0.0) || !std::isfinite(tmax)) throw InputError("time grid needs finite tmax >= 0");
    std::size_t total = 0;
    if (!checked_pow(static_cast<std::size_t>(steps) + 1, d, max_torus_points(), total)) {
        throw InputError("time grid too large");
    }
    std::vector<std::vector<double>> grid;
    grid.reserve(total);
    std::vector<int> idx(d, 0);
    for (std::size_t c = 0; c < total; ++c) {
        std::vector<double> p(d);
        for (std::size_t i = 0; i < d; ++i) p[i] = tmax * static_cast<double>(idx[i]) / static_cast<double>(steps);
        grid.push_back(std::move(p));
        for (std::size_t i = d; i-- > 0;) {
            if (++idx[i] <= steps) break;
            idx[i] = 0;
        }
    }
    return grid;
}

std::vector<SweepRow> approx_error_sweep(const std::vector<CMatrix>& generators, const std::vector<double>& eps_list,
                                         const std::vector<std::vector<double>>& time_grid, Tolerance tol) {
    if (generators.empty()) throw InputError("approx_error_sweep: need at least one generator");
    const std::size_t d = generators.size();
    const std::size_t dim = generators.front().rows();
    for (const auto& g : generators) {
        if (!g.is_square() || g.rows() != dim) throw InputError("approx_error_sweep: generators must share one square shape");
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            const CMatrix comm = generators[i] * generators[j] - generators[j] * generators[i];
            if (comm.max_abs() != 0.0 && op_norm(comm) > tol.eps) {
                throw InputError("approx_error_sweep: generators " + std::to_string(i + 1) + " and " +
                                 std::to_string(j + 1) + " do not commute");
            }
        }
    if (time_grid.empty()) throw InputError("approx_error_sweep: empty time grid");
    double tmax = 0.0;
    for (const auto& p : time_grid) {
        if (p.size() != d) throw InputError("approx_error_sweep: time point dimension does not match generator count");
        for (double v : p) {
            if (!std::isfinite(v) || v < 0.0) throw InputError("approx_error_sweep: times must be finite and nonnegative");
            tmax = std::max(tmax, v);
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        const double nrm = op_norm(matrix_exp(generators[i], tmax));
        if (nrm > 1.0 + tol.eps) {
            throw InputError("approx_error_sweep: exp(tmax A_" + std::to_string(i + 1) + ") has norm " +
                             std::to_string(nrm) + "; fixture is not contractive");
        }
    }

    auto semigroup_at = [&](const std::vector<double>& t) {
        CMatrix g(dim, dim);
        for (std::size_t i = 0; i < d; ++i) g += cplx{t[i]} * generators[i];
        return matrix_exp(g, 1.0);
    };

    std::vector<CMatrix> truth;
    truth.reserve(time_grid.size());
    for (const auto& p : time_grid) truth.push_back(semigroup_at(p));

    std::vector<SweepRow> rows;
    for (double eps : eps_list) {
        if (!(eps > 0.0) || !std::isfinite(eps)) throw InputError("approx_error_sweep: eps values must be positive");
        LatticeSamples samples;
        for (const auto& p : time_grid) {
            std::vector<std::int64_t> base(d);
            for (std::size_t i = 0; i < d; ++i) base[i] = split_snapped(p[i] / eps).first;
            for (unsigned long mask = 0; mask < (1ul << d); ++mask) {
                std::vector<std::int64_t> key(d);
                for (std::size_t i = 0; i < d; ++i) key[i] = base[i] + static_cast<std::int64_t>((mask >> i) & 1ul);
                if (samples.count(key)) continue;
                std::vector<double> lattice_t(d);
                for (std::size_t i = 0; i < d; ++i) lattice_t[i] = static_cast<double>(key[i]) * eps;
                samples.emplace(key, semigroup_at(lattice_t));
            }
        }
        double sup = 0.0;
        for (std::size_t k = 0; k < time_grid.size(); ++k) {
            const CMatrix diff = scaled_blend(samples, eps, time_grid[k]).value - truth[k];
            if (diff.max_abs() != 0.0) sup = std::max(sup, op_norm(diff));
        }
        rows.push_back({eps, sup});
    }
    return rows;
}

std::vector<GridTime> grid_times(std::int64_t n, std::size_t d, std::int64_t max_num) {
    if (max_num < 1) throw InputError("max numerator must be >= 1");
    std::size_t total = 0;
    if (!checked_pow(static_cast<std::size_t>(max_num), d, max_torus_points(), total)) {
        throw InputError("too many grid times");
    }
    std::vector<GridTime> out;
    out.reserve(total);
    std::vector<std::int64_t> nums(d, 0);
    for (std::size_t c = 0; c < total; ++c) {
        out.emplace_back(n, nums);
        for (std::size_t i = d; i-- > 0;) {
            if (++nums[i] < max_num) break;
            nums[i] = 0;
        }
    }
    return out;
}

SemigroupLawReport check_semigroup_laws(const DiscretizedSemigroup& sg, std::int64_t max_num,
                                        const LawTolerances& tols) {
    const auto& base = sg.base();
    const std::size_t d = base.d();
    const std::int64_t n = sg.n();
    SemigroupLawReport rep;

    const auto times = grid_times(n, d, max_num);
    std::vector<CMatrix> evals;
    evals.reserve(times.size());
    for (const auto& t : times) evals.push_back(eval_discretized(sg, t));
    rep.times_checked = times.size();

    // Products of block permutations are block permutations, so the law is checked on
    // composed actions; sums repeat across pairs and are built once.
    auto tables = power_tables(base);
    std::vector<BlockAction> acts;
    acts.reserve(times.size());
    for (const auto& t : times) acts.push_back(block_action(sg, t, tables));
    std::map<std::vector<std::int64_t>, BlockAction> sum_actions;
    for (std::size_t a = 0; a < times.size(); ++a) {
        for (std::size_t b = 0; b < times.size(); ++b) {
            const GridTime sum = times[a] + times[b];
            auto it = sum_actions.find(sum.nums());
            if (it == sum_actions.end()) it = sum_actions.emplace(sum.nums(), block_action(sg, sum, tables)).first;
            rep.homomorphism_dev = std::max(
                rep.homomorphism_dev,
                action_deviation(compose(acts[a], acts[b]), it->second, base.dim(), tols.homomorphism));
            ++rep.pairs_checked;
        }
    }

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::int64_t s = 0; s < max_num; ++s)
                for (std::int64_t u = 0; u < max_num; ++u) {
                    std::vector<std::int64_t> si(d, 0), uj(d, 0);
                    si[i] = s;
                    uj[j] = u;
                    const CMatrix x = eval_discretized(sg, GridTime(n, si));
                    const CMatrix y = eval_discretized(sg, GridTime(n, uj));
                    rep.commutation_dev = std::max(rep.commutation_dev, deviation(x * y, y * x, tols.commutation));
                }

    for (std::size_t k = 0; k < times.size(); ++k) {
        rep.max_norm = std::max(rep.max_norm, op_norm(evals[k]));
        std::vector<double> real_t(d);
        for (std::size_t i = 0; i < d; ++i) real_t[i] = times[k].value(i);
        rep.compression_dev = std::max(rep.compression_dev, deviation(compress_discretized(sg, times[k]),
                                                                      multilinear_compress(base, real_t),
                                                                      tols.compression));
    }

    // Binary powering here, so the reference does not share the evaluator's power table.
    const CMatrix torus_identity = CMatrix::identity(sg.torus_size());
    for (std::size_t i = 0; i < d; ++i) {
        for (std::int64_t m = 0; m <= 2 * n; ++m) {
            const CMatrix lhs = eval_discretized(sg, GridTime::axis_integer(n, d, i, m));
            const CMatrix rhs = kron(torus_identity, power(base[i], static_cast<unsigned>(m)));
            rep.interpolation_dev = std::max(rep.interpolation_dev, deviation(lhs, rhs, tols.interpolation));
        }
    }

    rep.homomorphism_ok = rep.homomorphism_dev <= tols.homomorphism;
    rep.commutation_ok = rep.commutation_dev <= tols.commutation;
    rep.contractivity_ok = rep.max_norm <= 1.0 + tols.contractivity;
    rep.interpolation_ok = rep.interpolation_dev <= tols.interpolation;
    rep.compression_ok = rep.compression_dev <= tols.compression;
    return rep;
}

}  // namespace bsi
