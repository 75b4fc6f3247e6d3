#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "bsi/cmatrix.hpp"
#include "bsi/limits.hpp"
#include "bsi/torus.hpp"

namespace bsi {

/// A validated commuting d-tuple of contractions on C^dim.
class ContractionTuple {
public:
    /// Throws InputError unless every matrix is dim x dim, has norm <= 1 + tol,
    /// and every pair commutes to tol.
    explicit ContractionTuple(std::vector<CMatrix> mats, Tolerance tol = Tolerance{});

    std::size_t d() const noexcept { return mats_.size(); }
    std::size_t dim() const noexcept { return mats_.front().rows(); }
    const std::vector<CMatrix>& mats() const noexcept { return mats_; }
    const CMatrix& operator[](std::size_t i) const { return mats_.at(i); }
    Tolerance tol() const noexcept { return tol_; }

    /// Measured during validation.
    double max_norm() const noexcept { return max_norm_; }
    double max_commutator() const noexcept { return max_commutator_; }

private:
    std::vector<CMatrix> mats_;
    Tolerance tol_;
    double max_norm_ = 0.0;
    double max_commutator_ = 0.0;
};

/// The discretised interpolation T^(N) of a tuple on l2(T_N^d) (x) C^dim.
class DiscretizedSemigroup {
public:
    DiscretizedSemigroup(ContractionTuple base, std::int64_t n);

    const ContractionTuple& base() const noexcept { return base_; }
    std::int64_t n() const noexcept { return n_; }
    std::size_t torus_size() const noexcept { return torus_size_; }
    std::size_t total_dim() const noexcept { return torus_size_ * base_.dim(); }

private:
    ContractionTuple base_;
    std::int64_t n_;
    std::size_t torus_size_;
};

/// floor(k/N) + [ (k mod N) + (k' mod N) >= N ]: the power selector for times k/N, k'/N.
std::int64_t kappa(std::int64_t k, std::int64_t k_prime, std::int64_t n);

/// Memoised powers S^0 .. S^max of one square matrix, by repeated multiplication.
class PowerTable {
public:
    explicit PowerTable(const CMatrix& s);
    const CMatrix& get(std::size_t k);

private:
    std::vector<CMatrix> powers_;
};

/// Maps delta_{t'} (x) xi to delta_{t + t' mod 1} (x) prod_i S_i^kappa(t_i, t'_i) xi.
CMatrix eval_discretized(const DiscretizedSemigroup& sg, const GridTime& t);

/// v_N* T^(N)(t) v_N with v_N xi = N^{-d/2} (1 ... 1) (x) xi.
CMatrix compress_discretized(const DiscretizedSemigroup& sg, const GridTime& t);

/// prod_i ((1 - {t_i}) S_i^floor(t_i) + {t_i} S_i^(floor(t_i)+1)) for real t_i >= 0.
CMatrix multilinear_compress(const ContractionTuple& s, const std::vector<double>& t);

struct BlendWeight {
    std::vector<int> e;
    double weight;
    std::vector<double> shifted;
};

struct BlendResult {
    CMatrix value;
    std::vector<BlendWeight> weights;
};

using LatticeSamples = std::map<std::vector<std::int64_t>, CMatrix>;

/// sum over e in {0,1}^d of prod_i w_i(e_i) T(t^(e)), with w_i(0) = 1 - {t_i/eps},
/// w_i(1) = {t_i/eps} and T(t^(e)) read from `samples` at floor(t/eps) + e.
/// Terms with zero weight are not looked up.
BlendResult scaled_blend(const LatticeSamples& samples, double eps, const std::vector<double>& t);

struct SweepRow {
    double eps;
    double sup_error;
};

/// For T(t) = exp(sum_i t_i A_i): sup over `time_grid` of ||blend_eps(t) - T(t)||, per eps.
std::vector<SweepRow> approx_error_sweep(const std::vector<CMatrix>& generators, const std::vector<double>& eps_list,
                                         const std::vector<std::vector<double>>& time_grid,
                                         Tolerance tol = Tolerance{});

/// The full cube {0, step, ..., tmax}^d.
std::vector<std::vector<double>> cube_time_grid(std::size_t d, double tmax, int steps);

struct LawTolerances {
    double homomorphism = 1e-10;
    double commutation = 1e-10;
    double contractivity = 1e-10;
    double interpolation = 1e-12;
    double compression = 1e-12;
};

struct SemigroupLawReport {
    double homomorphism_dev = 0.0;
    double commutation_dev = 0.0;
    double max_norm = 0.0;
    double interpolation_dev = 0.0;
    double compression_dev = 0.0;
    std::size_t times_checked = 0;
    std::size_t pairs_checked = 0;
    bool homomorphism_ok = true;
    bool commutation_ok = true;
    bool contractivity_ok = true;
    bool interpolation_ok = true;
    bool compression_ok = true;

    bool all_ok() const {
        return homomorphism_ok && commutation_ok && contractivity_ok && interpolation_ok && compression_ok;
    }
};

/// Homomorphism, commutation, contractivity and compression identity over every
/// grid time with numerators in [0, max_num); interpolation at n e_i for n <= 2N.
SemigroupLawReport check_semigroup_laws(const DiscretizedSemigroup& sg, std::int64_t max_num,
                                        const LawTolerances& tols = LawTolerances{});

/// Every grid time in ((1/N){0..max_num-1})^d, lexicographic.
std::vector<GridTime> grid_times(std::int64_t n, std::size_t d, std::int64_t max_num);

}  // namespace bsi
