#pragma once

#include <random>
#include <vector>

#include "bsi/cmatrix.hpp"

namespace bsi {

class MultiPolynomial;

using Rng = std::mt19937_64;

// Fixture generators. All draws go through the caller's engine, so a fixed
// seed reproduces the same matrices on a given toolchain.

/// Entries with independent standard normal real and imaginary parts.
CMatrix random_gaussian(std::size_t rows, std::size_t cols, Rng& rng);

/// Haar-like unitary from Gram-Schmidt on a Gaussian matrix.
CMatrix random_unitary(std::size_t n, Rng& rng);

/// Gaussian matrix rescaled to operator norm exactly `norm`.
CMatrix random_contraction(std::size_t n, Rng& rng, double norm = 1.0);

/// p_1(Z), ..., p_d(Z) for one random contraction Z and random polynomials
/// of degree <= max_degree, each rescaled to operator norm 1 (zero stays zero).
std::vector<CMatrix> random_commuting_contractions(std::size_t d, std::size_t dim, Rng& rng, unsigned max_degree = 3);

/// W diag(phases_i) W* with one shared random unitary W.
std::vector<CMatrix> random_commuting_unitaries(std::size_t d, std::size_t dim, Rng& rng);

/// Sinkhorn balancing of a positive random matrix until row and column sums
/// are within 1e-15 of one.
CMatrix random_doubly_stochastic(std::size_t n, Rng& rng);

/// Convex combinations of cyclic shifts; circulants commute with each other.
std::vector<CMatrix> random_commuting_circulants(std::size_t d, std::size_t n, Rng& rng);

/// 1..max_terms monomials of total degree <= max_degree with Gaussian coefficients.
MultiPolynomial random_polynomial(std::size_t d, unsigned max_degree, unsigned max_terms, Rng& rng);

}  // namespace bsi
