#pragma once

#include <cstddef>
#include <string_view>

namespace bsi {

/// Absolute tolerance used by every approximate predicate in the library.
struct Tolerance {
    double eps = 1e-10;

    Tolerance() = default;
    explicit Tolerance(double e);
};

inline constexpr double kDefaultTol = 1e-10;
inline constexpr std::size_t kDefaultMaxEntries = std::size_t{1} << 20;
inline constexpr std::size_t kDefaultMaxTorusPoints = std::size_t{1} << 26;

// Process-wide caps. Reads and writes are atomic; the CLI sets them once from
// the environment before dispatching.
std::size_t max_matrix_entries();
void set_max_matrix_entries(std::size_t n);
std::size_t max_torus_points();
void set_max_torus_points(std::size_t n);

/// Throws InputError if a rows x cols matrix would exceed the entry cap.
void check_entry_budget(std::size_t rows, std::size_t cols, std::string_view what);

/// base^exp with overflow detection; returns false if the result exceeds `limit`.
bool checked_pow(std::size_t base, std::size_t exp, std::size_t limit, std::size_t& out);

}  // namespace bsi
