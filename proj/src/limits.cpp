#include "bsi/limits.hpp"

#include <atomic>
#include <cmath>
#include <string>

#include "bsi/errors.hpp"

namespace bsi {

namespace {
std::atomic<std::size_t> g_max_entries{kDefaultMaxEntries};
std::atomic<std::size_t> g_max_torus_points{kDefaultMaxTorusPoints};
}  // namespace

Tolerance::Tolerance(double e) : eps(e) {
    if (!(e >= 0.0) || !std::isfinite(e)) {
        throw InputError("tolerance must be a finite nonnegative number, got " + std::to_string(e));
    }
}

std::size_t max_matrix_entries() { return g_max_entries.load(std::memory_order_relaxed); }
void set_max_matrix_entries(std::size_t n) {
    if (n == 0) throw InputError("matrix entry cap must be positive");
    g_max_entries.store(n, std::memory_order_relaxed);
}

std::size_t max_torus_points() { return g_max_torus_points.load(std::memory_order_relaxed); }
void set_max_torus_points(std::size_t n) {
    if (n == 0) throw InputError("torus grid cap must be positive");
    g_max_torus_points.store(n, std::memory_order_relaxed);
}

void check_entry_budget(std::size_t rows, std::size_t cols, std::string_view what) {
    const std::size_t cap = max_matrix_entries();
    if (rows != 0 && cols > cap / rows) {
        throw InputError(std::string(what) + ": a " + std::to_string(rows) + "x" + std::to_string(cols) +
                         " matrix exceeds the cap of " + std::to_string(cap) +
                         " entries; reduce N, d or dim, or raise BSI_MAX_ENTRIES");
    }
}

bool checked_pow(std::size_t base, std::size_t exp, std::size_t limit, std::size_t& out) {
    std::size_t acc = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && acc > limit / base) return false;
        acc *= base;
    }
    if (acc > limit) return false;
    out = acc;
    return true;
}

}  // namespace bsi
