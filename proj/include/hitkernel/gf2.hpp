#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hk::gf2 {

/// Dense bit-packed vector over F_2 with a fixed length.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const {
        check_index(i);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool v) {
        check_index(i);
        std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) {
        check_index(i);
        w_[i >> 6] ^= std::uint64_t(1) << (i & 63);
    }

    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }
    /// Highest set coordinate, or -1 when zero.
    std::ptrdiff_t top_bit() const;
    std::size_t popcount() const;

    void xor_with(const Vector& o) {
        if (o.n_ != n_) throw std::invalid_argument("gf2::Vector length mismatch");
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    }

    bool operator==(const Vector& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Vector& o) const { return !(*this == o); }

    std::size_t word_count() const { return w_.size(); }
    std::uint64_t word(std::size_t i) const { return w_[i]; }
    std::uint64_t* data() { return w_.data(); }
    const std::uint64_t* data() const { return w_.data(); }

    /// Memory footprint of the payload, for budget accounting.
    std::size_t byte_size() const { return w_.size() * sizeof(std::uint64_t); }

private:
    void check_index(std::size_t i) const {
        if (i >= n_) throw std::out_of_range("gf2::Vector index " + std::to_string(i));
    }
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

enum class InsertResult { Absorbed, NewPivot };

/// Soft resource limits for basis construction. Zero means unlimited.
struct Budget {
    std::size_t max_rows = 0;
    std::size_t max_bytes = 0;
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Row-reduced F_2 subspace. Pivot of a row is its maximal nonzero
/// coordinate; coordinate order is the index order of the enumeration the
/// caller built the vectors over. Rows are kept fully reduced: no row
/// contains the pivot coordinate of another, so reduction of a vector
/// touches at most one row per pivot coordinate in its support.
class ReducedBasis {
public:
    explicit ReducedBasis(std::size_t n)
        : n_(n), row_of_pivot_(n, -1), pivot_mask_(n) {}

    std::size_t dim() const { return n_; }
    std::size_t rank() const { return rows_.size(); }

    /// Reduce v against the basis; absorb it if dependent, else adjoin it.
    /// Returns the new pivot index in the NewPivot case.
    std::pair<InsertResult, std::ptrdiff_t> insert_reduce(Vector v);

    /// Insert a batch of rows. Result is the canonical reduced basis of the
    /// joint span, identical to serial insertion (RREF is unique), but the
    /// candidate pre-reduction runs in parallel.
    void insert_batch(std::vector<Vector> rows);

    bool member(const Vector& v) const;

    /// Canonical coset representative supported on non-pivot coordinates.
    Vector reduce_to_normal_form(Vector v) const;

    bool is_pivot(std::size_t i) const { return row_of_pivot_[i] >= 0; }
    std::ptrdiff_t row_of_pivot(std::size_t i) const { return row_of_pivot_[i]; }

    const Vector& row(std::size_t r) const { return rows_[r]; }
    std::ptrdiff_t pivot_of_row(std::size_t r) const { return pivot_of_row_[r]; }

    /// Non-pivot coordinates in increasing order.
    std::vector<std::size_t> non_pivots() const;

    void set_budget(Budget b) { budget_ = b; }
    std::size_t byte_size() const { return bytes_; }

private:
    void reduce_in_place(Vector& v) const;
    void adjoin(Vector v, std::size_t pivot);

    std::size_t n_;
    std::vector<Vector> rows_;
    std::vector<std::ptrdiff_t> pivot_of_row_;
    std::vector<std::ptrdiff_t> row_of_pivot_;
    Vector pivot_mask_;
    Budget budget_;
    std::size_t bytes_ = 0;
};

/// Rank of the span of the union of two bases over the same coordinates.
std::size_t subspace_sum_dim(const ReducedBasis& a, const ReducedBasis& b);

/// Dense row-major F_2 matrix, rows packed as gf2::Vector.
struct Matrix {
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::vector<Vector> rows;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : n_rows(r), n_cols(c), rows(r, Vector(c)) {}
    bool get(std::size_t i, std::size_t j) const { return rows[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v) { rows[i].set(j, v); }
};

/// Basis of the joint kernel {v : M v = 0 for all M}. All matrices must
/// share the column count n; row counts may differ.
ReducedBasis common_kernel(const std::vector<Matrix>& mats, Budget budget = {});

std::size_t rank(const Matrix& m);

}  // namespace hk::gf2
