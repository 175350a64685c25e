#include "hitkernel/gf2.hpp"

#include <algorithm>
#include <bit>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hk::gf2 {

std::ptrdiff_t Vector::top_bit() const {
    for (std::size_t i = w_.size(); i-- > 0;) {
        if (w_[i]) return std::ptrdiff_t(i) * 64 + (63 - std::countl_zero(w_[i]));
    }
    return -1;
}

std::size_t Vector::popcount() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::size_t(std::popcount(w));
    return c;
}

namespace {

// top set bit of (v AND mask), or -1
std::ptrdiff_t top_masked(const Vector& v, const Vector& mask) {
    const std::uint64_t* a = v.data();
    const std::uint64_t* m = mask.data();
    for (std::size_t i = v.word_count(); i-- > 0;) {
        std::uint64_t w = a[i] & m[i];
        if (w) return std::ptrdiff_t(i) * 64 + (63 - std::countl_zero(w));
    }
    return -1;
}

}  // namespace

void ReducedBasis::reduce_in_place(Vector& v) const {
    // Full reduction: each pivot coordinate of v is cleared by the unique row
    // owning it. Rows carry no foreign pivot coordinates, so every XOR removes
    // one pivot from the support and introduces none.
    for (;;) {
        std::ptrdiff_t b = top_masked(v, pivot_mask_);
        if (b < 0) break;
        v.xor_with(rows_[std::size_t(row_of_pivot_[std::size_t(b)])]);
    }
}

void ReducedBasis::adjoin(Vector v, std::size_t pivot) {
    if (budget_.max_rows && rows_.size() + 1 > budget_.max_rows)
        throw BudgetExceeded("row budget exceeded at rank " + std::to_string(rows_.size()));
    if (budget_.max_bytes && bytes_ + v.byte_size() > budget_.max_bytes)
        throw BudgetExceeded("memory budget exceeded at rank " + std::to_string(rows_.size()));

    // Keep existing rows reduced against the new pivot.
    const std::ptrdiff_t nrows = std::ptrdiff_t(rows_.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (std::ptrdiff_t r = 0; r < nrows; ++r) {
        if (rows_[std::size_t(r)].get(pivot)) rows_[std::size_t(r)].xor_with(v);
    }

    bytes_ += v.byte_size();
    row_of_pivot_[pivot] = std::ptrdiff_t(rows_.size());
    pivot_of_row_.push_back(std::ptrdiff_t(pivot));
    pivot_mask_.set(pivot, true);
    rows_.push_back(std::move(v));
}

std::pair<InsertResult, std::ptrdiff_t> ReducedBasis::insert_reduce(Vector v) {
    if (v.size() != n_) throw std::invalid_argument("insert_reduce: length mismatch");
    reduce_in_place(v);
    std::ptrdiff_t p = v.top_bit();
    if (p < 0) return {InsertResult::Absorbed, -1};
    adjoin(std::move(v), std::size_t(p));
    return {InsertResult::NewPivot, p};
}

void ReducedBasis::insert_batch(std::vector<Vector> cand) {
    for (auto& v : cand)
        if (v.size() != n_) throw std::invalid_argument("insert_batch: length mismatch");
    // Pre-reduce all candidates against the frozen basis in parallel, then
    // insert serially (each insertion re-runs the cheap residual reduction
    // against rows added meanwhile). The final basis is the unique RREF of
    // the joint span, so this matches serial insertion bit for bit.
    const std::ptrdiff_t n = std::ptrdiff_t(cand.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i) reduce_in_place(cand[std::size_t(i)]);
    for (auto& v : cand) insert_reduce(std::move(v));
}

bool ReducedBasis::member(const Vector& v) const {
    if (v.size() != n_) throw std::invalid_argument("member: length mismatch");
    Vector r = v;
    reduce_in_place(r);
    return !r.any();
}

Vector ReducedBasis::reduce_to_normal_form(Vector v) const {
    if (v.size() != n_) throw std::invalid_argument("reduce_to_normal_form: length mismatch");
    reduce_in_place(v);
    return v;
}

std::vector<std::size_t> ReducedBasis::non_pivots() const {
    std::vector<std::size_t> out;
    out.reserve(n_ - rows_.size());
    for (std::size_t i = 0; i < n_; ++i)
        if (row_of_pivot_[i] < 0) out.push_back(i);
    return out;
}

std::size_t subspace_sum_dim(const ReducedBasis& a, const ReducedBasis& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("subspace_sum_dim: length mismatch");
    const ReducedBasis& big = a.rank() >= b.rank() ? a : b;
    const ReducedBasis& small = a.rank() >= b.rank() ? b : a;
    ReducedBasis acc(big.dim());
    std::vector<Vector> rows;
    rows.reserve(big.rank() + small.rank());
    for (std::size_t r = 0; r < big.rank(); ++r) rows.push_back(big.row(r));
    for (std::size_t r = 0; r < small.rank(); ++r) rows.push_back(small.row(r));
    acc.insert_batch(std::move(rows));
    return acc.rank();
}

ReducedBasis common_kernel(const std::vector<Matrix>& mats, Budget budget) {
    if (mats.empty()) throw std::invalid_argument("common_kernel: no matrices");
    const std::size_t n = mats[0].n_cols;
    std::size_t m = 0;
    for (const auto& mat : mats) {
        if (mat.n_cols != n) throw std::invalid_argument("common_kernel: dimension mismatch");
        m += mat.n_rows;
    }
    // Augmented elimination: [image | e_j] with image coordinates ranked above
    // the domain block, so a row has zero image part iff its pivot lies in the
    // domain block; those rows' domain parts form the kernel basis.
    ReducedBasis aug(n + m);
    aug.set_budget(budget);
    std::vector<Vector> cols(n, Vector(n + m));
    const std::ptrdiff_t nn = std::ptrdiff_t(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 32)
#endif
    for (std::ptrdiff_t j = 0; j < nn; ++j) {
        Vector& v = cols[std::size_t(j)];
        v.set(std::size_t(j), true);
        std::size_t off = n;
        for (const auto& mat : mats) {
            for (std::size_t i = 0; i < mat.n_rows; ++i) {
                if (mat.rows[i].get(std::size_t(j))) v.flip(off + i);
            }
            off += mat.n_rows;
        }
    }
    aug.insert_batch(std::move(cols));

    ReducedBasis out(n);
    std::vector<Vector> krows;
    for (std::size_t r = 0; r < aug.rank(); ++r) {
        if (std::size_t(aug.pivot_of_row(r)) < n) {
            Vector v(n);
            for (std::size_t i = 0; i < n; ++i)
                if (aug.row(r).get(i)) v.set(i, true);
            krows.push_back(std::move(v));
        }
    }
    out.insert_batch(std::move(krows));
    return out;
}

std::size_t rank(const Matrix& m) {
    ReducedBasis b(m.n_cols);
    std::vector<Vector> rows = m.rows;
    b.insert_batch(std::move(rows));
    return b.rank();
}

}  // namespace hk::gf2
