#ifndef TAMEARR_LINALG_HPP
#define TAMEARR_LINALG_HPP

#include <vector>

#include "tamearr/field.hpp"

namespace tamearr {

/// Incremental reduced row-echelon accumulator over an exact field.
/// Rows are kept normalized (leading entry 1) and fully back-reduced.
template <class K>
class RowSpace {
public:
    explicit RowSpace(int ncols, typename FieldOps<K>::Context ctx = {})
        : ncols_(ncols), ctx_(ctx) {}

    /// Returns true when v enlarges the span (v is consumed).
    bool insert(std::vector<K> v)
    {
        reduce(v);
        int p = pivot_of(v);
        if (p < 0) return false;
        K inv = v[p];
        for (auto& x : v) x = x / inv;
        // back-reduce existing rows
        for (size_t r = 0; r < rows_.size(); ++r) {
            K& c = rows_[r][p];
            if (!FieldOps<K>::is_zero(c)) {
                K f = c;
                for (int j = 0; j < ncols_; ++j) rows_[r][j] = rows_[r][j] - f * v[j];
            }
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    /// Reduce v against the accumulated rows in place.
    void reduce(std::vector<K>& v) const
    {
        for (size_t r = 0; r < rows_.size(); ++r) {
            K& c = v[pivots_[r]];
            if (FieldOps<K>::is_zero(c)) continue;
            K f = c;
            for (int j = 0; j < ncols_; ++j) v[j] = v[j] - f * rows_[r][j];
        }
    }

    bool contains(std::vector<K> v) const
    {
        reduce(v);
        return pivot_of(v) < 0;
    }

    int rank() const { return (int)rows_.size(); }
    int ncols() const { return ncols_; }
    const std::vector<std::vector<K>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Basis of the solution space {x : row . x = 0 for all accumulated rows}.
    std::vector<std::vector<K>> kernel_basis() const
    {
        std::vector<bool> is_pivot(ncols_, false);
        for (int p : pivots_) is_pivot[p] = true;
        std::vector<std::vector<K>> out;
        for (int f = 0; f < ncols_; ++f) {
            if (is_pivot[f]) continue;
            std::vector<K> x(ncols_, FieldOps<K>::zero(ctx_));
            x[f] = FieldOps<K>::one(ctx_);
            for (size_t r = 0; r < rows_.size(); ++r)
                x[pivots_[r]] = -rows_[r][f];
            out.push_back(std::move(x));
        }
        return out;
    }

private:
    int pivot_of(const std::vector<K>& v) const
    {
        for (int j = 0; j < ncols_; ++j)
            if (!FieldOps<K>::is_zero(v[j])) return j;
        return -1;
    }

    int ncols_;
    typename FieldOps<K>::Context ctx_;
    std::vector<std::vector<K>> rows_;
    std::vector<int> pivots_;
};

template <class K>
int matrix_rank(const std::vector<std::vector<K>>& rows, int ncols,
                typename FieldOps<K>::Context ctx = {})
{
    RowSpace<K> rs(ncols, ctx);
    for (const auto& r : rows) rs.insert(r);
    return rs.rank();
}

}  // namespace tamearr

#endif
