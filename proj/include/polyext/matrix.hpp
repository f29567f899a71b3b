#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyext/ints.hpp"

namespace polyext {

// Dense-semantics integer matrix with column-sparse storage. Unstored entries
// are zero. Bar-resolution differentials reach ranks in the tens of thousands
// with a handful of nonzeros per row, so a dense representation is not an
// option; everything else in the library is small enough not to care.
//
// Row/column labels are optional opaque strings used by complex builders to
// keep bases debuggable; no algorithm depends on them.
class IntegerMatrix {
public:
    IntegerMatrix() : rows_(0), cols_(0) {}
    IntegerMatrix(int rows, int cols);

    static IntegerMatrix identity(int n);
    // Builds a dense matrix from rows; all rows must have equal length.
    static IntegerMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Int& entry(int r, int c) const;
    void set_entry(int r, int c, const Int& v);
    void add_to_entry(int r, int c, const Int& v);

    // The nonzero entries of one column, as (row, value) pairs.
    const std::map<int, Int>& column(int c) const;

    std::size_t nonzero_count() const;
    bool is_zero() const;

    IntegerMatrix transpose() const;
    IntegerMatrix operator*(const IntegerMatrix& rhs) const;
    IntegerMatrix operator+(const IntegerMatrix& rhs) const;
    IntegerMatrix operator-() const;
    IntegerMatrix operator-(const IntegerMatrix& rhs) const;
    IntegerMatrix scaled(const Int& k) const;
    bool operator==(const IntegerMatrix& rhs) const;
    bool operator!=(const IntegerMatrix& rhs) const { return !(*this == rhs); }

    // Exact determinant by fraction-free (Bareiss) elimination; square only.
    Int determinant() const;

    // Block-diagonal / stacking helpers used by complex constructions.
    // [ A 0 ; 0 B ]
    static IntegerMatrix block_diag(const IntegerMatrix& a, const IntegerMatrix& b);
    // [ A ; B ] (same column count)
    static IntegerMatrix vstack(const IntegerMatrix& a, const IntegerMatrix& b);
    // [ A B ] (same row count)
    static IntegerMatrix hstack(const IntegerMatrix& a, const IntegerMatrix& b);
    // Kronecker product (a_{ij} * B), row/col index = (i major, k minor).
    static IntegerMatrix kronecker(const IntegerMatrix& a, const IntegerMatrix& b);

    std::string to_string() const;

    std::optional<std::vector<std::string>> row_labels;
    std::optional<std::vector<std::string>> col_labels;

private:
    void check_index(int r, int c) const;

    int rows_, cols_;
    std::vector<std::map<int, Int>> cols_data_;  // per column: row -> nonzero value
};

}  // namespace polyext
