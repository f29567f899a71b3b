#include "polyext/matrix.hpp"

#include <sstream>

#include "polyext/errors.hpp"

namespace polyext {

std::vector<std::pair<Int, int>> factorize(Int n) {
    n = abs_int(n);
    std::vector<std::pair<Int, int>> out;
    if (n <= 1) return out;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::string int_to_string(const Int& v) { return v.str(); }

IntegerMatrix::IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw IndexOutOfRange("matrix dimensions must be nonnegative");
    cols_data_.resize(static_cast<std::size_t>(cols));
}

IntegerMatrix IntegerMatrix::identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set_entry(i, i, 1);
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    IntegerMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw IndexOutOfRange("from_rows: ragged row lengths");
        for (int j = 0; j < c; ++j)
            if (rows[i][j] != 0) m.set_entry(i, j, rows[i][j]);
    }
    return m;
}

void IntegerMatrix::check_index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
        throw IndexOutOfRange("matrix index (" + std::to_string(r) + "," +
                              std::to_string(c) + ") out of range for " +
                              std::to_string(rows_) + "x" + std::to_string(cols_));
    }
}

const Int& IntegerMatrix::entry(int r, int c) const {
    check_index(r, c);
    static const Int zero = 0;
    const auto& col = cols_data_[static_cast<std::size_t>(c)];
    auto it = col.find(r);
    return it == col.end() ? zero : it->second;
}

void IntegerMatrix::set_entry(int r, int c, const Int& v) {
    check_index(r, c);
    auto& col = cols_data_[static_cast<std::size_t>(c)];
    if (v == 0)
        col.erase(r);
    else
        col[r] = v;
}

void IntegerMatrix::add_to_entry(int r, int c, const Int& v) {
    if (v == 0) return;
    check_index(r, c);
    auto& col = cols_data_[static_cast<std::size_t>(c)];
    auto [it, inserted] = col.try_emplace(r, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) col.erase(it);
    }
}

const std::map<int, Int>& IntegerMatrix::column(int c) const {
    if (c < 0 || c >= cols_) throw IndexOutOfRange("column index out of range");
    return cols_data_[static_cast<std::size_t>(c)];
}

std::size_t IntegerMatrix::nonzero_count() const {
    std::size_t n = 0;
    for (const auto& col : cols_data_) n += col.size();
    return n;
}

bool IntegerMatrix::is_zero() const { return nonzero_count() == 0; }

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (int c = 0; c < cols_; ++c)
        for (const auto& [r, v] : cols_data_[static_cast<std::size_t>(c)])
            t.set_entry(c, r, v);
    return t;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw IndexOutOfRange("matrix product shape mismatch: " +
                              std::to_string(cols_) + " vs " + std::to_string(rhs.rows_));
    IntegerMatrix out(rows_, rhs.cols_);
    for (int j = 0; j < rhs.cols_; ++j) {
        auto& out_col = out.cols_data_[static_cast<std::size_t>(j)];
        std::map<int, Int> acc;
        for (const auto& [k, bkj] : rhs.cols_data_[static_cast<std::size_t>(j)]) {
            for (const auto& [i, aik] : cols_data_[static_cast<std::size_t>(k)]) {
                Int prod = aik * bkj;
                auto [it, inserted] = acc.try_emplace(i, prod);
                if (!inserted) it->second += prod;
            }
        }
        for (auto& [i, v] : acc)
            if (v != 0) out_col.emplace(i, std::move(v));
    }
    return out;
}

IntegerMatrix IntegerMatrix::operator+(const IntegerMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw IndexOutOfRange("matrix sum shape mismatch");
    IntegerMatrix out = *this;
    out.row_labels.reset();
    out.col_labels.reset();
    for (int c = 0; c < cols_; ++c)
        for (const auto& [r, v] : rhs.cols_data_[static_cast<std::size_t>(c)])
            out.add_to_entry(r, c, v);
    return out;
}

IntegerMatrix IntegerMatrix::operator-() const { return scaled(-1); }

IntegerMatrix IntegerMatrix::operator-(const IntegerMatrix& rhs) const {
    return *this + (-rhs);
}

IntegerMatrix IntegerMatrix::scaled(const Int& k) const {
    IntegerMatrix out(rows_, cols_);
    if (k == 0) return out;
    for (int c = 0; c < cols_; ++c)
        for (const auto& [r, v] : cols_data_[static_cast<std::size_t>(c)])
            out.set_entry(r, c, v * k);
    return out;
}

bool IntegerMatrix::operator==(const IntegerMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && cols_data_ == rhs.cols_data_;
}

Int IntegerMatrix::determinant() const {
    if (rows_ != cols_)
        throw IndexOutOfRange("determinant of non-square matrix");
    int n = rows_;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination on a dense working copy.
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n, 0));
    for (int c = 0; c < n; ++c)
        for (const auto& [r, v] : cols_data_[static_cast<std::size_t>(c)]) a[r][c] = v;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

IntegerMatrix IntegerMatrix::block_diag(const IntegerMatrix& a, const IntegerMatrix& b) {
    IntegerMatrix out(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (int c = 0; c < a.cols_; ++c)
        for (const auto& [r, v] : a.cols_data_[static_cast<std::size_t>(c)])
            out.set_entry(r, c, v);
    for (int c = 0; c < b.cols_; ++c)
        for (const auto& [r, v] : b.cols_data_[static_cast<std::size_t>(c)])
            out.set_entry(a.rows_ + r, a.cols_ + c, v);
    return out;
}

IntegerMatrix IntegerMatrix::vstack(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.cols_) throw IndexOutOfRange("vstack column mismatch");
    IntegerMatrix out(a.rows_ + b.rows_, a.cols_);
    for (int c = 0; c < a.cols_; ++c) {
        for (const auto& [r, v] : a.cols_data_[static_cast<std::size_t>(c)])
            out.set_entry(r, c, v);
        for (const auto& [r, v] : b.cols_data_[static_cast<std::size_t>(c)])
            out.set_entry(a.rows_ + r, c, v);
    }
    return out;
}

IntegerMatrix IntegerMatrix::hstack(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows_ != b.rows_) throw IndexOutOfRange("hstack row mismatch");
    IntegerMatrix out(a.rows_, a.cols_ + b.cols_);
    for (int c = 0; c < a.cols_; ++c)
        for (const auto& [r, v] : a.cols_data_[static_cast<std::size_t>(c)])
            out.set_entry(r, c, v);
    for (int c = 0; c < b.cols_; ++c)
        for (const auto& [r, v] : b.cols_data_[static_cast<std::size_t>(c)])
            out.set_entry(r, a.cols_ + c, v);
    return out;
}

IntegerMatrix IntegerMatrix::kronecker(const IntegerMatrix& a, const IntegerMatrix& b) {
    IntegerMatrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int ac = 0; ac < a.cols_; ++ac)
        for (const auto& [ar, av] : a.cols_data_[static_cast<std::size_t>(ac)])
            for (int bc = 0; bc < b.cols_; ++bc)
                for (const auto& [br, bv] : b.cols_data_[static_cast<std::size_t>(bc)])
                    out.set_entry(ar * b.rows_ + br, ac * b.cols_ + bc, av * bv);
    return out;
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < rows_; ++r) {
        if (r) os << "; ";
        for (int c = 0; c < cols_; ++c) {
            if (c) os << " ";
            os << entry(r, c);
        }
    }
    os << "] (" << rows_ << "x" << cols_ << ")";
    return os.str();
}

}  // namespace polyext
