#include "polyext/snf.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <tuple>

#include "polyext/errors.hpp"

namespace polyext {

namespace {

// Dense working state for the transform-tracking Smith reduction. Matrices
// here are small (the public entry point, and residuals left over after the
// sparse unit-pivot phase), so simplicity wins over cleverness.
struct DenseSnf {
    int r, c;
    std::vector<std::vector<Int>> a, u, v;

    explicit DenseSnf(const IntegerMatrix& m)
        : r(m.rows()), c(m.cols()),
          a(static_cast<std::size_t>(r), std::vector<Int>(static_cast<std::size_t>(c), 0)),
          u(static_cast<std::size_t>(r), std::vector<Int>(static_cast<std::size_t>(r), 0)),
          v(static_cast<std::size_t>(c), std::vector<Int>(static_cast<std::size_t>(c), 0)) {
        for (int j = 0; j < c; ++j)
            for (const auto& [i, val] : m.column(j)) a[i][j] = val;
        for (int i = 0; i < r; ++i) u[i][i] = 1;
        for (int j = 0; j < c; ++j) v[j][j] = 1;
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < r; ++k) std::swap(a[k][i], a[k][j]);
        for (int k = 0; k < c; ++k) std::swap(v[k][i], v[k][j]);
    }
    // row i -= q * row t
    void row_sub(int i, int t, const Int& q) {
        if (q == 0) return;
        for (int k = 0; k < c; ++k) a[i][k] -= q * a[t][k];
        for (int k = 0; k < r; ++k) u[i][k] -= q * u[t][k];
    }
    // col j -= q * col t
    void col_sub(int j, int t, const Int& q) {
        if (q == 0) return;
        for (int k = 0; k < r; ++k) a[k][j] -= q * a[k][t];
        for (int k = 0; k < c; ++k) v[k][j] -= q * v[k][t];
    }
    void negate_row(int i) {
        for (int k = 0; k < c; ++k) a[i][k] = -a[i][k];
        for (int k = 0; k < r; ++k) u[i][k] = -u[i][k];
    }

    // Smallest-|value| nonzero in the submatrix at (t..r, t..c), or nullopt.
    std::optional<std::pair<int, int>> min_abs_pivot(int t) const {
        std::optional<std::pair<int, int>> best;
        Int best_abs = 0;
        for (int i = t; i < r; ++i)
            for (int j = t; j < c; ++j)
                if (a[i][j] != 0) {
                    Int v_abs = abs_int(a[i][j]);
                    if (!best || v_abs < best_abs) {
                        best = {i, j};
                        best_abs = v_abs;
                    }
                }
        return best;
    }

    // Diagonalize position t: afterwards a[t][t] is the only nonzero in its
    // row and column (within the trailing submatrix). Remainder terms shrink
    // the minimal absolute value each round, so the loop terminates.
    bool reduce_position(int t) {
        bool touched = false;
        while (true) {
            auto piv = min_abs_pivot(t);
            if (!piv) return touched;  // trailing submatrix is zero
            touched = true;
            int pi = piv->first, pj = piv->second;
            swap_rows(t, pi);
            swap_cols(t, pj);
            for (int i = t + 1; i < r; ++i)
                if (a[i][t] != 0) row_sub(i, t, a[i][t] / a[t][t]);
            for (int j = t + 1; j < c; ++j)
                if (a[t][j] != 0) col_sub(j, t, a[t][j] / a[t][t]);
            bool clean = true;
            for (int i = t + 1; i < r && clean; ++i)
                if (a[i][t] != 0) clean = false;
            for (int j = t + 1; j < c && clean; ++j)
                if (a[t][j] != 0) clean = false;
            if (clean) return true;
        }
    }

    void run() {
        int n = std::min(r, c);
        int rank = 0;
        for (int t = 0; t < n; ++t) {
            if (!reduce_position(t)) break;
            ++rank;
        }
        for (int t = 0; t < rank; ++t)
            if (a[t][t] < 0) negate_row(t);
        // Enforce the divisibility chain: a violation at (i, j) is repaired
        // by folding column j into column i and re-reducing from i, which
        // replaces the pair (s_i, s_j) with (gcd, lcm) up to reordering.
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i + 1 < rank && !changed; ++i)
                for (int j = i + 1; j < rank && !changed; ++j)
                    if (a[j][j] % a[i][i] != 0) {
                        col_sub(i, j, Int(-1));  // col i += col j
                        for (int t = i; t < rank; ++t) reduce_position(t);
                        for (int t = i; t < rank; ++t)
                            if (a[t][t] < 0) negate_row(t);
                        changed = true;
                    }
        }
    }
};

// Sparse unit-pivot phase: repeatedly eliminate on +-1 entries, preferring
// low Markowitz cost (fill bound). Each pivot contributes an invariant
// factor 1 and strictly shrinks the live submatrix. Returns the number of
// unit pivots taken and leaves the residual in `rows`.
struct SparseEliminator {
    std::vector<std::map<int, Int>> rows;       // row -> (col -> value)
    std::vector<std::set<int>> col_rows;        // col -> rows with a nonzero
    std::vector<bool> row_alive, col_alive;
    // min-heap of (markowitz cost, row, col); entries go stale and are
    // re-validated at pop time
    using Cand = std::tuple<long long, int, int>;
    std::priority_queue<Cand, std::vector<Cand>, std::greater<Cand>> heap;

    explicit SparseEliminator(const IntegerMatrix& m)
        : rows(static_cast<std::size_t>(m.rows())),
          col_rows(static_cast<std::size_t>(m.cols())),
          row_alive(static_cast<std::size_t>(m.rows()), true),
          col_alive(static_cast<std::size_t>(m.cols()), true) {
        for (int j = 0; j < m.cols(); ++j)
            for (const auto& [i, val] : m.column(j)) {
                rows[i][j] = val;
                col_rows[j].insert(i);
                if (val == 1 || val == -1) push_candidate(i, j);
            }
    }

    long long cost_of(int i, int j) const {
        return static_cast<long long>(rows[i].size() - 1) *
               static_cast<long long>(col_rows[j].size() - 1);
    }

    void push_candidate(int i, int j) { heap.emplace(cost_of(i, j), i, j); }

    void set_value(int i, int j, const Int& v) {
        auto it = rows[i].find(j);
        if (v == 0) {
            if (it != rows[i].end()) {
                rows[i].erase(it);
                col_rows[j].erase(i);
            }
            return;
        }
        if (it == rows[i].end()) {
            rows[i].emplace(j, v);
            col_rows[j].insert(i);
        } else {
            it->second = v;
        }
        if (v == 1 || v == -1) push_candidate(i, j);
    }

    // Number of unit pivots eliminated.
    int run() {
        int count = 0;
        while (!heap.empty()) {
            auto [cost, pr, pc] = heap.top();
            heap.pop();
            if (!row_alive[pr] || !col_alive[pc]) continue;
            auto it = rows[pr].find(pc);
            if (it == rows[pr].end() || abs_int(it->second) != 1) continue;
            if (cost != cost_of(pr, pc)) {
                push_candidate(pr, pc);  // stale cost; retry with fresh one
                continue;
            }
            const Int p = it->second;  // +-1
            // Clear the pivot column with row operations. Copy the pivot row
            // first: set_value mutates as we go.
            std::vector<std::pair<int, Int>> pivot_row(rows[pr].begin(), rows[pr].end());
            std::vector<int> victims(col_rows[pc].begin(), col_rows[pc].end());
            for (int vr : victims) {
                if (vr == pr) continue;
                Int q = rows[vr][pc] * p;  // a / p  ==  a * p  for p = +-1
                for (const auto& [j, pv] : pivot_row) {
                    Int nv = (rows[vr].count(j) ? rows[vr][j] : Int(0)) - q * pv;
                    set_value(vr, j, nv);
                }
            }
            // Row pr and column pc now split off a diag(1) block: clearing
            // the pivot row with column ops would only touch row pr itself.
            for (const auto& [j, pv] : pivot_row) {
                (void)pv;
                col_rows[j].erase(pr);
            }
            rows[pr].clear();
            row_alive[pr] = false;
            col_alive[pc] = false;
            ++count;
        }
        return count;
    }

    // Remaining nonzero entries as a compact matrix.
    IntegerMatrix residual() const {
        std::map<int, int> col_remap;
        std::vector<std::pair<int, const std::map<int, Int>*>> live_rows;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (!rows[i].empty()) {
                live_rows.emplace_back(static_cast<int>(i), &rows[i]);
                for (const auto& [j, v] : rows[i]) col_remap.emplace(j, 0);
            }
        int nc = 0;
        for (auto& [j, idx] : col_remap) idx = nc++;
        IntegerMatrix out(static_cast<int>(live_rows.size()), nc);
        for (std::size_t i = 0; i < live_rows.size(); ++i)
            for (const auto& [j, v] : *live_rows[i].second)
                out.set_entry(static_cast<int>(i), col_remap[j], v);
        return out;
    }
};

}  // namespace

SmithTriple smith_normal_form(const IntegerMatrix& m) {
    DenseSnf work(m);
    work.run();
    SmithTriple out{IntegerMatrix(m.rows(), m.cols()), IntegerMatrix(m.rows(), m.rows()),
                    IntegerMatrix(m.cols(), m.cols())};
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (i == j && work.a[i][j] != 0) out.S.set_entry(i, j, work.a[i][j]);
            if (i != j && work.a[i][j] != 0)
                throw Error("internal: Smith reduction left an off-diagonal entry");
        }
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.rows(); ++j)
            if (work.u[i][j] != 0) out.U.set_entry(i, j, work.u[i][j]);
    for (int i = 0; i < m.cols(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (work.v[i][j] != 0) out.V.set_entry(i, j, work.v[i][j]);
    return out;
}

std::vector<Int> smith_invariant_factors(const IntegerMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) return {};
    SparseEliminator elim(m);
    int units = elim.run();
    std::vector<Int> factors(static_cast<std::size_t>(units), Int(1));
    IntegerMatrix res = elim.residual();
    if (res.rows() > 0 && res.cols() > 0 && !res.is_zero()) {
        DenseSnf work(res);
        work.run();
        int n = std::min(res.rows(), res.cols());
        for (int t = 0; t < n; ++t)
            if (work.a[t][t] != 0) factors.push_back(work.a[t][t]);
    }
    return factors;
}

int matrix_rank(const IntegerMatrix& m) {
    return static_cast<int>(smith_invariant_factors(m).size());
}

}  // namespace polyext
