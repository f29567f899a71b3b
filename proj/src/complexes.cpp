#include "polyext/complexes.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "polyext/errors.hpp"
#include "polyext/snf.hpp"

namespace polyext {

BoundedComplex::BoundedComplex(Orientation orientation,
                               std::map<int, std::vector<std::string>> basis,
                               std::map<int, IntegerMatrix> differentials,
                               std::optional<int> truncated_above)
    : orientation_(orientation),
      basis_(std::move(basis)),
      differentials_(std::move(differentials)),
      truncated_above_(truncated_above) {
    // Normalize: drop explicitly empty degrees so support bounds are honest.
    for (auto it = basis_.begin(); it != basis_.end();)
        it = it->second.empty() ? basis_.erase(it) : std::next(it);
    // A truncation marker dominates the stored data: degrees above it (and
    // differentials crossing it) are cut so that at most the top stored
    // degree can ever be incomplete.
    if (truncated_above_) {
        int t = *truncated_above_;
        for (auto it = basis_.begin(); it != basis_.end();)
            it = it->first > t ? basis_.erase(it) : std::next(it);
        for (auto it = differentials_.begin(); it != differentials_.end();) {
            int d = it->first;
            bool keep = d <= t && target_degree(d) <= t;
            it = keep ? std::next(it) : differentials_.erase(it);
        }
    }
    if (basis_.empty()) {
        min_deg_ = 0;
        max_deg_ = -1;
    } else {
        min_deg_ = basis_.begin()->first;
        max_deg_ = basis_.rbegin()->first;
    }
    for (const auto& [d, m] : differentials_) {
        if (m.cols() != rank_at(d))
            throw IndexOutOfRange("differential from degree " + std::to_string(d) +
                                  " has " + std::to_string(m.cols()) + " columns but rank is " +
                                  std::to_string(rank_at(d)));
        if (m.rows() != rank_at(target_degree(d)))
            throw IndexOutOfRange("differential from degree " + std::to_string(d) +
                                  " has " + std::to_string(m.rows()) + " rows but target rank is " +
                                  std::to_string(rank_at(target_degree(d))));
    }
    for (const auto& [d, m] : differentials_) {
        auto next = differentials_.find(target_degree(d));
        if (next != differentials_.end() && !(next->second * m).is_zero())
            throw InvalidParameter("differentials from degrees " + std::to_string(d) + " and " +
                                   std::to_string(target_degree(d)) + " do not compose to zero");
    }
    // Zero differentials are representationally absent, so equality of the
    // stored maps is equality of complexes.
    for (auto it = differentials_.begin(); it != differentials_.end();)
        it = it->second.is_zero() ? differentials_.erase(it) : std::next(it);
}

bool BoundedComplex::operator==(const BoundedComplex& rhs) const {
    return orientation_ == rhs.orientation_ && basis_ == rhs.basis_ &&
           differentials_ == rhs.differentials_ && truncated_above_ == rhs.truncated_above_;
}

int BoundedComplex::rank_at(int degree) const {
    auto it = basis_.find(degree);
    return it == basis_.end() ? 0 : static_cast<int>(it->second.size());
}

const std::vector<std::string>& BoundedComplex::basis_at(int degree) const {
    static const std::vector<std::string> empty;
    auto it = basis_.find(degree);
    return it == basis_.end() ? empty : it->second;
}

IntegerMatrix BoundedComplex::differential_from(int degree) const {
    auto it = differentials_.find(degree);
    if (it != differentials_.end()) return it->second;
    return IntegerMatrix(rank_at(target_degree(degree)), rank_at(degree));
}

std::string BoundedComplex::to_string() const {
    std::ostringstream os;
    os << (orientation_ == Orientation::Homological ? "homological" : "cohomological")
       << " complex, degrees [" << min_deg_ << ", " << max_deg_ << "], ranks";
    for (const auto& [d, b] : basis_) os << " " << d << ":" << b.size();
    if (truncated_above_) os << ", truncated above " << *truncated_above_;
    return os.str();
}

ChainMap::ChainMap(const BoundedComplex& source, const BoundedComplex& target,
                   std::map<int, IntegerMatrix> blocks)
    : source_(source), target_(target), blocks_(std::move(blocks)) {
    if (source_.orientation() != target_.orientation())
        throw OrientationMismatch("chain map between complexes of different orientations");
    bool coh = source_.orientation() == Orientation::Cohomological;
    for (const auto& [d, m] : blocks_) {
        if (m.cols() != source_.rank_at(d) || m.rows() != target_.rank_at(d))
            throw IndexOutOfRange("chain map block at degree " + std::to_string(d) +
                                  " has shape " + std::to_string(m.rows()) + "x" +
                                  std::to_string(m.cols()));
    }
    int lo = std::min(source_.min_deg(), target_.min_deg());
    int hi = std::max(source_.max_deg(), target_.max_deg());
    for (int d = lo; d <= hi; ++d) {
        int next = coh ? d + 1 : d - 1;
        // On a truncated complex the block above the stored top is missing,
        // not zero; skip the vacuous commutation check there.
        auto beyond = [&](const BoundedComplex& c) {
            return c.truncated_above() && (coh ? next > c.max_deg() : next < c.min_deg());
        };
        if (beyond(source_) || beyond(target_)) continue;
        IntegerMatrix lhs = target_.differential_from(d) * block_at(d);
        IntegerMatrix rhs = block_at(next) * source_.differential_from(d);
        if (lhs != rhs)
            throw NotAChainMap("blocks do not commute with differentials at degree " +
                               std::to_string(d));
    }
}

IntegerMatrix ChainMap::block_at(int degree) const {
    auto it = blocks_.find(degree);
    if (it != blocks_.end()) return it->second;
    return IntegerMatrix(target_.rank_at(degree), source_.rank_at(degree));
}

GradedAbGroup homology(const BoundedComplex& c) {
    GradedAbGroup out;
    if (c.max_deg() < c.min_deg()) return out;
    bool coh = c.orientation() == Orientation::Cohomological;
    // Invariant factors of every differential, computed once and shared
    // between "rank of outgoing" and "torsion of incoming".
    std::map<int, std::vector<Int>> inv;
    for (int d = c.min_deg(); d <= c.max_deg(); ++d)
        inv.emplace(d, smith_invariant_factors(c.differential_from(d)));
    // Degrees at or above the marker lack their outgoing differential in the
    // stored data, so their homology is unknown and gets dropped.
    int drop_degree = c.truncated_above() ? *c.truncated_above() : c.max_deg() + 1;
    for (int d = c.min_deg(); d <= c.max_deg(); ++d) {
        if (d >= drop_degree) break;
        int incoming_src = coh ? d - 1 : d + 1;
        const std::vector<Int>* in_inv = nullptr;
        auto it = inv.find(incoming_src);
        if (it != inv.end()) in_inv = &it->second;
        int rank_in = in_inv ? static_cast<int>(in_inv->size()) : 0;
        int rank_out = static_cast<int>(inv.at(d).size());
        int free_rank = c.rank_at(d) - rank_out - rank_in;
        std::vector<Int> torsion;
        if (in_inv)
            for (const auto& f : *in_inv)
                if (f > 1) torsion.push_back(f);
        FgAbGroup h(free_rank, std::move(torsion));
        if (!h.is_trivial()) out.components.emplace(d, h);
    }
    if (c.truncated_above()) out.truncated_above = drop_degree - 1;
    return out;
}

BoundedComplex dualize(const BoundedComplex& c) {
    bool coh = c.orientation() == Orientation::Cohomological;
    std::map<int, IntegerMatrix> diffs;
    for (int d = c.min_deg(); d <= c.max_deg(); ++d) {
        // Dual differential out of degree d is the transpose of the original
        // differential into degree d.
        int src = coh ? d - 1 : d + 1;
        if (src < c.min_deg() || src > c.max_deg()) continue;
        IntegerMatrix m = c.differential_from(src);
        if (m.rows() == 0 || m.cols() == 0) continue;
        diffs.emplace(d, m.transpose());
    }
    return BoundedComplex(coh ? Orientation::Homological : Orientation::Cohomological,
                          c.basis(), std::move(diffs), c.truncated_above());
}

namespace {

// Layout of (C (x) D)_n as consecutive blocks C_p (x) D_{n-p}, p ascending;
// within a block the C index is major. Returns (p, offset) pairs.
std::vector<std::pair<int, int>> tensor_layout(const BoundedComplex& c, const BoundedComplex& d,
                                               int n) {
    std::vector<std::pair<int, int>> blocks;
    int off = 0;
    for (int p = c.min_deg(); p <= c.max_deg(); ++p) {
        int q = n - p;
        int r = c.rank_at(p) * d.rank_at(q);
        if (r == 0) continue;
        blocks.emplace_back(p, off);
        off += r;
    }
    return blocks;
}

int tensor_offset(const std::vector<std::pair<int, int>>& blocks, int p) {
    for (const auto& [bp, off] : blocks)
        if (bp == p) return off;
    return -1;
}

}  // namespace

BoundedComplex tensor_product(const BoundedComplex& c, const BoundedComplex& d) {
    if (c.orientation() != d.orientation())
        throw OrientationMismatch("tensor factors must share an orientation");
    bool coh = c.orientation() == Orientation::Cohomological;
    int step = coh ? 1 : -1;

    std::map<int, std::vector<std::string>> basis;
    for (int n = c.min_deg() + d.min_deg(); n <= c.max_deg() + d.max_deg(); ++n) {
        std::vector<std::string> labels;
        for (int p = c.min_deg(); p <= c.max_deg(); ++p) {
            int q = n - p;
            if (c.rank_at(p) == 0 || d.rank_at(q) == 0) continue;
            for (const auto& cl : c.basis_at(p))
                for (const auto& dl : d.basis_at(q)) labels.push_back(cl + "*" + dl);
        }
        if (!labels.empty()) basis.emplace(n, std::move(labels));
    }

    std::map<int, IntegerMatrix> diffs;
    for (const auto& [n, labels] : basis) {
        int tn = n + step;
        auto src_blocks = tensor_layout(c, d, n);
        auto tgt_blocks = tensor_layout(c, d, tn);
        if (tgt_blocks.empty()) continue;
        int tgt_rank = 0;
        for (const auto& [p, off] : tgt_blocks) {
            (void)off;
            tgt_rank = std::max(tgt_rank, off + c.rank_at(p) * d.rank_at(tn - p));
        }
        IntegerMatrix m(tgt_rank, static_cast<int>(labels.size()));
        for (const auto& [p, src_off] : src_blocks) {
            int q = n - p;
            int rc = c.rank_at(p), rd = d.rank_at(q);
            // d_C (x) id : block (p, q) -> (p + step, q)
            int tgt_off = tensor_offset(tgt_blocks, p + step);
            if (tgt_off >= 0) {
                IntegerMatrix dc = c.differential_from(p);
                int rd_t = d.rank_at(q);
                for (int ci = 0; ci < rc; ++ci)
                    for (const auto& [ri, v] : dc.column(ci))
                        for (int di = 0; di < rd; ++di)
                            m.add_to_entry(tgt_off + ri * rd_t + di, src_off + ci * rd + di, v);
            }
            // (-1)^p id (x) d_D : block (p, q) -> (p, q + step)
            tgt_off = tensor_offset(tgt_blocks, p);
            if (tgt_off >= 0) {
                IntegerMatrix dd = d.differential_from(q);
                Int sign = (p % 2 == 0) ? 1 : -1;
                int rd_t = d.rank_at(q + step);
                for (int di = 0; di < rd; ++di)
                    for (const auto& [rj, v] : dd.column(di))
                        for (int ci = 0; ci < rc; ++ci)
                            m.add_to_entry(tgt_off + ci * rd_t + rj, src_off + ci * rd + di,
                                           sign * v);
            }
        }
        if (!m.is_zero()) diffs.emplace(n, m);
    }

    std::optional<int> marker;
    if (c.truncated_above() && d.truncated_above())
        marker = std::min(*c.truncated_above() + d.min_deg(), *d.truncated_above() + c.min_deg());
    else if (c.truncated_above())
        marker = *c.truncated_above() + d.min_deg();
    else if (d.truncated_above())
        marker = *d.truncated_above() + c.min_deg();
    return BoundedComplex(c.orientation(), std::move(basis), std::move(diffs), marker);
}

BoundedComplex mapping_cone(const ChainMap& f) {
    const BoundedComplex& c = f.source();
    const BoundedComplex& d = f.target();
    bool coh = c.orientation() == Orientation::Cohomological;
    int shift_in = coh ? 1 : -1;  // cone degree n holds C at degree n + shift_in

    std::map<int, std::vector<std::string>> basis;
    int lo = std::min(c.min_deg() - shift_in, d.min_deg());
    int hi = std::max(c.max_deg() - shift_in, d.max_deg());
    for (int n = lo; n <= hi; ++n) {
        std::vector<std::string> labels;
        for (const auto& l : c.basis_at(n + shift_in)) labels.push_back("s." + l);
        for (const auto& l : d.basis_at(n)) labels.push_back("t." + l);
        if (!labels.empty()) basis.emplace(n, std::move(labels));
    }

    std::map<int, IntegerMatrix> diffs;
    for (const auto& [n, labels] : basis) {
        int tn = n + shift_in;
        int rc = c.rank_at(n + shift_in), rd = d.rank_at(n);
        int trc = c.rank_at(tn + shift_in), trd = d.rank_at(tn);
        if (trc + trd == 0) continue;
        IntegerMatrix m(trc + trd, rc + rd);
        IntegerMatrix dc = c.differential_from(n + shift_in);
        for (int j = 0; j < rc; ++j)
            for (const auto& [i, v] : dc.column(j)) m.set_entry(i, j, -v);
        IntegerMatrix fb = f.block_at(n + shift_in);
        for (int j = 0; j < rc; ++j)
            for (const auto& [i, v] : fb.column(j)) m.set_entry(trc + i, j, -v);
        IntegerMatrix dd = d.differential_from(n);
        for (int j = 0; j < rd; ++j)
            for (const auto& [i, v] : dd.column(j)) m.set_entry(trc + i, rc + j, v);
        if (!m.is_zero()) diffs.emplace(n, m);
    }

    std::optional<int> marker;
    auto consider = [&marker](std::optional<int> t) {
        if (t && (!marker || *t < *marker)) marker = t;
    };
    if (c.truncated_above()) consider(*c.truncated_above() - shift_in);
    consider(d.truncated_above());
    return BoundedComplex(c.orientation(), std::move(basis), std::move(diffs), marker);
}

BoundedComplex shift_complex(const BoundedComplex& c, int k) {
    std::map<int, std::vector<std::string>> basis;
    for (const auto& [d, b] : c.basis()) basis.emplace(d + k, b);
    std::map<int, IntegerMatrix> diffs;
    Int sign = (k % 2 == 0) ? 1 : -1;
    for (int d = c.min_deg(); d <= c.max_deg(); ++d) {
        IntegerMatrix m = c.differential_from(d);
        if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) continue;
        diffs.emplace(d + k, m.scaled(sign));
    }
    std::optional<int> marker;
    if (c.truncated_above()) marker = *c.truncated_above() + k;
    return BoundedComplex(c.orientation(), std::move(basis), std::move(diffs), marker);
}

BoundedComplex truncate_complex(const BoundedComplex& c, int max_degree) {
    if (c.orientation() != Orientation::Cohomological)
        throw InvalidParameter("truncate_complex expects a cohomological complex");
    std::map<int, std::vector<std::string>> basis;
    for (const auto& [d, b] : c.basis())
        if (d <= max_degree) basis.emplace(d, b);
    std::map<int, IntegerMatrix> diffs;
    for (int d = c.min_deg(); d < max_degree && d <= c.max_deg(); ++d) {
        IntegerMatrix m = c.differential_from(d);
        if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) continue;
        diffs.emplace(d, m);
    }
    int marker = max_degree;
    if (c.truncated_above() && *c.truncated_above() < marker) marker = *c.truncated_above();
    return BoundedComplex(Orientation::Cohomological, std::move(basis), std::move(diffs), marker);
}

BoundedComplex reindex(const BoundedComplex& c) {
    if (c.truncated_above())
        throw InvalidParameter("reindex of a truncated complex would lose the marker's meaning");
    std::map<int, std::vector<std::string>> basis;
    for (const auto& [d, b] : c.basis()) basis.emplace(-d, b);
    std::map<int, IntegerMatrix> diffs;
    for (int d = c.min_deg(); d <= c.max_deg(); ++d) {
        IntegerMatrix m = c.differential_from(d);
        if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) continue;
        diffs.emplace(-d, m);
    }
    return BoundedComplex(c.orientation() == Orientation::Cohomological
                              ? Orientation::Homological
                              : Orientation::Cohomological,
                          std::move(basis), std::move(diffs), std::nullopt);
}

BoundedComplex direct_sum_complex(const BoundedComplex& a, const BoundedComplex& b) {
    if (a.orientation() != b.orientation())
        throw OrientationMismatch("direct sum of complexes with different orientations");
    const BoundedComplex* pa = &a;
    const BoundedComplex* pb = &b;
    std::optional<BoundedComplex> ta, tb;
    if (a.truncated_above() || b.truncated_above()) {
        if (a.orientation() != Orientation::Cohomological)
            throw InvalidParameter("truncated homological complexes cannot be summed");
        int m = a.truncated_above() && b.truncated_above()
                    ? std::min(*a.truncated_above(), *b.truncated_above())
                    : (a.truncated_above() ? *a.truncated_above() : *b.truncated_above());
        ta = truncate_complex(a, m);
        tb = truncate_complex(b, m);
        pa = &*ta;
        pb = &*tb;
    }
    std::map<int, std::vector<std::string>> basis;
    std::map<int, IntegerMatrix> diffs;
    int lo = std::min(pa->min_deg(), pb->min_deg());
    int hi = std::max(pa->max_deg(), pb->max_deg());
    for (int n = lo; n <= hi; ++n) {
        std::vector<std::string> labels;
        for (const auto& l : pa->basis_at(n)) labels.push_back("a." + l);
        for (const auto& l : pb->basis_at(n)) labels.push_back("b." + l);
        if (!labels.empty()) basis.emplace(n, std::move(labels));
        IntegerMatrix m = IntegerMatrix::block_diag(pa->differential_from(n),
                                                    pb->differential_from(n));
        if (!m.is_zero()) diffs.emplace(n, m);
    }
    std::optional<int> marker = pa->truncated_above();
    if (pb->truncated_above() && (!marker || *pb->truncated_above() < *marker))
        marker = pb->truncated_above();
    return BoundedComplex(a.orientation(), std::move(basis), std::move(diffs), marker);
}

BoundedComplex homotopy_pullback(const ChainMap& a, const ChainMap& b) {
    if (a.target().basis() != b.target().basis() ||
        a.target().orientation() != b.target().orientation())
        throw InvalidParameter("homotopy pullback legs must share their target complex");
    BoundedComplex s = direct_sum_complex(a.source(), b.source());
    // (a - b) on the sum, degreewise [a | -b].
    std::map<int, IntegerMatrix> blocks;
    for (int d = s.min_deg(); d <= s.max_deg(); ++d) {
        IntegerMatrix blk = IntegerMatrix::hstack(a.block_at(d), b.block_at(d).scaled(-1));
        if (blk.rows() != a.target().rank_at(d))
            throw IndexOutOfRange("pullback block shape mismatch");
        if (!blk.is_zero()) blocks.emplace(d, blk);
    }
    ChainMap h(s, a.target(), std::move(blocks));
    BoundedComplex cone = mapping_cone(h);
    bool coh = s.orientation() == Orientation::Cohomological;
    return shift_complex(cone, coh ? 1 : -1);
}

nlohmann::json complex_to_json(const BoundedComplex& c) {
    nlohmann::json j;
    j["orientation"] =
        c.orientation() == Orientation::Cohomological ? "cohomological" : "homological";
    if (c.truncated_above())
        j["truncated_above"] = *c.truncated_above();
    else
        j["truncated_above"] = nullptr;
    j["degrees"] = nlohmann::json::array();
    for (const auto& [d, b] : c.basis()) {
        nlohmann::json deg;
        deg["degree"] = d;
        deg["basis"] = b;
        j["degrees"].push_back(deg);
    }
    j["differentials"] = nlohmann::json::array();
    for (int d = c.min_deg(); d <= c.max_deg(); ++d) {
        IntegerMatrix m = c.differential_from(d);
        if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) continue;
        nlohmann::json entry;
        entry["from"] = d;
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < m.rows(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int k = 0; k < m.cols(); ++k) {
                const Int& v = m.entry(i, k);
                // JSON numbers are exact only through 2^53; spill to strings.
                if (abs_int(v) <= Int(1) << 53)
                    row.push_back(static_cast<long long>(v));
                else
                    row.push_back(int_to_string(v));
            }
            rows.push_back(row);
        }
        entry["matrix"] = rows;
        j["differentials"].push_back(entry);
    }
    return j;
}

BoundedComplex complex_from_json(const nlohmann::json& j) {
    Orientation o = j.at("orientation").get<std::string>() == "cohomological"
                        ? Orientation::Cohomological
                        : Orientation::Homological;
    std::optional<int> marker;
    if (j.contains("truncated_above") && !j.at("truncated_above").is_null())
        marker = j.at("truncated_above").get<int>();
    std::map<int, std::vector<std::string>> basis;
    for (const auto& deg : j.at("degrees"))
        basis.emplace(deg.at("degree").get<int>(),
                      deg.at("basis").get<std::vector<std::string>>());
    std::map<int, IntegerMatrix> diffs;
    for (const auto& entry : j.at("differentials")) {
        const auto& rows = entry.at("matrix");
        int r = static_cast<int>(rows.size());
        int c = r > 0 ? static_cast<int>(rows[0].size()) : 0;
        IntegerMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < c; ++k) {
                const auto& cell = rows[i][k];
                Int v = cell.is_string() ? Int(cell.get<std::string>())
                                         : Int(cell.get<long long>());
                if (v != 0) m.set_entry(i, k, v);
            }
        diffs.emplace(entry.at("from").get<int>(), std::move(m));
    }
    return BoundedComplex(o, std::move(basis), std::move(diffs), marker);
}

}  // namespace polyext
