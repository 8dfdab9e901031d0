#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "designlattice/bigint.hpp"
#include "designlattice/errors.hpp"
#include "designlattice/intmatrix.hpp"

namespace designlattice {

/// A finite incidence structure: points 0..v-1 and a family of k-subsets
/// (blocks). Held in canonical form: every block strictly increasing, the
/// family sorted lexicographically, no repeated blocks. Equality is plain
/// structural comparison of v and blocks; labels are display metadata.
class Design {
public:
    Design(int v, std::vector<std::vector<int>> blocks, std::vector<std::string> labels = {})
        : v_(v), blocks_(std::move(blocks)), labels_(std::move(labels)) {
        if (v_ < 0) throw std::invalid_argument("point count must be nonnegative");
        for (auto& b : blocks_) {
            std::sort(b.begin(), b.end());
            if (b.empty()) throw std::invalid_argument("empty block");
            if (std::adjacent_find(b.begin(), b.end()) != b.end())
                throw std::invalid_argument("repeated point inside a block");
            if (b.front() < 0 || b.back() >= v_) throw std::invalid_argument("point index out of range");
        }
        std::sort(blocks_.begin(), blocks_.end());
        if (std::adjacent_find(blocks_.begin(), blocks_.end()) != blocks_.end())
            throw std::invalid_argument("duplicate block");
        if (!blocks_.empty()) {
            const std::size_t k = blocks_.front().size();
            for (const auto& b : blocks_)
                if (b.size() != k) throw std::invalid_argument("blocks of unequal size");
        }
        if (!labels_.empty() && static_cast<int>(labels_.size()) != v_)
            throw std::invalid_argument("labels must name every point");
    }

    int v() const { return v_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<std::string>& labels() const { return labels_; }
    int block_size() const { return blocks_.empty() ? 0 : static_cast<int>(blocks_.front().size()); }

    friend bool operator==(const Design& a, const Design& b) {
        return a.v_ == b.v_ && a.blocks_ == b.blocks_;
    }

private:
    int v_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<std::string> labels_;
};

/// Verified parameters of a t-(v,k,r_t) design. r = r_1 and lambda = r_2
/// (lambda present when t >= 2).
struct DesignParams {
    int t = 0;
    int v = 0;
    int k = 0;
    Int r_t;
    Int b;
    Int r;
    std::optional<Int> lambda;
};

/// r_s = r_t * (v-s)...(v-t+1) / ((k-s)...(k-t+1)), exact.
inline Int level_parameters(const DesignParams& p, int s) {
    if (s < 0 || s >= p.t) throw std::invalid_argument("level s must satisfy 0 <= s < t");
    Int num = p.r_t, den = 1;
    for (int i = s; i < p.t; ++i) {
        num *= p.v - i;
        den *= p.k - i;
    }
    if (num % den != 0)
        throw NonIntegral("r_" + std::to_string(s) + " is not integral for these parameters");
    return num / den;
}

namespace detail {

template <class Fn>
void for_each_subset_of_block(const std::vector<int>& block, int s, Fn&& fn) {
    std::vector<int> pick(s);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == s) {
            fn(pick);
            return;
        }
        for (int i = start; i <= static_cast<int>(block.size()) - (s - depth); ++i) {
            pick[depth] = block[i];
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
}

inline bool next_combination(std::vector<int>& c, int v) {
    const int s = static_cast<int>(c.size());
    for (int i = s - 1; i >= 0; --i) {
        if (c[i] < v - (s - i)) {
            ++c[i];
            for (int j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// The number of blocks through every s-subset, checked uniform over all
// C(v,s) subsets. Counting walks the blocks and bumps C(k,s) counters per
// block rather than scanning all C(v,s) subsets against the family.
inline Int uniform_cover_count(const Design& d, int s) {
    std::map<std::vector<int>, long long> counts;
    for (const auto& block : d.blocks())
        for_each_subset_of_block(block, s, [&](const std::vector<int>& sub) { ++counts[sub]; });
    auto it = counts.begin();
    const long long r = it->second;
    for (; it != counts.end(); ++it)
        if (it->second != r)
            throw NotADesign("two " + std::to_string(s) + "-subsets lie in different block counts",
                             counts.begin()->first, counts.begin()->second, it->first, it->second);
    if (Int(counts.size()) != binomial(d.v(), s)) {
        // some s-subset is in no block; walk combinations until we hit it
        std::vector<int> probe(s);
        for (int i = 0; i < s; ++i) probe[i] = i;
        do {
            if (!counts.count(probe))
                throw NotADesign("a " + std::to_string(s) + "-subset lies in no block",
                                 counts.begin()->first, counts.begin()->second, probe, 0);
        } while (next_combination(probe, d.v()));
    }
    return Int(r);
}

}  // namespace detail

/// Check that every t-subset of points lies in the same number r_t >= 1 of
/// blocks, and cross-check each derived level r_s (s < t) against direct
/// counting.
inline DesignParams verify_design(const Design& d, int t) {
    if (d.blocks().empty()) throw EmptyFamily("design has no blocks");
    const int k = d.block_size();
    if (t < 1 || t > k) throw std::invalid_argument("strength t must satisfy 1 <= t <= k");

    DesignParams p;
    p.t = t;
    p.v = d.v();
    p.k = k;
    p.r_t = detail::uniform_cover_count(d, t);
    p.b = static_cast<long long>(d.blocks().size());
    for (int s = t - 1; s >= 0; --s) {
        const Int direct = detail::uniform_cover_count(d, s);
        const Int formula = level_parameters(p, s);
        if (direct != formula)
            throw NotADesign("level parameter r_" + std::to_string(s) +
                             " disagrees with direct counting");
        if (s == 1) p.r = direct;
        if (s == 2) p.lambda = direct;
    }
    if (t == 1) p.r = p.r_t;
    if (t == 2) p.lambda = p.r_t;
    if (level_parameters(p, 0) != p.b)
        throw NotADesign("block count does not match the parameter formula");
    return p;
}

/// Blockwise set complement; requires k < v.
inline Design complement(const Design& d, const DesignParams& params) {
    if (params.k >= d.v()) throw std::invalid_argument("complement requires k < v");
    std::vector<std::vector<int>> out;
    out.reserve(d.blocks().size());
    for (const auto& block : d.blocks()) {
        std::vector<int> comp;
        comp.reserve(d.v() - block.size());
        std::size_t at = 0;
        for (int i = 0; i < d.v(); ++i) {
            if (at < block.size() && block[at] == i)
                ++at;
            else
                comp.push_back(i);
        }
        out.push_back(std::move(comp));
    }
    return Design(d.v(), std::move(out), d.labels());
}

/// The k-subsets of points that are not blocks of d.
inline Design supplement(const Design& d, const DesignParams& params) {
    static const Int kEnumerationGuard = 100000000;
    if (binomial(d.v(), params.k) > kEnumerationGuard)
        throw BudgetExceeded("supplement enumeration too large");
    std::set<std::vector<int>> have(d.blocks().begin(), d.blocks().end());
    std::vector<std::vector<int>> out;
    std::vector<int> probe(params.k);
    for (int i = 0; i < params.k; ++i) probe[i] = i;
    do {
        if (!have.count(probe)) out.push_back(probe);
    } while (detail::next_combination(probe, d.v()));
    if (out.empty()) throw EmptyFamily("supplement of the complete design is empty");
    return Design(d.v(), std::move(out), d.labels());
}

/// Blocks through point p with p removed; points reindexed to 0..v-2.
inline Design derived(const Design& d, int point) {
    if (point < 0 || point >= d.v()) throw std::invalid_argument("point index out of range");
    std::vector<std::vector<int>> out;
    for (const auto& block : d.blocks()) {
        if (!std::binary_search(block.begin(), block.end(), point)) continue;
        std::vector<int> nb;
        nb.reserve(block.size() - 1);
        for (int i : block)
            if (i != point) nb.push_back(i > point ? i - 1 : i);
        out.push_back(std::move(nb));
    }
    if (out.empty())
        throw IsolatedPoint("point " + std::to_string(point) + " lies in no block");
    std::vector<std::string> labels = d.labels();
    if (!labels.empty()) labels.erase(labels.begin() + point);
    return Design(d.v() - 1, std::move(out), std::move(labels));
}

/// b x v incidence matrix, rows indexed by blocks: row j is the
/// characteristic vector of block j in Z^v.
inline IntMatrix incidence_matrix(const Design& d) {
    IntMatrix a(static_cast<int>(d.blocks().size()), d.v());
    for (int j = 0; j < a.rows(); ++j)
        for (int i : d.blocks()[j]) a(j, i) = 1;
    return a;
}

struct GramAudit {
    IntMatrix gram;  // A^T A
    Int det;
    Int expected_det;
    bool symmetric = false;  // v == b, equivalently r == k
};

/// Assert A^T A = (r-lambda) I + lambda J and |A^T A| = r k (r-lambda)^(v-1);
/// for symmetric designs additionally assert A A^T = A^T A.
inline GramAudit gram_audit(const Design& d, const DesignParams& p) {
    if (p.t < 2) throw std::invalid_argument("gram audit needs strength >= 2");
    const Int lambda = *p.lambda;
    IntMatrix a = incidence_matrix(d);
    IntMatrix g = a.transposed() * a;
    for (int i = 0; i < d.v(); ++i)
        for (int j = 0; j < d.v(); ++j) {
            const Int expected = (i == j) ? p.r : lambda;
            if (g(i, j) != expected)
                throw AuditFailed("gram identity", "A^T A entry (" + std::to_string(i) + "," +
                                                       std::to_string(j) + ") is " + g(i, j).str() +
                                                       ", expected " + expected.str());
        }
    GramAudit report;
    report.det = g.determinant();
    report.expected_det =
        p.r * p.k * boost::multiprecision::pow(Int(p.r - lambda), static_cast<unsigned>(d.v() - 1));
    if (report.det != report.expected_det)
        throw AuditFailed("gram determinant", "|A^T A| = " + report.det.str() + ", expected " +
                                                  report.expected_det.str());
    report.symmetric = (p.b == p.v);
    if (report.symmetric && !(a * a.transposed() == g))
        throw AuditFailed("symmetric commutation", "A A^T != A^T A for a symmetric design");
    report.gram = std::move(g);
    return report;
}

// Design JSON: {"version":1,"v":v,"blocks":[[...],...],"labels":[...]?} with
// blocks in canonical order. Readers reject out-of-range indices and
// duplicate blocks.
inline void to_json(nlohmann::json& j, const Design& d) {
    j = nlohmann::json{{"version", 1}, {"v", d.v()}, {"blocks", d.blocks()}};
    if (!d.labels().empty()) j["labels"] = d.labels();
}

inline Design design_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("v") || !j.contains("blocks"))
        throw std::invalid_argument("design JSON requires v and blocks");
    if (j.contains("version") && j.at("version") != 1)
        throw std::invalid_argument("unsupported design JSON version");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return Design(j.at("v").get<int>(), j.at("blocks").get<std::vector<std::vector<int>>>(),
                  std::move(labels));
}

}  // namespace designlattice
