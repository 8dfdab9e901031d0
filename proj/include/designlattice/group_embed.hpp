#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "designlattice/design.hpp"
#include "designlattice/normal_form.hpp"

namespace designlattice {

/// Finitely generated abelian group in invariant-factor presentation:
/// torsion factors (each >= 2, each dividing the next) plus a free part.
struct AbelianGroup {
    std::vector<Int> torsion;
    int free_rank = 0;

    bool finite() const { return free_rank == 0; }
    Int order() const {
        Int o = 1;
        for (const Int& t : torsion) o *= t;
        return o;  // meaningful when finite()
    }
    Int exponent() const { return torsion.empty() ? Int(1) : torsion.back(); }

    bool operator==(const AbelianGroup&) const = default;
};

struct GroupElement {
    std::vector<Int> torsion_coords;  // coordinate i reduced mod torsion[i]
    std::vector<Int> free_coords;

    bool operator==(const GroupElement&) const = default;
    bool operator<(const GroupElement& o) const {
        if (torsion_coords != o.torsion_coords) return torsion_coords < o.torsion_coords;
        return free_coords < o.free_coords;
    }
};

/// G_D = Z^v / (row lattice of the incidence matrix), with the canonical
/// image of every point. Point coordinates are canonical only up to an
/// automorphism of G_D; compare isomorphism class, injectivity and block
/// sums, never literal coordinates.
struct EmbeddingResult {
    AbelianGroup group;
    std::vector<GroupElement> images;
    bool injective = false;
};

inline EmbeddingResult embedding_group(const Design& d) {
    const IntMatrix a = incidence_matrix(d);
    const SmithDecomposition snf = smith_normal_form(a);
    const int v = d.v();

    std::vector<Int> dv(v, 0);
    for (std::size_t i = 0; i < snf.diag.size(); ++i) dv[i] = snf.diag[i];

    std::vector<int> torsion_cols, free_cols;
    EmbeddingResult res;
    for (int j = 0; j < v; ++j) {
        if (dv[j] == 0)
            free_cols.push_back(j);
        else if (dv[j] > 1)
            torsion_cols.push_back(j);
    }
    for (int j : torsion_cols) res.group.torsion.push_back(dv[j]);
    res.group.free_rank = static_cast<int>(free_cols.size());

    // x maps to x*V in the basis where the row lattice is spanned by d_j e_j,
    // so the image of point i reads off row i of V.
    res.images.reserve(v);
    for (int i = 0; i < v; ++i) {
        GroupElement g;
        for (int j : torsion_cols) g.torsion_coords.push_back(mod_floor(snf.v(i, j), dv[j]));
        for (int j : free_cols) g.free_coords.push_back(snf.v(i, j));
        res.images.push_back(std::move(g));
    }

    std::set<GroupElement> distinct(res.images.begin(), res.images.end());
    res.injective = distinct.size() == res.images.size();

    // The defining property: every block sums to the group zero.
    for (const auto& block : d.blocks()) {
        GroupElement sum;
        sum.torsion_coords.assign(torsion_cols.size(), 0);
        sum.free_coords.assign(free_cols.size(), 0);
        for (int p : block) {
            for (std::size_t j = 0; j < torsion_cols.size(); ++j)
                sum.torsion_coords[j] =
                    mod_floor(sum.torsion_coords[j] + res.images[p].torsion_coords[j],
                              dv[torsion_cols[j]]);
            for (std::size_t j = 0; j < free_cols.size(); ++j)
                sum.free_coords[j] += res.images[p].free_coords[j];
        }
        for (const Int& c : sum.torsion_coords)
            if (c != 0) throw AuditFailed("block sum", "a block does not sum to zero in G_D");
        for (const Int& c : sum.free_coords)
            if (c != 0) throw AuditFailed("block sum", "a block does not sum to zero in G_D");
    }
    return res;
}

/// True iff the natural map from points to G_D is injective (all point
/// images pairwise distinct).
inline bool is_embeddable(const Design& d) { return embedding_group(d).injective; }

/// Does some subfamily of blocks partition the point set? Exact-cover
/// backtracking; the uncovered point with the fewest usable blocks drives
/// each branch. Immediate false when k does not divide v.
inline bool block_partition_exists(const Design& d) {
    const int v = d.v();
    const int k = d.block_size();
    if (k == 0 || v % k != 0) return false;

    const int words = (v + 63) / 64;
    const int b = static_cast<int>(d.blocks().size());
    std::vector<std::vector<std::uint64_t>> mask(b, std::vector<std::uint64_t>(words, 0));
    std::vector<std::vector<int>> through(v);
    for (int j = 0; j < b; ++j)
        for (int p : d.blocks()[j]) {
            mask[j][p >> 6] |= std::uint64_t(1) << (p & 63);
            through[p].push_back(j);
        }

    std::vector<std::uint64_t> covered(words, 0);
    auto disjoint = [&](int j) {
        for (int w = 0; w < words; ++w)
            if (mask[j][w] & covered[w]) return false;
        return true;
    };
    auto rec = [&](auto&& self, int remaining) -> bool {
        if (remaining == 0) return true;
        int best_point = -1;
        int best_count = -1;
        for (int p = 0; p < v; ++p) {
            if (covered[p >> 6] >> (p & 63) & 1) continue;
            int count = 0;
            for (int j : through[p])
                if (disjoint(j)) ++count;
            if (best_count < 0 || count < best_count) {
                best_count = count;
                best_point = p;
                if (count == 0) return false;
            }
        }
        for (int j : through[best_point]) {
            if (!disjoint(j)) continue;
            for (int w = 0; w < words; ++w) covered[w] |= mask[j][w];
            if (self(self, remaining - k)) return true;
            for (int w = 0; w < words; ++w) covered[w] &= ~mask[j][w];
        }
        return false;
    };
    return rec(rec, v);
}

struct ExponentAudit {
    AbelianGroup group;
    Int k_r_minus_lambda;  // k(r-lambda)
    Int r_minus_lambda;
    bool has_partition = false;
};

/// Assert exponent(G_D) | k(r-lambda), and | (r-lambda) when some subfamily
/// of blocks partitions the points.
inline ExponentAudit exponent_audit(const Design& d) {
    const DesignParams p = verify_design(d, 2);
    const EmbeddingResult emb = embedding_group(d);

    ExponentAudit report;
    report.group = emb.group;
    report.r_minus_lambda = p.r - *p.lambda;
    report.k_r_minus_lambda = p.k * report.r_minus_lambda;
    report.has_partition = block_partition_exists(d);

    auto check = [&](const Int& bound, const char* name) {
        if (bound == 0) return;  // m*x = 0 holds trivially
        if (!emb.group.finite())
            throw AuditFailed("exponent divisibility",
                              std::string("G_D has free rank but ") + name + " is nonzero");
        const Int e = emb.group.exponent();
        if (bound % e != 0)
            throw AuditFailed("exponent divisibility", "exponent " + e.str() + " does not divide " +
                                                           name + " = " + bound.str());
    };
    check(report.k_r_minus_lambda, "k(r-lambda)");
    if (report.has_partition) check(report.r_minus_lambda, "r-lambda");
    return report;
}

/// Witness of non-injectivity: integer coefficients with coeffs*A = e_i - e_j
/// for a collapsed pair (i, j) of points. Nothing when the map is injective.
struct NonInjectivityWitness {
    std::vector<Int> coefficients;  // length b
    int i = 0;
    int j = 0;
};

inline std::optional<NonInjectivityWitness> non_injectivity_witness(const Design& d) {
    const EmbeddingResult emb = embedding_group(d);
    if (emb.injective) return std::nullopt;

    int wi = -1, wj = -1;
    for (int i = 0; i < d.v() && wi < 0; ++i)
        for (int j = i + 1; j < d.v(); ++j)
            if (emb.images[i] == emb.images[j]) {
                wi = i;
                wj = j;
                break;
            }

    const IntMatrix a = incidence_matrix(d);
    const HermiteForm hf = hermite_normal_form(a);
    std::vector<Int> target(d.v(), 0);
    target[wi] = 1;
    target[wj] = -1;
    auto coeffs = express_in_row_lattice(hf, target);
    if (!coeffs)
        throw AuditFailed("witness", "collapsed pair difference is not in the row lattice");
    if (!(*coeffs * a == target))
        throw AuditFailed("witness", "witness coefficients do not reproduce e_i - e_j");
    const std::vector<Int> va = *coeffs * a;
    if (dot(va, va) != 2)
        throw AuditFailed("witness", "witness quadratic value is not 2");
    return NonInjectivityWitness{std::move(*coeffs), wi, wj};
}

/// Report JSON:
/// {"torsion":[...],"free_rank":n,"injective":b,"exponent":e,"order":"<decimal>"}.
/// Exponent and order are null when G_D is infinite.
inline nlohmann::json embedding_report_json(const EmbeddingResult& emb) {
    nlohmann::json torsion = nlohmann::json::array();
    for (const Int& t : emb.group.torsion) torsion.push_back(json_int(t));
    nlohmann::json j{{"torsion", std::move(torsion)},
                     {"free_rank", emb.group.free_rank},
                     {"injective", emb.injective}};
    if (emb.group.finite()) {
        j["exponent"] = json_int(emb.group.exponent());
        j["order"] = emb.group.order().str();
    } else {
        j["exponent"] = nullptr;
        j["order"] = nullptr;
    }
    return j;
}

}  // namespace designlattice
