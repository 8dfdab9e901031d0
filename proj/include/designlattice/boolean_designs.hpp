#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "designlattice/design.hpp"
#include "designlattice/finite_field.hpp"

namespace designlattice {

inline const Int kDefaultBudget = 100000000;  // cap on C(v,k) per enumeration

enum class BooleanVariant { field, affine, projective, dependent };

/// Parameters selecting one of the zero-sum constructions:
///   field(q,k)      k-subsets of GF(q) summing to zero; requires p | k, 2 < k < q
///   affine(n,k)     k-subsets of Z_2^n with zero XOR; requires k even, 2 < k < 2^n
///   projective(n,k) k-subsets of the nonzero vectors with zero XOR; 2 <= k <= 2^n-2
///   dependent(n,k)  k-subsets of the nonzero vectors that are linearly dependent
struct BooleanDesignSpec {
    BooleanVariant variant = BooleanVariant::projective;
    int n = 0;        // dimension (affine/projective/dependent)
    long long q = 0;  // field order (field)
    int k = 0;
    Int budget = kDefaultBudget;
};

struct BuiltDesign {
    Design design;
    int strength = 0;  // strength the family was verified at (when nondegenerate)
    bool degenerate = false;
    std::optional<DesignParams> params;
};

namespace detail {

// Enumerate ascending k-tuples of codes in [lo, hi] whose group sum is zero.
// The first k-1 codes are chosen freely; the last is forced as the negated
// running sum and accepted when it lands strictly above the chosen ones, so
// every zero-sum subset is visited exactly once with C(v, k-1) work.
template <class Add, class Neg, class Sink>
void for_each_zero_sum(long long lo, long long hi, int k, long long zero, Add add, Neg neg,
                       Sink&& sink) {
    if (k == 0) {
        std::vector<long long> empty;
        sink(empty);
        return;
    }
    std::vector<long long> chosen;
    chosen.reserve(k);
    auto rec = [&](auto&& self, long long start, long long acc) -> void {
        if (static_cast<int>(chosen.size()) == k - 1) {
            const long long last = neg(acc);
            if (last >= lo && last <= hi && (chosen.empty() || last > chosen.back())) {
                chosen.push_back(last);
                sink(chosen);
                chosen.pop_back();
            }
            return;
        }
        const long long slack = hi - (k - 2 - static_cast<long long>(chosen.size()));
        for (long long c = start; c <= slack; ++c) {
            chosen.push_back(c);
            self(self, c + 1, add(acc, c));
            chosen.pop_back();
        }
    };
    rec(rec, lo, zero);
}

inline int gf2_rank(std::vector<unsigned long long> vecs) {
    int rank = 0;
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        unsigned long long x = vecs[i];
        for (int j = 0; j < rank; ++j)
            x = std::min(x, x ^ vecs[j]);
        if (x != 0) {
            vecs[rank] = x;
            for (int j = rank; j > 0 && vecs[j] > vecs[j - 1]; --j) std::swap(vecs[j], vecs[j - 1]);
            ++rank;
        }
    }
    return rank;
}

inline std::vector<std::string> code_labels(long long lo, long long hi) {
    std::vector<std::string> labels;
    labels.reserve(hi - lo + 1);
    for (long long c = lo; c <= hi; ++c) labels.push_back(std::to_string(c));
    return labels;
}

}  // namespace detail

inline BuiltDesign build_design(const BooleanDesignSpec& spec) {
    const int k = spec.k;
    long long lo = 0, hi = 0;
    int strength = 2;
    std::optional<FiniteField> field;

    switch (spec.variant) {
        case BooleanVariant::field: {
            field.emplace(FiniteField::from_order(spec.q));
            if (k % field->p() != 0 || k <= 2 || k >= field->order())
                throw SpecInvalid("field variant requires k = mp with 2 < k < q");
            lo = 0;
            hi = field->order() - 1;
            break;
        }
        case BooleanVariant::affine:
            if (spec.n < 2 || spec.n > 30) throw SpecInvalid("affine variant requires 2 <= n <= 30");
            if (k % 2 != 0 || k <= 2 || k >= (1LL << spec.n))
                throw SpecInvalid("affine variant requires even k with 2 < k < 2^n");
            lo = 0;
            hi = (1LL << spec.n) - 1;
            strength = 3;
            break;
        case BooleanVariant::projective:
            if (spec.n < 2 || spec.n > 30) throw SpecInvalid("projective variant requires 2 <= n <= 30");
            if (k < 2 || k > (1LL << spec.n) - 2)
                throw SpecInvalid("projective variant requires 2 <= k <= 2^n - 2");
            lo = 1;
            hi = (1LL << spec.n) - 1;
            break;
        case BooleanVariant::dependent:
            if (spec.n < 1 || spec.n > 30) throw SpecInvalid("dependent variant requires 1 <= n <= 30");
            if (k < 1 || k > (1LL << spec.n) - 1)
                throw SpecInvalid("dependent variant requires 1 <= k <= 2^n - 1");
            lo = 1;
            hi = (1LL << spec.n) - 1;
            break;
    }

    const long long v = hi - lo + 1;
    if (binomial(v, k) > spec.budget)
        throw BudgetExceeded("C(" + std::to_string(v) + "," + std::to_string(k) +
                             ") exceeds the enumeration budget");

    std::vector<std::vector<int>> blocks;
    auto emit = [&](const std::vector<long long>& codes) {
        std::vector<int> block;
        block.reserve(codes.size());
        for (long long c : codes) block.push_back(static_cast<int>(c - lo));
        blocks.push_back(std::move(block));
    };

    if (spec.variant == BooleanVariant::dependent) {
        std::vector<long long> chosen;
        std::vector<unsigned long long> vecs;
        auto rec = [&](auto&& self, long long start) -> void {
            if (static_cast<int>(chosen.size()) == k) {
                if (detail::gf2_rank(vecs) < k) emit(chosen);
                return;
            }
            const long long slack = hi - (k - 1 - static_cast<long long>(chosen.size()));
            for (long long c = start; c <= slack; ++c) {
                chosen.push_back(c);
                vecs.push_back(static_cast<unsigned long long>(c));
                self(self, c + 1);
                vecs.pop_back();
                chosen.pop_back();
            }
        };
        rec(rec, lo);
    } else if (spec.variant == BooleanVariant::field) {
        detail::for_each_zero_sum(
            lo, hi, k, 0LL, [&](long long a, long long b) { return field->add(a, b); },
            [&](long long a) { return field->neg(a); }, emit);
    } else {
        detail::for_each_zero_sum(
            lo, hi, k, 0LL, [](long long a, long long b) { return a ^ b; },
            [](long long a) { return a; }, emit);
    }

    BuiltDesign out{Design(static_cast<int>(v), std::move(blocks), detail::code_labels(lo, hi)),
                    strength, false, std::nullopt};
    if (out.design.blocks().empty()) {
        out.degenerate = true;
        return out;
    }
    out.params = verify_design(out.design, strength);
    return out;
}

// ---------------------------------------------------------------------------
// Block count tables b_k for the projective zero-sum designs on 2^n - 1 points
// ---------------------------------------------------------------------------

enum class CountMethod { brute, closed_form, macwilliams };

struct CountTable {
    int n = 0;
    long long v = 0;
    std::vector<Int> b;  // indexed 0..v

    bool operator==(const CountTable&) const = default;
};

/// Number of zero-sum k-subsets of the nonzero vectors of Z_2^n, by direct
/// enumeration.
inline Int zero_sum_count_brute(int n, int k, const Int& budget = kDefaultBudget) {
    const long long v = (1LL << n) - 1;
    if (k < 0 || k > v) return 0;
    if (binomial(v, k) > budget) throw BudgetExceeded("brute count exceeds the enumeration budget");
    long long count = 0;
    detail::for_each_zero_sum(
        1LL, v, k, 0LL, [](long long a, long long b) { return a ^ b; },
        [](long long a) { return a; }, [&](const std::vector<long long>&) { ++count; });
    return count;
}

/// First displayed closed form:
/// alpha_h = (1/(v-2h)) (1 - sum_{i=0}^{h-2} (-1)^i prod_{j=0}^{i} (1+2(h-j))/(v-2(h-j-1)))
inline Rat alpha_product_form(long long v, long long h) {
    Rat sum = 0, prod = 1;
    for (long long i = 0; i <= h - 2; ++i) {
        prod *= Rat(1 + 2 * (h - i), v - 2 * (h - i - 1));
        sum += (i % 2 == 0) ? prod : -prod;
    }
    return (Rat(1) - sum) / (v - 2 * h);
}

/// Double-factorial form of the same quantity:
/// alpha_h = (1/(v-2h)) sum_{i=0}^{h-1} (-1)^i (2h+1)!!/(2(h-i)+1)!! * (v-2h)!!/(v-2(h-i))!!
/// The two ratios are kept as running products: the first gains the odd
/// factor 2(h-i)+3 per step, the second the even factor v-2h+2i per step.
inline Rat alpha_double_factorial_form(long long v, long long h) {
    Rat sum = 0;
    Int num = 1;  // (2h+1)!! / (2(h-i)+1)!!
    Int den = 1;  // (v-2(h-i))!! / (v-2h)!!
    for (long long i = 0; i <= h - 1; ++i) {
        if (i > 0) {
            num *= 2 * (h - i) + 3;
            den *= v - 2 * h + 2 * i;
        }
        sum += (i % 2 == 0) ? Rat(num, den) : Rat(-num, den);
    }
    return sum / (v - 2 * h);
}

namespace detail {

inline Int rat_to_int(const Rat& r, const char* what) {
    if (denominator(r) != 1) throw AuditFailed("integrality", std::string(what) + " is not an integer");
    return numerator(r);
}

}  // namespace detail

inline CountTable block_counts_brute(int n, const Int& budget = kDefaultBudget) {
    if (n < 1 || n > 4) throw BudgetExceeded("brute tables are limited to n <= 4");
    CountTable t;
    t.n = n;
    t.v = (1LL << n) - 1;
    t.b.resize(t.v + 1);
    for (long long k = 0; k <= t.v; ++k) t.b[k] = zero_sum_count_brute(n, static_cast<int>(k), budget);
    return t;
}

/// b_k = C(v,k) * alpha_{floor((k-1)/2)} for k >= 3; both alpha forms are
/// evaluated as exact rationals and must agree. b_0 = 1, b_1 = b_2 = 0.
inline CountTable block_counts_closed_form(int n) {
    if (n < 1 || n > 16) throw BudgetExceeded("closed-form tables are limited to n <= 16");
    CountTable t;
    t.n = n;
    t.v = (1LL << n) - 1;
    t.b.assign(t.v + 1, 0);
    t.b[0] = 1;
    for (long long k = 3; k <= t.v; ++k) {
        const long long h = (k - 1) / 2;
        const Rat a1 = alpha_product_form(t.v, h);
        const Rat a2 = alpha_double_factorial_form(t.v, h);
        if (a1 != a2)
            throw AuditFailed("alpha forms", "product and double-factorial forms disagree at h = " +
                                                 std::to_string(h));
        t.b[k] = detail::rat_to_int(Rat(binomial(t.v, k)) * a1, "b_k");
    }
    return t;
}

/// Weight distribution of the (2^n-1, 2^n-1-n) Hamming code via
/// A(x,y) = 2^-n [ (x+y)^v + v (x+y)^((v-1)/2) (x-y)^((v+1)/2) ], v = 2^n-1.
/// With x = 1 the second product is (1-y^2)^((v-1)/2) (1-y), so each
/// coefficient is a single signed binomial.
inline CountTable block_counts_macwilliams(int n) {
    if (n < 1 || n > 16) throw BudgetExceeded("weight-enumerator tables are limited to n <= 16");
    CountTable t;
    t.n = n;
    t.v = (1LL << n) - 1;
    t.b.resize(t.v + 1);
    const long long a = (t.v - 1) / 2;
    const Int scale = Int(1) << n;
    for (long long k = 0; k <= t.v; ++k) {
        const long long j = k / 2;
        Int c = binomial(a, j);
        if (j % 2 != 0) c = -c;
        if (k % 2 != 0) c = -c;
        const Int num = binomial(t.v, k) + t.v * c;
        if (num % scale != 0)
            throw AuditFailed("weight enumerator", "2^n does not divide the enumerator coefficient");
        t.b[k] = num / scale;
    }
    return t;
}

inline CountTable block_counts(int n, CountMethod method, const Int& budget = kDefaultBudget) {
    switch (method) {
        case CountMethod::brute:
            return block_counts_brute(n, budget);
        case CountMethod::closed_form:
            return block_counts_closed_form(n);
        case CountMethod::macwilliams:
            return block_counts_macwilliams(n);
    }
    throw std::invalid_argument("unknown count method");
}

/// Every method in budget, cross-checked for agreement.
inline CountTable block_counts_all(int n, const Int& budget = kDefaultBudget) {
    const CountTable closed = block_counts_closed_form(n);
    const CountTable mac = block_counts_macwilliams(n);
    if (closed != mac)
        throw AuditFailed("count agreement", "closed-form and weight-enumerator tables disagree");
    if (n <= 4) {
        const CountTable brute = block_counts_brute(n, budget);
        if (brute != closed)
            throw AuditFailed("count agreement", "brute-force table disagrees with the closed form");
    }
    return closed;
}

// ---------------------------------------------------------------------------
// Reducibility of zero-sum blocks (nonzero vectors of Z_2^n)
// ---------------------------------------------------------------------------

namespace detail {

inline void validate_zero_sum_block(int n, const std::vector<unsigned long long>& block) {
    if (block.size() < 3) throw NotAZeroSumBlock("zero-sum blocks have at least 3 points");
    unsigned long long acc = 0;
    std::set<unsigned long long> seen;
    for (unsigned long long x : block) {
        if (x == 0 || x >= (1ULL << n)) throw NotAZeroSumBlock("block contains an invalid vector");
        if (!seen.insert(x).second) throw NotAZeroSumBlock("block repeats a vector");
        acc ^= x;
    }
    if (acc != 0) throw NotAZeroSumBlock("block does not sum to zero");
}

}  // namespace detail

/// A zero-sum block is irreducible iff it is not the disjoint union of two
/// smaller zero-sum blocks; equivalently any k-1 of its k points are linearly
/// independent, i.e. the block has GF(2) rank exactly k-1.
inline bool is_irreducible(int n, const std::vector<unsigned long long>& block) {
    detail::validate_zero_sum_block(n, block);
    return detail::gf2_rank(block) == static_cast<int>(block.size()) - 1;
}

struct IrreducibleCount {
    Int oracle;         // filtered enumeration
    Int paper_formula;  // prod_{i=1}^{k} (2^n - 2^(i-1)), reported not asserted
    Int conjecture;     // prod_{i=1}^{k-1} (2^n - 2^(i-1)) / k!
};

inline IrreducibleCount irreducible_count(int n, int k, const Int& budget = kDefaultBudget) {
    if (k < 3) throw std::invalid_argument("irreducible blocks need k >= 3");
    BooleanDesignSpec spec;
    spec.variant = BooleanVariant::projective;
    spec.n = n;
    spec.k = k;
    spec.budget = budget;
    const BuiltDesign built = build_design(spec);

    IrreducibleCount out;
    out.oracle = 0;
    for (const auto& block : built.design.blocks()) {
        std::vector<unsigned long long> vecs;
        vecs.reserve(block.size());
        for (int i : block) vecs.push_back(static_cast<unsigned long long>(i) + 1);
        if (is_irreducible(n, vecs)) ++out.oracle;
    }

    const Int pow2n = Int(1) << n;
    out.paper_formula = 1;
    for (int i = 1; i <= k; ++i) out.paper_formula *= pow2n - (Int(1) << (i - 1));
    Int ordered = 1;
    for (int i = 1; i <= k - 1; ++i) ordered *= pow2n - (Int(1) << (i - 1));
    Int kfact = 1;
    for (int i = 2; i <= k; ++i) kfact *= i;
    if (ordered % kfact != 0)
        throw AuditFailed("irreducible conjecture", "ordered-tuple count is not divisible by k!");
    out.conjecture = ordered / kfact;
    return out;
}

/// All unordered splits of `block` into two disjoint zero-sum parts of sizes
/// (k1, k-k1). Empty when the block is irreducible or k1 is out of range.
inline std::vector<std::pair<std::vector<unsigned long long>, std::vector<unsigned long long>>>
decompositions(int n, const std::vector<unsigned long long>& block, int k1) {
    const int k = static_cast<int>(block.size());
    std::vector<std::pair<std::vector<unsigned long long>, std::vector<unsigned long long>>> out;
    if (k1 < 3 || k - k1 < 3) return out;

    std::vector<unsigned long long> sorted = block;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw NotAZeroSumBlock("block repeats a vector");
    for (unsigned long long x : sorted)
        if (x >= (1ULL << n)) throw NotAZeroSumBlock("block contains an invalid vector");

    std::vector<int> pick(k1);
    auto rec = [&](auto&& self, int start, int depth, unsigned long long acc) -> void {
        if (depth == k1) {
            if (acc != 0) return;
            if (2 * k1 == k && pick[0] != 0) return;  // unordered pair: keep the half with min
            std::vector<unsigned long long> part1, part2;
            std::size_t at = 0;
            for (int i = 0; i < k; ++i) {
                if (at < pick.size() && pick[at] == i) {
                    part1.push_back(sorted[i]);
                    ++at;
                } else {
                    part2.push_back(sorted[i]);
                }
            }
            unsigned long long acc2 = 0;
            for (unsigned long long x : part2) acc2 ^= x;
            if (acc2 != 0) return;
            out.emplace_back(std::move(part1), std::move(part2));
            return;
        }
        for (int i = start; i <= k - (k1 - depth); ++i) {
            pick[depth] = i;
            self(self, i + 1, depth + 1, acc ^ sorted[i]);
        }
    };
    rec(rec, 0, 0, 0);
    return out;
}

struct PlanesAudit {
    int n = 0;
    Int zero_sum_quadruples;
    Int affine_flats;
};

/// Assert that the zero-sum 4-subsets of Z_2^n are exactly the 2-dimensional
/// affine flats, by independent coset enumeration.
inline PlanesAudit quadruples_are_planes_audit(int n) {
    if (n < 2 || n > 5) throw std::invalid_argument("plane audit supports 2 <= n <= 5");
    const long long size = 1LL << n;

    std::set<std::vector<long long>> quads;
    detail::for_each_zero_sum(
        0LL, size - 1, 4, 0LL, [](long long a, long long b) { return a ^ b; },
        [](long long a) { return a; },
        [&](const std::vector<long long>& codes) { quads.insert(codes); });

    std::set<std::vector<long long>> flats;
    for (long long u = 1; u < size; ++u)
        for (long long w = u + 1; w < size; ++w) {
            if ((u ^ w) < w) continue;  // canonical spanning pair per subspace
            for (long long x = 0; x < size; ++x) {
                std::vector<long long> coset{x, x ^ u, x ^ w, x ^ u ^ w};
                std::sort(coset.begin(), coset.end());
                flats.insert(std::move(coset));
            }
        }

    if (quads != flats)
        throw AuditFailed("planes", "zero-sum quadruples differ from the 2-flats of AG(n,2)");
    return PlanesAudit{n, Int(quads.size()), Int(flats.size())};
}

/// CountTable JSON: {"n":n,"v":v,"b":["<decimal>",...]} (decimal strings;
/// counts exceed 64 bits for n >= 8).
inline void to_json(nlohmann::json& j, const CountTable& t) {
    nlohmann::json b = nlohmann::json::array();
    for (const Int& x : t.b) b.push_back(x.str());
    j = nlohmann::json{{"n", t.n}, {"v", t.v}, {"b", std::move(b)}};
}

}  // namespace designlattice
