#pragma once

#include <vector>

#include "designlattice/errors.hpp"
#include "designlattice/normal_form.hpp"

namespace designlattice {

/// GF(p^t) as polynomial residues over GF(p) modulo the lexicographically
/// smallest monic irreducible polynomial of degree t (irreducibility verified
/// at construction by trial division). Elements are indices in [0, p^t)
/// encoding coefficient vectors base p, constant term in the lowest digit.
class FiniteField {
public:
    using Elem = long long;

    FiniteField(long long p, int t) : p_(p), t_(t) {
        if (!is_prime(p_)) throw NotPrime("field characteristic must be prime");
        if (t_ < 1) throw SpecInvalid("extension degree must be positive");
        q_ = 1;
        for (int i = 0; i < t_; ++i) {
            if (q_ > (1LL << 40) / p_) throw SpecInvalid("field order too large to enumerate");
            q_ *= p_;
        }
        for (Elem m = 0; m < q_; ++m) {
            std::vector<long long> poly = digits(m, t_);
            poly.push_back(1);  // monic
            if (irreducible(poly)) {
                modulus_ = std::move(poly);
                break;
            }
        }
    }

    static FiniteField from_order(long long q) {
        if (q < 2) throw SpecInvalid("field order must be at least 2");
        long long p = q;
        for (long long d = 2; d * d <= q; ++d)
            if (q % d == 0) {
                p = d;
                break;
            }
        int t = 0;
        long long rest = q;
        while (rest % p == 0) {
            rest /= p;
            ++t;
        }
        if (rest != 1) throw SpecInvalid("field order must be a prime power");
        return FiniteField(p, t);
    }

    long long p() const { return p_; }
    int degree() const { return t_; }
    long long order() const { return q_; }

    /// Modulus coefficients ascending by degree, size t+1, monic.
    const std::vector<long long>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const {
        Elem out = 0, mul = 1;
        for (int i = 0; i < t_; ++i) {
            out += (a % p_ + b % p_) % p_ * mul;
            a /= p_;
            b /= p_;
            mul *= p_;
        }
        return out;
    }

    Elem neg(Elem a) const {
        Elem out = 0, mul = 1;
        for (int i = 0; i < t_; ++i) {
            out += (p_ - a % p_) % p_ * mul;
            a /= p_;
            mul *= p_;
        }
        return out;
    }

    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        std::vector<long long> prod(2 * t_ - 1, 0);
        const std::vector<long long> pa = digits(a, t_), pb = digits(b, t_);
        for (int i = 0; i < t_; ++i) {
            if (pa[i] == 0) continue;
            for (int j = 0; j < t_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
        }
        reduce_mod(prod, modulus_);
        Elem out = 0;
        for (int i = t_ - 1; i >= 0; --i)
            out = out * p_ + (i < static_cast<int>(prod.size()) ? prod[i] : 0);
        return out;
    }

    Elem pow(Elem a, long long e) const {
        Elem out = 1;
        while (e > 0) {
            if (e & 1) out = mul(out, a);
            a = mul(a, a);
            e >>= 1;
        }
        return out;
    }

private:
    std::vector<long long> digits(Elem m, int len) const {
        std::vector<long long> d(len);
        for (int i = 0; i < len; ++i) {
            d[i] = m % p_;
            m /= p_;
        }
        return d;
    }

    static int poly_degree(const std::vector<long long>& poly) {
        for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i)
            if (poly[i] != 0) return i;
        return -1;
    }

    // In-place remainder of poly modulo a monic divisor, over GF(p).
    void reduce_mod(std::vector<long long>& poly, const std::vector<long long>& divisor) const {
        const int dd = poly_degree(divisor);
        for (int i = poly_degree(poly); i >= dd; i = poly_degree(poly)) {
            const long long f = poly[i];
            for (int j = 0; j <= dd; ++j) {
                long long& c = poly[i - dd + j];
                c = ((c - f * divisor[j]) % p_ + p_) % p_;
            }
        }
    }

    // Trial division by every monic polynomial of degree 1..t/2.
    bool irreducible(const std::vector<long long>& poly) const {
        const int deg = poly_degree(poly);
        if (deg <= 0) return false;
        if (deg == 1) return true;
        for (int d = 1; 2 * d <= deg; ++d) {
            long long count = 1;
            for (int i = 0; i < d; ++i) count *= p_;
            for (long long m = 0; m < count; ++m) {
                std::vector<long long> divisor = digits(m, d);
                divisor.push_back(1);
                std::vector<long long> rem = poly;
                reduce_mod(rem, divisor);
                if (poly_degree(rem) < 0) return false;
            }
        }
        return true;
    }

    long long p_ = 0;
    long long q_ = 0;
    int t_ = 0;
    std::vector<long long> modulus_;
};

}  // namespace designlattice
