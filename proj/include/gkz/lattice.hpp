#pragma once

#include <complex>
#include <set>
#include <vector>

#include "gkz/errors.hpp"
#include "gkz/scalar.hpp"

namespace gkz {

using LatticeVector = std::vector<long long>;

// One-row matrix A = (a_1 < ... < a_n) of coprime positive integers. The
// derived pair (a, b, k) with a_{n-1} = k a, a_n = k b, gcd(a, b) = 1 is
// recomputed on demand.
class OneRowMatrix {
public:
    explicit OneRowMatrix(std::vector<long long> entries);

    const std::vector<long long>& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }
    long long operator[](int i) const { return entries_[static_cast<size_t>(i)]; }

    struct TailPair {
        long long a;
        long long b;
        long long k;
    };
    TailPair tail_pair() const;

    long long dot(const LatticeVector& u) const;

private:
    std::vector<long long> entries_;
};

// Complex exponent vector v with A.v = beta; beta is carried along so the
// invariant can be restated after arithmetic on v.
struct ExponentVector {
    std::vector<Complex> components;
    Complex beta;
};

// Basis of ker_Z(A) for a_1 = 1:
//   u^(i)     = (-a_i, 0, ..., 1, ..., 0)        (1 in slot i, i != n-1)
//   u^(n-1)   = (a_{n-1}, 0, ..., 0, -1, 0)
// Throws NotLeadingOne when a_1 != 1.
std::vector<LatticeVector> kernel_basis(const OneRowMatrix& A);

// Kernel basis for an arbitrary one-row matrix (gcd staircase construction);
// spans ker_Z(A) for any entries, used internally by the bounded searches.
std::vector<LatticeVector> kernel_basis_general(const OneRowMatrix& A);

// Falling-factorial Pochhammer symbol [v]_u = v (v-1) ... (v-u+1).
template <class C>
C pochhammer_t(const C& v, long long u) {
    if (u < 0) throw ValidationError("NegativePochhammer", "pochhammer needs u >= 0");
    C acc = ScalarOps<C>::from_long(1);
    for (long long j = 1; j <= u; ++j) {
        acc = acc * (v - ScalarOps<C>::from_long(j - 1));
        if (ScalarOps<C>::is_zero(acc)) return acc;
    }
    return acc;
}

Complex pochhammer(Complex v, long long u);

// log of [v]_u as a sum of principal logs of the factors; the branch is the
// one accumulated factor by factor. Second member false when a factor is 0.
std::pair<Complex, bool> pochhammer_log(Complex v, long long u);

// Gamma[v; u] = [v]_{u_-} / [v+u]_{u_+}. Throws DenominatorVanishes when a
// denominator Pochhammer factor is zero (u outside N_v).
template <class C>
C gamma_coefficient_t(const std::vector<C>& v, const LatticeVector& u) {
    if (v.size() != u.size())
        throw ValidationError("SizeMismatch", "gamma_coefficient: v and u sizes differ");
    C num = ScalarOps<C>::from_long(1);
    C den = ScalarOps<C>::from_long(1);
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] < 0) {
            num = num * pochhammer_t<C>(v[i], -u[i]);
        } else if (u[i] > 0) {
            den = den * pochhammer_t<C>(v[i] + ScalarOps<C>::from_long(u[i]), u[i]);
        }
    }
    if (ScalarOps<C>::is_zero(den)) throw DenominatorVanishes();
    return num / den;
}

Complex gamma_coefficient(const ExponentVector& v, const LatticeVector& u);

// nsupp(w) = { i : w_i is a negative integer }, 0-based indices.
std::set<int> negative_support(const std::vector<Complex>& w, double tol = 1e-9);

// Bounded brute-force minimality test: true when no kernel vector u with
// max |u_i| <= search_radius strictly shrinks nsupp(v). Heuristic by nature:
// no general decision procedure is known here (see README).
bool has_minimal_negative_support(const ExponentVector& v, const OneRowMatrix& A,
                                  long long search_radius = 25);

} // namespace gkz
