#pragma once

#include <vector>

#include "gkz/lattice.hpp"
#include "gkz/scalar.hpp"
#include "gkz/series.hpp"

namespace gkz {

// Weyl-algebra operator: finite sum of  coeff * x^monomial * d^derivative.
template <class C>
struct DifferentialOperatorT {
    struct Term {
        C coeff;
        std::vector<int> monomial;   // exponents, >= 0
        std::vector<int> derivative; // orders, >= 0
    };
    int nvars = 0;
    std::vector<Term> terms;
};

using DifferentialOperator = DifferentialOperatorT<Complex>;

// Toric binomials d^{u+} - d^{u-}, one per kernel basis vector, oriented so
// the first nonzero component of u is positive (so A=(a,b) yields
// d_1^b - d_2^a and A=(1,2,3) yields {d_1^2 - d_2, d_1^3 - d_3}).
template <class C>
std::vector<DifferentialOperatorT<C>> toric_generators_t(const OneRowMatrix& A) {
    std::vector<LatticeVector> basis;
    if (A.size() == 2) {
        basis.push_back({A[1], -A[0]});
    } else if (A[0] == 1) {
        basis = kernel_basis(A);
    } else {
        basis = kernel_basis_general(A);
    }
    std::vector<DifferentialOperatorT<C>> ops;
    for (auto u : basis) {
        for (long long c : u) {
            if (c == 0) continue;
            if (c < 0)
                for (auto& x : u) x = -x;
            break;
        }
        DifferentialOperatorT<C> op;
        op.nvars = A.size();
        typename DifferentialOperatorT<C>::Term plus, minus;
        plus.coeff = ScalarOps<C>::from_long(1);
        minus.coeff = ScalarOps<C>::from_long(-1);
        plus.monomial.assign(static_cast<size_t>(A.size()), 0);
        minus.monomial.assign(static_cast<size_t>(A.size()), 0);
        plus.derivative.assign(static_cast<size_t>(A.size()), 0);
        minus.derivative.assign(static_cast<size_t>(A.size()), 0);
        for (size_t i = 0; i < u.size(); ++i) {
            if (u[i] > 0) plus.derivative[i] = static_cast<int>(u[i]);
            if (u[i] < 0) minus.derivative[i] = static_cast<int>(-u[i]);
        }
        op.terms = {plus, minus};
        ops.push_back(std::move(op));
    }
    return ops;
}

// Euler operator sum_j a_j x_j d_j - beta.
template <class C>
DifferentialOperatorT<C> euler_operator_t(const OneRowMatrix& A, const C& beta) {
    DifferentialOperatorT<C> op;
    op.nvars = A.size();
    for (int i = 0; i < A.size(); ++i) {
        typename DifferentialOperatorT<C>::Term t;
        t.coeff = ScalarOps<C>::from_long(A[i]);
        t.monomial.assign(static_cast<size_t>(A.size()), 0);
        t.derivative.assign(static_cast<size_t>(A.size()), 0);
        t.monomial[static_cast<size_t>(i)] = 1;
        t.derivative[static_cast<size_t>(i)] = 1;
        op.terms.push_back(std::move(t));
    }
    typename DifferentialOperatorT<C>::Term c;
    c.coeff = ScalarOps<C>::from_long(0) - beta;
    c.monomial.assign(static_cast<size_t>(A.size()), 0);
    c.derivative.assign(static_cast<size_t>(A.size()), 0);
    op.terms.push_back(std::move(c));
    return op;
}

// Term-by-term application with d(x^c) = c x^{c-1} on base + offset
// exponents. The output truncation shrinks to N + min_t grading_shift(t) so
// only offsets whose coefficients are fully determined are kept.
template <class C>
SeriesT<C> apply_t(const DifferentialOperatorT<C>& op, const SeriesT<C>& s) {
    if (op.nvars != s.nvars) throw ValidationError("SizeMismatch", "apply: nvars differ");
    long long min_shift = 0;
    bool first = true;
    for (const auto& t : op.terms) {
        long long d = 0;
        for (int i = 0; i < s.nvars; ++i)
            d += static_cast<long long>(s.grading_weights[static_cast<size_t>(i)]) *
                 (t.monomial[static_cast<size_t>(i)] - t.derivative[static_cast<size_t>(i)]);
        min_shift = first ? d : std::min(min_shift, d);
        first = false;
    }

    SeriesT<C> out;
    out.nvars = s.nvars;
    out.base_exponents = s.base_exponents;
    out.grading_weights = s.grading_weights;
    out.grading_shift = s.grading_shift;
    out.truncation = s.truncation + min_shift;
    out.polynomial = s.polynomial;

    for (const auto& [off, c] : s.terms) {
        for (const auto& t : op.terms) {
            C factor = t.coeff;
            std::vector<int> noff = off;
            bool dead = false;
            for (int i = 0; i < s.nvars && !dead; ++i) {
                int d = t.derivative[static_cast<size_t>(i)];
                if (d > 0) {
                    C e = s.base_exponents[static_cast<size_t>(i)] +
                          ScalarOps<C>::from_long(off[static_cast<size_t>(i)]);
                    C fall = pochhammer_t<C>(e, d);
                    if (ScalarOps<C>::is_zero(fall)) {
                        dead = true;
                        break;
                    }
                    factor = factor * fall;
                    noff[static_cast<size_t>(i)] -= d;
                }
                noff[static_cast<size_t>(i)] += t.monomial[static_cast<size_t>(i)];
            }
            if (dead || ScalarOps<C>::is_zero(factor)) continue;
            if (out.grading(noff) > out.truncation) continue;
            C add = factor * c;
            auto it = out.terms.find(noff);
            C v = (it == out.terms.end()) ? add : it->second + add;
            if (ScalarOps<C>::is_zero(v)) {
                if (it != out.terms.end()) out.terms.erase(it);
            } else {
                out.terms[noff] = v;
            }
        }
    }
    return out;
}

// Residual of op on s, relative to the largest input coefficient; exactly 0
// in the rational mode when op annihilates s through the reliable order.
template <class C>
double annihilation_residual_t(const DifferentialOperatorT<C>& op, const SeriesT<C>& s) {
    SeriesT<C> r = apply_t(op, s);
    double scale = s.max_abs_coefficient();
    if (scale == 0.0) return 0.0;
    if constexpr (ScalarOps<C>::exact) {
        if (r.terms.empty()) return 0.0;
    }
    return r.max_abs_coefficient() / scale;
}

std::vector<DifferentialOperator> toric_generators(const OneRowMatrix& A);
DifferentialOperator euler_operator(const OneRowMatrix& A, Complex beta);
FractionalSeries apply_operator(const DifferentialOperator& op, const FractionalSeries& s);
double annihilation_residual(const DifferentialOperator& op, const FractionalSeries& s);

} // namespace gkz
