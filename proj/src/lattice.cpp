#include "gkz/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace gkz {

OneRowMatrix::OneRowMatrix(std::vector<long long> entries) : entries_(std::move(entries)) {
    if (entries_.size() < 2) throw BadMatrix("OneRowMatrix needs n >= 2 entries");
    long long g = 0;
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] <= 0) throw BadMatrix("OneRowMatrix entries must be positive");
        if (i && entries_[i] <= entries_[i - 1])
            throw BadMatrix("OneRowMatrix entries must be strictly increasing");
        g = gcd_ll(g, entries_[i]);
    }
    if (g != 1) throw BadMatrix("OneRowMatrix entries must be coprime");
}

OneRowMatrix::TailPair OneRowMatrix::tail_pair() const {
    long long an1 = entries_[entries_.size() - 2];
    long long an = entries_.back();
    long long k = gcd_ll(an1, an);
    return {an1 / k, an / k, k};
}

long long OneRowMatrix::dot(const LatticeVector& u) const {
    if (u.size() != entries_.size())
        throw ValidationError("SizeMismatch", "dot: vector size differs from matrix width");
    long long acc = 0;
    for (size_t i = 0; i < u.size(); ++i) acc = checked_add(acc, checked_mul(entries_[i], u[i]));
    return acc;
}

std::vector<LatticeVector> kernel_basis(const OneRowMatrix& A) {
    if (A[0] != 1) throw NotLeadingOne("kernel_basis requires a_1 = 1");
    const int n = A.size();
    std::vector<LatticeVector> basis;
    for (int i = 1; i < n; ++i) {
        LatticeVector u(static_cast<size_t>(n), 0);
        if (i == n - 2) {
            u[0] = A[n - 2];
            u[static_cast<size_t>(n - 2)] = -1;
        } else {
            u[0] = -A[i];
            u[static_cast<size_t>(i)] = 1;
        }
        basis.push_back(std::move(u));
    }
    return basis;
}

std::vector<LatticeVector> kernel_basis_general(const OneRowMatrix& A) {
    const int n = A.size();
    // staircase basis: v_i supported on slots 0..i with
    //   v_i = (c_0 a_i/d_i, ..., c_{i-1} a_i/d_i, -d_{i-1}/d_i, 0, ...)
    // where d_i = gcd(a_0..a_i) and sum c_j a_j = d_{i-1}
    std::vector<LatticeVector> basis;
    std::vector<long long> bez(static_cast<size_t>(n), 0); // Bezout for prefix gcd
    bez[0] = 1;
    long long d_prev = A[0];
    for (int i = 1; i < n; ++i) {
        long long d_cur = gcd_ll(d_prev, A[i]);
        LatticeVector u(static_cast<size_t>(n), 0);
        for (int j = 0; j < i; ++j) u[static_cast<size_t>(j)] = checked_mul(bez[static_cast<size_t>(j)], A[i] / d_cur);
        u[static_cast<size_t>(i)] = -(d_prev / d_cur);
        if (A.dot(u) != 0) throw ValidationError("Internal", "general kernel basis failed");
        basis.push_back(std::move(u));
        // extend the Bezout row: d_cur = s*d_prev + t*a_i
        long long s = 0, t = 0;
        {
            long long old_r = d_prev, r = A[i];
            long long old_s = 1, ss = 0;
            while (r) {
                long long q = old_r / r;
                long long tmp = old_r - q * r;
                old_r = r;
                r = tmp;
                tmp = old_s - q * ss;
                old_s = ss;
                ss = tmp;
            }
            s = old_s;
            t = (old_r - s * d_prev) / A[i];
        }
        for (int j = 0; j < i; ++j) bez[static_cast<size_t>(j)] = checked_mul(bez[static_cast<size_t>(j)], s);
        bez[static_cast<size_t>(i)] = t;
        d_prev = d_cur;
    }
    return basis;
}

Complex pochhammer(Complex v, long long u) { return pochhammer_t<Complex>(v, u); }

std::pair<Complex, bool> pochhammer_log(Complex v, long long u) {
    Complex acc(0.0, 0.0);
    for (long long j = 1; j <= u; ++j) {
        Complex f = v - Complex(static_cast<double>(j - 1), 0.0);
        if (f == Complex(0.0, 0.0)) return {acc, false};
        acc += std::log(f);
    }
    return {acc, true};
}

Complex gamma_coefficient(const ExponentVector& v, const LatticeVector& u) {
    return gamma_coefficient_t<Complex>(v.components, u);
}

std::set<int> negative_support(const std::vector<Complex>& w, double tol) {
    std::set<int> s;
    for (size_t i = 0; i < w.size(); ++i) {
        auto n = ScalarOps<Complex>::as_integer(w[i], tol);
        if (n && *n < 0) s.insert(static_cast<int>(i));
    }
    return s;
}

bool has_minimal_negative_support(const ExponentVector& v, const OneRowMatrix& A,
                                  long long search_radius) {
    std::set<int> base = negative_support(v.components);
    if (base.empty()) return true;
    std::vector<LatticeVector> basis =
        (A[0] == 1) ? kernel_basis(A) : kernel_basis_general(A);
    const size_t rank = basis.size();
    const size_t n = v.components.size();

    std::vector<long long> coeff(rank, 0);
    bool minimal = true;
    std::function<void(size_t)> rec = [&](size_t level) {
        if (!minimal) return;
        if (level == rank) {
            LatticeVector u(n, 0);
            bool nonzero = false;
            for (size_t i = 0; i < rank; ++i) {
                for (size_t j = 0; j < n; ++j)
                    u[j] = checked_add(u[j], checked_mul(coeff[i], basis[i][j]));
            }
            long long maxabs = 0;
            for (long long x : u) {
                maxabs = std::max(maxabs, x < 0 ? -x : x);
                nonzero = nonzero || x != 0;
            }
            if (!nonzero || maxabs > search_radius) return;
            std::vector<Complex> shifted(n);
            for (size_t j = 0; j < n; ++j)
                shifted[j] = v.components[j] + Complex(static_cast<double>(u[j]), 0.0);
            std::set<int> ns = negative_support(shifted);
            if (ns.size() < base.size() &&
                std::includes(base.begin(), base.end(), ns.begin(), ns.end()))
                minimal = false;
            return;
        }
        for (long long c = -search_radius; c <= search_radius; ++c) {
            coeff[level] = c;
            rec(level + 1);
        }
    };
    rec(0);
    return minimal;
}

} // namespace gkz
