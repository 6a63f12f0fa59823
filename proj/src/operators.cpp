#include "gkz/operators.hpp"

namespace gkz {

std::vector<DifferentialOperator> toric_generators(const OneRowMatrix& A) {
    return toric_generators_t<Complex>(A);
}

DifferentialOperator euler_operator(const OneRowMatrix& A, Complex beta) {
    return euler_operator_t<Complex>(A, beta);
}

FractionalSeries apply_operator(const DifferentialOperator& op, const FractionalSeries& s) {
    return apply_t<Complex>(op, s);
}

double annihilation_residual(const DifferentialOperator& op, const FractionalSeries& s) {
    return annihilation_residual_t<Complex>(op, s);
}

} // namespace gkz
