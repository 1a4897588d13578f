#include "cqg/linalg.hpp"

namespace cqg {

Matrix<Scalar> triangular_inverse(const Matrix<Scalar>& m) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("inverse of a non-square matrix");
    const int n = m.rows();

    // Working copy augmented with the identity.
    Matrix<Scalar> w = m;
    Matrix<Scalar> aug = Matrix<Scalar>::identity(n);

    std::vector<bool> row_done(n, false), col_done(n, false);
    // inverse row index assigned to each eliminated column
    std::vector<int> pivot_row_of_col(n, -1);

    for (int step = 0; step < n; ++step) {
        // A permuted-triangular matrix always has an active row with exactly
        // one nonzero entry among the active columns.
        int pr = -1, pc = -1;
        for (int i = 0; i < n && pr < 0; ++i) {
            if (row_done[i]) continue;
            int nz = 0, last = -1;
            for (int j = 0; j < n; ++j) {
                if (col_done[j] || w.at(i, j).is_zero()) continue;
                ++nz;
                last = j;
            }
            if (nz == 1) {
                pr = i;
                pc = last;
            } else if (nz == 0) {
                throw NonMonomialPivot("zero pivot row " + std::to_string(i));
            }
        }
        if (pr < 0)
            throw NotTriangularizable(
                "matrix is not triangular up to simultaneous permutation");

        const Scalar& pivot = w.at(pr, pc);
        if (!pivot.is_monomial())
            throw NonMonomialPivot("pivot at (" + std::to_string(pr) + "," +
                                   std::to_string(pc) + ") is not a monomial: " + pivot.str());
        Scalar inv = pivot.inverse();
        for (int j = 0; j < n; ++j) {
            w.at(pr, j) = inv * w.at(pr, j);
            aug.at(pr, j) = inv * aug.at(pr, j);
        }
        for (int i = 0; i < n; ++i) {
            if (i == pr || w.at(i, pc).is_zero()) continue;
            Scalar f = w.at(i, pc);
            for (int j = 0; j < n; ++j) {
                w.at(i, j) -= f * w.at(pr, j);
                aug.at(i, j) -= f * aug.at(pr, j);
            }
        }
        row_done[pr] = true;
        col_done[pc] = true;
        pivot_row_of_col[pc] = pr;
    }

    Matrix<Scalar> result(n, n);
    for (int c = 0; c < n; ++c)
        for (int j = 0; j < n; ++j) result.at(c, j) = aug.at(pivot_row_of_col[c], j);

    // Self-check: the inverse is verified on every call.
    Matrix<Scalar> id = Matrix<Scalar>::identity(n);
    if (!(m * result == id) || !(result * m == id))
        throw std::logic_error("triangular_inverse self-check failed");
    return result;
}

}  // namespace cqg
