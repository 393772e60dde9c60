#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cascade_ec/gf.hpp"

namespace cascade_ec {

struct NotInvertible : std::runtime_error {
    NotInvertible() : std::runtime_error("matrix is singular over GF(2^w)") {}
};

// Dense row-major matrix over GF(2^w).
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<uint16_t> e;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c, 0) {}

    uint16_t& at(int r, int c) { return e[static_cast<size_t>(r) * cols + c]; }
    uint16_t at(int r, int c) const { return e[static_cast<size_t>(r) * cols + c]; }

    const uint16_t* row(int r) const { return e.data() + static_cast<size_t>(r) * cols; }
    uint16_t* row(int r) { return e.data() + static_cast<size_t>(r) * cols; }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
};

// Rank by Gaussian elimination; pivot = first nonzero entry in the column,
// lowest row index first.
int mat_rank(const Field& f, Matrix m);

// Inverse of a square matrix; throws NotInvertible.
Matrix mat_inverse(const Field& f, Matrix m);

// True iff target lies in the row span of `rows`.
bool in_row_span(const Field& f, const Matrix& rows, const std::vector<uint16_t>& target);

// Coefficients x such that sum_i x[i] * rows[i] == target (rows given as a
// matrix, one source row each). Free variables are set to zero. Throws
// NotInvertible when the target is outside the span.
std::vector<uint16_t> solve_combination(const Field& f, const Matrix& rows,
                                        const std::vector<uint16_t>& target);

}  // namespace cascade_ec
