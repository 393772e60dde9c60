#include "cascade_ec/matrix.hpp"

#include <utility>

namespace cascade_ec {

int mat_rank(const Field& f, Matrix m) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r) {
            if (m.at(r, col) != 0) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        }
        uint16_t pinv = f.inv(m.at(rank, col));
        for (int c = col; c < m.cols; ++c) m.at(rank, c) = f.mul(m.at(rank, c), pinv);
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank) continue;
            uint16_t v = m.at(r, col);
            if (v == 0) continue;
            for (int c = col; c < m.cols; ++c)
                m.at(r, c) = Field::sub(m.at(r, c), f.mul(v, m.at(rank, c)));
        }
        ++rank;
    }
    return rank;
}

Matrix mat_inverse(const Field& f, Matrix m) {
    if (m.rows != m.cols) throw NotInvertible();
    int n = m.rows;
    Matrix inv = Matrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (m.at(r, col) != 0) { pivot = r; break; }
        }
        if (pivot < 0) throw NotInvertible();
        if (pivot != col) {
            for (int c = 0; c < n; ++c) {
                std::swap(m.at(pivot, c), m.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        }
        uint16_t pinv = f.inv(m.at(col, col));
        for (int c = 0; c < n; ++c) {
            m.at(col, c) = f.mul(m.at(col, c), pinv);
            inv.at(col, c) = f.mul(inv.at(col, c), pinv);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            uint16_t v = m.at(r, col);
            if (v == 0) continue;
            for (int c = 0; c < n; ++c) {
                m.at(r, c) = Field::sub(m.at(r, c), f.mul(v, m.at(col, c)));
                inv.at(r, c) = Field::sub(inv.at(r, c), f.mul(v, inv.at(col, c)));
            }
        }
    }
    return inv;
}

bool in_row_span(const Field& f, const Matrix& rows, const std::vector<uint16_t>& target) {
    Matrix aug(rows.rows + 1, rows.cols);
    aug.e.assign(rows.e.begin(), rows.e.end());
    aug.e.insert(aug.e.end(), target.begin(), target.end());
    return mat_rank(f, rows) == mat_rank(f, aug);
}

std::vector<uint16_t> solve_combination(const Field& f, const Matrix& rows,
                                        const std::vector<uint16_t>& target) {
    // Solve A^T x = t where A holds the source rows: unknowns = row weights.
    int ns = rows.rows;
    int dim = rows.cols;
    Matrix sys(dim, ns + 1);
    for (int d = 0; d < dim; ++d) {
        for (int s = 0; s < ns; ++s) sys.at(d, s) = rows.at(s, d);
        sys.at(d, ns) = target[d];
    }
    std::vector<int> pivot_col(dim, -1);
    int rank = 0;
    for (int col = 0; col < ns && rank < dim; ++col) {
        int pivot = -1;
        for (int r = rank; r < dim; ++r) {
            if (sys.at(r, col) != 0) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int c = 0; c <= ns; ++c) std::swap(sys.at(pivot, c), sys.at(rank, c));
        }
        uint16_t pinv = f.inv(sys.at(rank, col));
        for (int c = col; c <= ns; ++c) sys.at(rank, c) = f.mul(sys.at(rank, c), pinv);
        for (int r = 0; r < dim; ++r) {
            if (r == rank) continue;
            uint16_t v = sys.at(r, col);
            if (v == 0) continue;
            for (int c = col; c <= ns; ++c)
                sys.at(r, c) = Field::sub(sys.at(r, c), f.mul(v, sys.at(rank, c)));
        }
        pivot_col[rank] = col;
        ++rank;
    }
    for (int r = rank; r < dim; ++r) {
        if (sys.at(r, ns) != 0) throw NotInvertible();
    }
    std::vector<uint16_t> x(ns, 0);
    for (int r = 0; r < rank; ++r) x[pivot_col[r]] = sys.at(r, ns);
    return x;
}

}  // namespace cascade_ec
