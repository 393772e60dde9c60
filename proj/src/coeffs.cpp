#include "cascade_ec/coeffs.hpp"

#include <set>

#include "cascade_ec/layout.hpp"

namespace cascade_ec {

std::vector<uint16_t> default_points_a(int k) {
    std::vector<uint16_t> a(k);
    for (int i = 0; i < k; ++i) a[i] = static_cast<uint16_t>(i);
    return a;
}

std::vector<uint16_t> default_points_b(int k, int r) {
    std::vector<uint16_t> b(r);
    for (int j = 0; j < r; ++j) b[j] = static_cast<uint16_t>(k + j);
    return b;
}

namespace {
void check_distinct(const std::vector<uint16_t>& a, const std::vector<uint16_t>& b) {
    std::set<uint16_t> seen(a.begin(), a.end());
    seen.insert(b.begin(), b.end());
    if (seen.size() != a.size() + b.size()) throw DistinctnessViolated();
}
}  // namespace

Matrix cauchy_alpha(const Field& f, const std::vector<uint16_t>& a,
                    const std::vector<uint16_t>& b) {
    check_distinct(a, b);
    Matrix m(static_cast<int>(a.size()), static_cast<int>(b.size()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            m.at(i, j) = f.inv(Field::sub(b[j], a[i]));
    return m;
}

CombinationCoeffs combination_coefficients(const Field& f, const std::vector<uint16_t>& a,
                                           const std::vector<uint16_t>& b) {
    if (b.size() < 2) throw std::invalid_argument("combination coefficients need r >= 2");
    check_distinct(a, b);
    int k = static_cast<int>(a.size());
    int r = static_cast<int>(b.size());
    CombinationCoeffs c;
    c.bar_gamma.resize(k);
    c.bar_eta.resize(r);
    for (int i = 0; i < k; ++i) {
        uint16_t prod = 1;
        for (int z = 0; z < r; ++z) prod = f.mul(prod, f.inv(Field::sub(a[i], b[z])));
        c.bar_gamma[i] = prod;
    }
    for (int j = 0; j < r; ++j) {
        uint16_t prod = 1;
        for (int z = 0; z < r; ++z) {
            if (z == j) continue;
            prod = f.mul(prod, f.inv(Field::sub(b[j], b[z])));
        }
        c.bar_eta[j] = prod;
    }
    c.gamma.resize(k);
    for (int i = 0; i < k; ++i) c.gamma[i] = f.div(c.bar_gamma[i], c.bar_eta[r - 1]);
    c.eta.resize(r - 1);
    for (int j = 0; j < r - 1; ++j) c.eta[j] = f.div(c.bar_eta[j], c.bar_eta[r - 1]);
    return c;
}

bool verify_cascade(const StripeLayout& layout) {
    if (!is_cp(layout.spec.scheme)) throw NotApplicable();
    const int k = layout.k();
    const int gr = layout.global_index(layout.r() - 1);
    std::vector<uint16_t> sum(k, 0);
    for (int m = 0; m < layout.p(); ++m) {
        const uint16_t* row = layout.generator.row(layout.local_index(m));
        for (int c = 0; c < k; ++c) sum[c] = Field::add(sum[c], row[c]);
    }
    const uint16_t* target = layout.generator.row(gr);
    for (int c = 0; c < k; ++c)
        if (sum[c] != target[c]) return false;
    return true;
}

}  // namespace cascade_ec
