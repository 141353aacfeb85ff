#include "gptcones/linalg.hpp"

#include <algorithm>

namespace gptcones {

Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw dim_mismatch_error("dot: size mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw dim_mismatch_error("add: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw dim_mismatch_error("sub: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scaled(const Vec& a, const Rat& s) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

bool is_zero_vec(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

Mat identity_mat(int n) {
    Mat m(n, Vec(n, Rat(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Mat transpose(const Mat& m) {
    if (m.empty()) return {};
    Mat t(m[0].size(), Vec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

Vec mat_vec(const Mat& m, const Vec& v) {
    Vec r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t n = a.size(), k = b.size(), p = b[0].size();
    Mat r(n, Vec(p, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw dim_mismatch_error("mat_mul: inner size mismatch");
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < p; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    }
    return r;
}

namespace {

// Row echelon reduction in place; returns pivot columns.
std::vector<int> echelon(Mat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        const Rat inv = Rat(1) / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(Mat m) { return static_cast<int>(echelon(m).size()); }

std::optional<Vec> solve_square(Mat a, Vec b) {
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i) a[i].push_back(b[i]);
    const auto pivots = echelon(a);
    if (static_cast<int>(pivots.size()) != n) return std::nullopt;
    for (int i = 0; i < n; ++i)
        if (pivots[i] != i) return std::nullopt;  // pivot in augmented column
    Vec x(n);
    for (int i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

std::optional<Mat> invert(const Mat& a) {
    const int n = static_cast<int>(a.size());
    Mat aug(n, Vec(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(a[i].size()) != n) throw dim_mismatch_error("invert: not square");
        for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    const auto pivots = echelon(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) return std::nullopt;
    Mat inv(n, Vec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

std::vector<Vec> nullspace(Mat m) {
    if (m.empty()) return {};
    const int cols = static_cast<int>(m[0].size());
    const auto pivots = echelon(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int freec = 0; freec < cols; ++freec) {
        if (is_pivot[freec]) continue;
        Vec v(cols, Rat(0));
        v[freec] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][freec];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool vec_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace gptcones
