#pragma once

// Small dense exact linear algebra over Q. Vectors are plain coordinate
// lists; matrices are row lists. Everything is sized for desk-scale cones
// (dimension <= 10ish), so dense Gaussian elimination is all we need.

#include "gptcones/errors.hpp"
#include "gptcones/rational.hpp"

#include <optional>
#include <vector>

namespace gptcones {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

Rat dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Vec& a, const Rat& s);
bool is_zero_vec(const Vec& a);

Mat identity_mat(int n);
Mat transpose(const Mat& m);
Vec mat_vec(const Mat& m, const Vec& v);
Mat mat_mul(const Mat& a, const Mat& b);

int rank(Mat m);

// Unique solution of a square system, or nullopt if singular.
std::optional<Vec> solve_square(Mat a, Vec b);

std::optional<Mat> invert(const Mat& a);

// Basis of {x : m x = 0}.
std::vector<Vec> nullspace(Mat m);

// Lexicographic order on coordinates, used for deterministic sorting.
bool vec_less(const Vec& a, const Vec& b);

}  // namespace gptcones
