#ifndef SUBCOVER_LINALG_HPP
#define SUBCOVER_LINALG_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "subcover/field.hpp"

namespace subcover {

/// Coordinate tuple over a field. Immutable by convention: operations return
/// fresh values.
struct Vec {
  Field field;
  std::vector<Elt> coords;

  std::size_t dim() const { return coords.size(); }

  friend bool operator==(const Vec& a, const Vec& b) {
    return a.field == b.field && a.coords == b.coords;
  }
};

Vec zero_vector(const Field& f, std::size_t d);
bool is_zero(const Vec& v);

/// Coordinatewise comparison in element encoding order, first coordinate most
/// significant. This is the "lexicographically least" order used by witness
/// extraction.
bool lex_less(const Vec& a, const Vec& b);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(Elt c, const Vec& v);
Elt dot(const Vec& a, const Vec& b);

/// All q^d vectors of F^d in lexicographic coordinate order.
/// Throws std::length_error when q^d exceeds the enumeration guardrail.
std::vector<Vec> all_vectors(const Field& f, std::size_t d);

/// Invokes fn on each vector of F^d in lexicographic coordinate order.
/// The same guardrail as all_vectors applies.
void for_each_vector(const Field& f, std::size_t d,
                     const std::function<void(const Vec&)>& fn);

/// Default cap on q^d for exhaustive point enumeration.
inline constexpr std::uint64_t kEnumerationGuardrail = 1u << 20;

/// Checked q^d, throwing std::length_error beyond the guardrail.
std::uint64_t checked_point_count(const Field& f, std::size_t d);

/// Row-major rectangular matrix over a field. rows or cols may be zero.
struct Mat {
  Field field;
  std::size_t rows = 0, cols = 0;
  std::vector<Elt> a;

  Elt& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  Elt at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  Vec row(std::size_t i) const;

  static Mat zero(const Field& f, std::size_t rows, std::size_t cols);
  static Mat identity(const Field& f, std::size_t n);
  static Mat from_rows(const Field& f, std::size_t cols,
                       const std::vector<std::vector<Elt>>& rows);

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.field == y.field && x.rows == y.rows && x.cols == y.cols &&
           x.a == y.a;
  }
};

struct RrefResult {
  Mat r;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // strictly increasing column indices
};

/// Unique reduced row echelon form: pivot entries 1, pivot columns otherwise
/// zero, zero rows last.
RrefResult rref(const Mat& m);

/// Matrix-vector product. Throws std::invalid_argument on dimension mismatch.
Vec mat_apply(const Mat& m, const Vec& v);

Mat mat_mul(const Mat& x, const Mat& y);
Mat transpose(const Mat& m);

std::size_t rank(const Mat& m);

/// The canonical surjection F^d -> F^m: an m x d coordinate projection
/// (identity block, then zero columns). Throws when d < m or m < 1.
Mat surjection_to(const Field& f, std::size_t d, std::size_t m);

/// Canonical (RREF) basis of {x : m x = 0}, one row per basis vector.
Mat kernel(const Mat& m);

struct AffineSolution {
  Vec point;     // one solution of m x = b
  Mat homogeneous;  // canonical basis of the kernel of m
};

/// Solves m x = b; nullopt when the system is inconsistent.
std::optional<AffineSolution> solve_affine(const Mat& m, const Vec& b);

}  // namespace subcover

#endif  // SUBCOVER_LINALG_HPP
