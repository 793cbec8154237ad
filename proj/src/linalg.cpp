#include "subcover/linalg.hpp"

#include <stdexcept>

namespace subcover {

namespace {

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw std::invalid_argument("mixed fields in one operation");
}

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

Vec zero_vector(const Field& f, std::size_t d) {
  return Vec{f, std::vector<Elt>(d, 0)};
}

bool is_zero(const Vec& v) {
  for (Elt c : v.coords) {
    if (c != 0) return false;
  }
  return true;
}

bool lex_less(const Vec& a, const Vec& b) { return a.coords < b.coords; }

Vec vec_add(const Vec& a, const Vec& b) {
  require_same_field(a.field, b.field);
  require_same_dim(a.dim(), b.dim());
  Vec r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) {
    r.coords[i] = a.field.add(a.coords[i], b.coords[i]);
  }
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  require_same_field(a.field, b.field);
  require_same_dim(a.dim(), b.dim());
  Vec r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) {
    r.coords[i] = a.field.sub(a.coords[i], b.coords[i]);
  }
  return r;
}

Vec vec_scale(Elt c, const Vec& v) {
  Vec r = v;
  for (auto& x : r.coords) x = v.field.mul(c, x);
  return r;
}

Elt dot(const Vec& a, const Vec& b) {
  require_same_field(a.field, b.field);
  require_same_dim(a.dim(), b.dim());
  Elt s = 0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    s = a.field.add(s, a.field.mul(a.coords[i], b.coords[i]));
  }
  return s;
}

std::uint64_t checked_point_count(const Field& f, std::size_t d) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < d; ++i) {
    n *= f.order();
    if (n > kEnumerationGuardrail) {
      throw std::length_error("point enumeration of " + f.name() + "^" +
                              std::to_string(d) + " exceeds the guardrail of " +
                              std::to_string(kEnumerationGuardrail));
    }
  }
  return n;
}

void for_each_vector(const Field& f, std::size_t d,
                     const std::function<void(const Vec&)>& fn) {
  checked_point_count(f, d);
  Vec v = zero_vector(f, d);
  const unsigned q = f.order();
  while (true) {
    fn(v);
    // odometer with the last coordinate fastest = lexicographic order
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (v.coords[i] + 1u < q) {
        ++v.coords[i];
        break;
      }
      v.coords[i] = 0;
      if (i == 0) return;
    }
    if (d == 0) return;
  }
}

std::vector<Vec> all_vectors(const Field& f, std::size_t d) {
  std::vector<Vec> out;
  out.reserve(checked_point_count(f, d));
  for_each_vector(f, d, [&](const Vec& v) { out.push_back(v); });
  return out;
}

Vec Mat::row(std::size_t i) const {
  return Vec{field, std::vector<Elt>(a.begin() + static_cast<std::ptrdiff_t>(i * cols),
                                     a.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols))};
}

Mat Mat::zero(const Field& f, std::size_t rows, std::size_t cols) {
  return Mat{f, rows, cols, std::vector<Elt>(rows * cols, 0)};
}

Mat Mat::identity(const Field& f, std::size_t n) {
  Mat m = zero(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const Field& f, std::size_t cols,
                   const std::vector<std::vector<Elt>>& rows) {
  Mat m = zero(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw std::invalid_argument("ragged rows in matrix construction");
    }
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RrefResult rref(const Mat& m) {
  RrefResult out{m, 0, {}};
  Mat& r = out.r;
  const Field& f = m.field;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < r.cols && lead < r.rows; ++col) {
    // first nonzero entry at or below the current lead row
    std::size_t pivot = lead;
    while (pivot < r.rows && r.at(pivot, col) == 0) ++pivot;
    if (pivot == r.rows) continue;
    if (pivot != lead) {
      for (std::size_t j = 0; j < r.cols; ++j) {
        std::swap(r.at(pivot, j), r.at(lead, j));
      }
    }
    const Elt scale = f.inv(r.at(lead, col));
    for (std::size_t j = 0; j < r.cols; ++j) {
      r.at(lead, j) = f.mul(scale, r.at(lead, j));
    }
    for (std::size_t i = 0; i < r.rows; ++i) {
      if (i == lead || r.at(i, col) == 0) continue;
      const Elt factor = r.at(i, col);
      for (std::size_t j = 0; j < r.cols; ++j) {
        r.at(i, j) = f.sub(r.at(i, j), f.mul(factor, r.at(lead, j)));
      }
    }
    out.pivots.push_back(col);
    ++lead;
  }
  out.rank = out.pivots.size();
  return out;
}

Vec mat_apply(const Mat& m, const Vec& v) {
  require_same_field(m.field, v.field);
  if (v.dim() != m.cols) {
    throw std::invalid_argument("matrix-vector dimension mismatch");
  }
  Vec r = zero_vector(m.field, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    Elt s = 0;
    for (std::size_t j = 0; j < m.cols; ++j) {
      s = m.field.add(s, m.field.mul(m.at(i, j), v.coords[j]));
    }
    r.coords[i] = s;
  }
  return r;
}

Mat mat_mul(const Mat& x, const Mat& y) {
  require_same_field(x.field, y.field);
  if (x.cols != y.rows) throw std::invalid_argument("matrix product dimension mismatch");
  Mat r = Mat::zero(x.field, x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t k = 0; k < x.cols; ++k) {
      const Elt v = x.at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) {
        r.at(i, j) = r.field.add(r.at(i, j), r.field.mul(v, y.at(k, j)));
      }
    }
  }
  return r;
}

Mat transpose(const Mat& m) {
  Mat r = Mat::zero(m.field, m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
  }
  return r;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Mat surjection_to(const Field& f, std::size_t d, std::size_t m) {
  if (m < 1 || d < m) {
    throw std::invalid_argument("surjection requires d >= m >= 1");
  }
  Mat q = Mat::zero(f, m, d);
  for (std::size_t i = 0; i < m; ++i) q.at(i, i) = 1;
  return q;
}

Mat kernel(const Mat& m) {
  const RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : red.pivots) is_pivot[c] = true;

  Mat basis = Mat::zero(m.field, m.cols - red.rank, m.cols);
  std::size_t row = 0;
  for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    basis.at(row, free_col) = 1;
    for (std::size_t j = 0; j < red.rank; ++j) {
      basis.at(row, red.pivots[j]) = m.field.neg(red.r.at(j, free_col));
    }
    ++row;
  }
  return rref(basis).r;  // canonical form
}

std::optional<AffineSolution> solve_affine(const Mat& m, const Vec& b) {
  require_same_field(m.field, b.field);
  if (b.dim() != m.rows) throw std::invalid_argument("rhs length must equal rows");
  Mat aug = Mat::zero(m.field, m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b.coords[i];
  }
  const RrefResult red = rref(aug);
  for (std::size_t c : red.pivots) {
    if (c == m.cols) return std::nullopt;  // pivot in the rhs column
  }
  Vec point = zero_vector(m.field, m.cols);
  for (std::size_t j = 0; j < red.rank; ++j) {
    point.coords[red.pivots[j]] = red.r.at(j, m.cols);
  }
  return AffineSolution{std::move(point), kernel(m)};
}

}  // namespace subcover
