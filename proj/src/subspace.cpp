#include "subcover/subspace.hpp"

#include <stdexcept>
#include <string>

namespace subcover {

namespace {

void require_compatible(const LinearSubspace& s, const Vec& v) {
  if (!(s.field() == v.field) || s.ambient() != v.dim()) {
    throw std::invalid_argument("vector does not match the subspace's ambient space");
  }
}

// Reduces v by the RREF basis rows, clearing every pivot coordinate. The
// result is the canonical representative of v modulo the row space.
Vec reduce_by_basis(const Mat& basis, Vec v) {
  const Field& f = basis.field;
  for (std::size_t i = 0; i < basis.rows; ++i) {
    std::size_t pivot = 0;
    while (pivot < basis.cols && basis.at(i, pivot) == 0) ++pivot;
    if (pivot == basis.cols) continue;
    const Elt c = v.coords[pivot];
    if (c == 0) continue;
    for (std::size_t j = 0; j < basis.cols; ++j) {
      v.coords[j] = f.sub(v.coords[j], f.mul(c, basis.at(i, j)));
    }
  }
  return v;
}

}  // namespace

LinearSubspace span(const Field& f, std::size_t d, const std::vector<Vec>& vectors) {
  Mat m = Mat::zero(f, vectors.size(), d);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (!(vectors[i].field == f) || vectors[i].dim() != d) {
      throw std::invalid_argument("span over mixed fields or dimensions");
    }
    for (std::size_t j = 0; j < d; ++j) m.at(i, j) = vectors[i].coords[j];
  }
  return span_rows(m);
}

LinearSubspace span_rows(const Mat& rows) {
  const RrefResult red = rref(rows);
  Mat basis = Mat::zero(rows.field, red.rank, rows.cols);
  for (std::size_t i = 0; i < red.rank; ++i) {
    for (std::size_t j = 0; j < rows.cols; ++j) basis.at(i, j) = red.r.at(i, j);
  }
  return LinearSubspace{std::move(basis)};
}

LinearSubspace zero_subspace(const Field& f, std::size_t d) {
  return LinearSubspace{Mat::zero(f, 0, d)};
}

LinearSubspace full_space(const Field& f, std::size_t d) {
  return LinearSubspace{Mat::identity(f, d)};
}

bool contains(const LinearSubspace& s, const Vec& v) {
  require_compatible(s, v);
  return is_zero(reduce_by_basis(s.basis, v));
}

std::vector<Vec> points(const LinearSubspace& s) {
  std::vector<Vec> out;
  out.reserve(checked_point_count(s.field(), s.dim()));
  for_each_vector(s.field(), s.dim(), [&](const Vec& coeffs) {
    Vec p = zero_vector(s.field(), s.ambient());
    for (std::size_t i = 0; i < s.dim(); ++i) {
      if (coeffs.coords[i] == 0) continue;
      for (std::size_t j = 0; j < s.ambient(); ++j) {
        p.coords[j] = s.field().add(p.coords[j],
                                    s.field().mul(coeffs.coords[i], s.basis.at(i, j)));
      }
    }
    out.push_back(std::move(p));
  });
  return out;
}

LinearSubspace intersect_linear(const LinearSubspace& a, const LinearSubspace& b) {
  if (!(a.field() == b.field()) || a.ambient() != b.ambient()) {
    throw std::invalid_argument("intersection requires a common ambient space");
  }
  const Mat na = cutting_functionals(a);
  const Mat nb = cutting_functionals(b);
  Mat stacked = Mat::zero(a.field(), na.rows + nb.rows, a.ambient());
  for (std::size_t i = 0; i < na.rows; ++i) {
    for (std::size_t j = 0; j < a.ambient(); ++j) stacked.at(i, j) = na.at(i, j);
  }
  for (std::size_t i = 0; i < nb.rows; ++i) {
    for (std::size_t j = 0; j < a.ambient(); ++j) {
      stacked.at(na.rows + i, j) = nb.at(i, j);
    }
  }
  return LinearSubspace{kernel(stacked)};
}

Mat cutting_functionals(const LinearSubspace& s) {
  // a annihilates the row space of the basis iff basis . a = 0
  return kernel(s.basis);
}

AffineSubspace make_affine(LinearSubspace direction, const Vec& point) {
  if (!(direction.field() == point.field) || direction.ambient() != point.dim()) {
    throw std::invalid_argument("basepoint does not match the direction space");
  }
  Vec base = reduce_by_basis(direction.basis, point);
  return AffineSubspace{std::move(direction), std::move(base)};
}

bool contains(const AffineSubspace& s, const Vec& v) {
  return contains(s.direction, vec_sub(v, s.basepoint));
}

std::vector<Vec> points(const AffineSubspace& s) {
  std::vector<Vec> out = points(s.direction);
  for (Vec& p : out) p = vec_add(p, s.basepoint);
  return out;
}

std::optional<AffineSubspace> intersect_affine(const AffineSubspace& a,
                                               const AffineSubspace& b) {
  if (!(a.field() == b.field()) || a.ambient() != b.ambient()) {
    throw std::invalid_argument("intersection requires a common ambient space");
  }
  const Mat na = cutting_functionals(a.direction);
  const Mat nb = cutting_functionals(b.direction);
  Mat stacked = Mat::zero(a.field(), na.rows + nb.rows, a.ambient());
  Vec rhs = zero_vector(a.field(), na.rows + nb.rows);
  for (std::size_t i = 0; i < na.rows; ++i) {
    for (std::size_t j = 0; j < a.ambient(); ++j) stacked.at(i, j) = na.at(i, j);
    rhs.coords[i] = dot(na.row(i), a.basepoint);
  }
  for (std::size_t i = 0; i < nb.rows; ++i) {
    for (std::size_t j = 0; j < a.ambient(); ++j) {
      stacked.at(na.rows + i, j) = nb.at(i, j);
    }
    rhs.coords[na.rows + i] = dot(nb.row(i), b.basepoint);
  }
  const auto solution = solve_affine(stacked, rhs);
  if (!solution) return std::nullopt;
  return make_affine(LinearSubspace{solution->homogeneous}, solution->point);
}

ProjectivePoint projective_point(const Vec& v) {
  if (is_zero(v)) throw std::invalid_argument("no projective point for the zero vector");
  std::size_t lead = 0;
  while (v.coords[lead] == 0) ++lead;
  return ProjectivePoint{vec_scale(v.field.inv(v.coords[lead]), v)};
}

std::vector<ProjectivePoint> projective_points(const Field& f, std::size_t d) {
  if (d < 1) throw std::invalid_argument("projective points need dimension >= 1");
  std::vector<ProjectivePoint> out;
  for (std::size_t lead = 0; lead < d; ++lead) {
    for_each_vector(f, d - lead - 1, [&](const Vec& tail) {
      Vec rep = zero_vector(f, d);
      rep.coords[lead] = 1;
      for (std::size_t j = 0; j < tail.dim(); ++j) {
        rep.coords[lead + 1 + j] = tail.coords[j];
      }
      out.push_back(ProjectivePoint{std::move(rep)});
    });
  }
  return out;
}

std::vector<Vec> normalized_functionals(const Field& f, std::size_t d) {
  if (d < 1) throw std::invalid_argument("functionals need dimension >= 1");
  const std::uint64_t total = checked_point_count(f, d);
  std::vector<Vec> out;
  for (std::uint64_t code = 1; code < total; ++code) {
    Vec a = zero_vector(f, d);
    std::uint64_t rest = code;
    for (std::size_t j = 0; j < d; ++j) {
      a.coords[j] = static_cast<Elt>(rest % f.order());
      rest /= f.order();
    }
    std::size_t lead = 0;
    while (a.coords[lead] == 0) ++lead;
    if (a.coords[lead] == 1) out.push_back(std::move(a));
  }
  return out;
}

LinearSubspace hyperplane_from_functional(const Vec& functional) {
  if (is_zero(functional)) {
    throw std::invalid_argument("the zero functional cuts out no hyperplane");
  }
  Mat row = Mat::zero(functional.field, 1, functional.dim());
  for (std::size_t j = 0; j < functional.dim(); ++j) {
    row.at(0, j) = functional.coords[j];
  }
  return LinearSubspace{kernel(row)};
}

std::vector<LinearSubspace> enumerate_hyperplanes(const Field& f, std::size_t d) {
  std::vector<LinearSubspace> out;
  for (const Vec& a : normalized_functionals(f, d)) {
    out.push_back(hyperplane_from_functional(a));
  }
  return out;
}

std::uint64_t count_hyperplanes(const Field& f, std::size_t d) {
  if (d < 1) throw std::invalid_argument("count_hyperplanes needs dimension >= 1");
  // sum of q^i for i < d, with an overflow check
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (std::size_t i = 0; i < d; ++i) {
    total += power;
    if (power > (UINT64_MAX - total) / f.order()) {
      throw std::overflow_error("hyperplane count overflows 64 bits");
    }
    power *= f.order();
  }
  return total;
}

AffineSubspace affine_hyperplane(const Vec& functional, Elt c) {
  LinearSubspace direction = hyperplane_from_functional(functional);
  std::size_t lead = 0;
  while (functional.coords[lead] == 0) ++lead;
  // functional is normalized, so coefficient 1 at lead: c*e_lead solves a.x = c
  Vec point = zero_vector(functional.field, functional.dim());
  point.coords[lead] = c;
  return make_affine(std::move(direction), point);
}

std::vector<AffineSubspace> enumerate_affine_hyperplanes(const Field& f,
                                                         std::size_t d) {
  std::vector<AffineSubspace> out;
  for (const Vec& a : normalized_functionals(f, d)) {
    for (Elt c : f.elements()) out.push_back(affine_hyperplane(a, c));
  }
  return out;
}

HyperplaneChart coords_in_hyperplane(const LinearSubspace& w) {
  if (w.ambient() < 1 || w.dim() + 1 != w.ambient()) {
    throw std::invalid_argument("chart requires a codimension-one subspace");
  }
  const std::size_t d = w.ambient();
  // up: coefficients on the basis rows; down: read the pivot coordinates back
  Mat up = transpose(w.basis);
  Mat down = Mat::zero(w.field(), d - 1, d);
  for (std::size_t i = 0; i < d - 1; ++i) {
    std::size_t pivot = 0;
    while (w.basis.at(i, pivot) == 0) ++pivot;
    down.at(i, pivot) = 1;
  }
  return HyperplaneChart{std::move(down), std::move(up)};
}

}  // namespace subcover
