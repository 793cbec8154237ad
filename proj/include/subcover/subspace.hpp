#ifndef SUBCOVER_SUBSPACE_HPP
#define SUBCOVER_SUBSPACE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "subcover/linalg.hpp"

namespace subcover {

/// Linear subspace of F^d in canonical form: the basis matrix is the unique
/// RREF with no zero rows, so structural equality is set equality.
struct LinearSubspace {
  Mat basis;  // rank = rows = dim, cols = ambient dimension

  const Field& field() const { return basis.field; }
  std::size_t ambient() const { return basis.cols; }
  std::size_t dim() const { return basis.rows; }
  bool proper() const { return dim() < ambient(); }

  friend bool operator==(const LinearSubspace& a, const LinearSubspace& b) {
    return a.basis == b.basis;
  }
};

/// Linear span, canonicalized. All vectors must share field and length d.
LinearSubspace span(const Field& f, std::size_t d, const std::vector<Vec>& vectors);
/// Span of the rows of a matrix.
LinearSubspace span_rows(const Mat& rows);
LinearSubspace zero_subspace(const Field& f, std::size_t d);
LinearSubspace full_space(const Field& f, std::size_t d);

bool contains(const LinearSubspace& s, const Vec& v);

/// Exactly q^dim points, ordered lexicographically by the coefficient tuple
/// on the basis rows. Guardrail as in all_vectors.
std::vector<Vec> points(const LinearSubspace& s);

/// Intersection of two linear subspaces, canonical.
LinearSubspace intersect_linear(const LinearSubspace& a, const LinearSubspace& b);

/// Functionals vanishing on s: canonical basis of {a : a.x = 0 for all x in s},
/// one functional per row. Rows = ambient - dim.
Mat cutting_functionals(const LinearSubspace& s);

/// Translate of a linear subspace. The basepoint is canonical: its pivot
/// coordinates (w.r.t. the direction's RREF basis) are zero, so structural
/// equality is set equality.
struct AffineSubspace {
  LinearSubspace direction;
  Vec basepoint;

  const Field& field() const { return direction.field(); }
  std::size_t ambient() const { return direction.ambient(); }
  std::size_t dim() const { return direction.dim(); }
  bool proper() const { return direction.proper(); }

  friend bool operator==(const AffineSubspace& a, const AffineSubspace& b) {
    return a.direction == b.direction && a.basepoint == b.basepoint;
  }
};

/// Builds direction + point with the basepoint reduced to canonical form.
AffineSubspace make_affine(LinearSubspace direction, const Vec& point);

bool contains(const AffineSubspace& s, const Vec& v);
std::vector<Vec> points(const AffineSubspace& s);

/// A intersect B, or nullopt when the intersection is empty. Empty is a
/// normal outcome, not an error.
std::optional<AffineSubspace> intersect_affine(const AffineSubspace& a,
                                               const AffineSubspace& b);

/// Line through the origin, named by its normalized representative: the first
/// nonzero coordinate is 1. Every nonzero vector is a scalar multiple of
/// exactly one representative.
struct ProjectivePoint {
  Vec rep;

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.rep == b.rep;
  }
};

/// Normalizes a nonzero vector. Throws std::invalid_argument on zero input.
ProjectivePoint projective_point(const Vec& v);

/// All (q^d - 1)/(q - 1) projective points of F^d, grouped by the position of
/// the leading 1 and lexicographic within each group.
std::vector<ProjectivePoint> projective_points(const Field& f, std::size_t d);

/// Normalized nonzero functionals of F^d in increasing encoding order, where
/// a functional (a_0, ..., a_{d-1}) encodes as sum a_j q^j. Hyperplanes are
/// their kernels; this is the candidate order the solver uses.
std::vector<Vec> normalized_functionals(const Field& f, std::size_t d);

/// Kernel of a single nonzero functional: a hyperplane in canonical form.
LinearSubspace hyperplane_from_functional(const Vec& functional);

/// All codimension-one subspaces of F^d, one per normalized functional, in
/// functional encoding order. Length (q^d - 1)/(q - 1).
std::vector<LinearSubspace> enumerate_hyperplanes(const Field& f, std::size_t d);

/// (q^d - 1)/(q - 1), computed without enumeration.
std::uint64_t count_hyperplanes(const Field& f, std::size_t d);

/// Solution set of functional.x = c as a canonical affine subspace.
AffineSubspace affine_hyperplane(const Vec& functional, Elt c);

/// All q(q^d - 1)/(q - 1) affine hyperplanes: functionals in encoding order,
/// constant terms in element order within each functional.
std::vector<AffineSubspace> enumerate_affine_hyperplanes(const Field& f,
                                                         std::size_t d);

/// Mutually inverse linear maps identifying a hyperplane W with F^{d-1}:
/// down maps W onto F^{d-1} (pivot-coordinate selection), up embeds F^{d-1}
/// back as W (basis-row combination). down . up = id on F^{d-1} and
/// up . down = id on W.
struct HyperplaneChart {
  Mat down;  // (d-1) x d
  Mat up;    // d x (d-1)
};

/// Throws std::invalid_argument unless w has codimension one.
HyperplaneChart coords_in_hyperplane(const LinearSubspace& w);

}  // namespace subcover

#endif  // SUBCOVER_SUBSPACE_HPP
