#ifndef SUBCOVER_COVER_HPP
#define SUBCOVER_COVER_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "subcover/subspace.hpp"

namespace subcover {

enum class CoverKind { linear, affine };

/// Indexed family of proper subspaces (linear kind) or proper affine
/// subspaces over one ambient space. Members are stored uniformly as affine
/// subspaces; linear members carry a zero basepoint. Duplicates are legal on
/// input and reported by verify_family.
struct CoverFamily {
  Field field;
  std::size_t ambient = 0;
  CoverKind kind = CoverKind::linear;
  std::vector<AffineSubspace> members;

  std::size_t size() const { return members.size(); }
};

CoverFamily linear_family(const Field& f, std::size_t ambient,
                          std::vector<LinearSubspace> members);
CoverFamily affine_family(const Field& f, std::size_t ambient,
                          std::vector<AffineSubspace> members);

/// Direction space of member i; for linear families this is the member.
const LinearSubspace& member_direction(const CoverFamily& c, std::size_t i);

/// True iff every vector of F^d lies in some member.
bool is_cover(const CoverFamily& c);

/// True iff no member can be dropped, i.e. every member has a private point.
/// Throws std::invalid_argument when c is not a cover (irredundancy is
/// defined only for coverings).
bool is_irredundant(const CoverFamily& c);

/// Points of member i lying in no other member, in the member's point order.
/// Requires a cover; throws std::out_of_range for a bad index.
std::vector<Vec> private_points(const CoverFamily& c, std::size_t i);

/// Ascending scan that drops a member whenever the rest still covers.
/// The result is an irredundant subfamily covering the same space.
CoverFamily prune_to_irredundant(const CoverFamily& c);

/// Indices of members equal to an earlier member.
std::vector<std::size_t> duplicate_members(const CoverFamily& c);

/// Indices of members with no private point (requires a cover).
std::vector<std::size_t> redundant_members(const CoverFamily& c);

/// Validation summary for user-supplied families.
struct VerifyReport {
  bool cover = false;
  std::optional<bool> irredundant;  // unset when not a cover
  std::vector<std::size_t> duplicates;
  std::vector<std::size_t> redundant;  // empty when not a cover
};

VerifyReport verify_family(const CoverFamily& c);

/// The q+1 lines of F^2: slopes in element order, then the vertical line.
/// An irredundant linear cover.
CoverFamily lines_cover_plane(const Field& f);

/// Complete preimages of the members under a surjection q: F^d -> F^m.
/// Covering and irredundancy are preserved. Throws when q is not surjective.
CoverFamily pullback_cover(const CoverFamily& c, const Mat& q);

/// The q parallel affine hyperplanes {x_0 = c} in element order of c; an
/// irredundant affine cover of F^d.
CoverFamily parallel_affine_cover(const Field& f, std::size_t d);

/// Restriction of a hyperplane cover to one more hyperplane w, rewritten in
/// coordinates on w: member i becomes down(member_i intersect w) in F^{d-1}.
/// Requires w distinct from every member.
CoverFamily intersect_with_hyperplane(const CoverFamily& c, const LinearSubspace& w);

/// Certificate extracted from an irredundant cover and one member index: an
/// affine line that meets the chosen member in no countable point and every
/// other member at most once, forcing the family size lower bound.
///
/// Linear kind: line = {t*u + v}, u a private point of the chosen member,
/// v outside it; hits[chosen] = 0 over the whole line, so the other q points
/// need q distinct members and #members >= q + 1.
///
/// Affine kind: line = {(1-t)*u + t*v}; the line meets the chosen member
/// exactly in u (t = 0) and hits[chosen] counts the other points, so
/// #members >= q.
struct LineWitness {
  std::size_t chosen = 0;
  Vec u;
  Vec v;
  std::vector<Vec> line;            // q points, in element order of t
  std::vector<std::size_t> hits;    // per-member intersection counts
};

LineWitness line_witness(const CoverFamily& c, std::size_t chosen);
LineWitness affine_line_witness(const CoverFamily& c, std::size_t chosen);

}  // namespace subcover

#endif  // SUBCOVER_COVER_HPP
