#ifndef SUBCOVER_FIELD_HPP
#define SUBCOVER_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace subcover {

/// Field elements are integer encodings in [0, q). The encoding reads the
/// integer's base-p digits a_0 + a_1*p + ... + a_{k-1}*p^{k-1} as the
/// coefficients of the polynomial a_0 + a_1*x + ..., so 0 is the additive
/// identity and 1 the multiplicative identity. Integer order on encodings is
/// the total element order used for every tie-break in this library.
using Elt = std::uint16_t;

/// Largest supported field order. Keeps multiplication tables and exhaustive
/// searches at desk scale.
inline constexpr unsigned kMaxFieldOrder = 256;

/// Exact arithmetic in GF(q), q = p^k, with a fixed deterministic encoding.
///
/// Prime fields (k = 1) compute modulo p directly. Extension fields reduce
/// polynomial products modulo the canonical modulus: the monic irreducible
/// polynomial of degree k over F_p whose coefficient tuple (a_0, ..., a_{k-1})
/// has the smallest integer encoding. Extension arithmetic goes through
/// precomputed q x q tables.
///
/// A Field is an immutable handle over shared tables; copies are cheap and
/// all operations are pure, so instances can be shared across threads.
class Field {
 public:
  /// Builds GF(p^k). Throws std::invalid_argument if p is not prime, k < 1,
  /// or p^k exceeds kMaxFieldOrder.
  static Field make(unsigned p, unsigned k = 1);

  /// Parses "p" or "p^k" field names as used in the CLI and JSON formats.
  static Field parse(std::string_view name);

  unsigned characteristic() const { return t_->p; }
  unsigned degree() const { return t_->k; }
  unsigned order() const { return t_->q; }

  /// Modulus coefficients a_0, ..., a_k (monic, a_k = 1); empty when k = 1.
  const std::vector<Elt>& modulus() const { return t_->modulus; }

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const;
  Elt mul(Elt a, Elt b) const;
  Elt neg(Elt a) const;
  /// Throws std::domain_error when a = 0.
  Elt inv(Elt a) const;
  Elt pow(Elt a, std::uint64_t e) const;

  /// All q elements in increasing encoding order: 0, 1, ...
  std::vector<Elt> elements() const;

  /// "p" for prime fields, "p^k" otherwise.
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.t_->p == b.t_->p && a.t_->k == b.t_->k;
  }

 private:
  struct Tables {
    unsigned p = 0, k = 0, q = 0;
    std::vector<Elt> modulus;    // a_0..a_k, empty for k = 1
    std::vector<Elt> add_table;  // q*q, built only when k > 1
    std::vector<Elt> mul_table;  // q*q, built only when k > 1
    std::vector<Elt> neg_table;  // q entries
    std::vector<Elt> inv_table;  // q entries, inv_table[0] unused
  };

  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

  std::shared_ptr<const Tables> t_;
};

}  // namespace subcover

#endif  // SUBCOVER_FIELD_HPP
