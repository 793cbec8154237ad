#include "subcover/field.hpp"

#include <charconv>
#include <stdexcept>

namespace subcover {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Dense polynomials over F_p, coefficients c[i] for x^i, trailing zeros
// allowed. Only what modulus selection and table construction need.
using Poly = std::vector<unsigned>;

int poly_deg(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[static_cast<std::size_t>(i)] != 0) return i;
  }
  return -1;
}

Poly poly_mul(const Poly& f, const Poly& g, unsigned p) {
  if (f.empty() || g.empty()) return {};
  Poly r(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      r[i + j] = (r[i + j] + f[i] * g[j]) % p;
    }
  }
  return r;
}

// Remainder of f modulo monic g.
Poly poly_rem(Poly f, const Poly& g, unsigned p) {
  const int dg = poly_deg(g);
  for (int df = poly_deg(f); df >= dg && dg >= 0; df = poly_deg(f)) {
    const unsigned c = f[static_cast<std::size_t>(df)];
    const int shift = df - dg;
    for (int i = 0; i <= dg; ++i) {
      auto& coeff = f[static_cast<std::size_t>(i + shift)];
      coeff = (coeff + p * p - c * g[static_cast<std::size_t>(i)] % p) % p;
    }
  }
  return f;
}

bool divides(const Poly& g, const Poly& f, unsigned p) {
  return poly_deg(poly_rem(f, g, p)) < 0;
}

// Trial division against every monic polynomial of degree 1..deg(f)/2.
bool is_irreducible(const Poly& f, unsigned p) {
  const int df = poly_deg(f);
  for (int m = 1; 2 * m <= df; ++m) {
    unsigned count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (unsigned code = 0; code < count; ++code) {
      Poly g(static_cast<std::size_t>(m) + 1, 0);
      unsigned rest = code;
      for (int i = 0; i < m; ++i) {
        g[static_cast<std::size_t>(i)] = rest % p;
        rest /= p;
      }
      g[static_cast<std::size_t>(m)] = 1;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

Poly decode(unsigned value, unsigned p, unsigned k) {
  Poly f(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    f[i] = value % p;
    value /= p;
  }
  return f;
}

unsigned encode(const Poly& f, unsigned p) {
  unsigned value = 0;
  unsigned scale = 1;
  for (unsigned c : f) {
    value += c * scale;
    scale *= p;
  }
  return value;
}

}  // namespace

Field Field::make(unsigned p, unsigned k) {
  if (!is_prime(p)) {
    throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                " is not prime");
  }
  if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
  unsigned long long q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      throw std::invalid_argument("field order " + std::to_string(p) + "^" +
                                  std::to_string(k) + " exceeds the limit of " +
                                  std::to_string(kMaxFieldOrder));
    }
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->k = k;
  t->q = static_cast<unsigned>(q);

  if (k > 1) {
    // Canonical modulus: smallest encoding among monic irreducibles of
    // degree k. The scan is in encoding order, so the first hit wins.
    Poly modulus;
    for (unsigned code = 0; code < t->q; ++code) {
      Poly f = decode(code, p, k);
      f.push_back(1);
      if (is_irreducible(f, p)) {
        modulus = std::move(f);
        break;
      }
    }
    t->modulus.assign(modulus.begin(), modulus.end());

    t->add_table.resize(static_cast<std::size_t>(t->q) * t->q);
    t->mul_table.resize(static_cast<std::size_t>(t->q) * t->q);
    for (unsigned a = 0; a < t->q; ++a) {
      const Poly fa = decode(a, p, k);
      for (unsigned b = 0; b < t->q; ++b) {
        const Poly fb = decode(b, p, k);
        Poly sum(k, 0);
        for (unsigned i = 0; i < k; ++i) sum[i] = (fa[i] + fb[i]) % p;
        t->add_table[static_cast<std::size_t>(a) * t->q + b] =
            static_cast<Elt>(encode(sum, p));
        const Poly prod = poly_rem(poly_mul(fa, fb, p), modulus, p);
        t->mul_table[static_cast<std::size_t>(a) * t->q + b] =
            static_cast<Elt>(encode(prod, p));
      }
    }
  }

  t->neg_table.resize(t->q);
  t->inv_table.assign(t->q, 0);
  Field f{std::shared_ptr<const Tables>(t)};
  for (unsigned a = 0; a < t->q; ++a) {
    for (unsigned b = 0; b < t->q; ++b) {
      if (f.add(static_cast<Elt>(a), static_cast<Elt>(b)) == 0) {
        t->neg_table[a] = static_cast<Elt>(b);
      }
      if (a != 0 && f.mul(static_cast<Elt>(a), static_cast<Elt>(b)) == 1) {
        t->inv_table[a] = static_cast<Elt>(b);
      }
    }
  }
  return f;
}

Field Field::parse(std::string_view name) {
  const auto caret = name.find('^');
  const std::string_view p_part = name.substr(0, caret);
  const std::string_view k_part =
      caret == std::string_view::npos ? std::string_view{"1"}
                                      : name.substr(caret + 1);
  unsigned p = 0, k = 0;
  auto [pp, pe] = std::from_chars(p_part.data(), p_part.data() + p_part.size(), p);
  auto [kp, ke] = std::from_chars(k_part.data(), k_part.data() + k_part.size(), k);
  if (pe != std::errc{} || ke != std::errc{} ||
      pp != p_part.data() + p_part.size() || kp != k_part.data() + k_part.size()) {
    throw std::invalid_argument("cannot parse field name '" + std::string(name) +
                                "'; expected \"p\" or \"p^k\"");
  }
  return make(p, k);
}

Elt Field::add(Elt a, Elt b) const {
  const auto& t = *t_;
  if (t.k == 1) return static_cast<Elt>((a + b) % t.p);
  return t.add_table[static_cast<std::size_t>(a) * t.q + b];
}

Elt Field::sub(Elt a, Elt b) const { return add(a, neg(b)); }

Elt Field::mul(Elt a, Elt b) const {
  const auto& t = *t_;
  if (t.k == 1) return static_cast<Elt>((a * b) % t.p);
  return t.mul_table[static_cast<std::size_t>(a) * t.q + b];
}

Elt Field::neg(Elt a) const { return t_->neg_table[a]; }

Elt Field::inv(Elt a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return t_->inv_table[a];
}

Elt Field::pow(Elt a, std::uint64_t e) const {
  Elt result = 1;
  Elt base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::vector<Elt> Field::elements() const {
  std::vector<Elt> out(order());
  for (unsigned i = 0; i < order(); ++i) out[i] = static_cast<Elt>(i);
  return out;
}

std::string Field::name() const {
  if (degree() == 1) return std::to_string(characteristic());
  return std::to_string(characteristic()) + "^" + std::to_string(degree());
}

}  // namespace subcover
