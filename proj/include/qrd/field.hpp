#ifndef QRD_FIELD_HPP
#define QRD_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace qrd {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A finite field, either a prime field GF(p) or an extension of another
/// field by a monic irreducible modulus. Elements are integer codes in
/// [0, order): a prime-field code is the residue itself, an extension code
/// is the base-b positional encoding of the coordinate vector over the
/// base field (constant coordinate = least significant digit, b = base
/// order). Construction is deterministic: extensions always pick the
/// lexicographically smallest monic irreducible modulus, coefficients
/// compared constant-term-first as integers. All state is immutable after
/// construction, so Field objects can be shared freely across threads.
class Field : public std::enable_shared_from_this<Field> {
  public:
    /// GF(p) for prime p.
    static FieldPtr prime(unsigned p);

    /// GF(base^m). m = 1 returns the base itself. The total order is
    /// capped at 2^18 (large enough for every splitting field used by
    /// codes of length <= 20).
    static FieldPtr extension(const FieldPtr& base, unsigned m);

    /// GF(q) for a prime power q <= 16, built over the prime field.
    /// Rejects non prime powers.
    static FieldPtr of_order(unsigned q);

    unsigned order() const { return order_; }
    unsigned characteristic() const { return characteristic_; }
    /// Extension degree over the direct base field (1 for prime fields).
    unsigned degree() const { return degree_; }
    unsigned degree_over_prime() const { return degree_over_prime_; }
    /// Direct base field; null for prime fields.
    const FieldPtr& base() const { return base_; }
    /// Modulus over the base field, constant term first, monic; empty for
    /// prime fields.
    const std::vector<unsigned>& modulus() const { return modulus_; }
    bool is_prime_field() const { return base_ == nullptr; }

    unsigned add(unsigned a, unsigned b) const;
    unsigned neg(unsigned a) const;
    unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
    unsigned mul(unsigned a, unsigned b) const;
    unsigned inv(unsigned a) const;
    unsigned pow(unsigned a, std::uint64_t e) const;

    /// Coordinate vector over the direct base, constant coordinate first;
    /// length degree().
    std::vector<unsigned> coordinates(unsigned a) const;
    unsigned from_coordinates(const std::vector<unsigned>& digits) const;

    /// Canonical embedding of the direct base field (constant vectors).
    unsigned embed_base(unsigned base_code) const;
    bool in_base_field(unsigned a) const;
    /// Inverse of embed_base; throws if the element is outside the
    /// embedded copy.
    unsigned project_to_base(unsigned a) const;

    /// Multiplicative order of a nonzero element.
    unsigned element_order(unsigned a) const;
    /// Smallest primitive element in code order (precomputed).
    unsigned least_primitive_element() const { return primitive_; }

    std::string description() const;

  private:
    Field() = default;
    void check_code(unsigned a) const;

    unsigned characteristic_ = 0;
    unsigned order_ = 0;
    unsigned degree_ = 1;
    unsigned degree_over_prime_ = 1;
    FieldPtr base_;
    std::vector<unsigned> modulus_;
    std::vector<unsigned> reduction_;  // -modulus tail: x^m = reduction_ (codes over base)
    unsigned primitive_ = 0;
};

/// Smallest m >= 1 with q^m = 1 (mod p); p must be an odd prime not
/// dividing q.
unsigned multiplicative_order(unsigned q, unsigned p);

/// Deterministic primitive p-th root of unity in F: g^((|F|-1)/p) for g
/// the least primitive element. Requires p an odd prime dividing |F|-1.
unsigned pth_root_of_unity(const Field& field, unsigned p);

bool is_prime(unsigned n);
/// Decomposes n = p^e with p prime; returns {0,0} if n is not a prime power.
std::pair<unsigned, unsigned> prime_power_decomposition(unsigned n);

/// Univariate polynomial over a fixed field; coefficients constant term
/// first, normalized (no trailing zeros). The zero polynomial has an empty
/// coefficient list and degree -1.
class Poly {
  public:
    Poly() = default;
    static Poly zero(FieldPtr field);
    static Poly constant(FieldPtr field, unsigned c);
    /// Normalizes trailing zeros away.
    static Poly from_coefficients(FieldPtr field, std::vector<unsigned> coeffs);
    /// x^n - 1.
    static Poly x_power_minus_one(FieldPtr field, unsigned n);
    /// x - root.
    static Poly linear_root(FieldPtr field, unsigned root);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const;
    unsigned coefficient(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    unsigned leading_coefficient() const;
    const std::vector<unsigned>& coefficients() const { return coeffs_; }
    const FieldPtr& field() const { return field_; }

    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    /// Exact (quotient, remainder) with deg(remainder) < deg(divisor);
    /// throws on division by the zero polynomial.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    unsigned evaluate(unsigned x) const;

    bool operator==(const Poly& rhs) const;
    bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

  private:
    Poly(FieldPtr field, std::vector<unsigned> coeffs);
    void normalize();

    FieldPtr field_;
    std::vector<unsigned> coeffs_;
};

/// Irreducibility over the polynomial's own field by trial division
/// against every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& p);

}  // namespace qrd

#endif
