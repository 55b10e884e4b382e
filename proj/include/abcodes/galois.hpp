#pragma once

#include "abcodes/bigint.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace abcodes {

/// Integer encoding of a field element: sum of coeffs[i] * p^i in the
/// polynomial basis. Encodings are a bijection onto [0, p^m).
using Elem = std::uint32_t;

struct FieldParams {
    std::uint32_t p = 2;
    std::uint32_t m = 1;
    /// m+1 coefficients of a monic irreducible polynomial, x^i at index i.
    std::vector<std::uint32_t> modulus;

    std::uint64_t order() const;
    bool operator==(const FieldParams&) const = default;
};

bool is_prime(std::uint64_t n);

/// True when the monic polynomial `poly` (coefficient of x^i at index i) is
/// irreducible over GF(p).
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

class FieldElement;

/// GF(p^m) in a polynomial basis. Immutable and cheap to copy: copies share
/// the same underlying tables, so a Field may be passed across threads freely.
class Field {
public:
    const FieldParams& params() const;
    std::uint32_t p() const;
    std::uint32_t m() const;
    std::uint64_t order() const;

    bool contains(std::uint64_t e) const { return e < order(); }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    /// x^j reduced modulo the field polynomial, j < m.
    Elem monomial(std::uint32_t j) const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    /// Multiplication by c in GF(p).
    Elem scale(std::uint32_t c, Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, const BigInt& e) const;
    Elem pow(Elem a, std::uint64_t e) const;
    /// Absolute trace onto GF(p).
    std::uint32_t trace(Elem a) const;

    std::vector<std::uint32_t> coeffs(Elem a) const;
    Elem encode(std::span<const std::uint32_t> coeffs) const;

    FieldElement element(std::uint64_t encoding) const;

    /// Same parameters (identical tables or equal (p, m, modulus)).
    bool operator==(const Field& other) const;

private:
    struct Impl;
    explicit Field(std::shared_ptr<const Impl> impl);
    friend Field make_field(std::uint32_t, std::uint32_t, std::optional<std::vector<std::uint32_t>>);

    std::shared_ptr<const Impl> impl_;
};

/// Builds GF(p^m). Without an explicit modulus the monic irreducible with the
/// smallest coefficient encoding is used, so (p, m) always gives the same field.
Field make_field(std::uint32_t p, std::uint32_t m,
    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

/// Field element bound to its field. Binary operations on elements of
/// different fields throw MixedFields.
class FieldElement {
public:
    FieldElement(Field field, Elem value);

    const Field& field() const { return field_; }
    Elem encoding() const { return value_; }
    std::vector<std::uint32_t> coeffs() const { return field_.coeffs(value_); }
    bool is_zero() const { return value_ == 0; }

    FieldElement inv() const;
    FieldElement pow(const BigInt& e) const;
    std::uint32_t trace() const;

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

    friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
    Field field_;
    Elem value_;
};

/// Additive subgroup of GF(p^m) of order p^r given by a GF(p)-basis.
class AdditiveSubgroup {
public:
    const Field& field() const { return field_; }
    std::span<const Elem> basis() const { return basis_; }
    std::uint32_t rank() const { return static_cast<std::uint32_t>(basis_.size()); }
    /// All p^r members in increasing encoding.
    std::span<const Elem> elements() const { return elements_; }
    bool contains(Elem e) const;

private:
    AdditiveSubgroup(Field field, std::vector<Elem> basis, std::vector<Elem> elements);
    friend AdditiveSubgroup subgroup_from_basis(const Field&, std::span<const Elem>);

    Field field_;
    std::vector<Elem> basis_;
    std::vector<Elem> elements_;
};

AdditiveSubgroup subgroup_from_basis(const Field& field, std::span<const Elem> basis);
AdditiveSubgroup subgroup_from_basis(const Field& field, std::span<const FieldElement> basis);

/// Span of {1, x, ..., x^(r-1)}.
AdditiveSubgroup canonical_subgroup(const Field& field, std::uint32_t r);

/// Uniformly chosen independent basis of size r (rejection sampling).
AdditiveSubgroup random_subgroup(const Field& field, std::uint32_t r, std::mt19937_64& rng);

} // namespace abcodes
