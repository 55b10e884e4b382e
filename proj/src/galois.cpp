#include "abcodes/galois.hpp"

#include "abcodes/error.hpp"
#include "abcodes/linalg.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace abcodes {

namespace {

constexpr std::uint32_t kMaxDegree = 31;
constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;

using Digits = std::array<std::uint32_t, kMaxDegree>;

// True when q divides poly over GF(p); q monic.
bool divides(std::span<const std::uint32_t> q, std::vector<std::uint32_t> poly, std::uint32_t p)
{
    const std::size_t dq = q.size() - 1;
    for (std::size_t d = poly.size() - 1; d >= dq; --d) {
        const std::uint32_t c = poly[d] % p;
        if (c != 0)
            for (std::size_t i = 0; i <= dq; ++i)
                poly[d - dq + i] = static_cast<std::uint32_t>(
                    (poly[d - dq + i] + static_cast<std::uint64_t>(p - c) * q[i]) % p);
    }
    for (std::size_t i = 0; i < dq; ++i)
        if (poly[i] % p != 0)
            return false;
    return true;
}

} // namespace

std::uint64_t FieldParams::order() const
{
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i)
        q *= p;
    return q;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p)
{
    if (poly.size() < 2 || poly.back() != 1)
        return false;
    const std::size_t deg = poly.size() - 1;
    if (deg == 1)
        return true;
    if (poly[0] == 0)
        return false;
    std::vector<std::uint32_t> owned(poly.begin(), poly.end());
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i)
            count *= p;
        std::vector<std::uint32_t> q(d + 1, 0);
        q[d] = 1;
        for (std::uint64_t e = 0; e < count; ++e) {
            std::uint64_t v = e;
            for (std::size_t i = 0; i < d; ++i) {
                q[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            if (q[0] == 0)
                continue;
            if (divides(q, owned, p))
                return false;
        }
    }
    return true;
}

struct Field::Impl {
    FieldParams params;
    std::uint64_t order = 0;
    std::vector<std::uint64_t> place;    // p^i
    std::uint64_t modulus_mask = 0;      // binary fields only
    std::vector<std::uint32_t> trace_basis;

    void digits(Elem a, Digits& d) const
    {
        for (std::uint32_t i = 0; i < params.m; ++i) {
            d[i] = a % params.p;
            a /= params.p;
        }
    }

    Elem undigits(const Digits& d) const
    {
        std::uint64_t e = 0;
        for (std::uint32_t i = params.m; i-- > 0;)
            e = e * params.p + d[i];
        return static_cast<Elem>(e);
    }

    Elem add(Elem a, Elem b) const
    {
        if (params.p == 2)
            return a ^ b;
        if (params.m == 1)
            return (a + b) % params.p;
        Digits da, db;
        digits(a, da);
        digits(b, db);
        for (std::uint32_t i = 0; i < params.m; ++i)
            da[i] = (da[i] + db[i]) % params.p;
        return undigits(da);
    }

    Elem neg(Elem a) const
    {
        if (params.p == 2)
            return a;
        Digits d;
        digits(a, d);
        for (std::uint32_t i = 0; i < params.m; ++i)
            d[i] = d[i] == 0 ? 0 : params.p - d[i];
        return undigits(d);
    }

    Elem scale(std::uint32_t c, Elem a) const
    {
        c %= params.p;
        if (params.p == 2)
            return c == 0 ? 0 : a;
        Digits d;
        digits(a, d);
        for (std::uint32_t i = 0; i < params.m; ++i)
            d[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(d[i]) * c % params.p);
        return undigits(d);
    }

    Elem mul(Elem a, Elem b) const
    {
        const std::uint32_t m = params.m;
        if (params.p == 2) {
            std::uint64_t prod = 0;
            std::uint64_t aa = a;
            for (std::uint32_t bits = b; bits != 0; bits &= bits - 1)
                prod ^= aa << __builtin_ctz(bits);
            for (std::uint32_t d = 2 * m; d-- > m;)
                if ((prod >> d) & 1u)
                    prod ^= modulus_mask << (d - m);
            return static_cast<Elem>(prod);
        }
        const std::uint64_t p = params.p;
        if (m == 1)
            return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p);
        Digits da, db;
        digits(a, da);
        digits(b, db);
        std::array<std::uint64_t, 2 * kMaxDegree> prod{};
        for (std::uint32_t i = 0; i < m; ++i) {
            if (da[i] == 0)
                continue;
            for (std::uint32_t j = 0; j < m; ++j)
                prod[i + j] += static_cast<std::uint64_t>(da[i]) * db[j];
        }
        for (std::uint32_t d = 2 * m - 1; d-- > m;) {
            const std::uint64_t c = prod[d] % p;
            if (c == 0)
                continue;
            for (std::uint32_t i = 0; i < m; ++i)
                prod[d - m + i] += c * (p - params.modulus[i]);
        }
        Digits out;
        for (std::uint32_t i = 0; i < m; ++i)
            out[i] = static_cast<std::uint32_t>(prod[i] % p);
        return undigits(out);
    }

    Elem pow(Elem a, const BigInt& e) const
    {
        Elem result = 1;
        if (e == 0)
            return result;
        const std::size_t top = boost::multiprecision::msb(e);
        for (std::size_t bit = top + 1; bit-- > 0;) {
            result = mul(result, result);
            if (boost::multiprecision::bit_test(e, static_cast<unsigned>(bit)))
                result = mul(result, a);
        }
        return result;
    }
};

Field::Field(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl))
{
}

const FieldParams& Field::params() const { return impl_->params; }
std::uint32_t Field::p() const { return impl_->params.p; }
std::uint32_t Field::m() const { return impl_->params.m; }
std::uint64_t Field::order() const { return impl_->order; }

Elem Field::monomial(std::uint32_t j) const
{
    require(j < m(), ErrorCode::InvalidParameter, "monomial index out of range");
    return static_cast<Elem>(impl_->place[j]);
}

Elem Field::add(Elem a, Elem b) const { return impl_->add(a, b); }
Elem Field::sub(Elem a, Elem b) const { return impl_->add(a, impl_->neg(b)); }
Elem Field::neg(Elem a) const { return impl_->neg(a); }
Elem Field::scale(std::uint32_t c, Elem a) const { return impl_->scale(c, a); }
Elem Field::mul(Elem a, Elem b) const { return impl_->mul(a, b); }

Elem Field::inv(Elem a) const
{
    require(a != 0, ErrorCode::DivisionByZero, "inverse of zero");
    return impl_->pow(a, BigInt(order() - 2));
}

Elem Field::pow(Elem a, const BigInt& e) const
{
    require(e >= 0, ErrorCode::InvalidParameter, "negative exponent");
    return impl_->pow(a, e);
}

Elem Field::pow(Elem a, std::uint64_t e) const { return impl_->pow(a, BigInt(e)); }

std::uint32_t Field::trace(Elem a) const
{
    const auto& f = *impl_;
    std::uint64_t t = 0;
    if (f.params.p == 2) {
        for (std::uint32_t i = 0; i < f.params.m; ++i)
            if ((a >> i) & 1u)
                t ^= f.trace_basis[i];
        return static_cast<std::uint32_t>(t);
    }
    Digits d;
    f.digits(a, d);
    for (std::uint32_t i = 0; i < f.params.m; ++i)
        t += static_cast<std::uint64_t>(d[i]) * f.trace_basis[i];
    return static_cast<std::uint32_t>(t % f.params.p);
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const
{
    Digits d;
    impl_->digits(a, d);
    return {d.begin(), d.begin() + m()};
}

Elem Field::encode(std::span<const std::uint32_t> c) const
{
    require(c.size() == m(), ErrorCode::InvalidElement, "coefficient vector must have length m");
    Digits d{};
    for (std::uint32_t i = 0; i < m(); ++i) {
        require(c[i] < p(), ErrorCode::InvalidElement, "coefficient out of range");
        d[i] = c[i];
    }
    return impl_->undigits(d);
}

FieldElement Field::element(std::uint64_t encoding) const
{
    require(contains(encoding), ErrorCode::InvalidElement,
        "encoding " + std::to_string(encoding) + " is outside the field");
    return FieldElement(*this, static_cast<Elem>(encoding));
}

bool Field::operator==(const Field& other) const
{
    return impl_ == other.impl_ || impl_->params == other.impl_->params;
}

Field make_field(std::uint32_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus)
{
    require(is_prime(p), ErrorCode::NonPrime, std::to_string(p) + " is not prime");
    require(p <= 65536, ErrorCode::InvalidParameter, "characteristic must be at most 2^16");
    require(m >= 1, ErrorCode::InvalidParameter, "extension degree must be at least 1");
    require(m <= kMaxDegree, ErrorCode::FieldTooLarge, "extension degree too large");
    auto impl = std::make_shared<Field::Impl>();
    impl->params.p = p;
    impl->params.m = m;
    impl->order = impl->params.order();
    require(impl->order <= kMaxOrder, ErrorCode::FieldTooLarge, "field order exceeds 2^31");

    if (modulus) {
        require(modulus->size() == m + 1 && modulus->back() == 1, ErrorCode::InvalidParameter,
            "modulus must be monic of degree m");
        for (auto c : *modulus)
            require(c < p, ErrorCode::InvalidParameter, "modulus coefficient out of range");
        require(is_irreducible(*modulus, p), ErrorCode::ReducibleModulus, "modulus is reducible");
        impl->params.modulus = *modulus;
    } else {
        std::vector<std::uint32_t> poly(m + 1, 0);
        poly[m] = 1;
        for (std::uint64_t lower = 0; lower < impl->order; ++lower) {
            std::uint64_t v = lower;
            for (std::uint32_t i = 0; i < m; ++i) {
                poly[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            if (is_irreducible(poly, p))
                break;
        }
        impl->params.modulus = poly;
    }

    impl->place.resize(m + 1);
    impl->place[0] = 1;
    for (std::uint32_t i = 1; i <= m; ++i)
        impl->place[i] = impl->place[i - 1] * p;
    if (p == 2)
        for (std::uint32_t i = 0; i <= m; ++i)
            if (impl->params.modulus[i] != 0)
                impl->modulus_mask |= std::uint64_t{1} << i;

    // Tr(x^j) = sum_i (x^j)^(p^i); linearity extends it to every element.
    impl->trace_basis.resize(m);
    for (std::uint32_t j = 0; j < m; ++j) {
        Elem y = static_cast<Elem>(impl->place[j]);
        Elem acc = 0;
        for (std::uint32_t i = 0; i < m; ++i) {
            acc = impl->add(acc, y);
            y = impl->pow(y, BigInt(p));
        }
        require(acc < p, ErrorCode::InvalidParameter, "trace left the prime field");
        impl->trace_basis[j] = acc;
    }
    return Field(std::move(impl));
}

FieldElement::FieldElement(Field field, Elem value)
    : field_(std::move(field))
    , value_(value)
{
    require(field_.contains(value), ErrorCode::InvalidElement, "encoding outside the field");
}

namespace {
const Field& common(const FieldElement& a, const FieldElement& b)
{
    require(a.field() == b.field(), ErrorCode::MixedFields, "operands belong to different fields");
    return a.field();
}
} // namespace

FieldElement FieldElement::inv() const { return {field_, field_.inv(value_)}; }
FieldElement FieldElement::pow(const BigInt& e) const { return {field_, field_.pow(value_, e)}; }
std::uint32_t FieldElement::trace() const { return field_.trace(value_); }
FieldElement FieldElement::operator-() const { return {field_, field_.neg(value_)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b)
{
    const Field& f = common(a, b);
    return {f, f.add(a.value_, b.value_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b)
{
    const Field& f = common(a, b);
    return {f, f.sub(a.value_, b.value_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b)
{
    const Field& f = common(a, b);
    return {f, f.mul(a.value_, b.value_)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b)
{
    const Field& f = common(a, b);
    return {f, f.mul(a.value_, f.inv(b.value_))};
}

bool operator==(const FieldElement& a, const FieldElement& b)
{
    return a.field_ == b.field_ && a.value_ == b.value_;
}

AdditiveSubgroup::AdditiveSubgroup(Field field, std::vector<Elem> basis, std::vector<Elem> elements)
    : field_(std::move(field))
    , basis_(std::move(basis))
    , elements_(std::move(elements))
{
}

bool AdditiveSubgroup::contains(Elem e) const
{
    return std::binary_search(elements_.begin(), elements_.end(), e);
}

AdditiveSubgroup subgroup_from_basis(const Field& field, std::span<const Elem> basis)
{
    require(basis.size() <= field.m(), ErrorCode::DependentBasis, "more basis vectors than m");
    Matrix coords(0, field.m());
    for (Elem b : basis) {
        require(field.contains(b), ErrorCode::InvalidElement, "basis element outside the field");
        coords.append_row(field.coeffs(b));
    }
    require(rank(coords, field.p()) == basis.size(), ErrorCode::DependentBasis,
        "basis is not linearly independent over GF(p)");

    std::vector<Elem> span{0};
    for (Elem b : basis) {
        const std::size_t size = span.size();
        span.reserve(size * field.p());
        for (std::uint32_t c = 1; c < field.p(); ++c) {
            const Elem cb = field.scale(c, b);
            for (std::size_t i = 0; i < size; ++i)
                span.push_back(field.add(span[i], cb));
        }
    }
    std::sort(span.begin(), span.end());
    return AdditiveSubgroup(field, {basis.begin(), basis.end()}, std::move(span));
}

AdditiveSubgroup subgroup_from_basis(const Field& field, std::span<const FieldElement> basis)
{
    std::vector<Elem> raw;
    raw.reserve(basis.size());
    for (const auto& b : basis) {
        require(b.field() == field, ErrorCode::MixedFields, "basis element from another field");
        raw.push_back(b.encoding());
    }
    return subgroup_from_basis(field, raw);
}

AdditiveSubgroup canonical_subgroup(const Field& field, std::uint32_t r)
{
    require(r <= field.m(), ErrorCode::RankOutOfRange,
        "rank " + std::to_string(r) + " exceeds m = " + std::to_string(field.m()));
    std::vector<Elem> basis;
    for (std::uint32_t j = 0; j < r; ++j)
        basis.push_back(field.monomial(j));
    return subgroup_from_basis(field, basis);
}

AdditiveSubgroup random_subgroup(const Field& field, std::uint32_t r, std::mt19937_64& rng)
{
    require(r <= field.m(), ErrorCode::RankOutOfRange, "rank exceeds m");
    std::uniform_int_distribution<std::uint64_t> pick(1, field.order() - 1);
    std::vector<Elem> basis;
    Matrix coords(0, field.m());
    while (basis.size() < r) {
        const Elem e = static_cast<Elem>(pick(rng));
        Matrix trial = coords;
        trial.append_row(field.coeffs(e));
        if (rank(trial, field.p()) == basis.size() + 1) {
            coords = std::move(trial);
            basis.push_back(e);
        }
    }
    return subgroup_from_basis(field, basis);
}

} // namespace abcodes
