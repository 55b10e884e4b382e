#include "abcodes/functions.hpp"

#include "abcodes/detail/parallel.hpp"
#include "abcodes/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace abcodes {

namespace {

constexpr std::uint32_t kMaxAlmostBentDegree = 9;
constexpr std::uint64_t kMaxPlanarOrder = 2187; // 3^7

struct CatalogEntry {
    FunctionKind kind;
    std::string_view id;
};

constexpr CatalogEntry kCatalog[] = {
    {FunctionKind::AbGold, "ab:gold"},
    {FunctionKind::AbKasami, "ab:kasami"},
    {FunctionKind::AbWelch, "ab:welch"},
    {FunctionKind::AbNiho1, "ab:niho1"},
    {FunctionKind::AbNiho2, "ab:niho2"},
    {FunctionKind::AbTraceVariant, "ab:trace"},
    {FunctionKind::PlanarDembowskiOstrom, "planar:do"},
    {FunctionKind::PlanarCoulterMatthews, "planar:cm"},
    {FunctionKind::PlanarDingYuan, "planar:dy"},
    {FunctionKind::Power, "power"},
};

BigInt two_pow(std::uint64_t e) { return ipow(BigInt(2), e); }

std::uint32_t need(const std::optional<std::uint32_t>& v, const char* name, FunctionKind kind)
{
    require(v.has_value(), ErrorCode::InvalidParameter,
        std::string(function_id(kind)) + " requires parameter " + name);
    return *v;
}

void check(bool cond, FunctionKind kind, const std::string& what)
{
    require(cond, ErrorCode::InvalidParameter, std::string(function_id(kind)) + ": " + what);
}

// In-place Walsh-Hadamard transform of a +-1 vector.
void fwht(std::vector<std::int64_t>& v)
{
    for (std::size_t h = 1; h < v.size(); h <<= 1)
        for (std::size_t i = 0; i < v.size(); i += h << 1)
            for (std::size_t j = i; j < i + h; ++j) {
                const std::int64_t x = v[j];
                const std::int64_t y = v[j + h];
                v[j] = x + y;
                v[j + h] = x - y;
            }
}

// Tr(w x) = <x, u(w)> with u(w)_i = Tr(w x^i); maps a transform index back to w.
std::vector<std::int64_t> spectrum_by_w(const Field& field, const std::vector<std::int64_t>& transformed)
{
    std::vector<std::int64_t> out(field.order());
    for (Elem w = 0; w < field.order(); ++w) {
        std::uint64_t u = 0;
        for (std::uint32_t i = 0; i < field.m(); ++i)
            if (field.trace(field.mul(w, field.monomial(i))) != 0)
                u |= std::uint64_t{1} << i;
        out[w] = transformed[u];
    }
    return out;
}

std::vector<std::int64_t> transformed_signs(std::span<const std::uint8_t> fb)
{
    std::vector<std::int64_t> v(fb.size());
    for (std::size_t x = 0; x < fb.size(); ++x)
        v[x] = (fb[x] & 1u) ? -1 : 1;
    fwht(v);
    return v;
}

} // namespace

std::string_view function_id(FunctionKind kind)
{
    for (const auto& e : kCatalog)
        if (e.kind == kind)
            return e.id;
    return "unknown";
}

std::optional<FunctionKind> parse_function_id(std::string_view id)
{
    for (const auto& e : kCatalog)
        if (e.id == id)
            return e.kind;
    return std::nullopt;
}

bool is_almost_bent_kind(FunctionKind kind)
{
    switch (kind) {
    case FunctionKind::AbGold:
    case FunctionKind::AbKasami:
    case FunctionKind::AbWelch:
    case FunctionKind::AbNiho1:
    case FunctionKind::AbNiho2:
    case FunctionKind::AbTraceVariant:
        return true;
    default:
        return false;
    }
}

bool is_planar_kind(FunctionKind kind)
{
    return kind == FunctionKind::PlanarDembowskiOstrom || kind == FunctionKind::PlanarCoulterMatthews
        || kind == FunctionKind::PlanarDingYuan;
}

NonlinearFunction::NonlinearFunction(FunctionKind kind, Field field, FunctionParams params)
    : kind_(kind)
    , field_(std::move(field))
    , params_(std::move(params))
{
    const std::uint32_t p = field_.p();
    const std::uint32_t m = field_.m();
    if (is_almost_bent_kind(kind)) {
        check(p == 2, kind, "almost bent functions live in characteristic 2");
        check(m % 2 == 1 && m >= 3, kind, "m must be odd and at least 3");
    }
    switch (kind) {
    case FunctionKind::AbGold: {
        const std::uint32_t i = need(params_.i, "i", kind);
        check(i >= 1 && std::gcd(i, m) == 1, kind, "requires gcd(i, m) = 1");
        exponent_ = two_pow(i) + 1;
        break;
    }
    case FunctionKind::AbKasami: {
        const std::uint32_t i = need(params_.i, "i", kind);
        check(i >= 1 && std::gcd(i, m) == 1, kind, "requires gcd(i, m) = 1");
        exponent_ = two_pow(2 * i) - two_pow(i) + 1;
        break;
    }
    case FunctionKind::AbWelch:
        exponent_ = two_pow((m - 1) / 2) + 3;
        break;
    case FunctionKind::AbNiho1:
        check(m % 4 == 1, kind, "requires m = 1 mod 4");
        exponent_ = two_pow((m - 1) / 2) + two_pow((m - 1) / 4) - 1;
        break;
    case FunctionKind::AbNiho2:
        check(m % 4 == 3, kind, "requires m = 3 mod 4");
        exponent_ = two_pow((m - 1) / 2) + two_pow((3 * m - 1) / 4) - 1;
        break;
    case FunctionKind::AbTraceVariant: {
        const std::uint32_t i = need(params_.i, "i", kind);
        check(m > 3, kind, "requires m > 3");
        check(i >= 1 && std::gcd(i, m) == 1, kind, "requires gcd(i, m) = 1");
        frobenius_ = two_pow(i);
        exponent_ = frobenius_ + 1;
        break;
    }
    case FunctionKind::PlanarDembowskiOstrom: {
        check(p % 2 == 1, kind, "planar functions need odd characteristic");
        const std::uint32_t t = need(params_.t, "t", kind);
        check((m / std::gcd(m, t)) % 2 == 1, kind, "requires m/gcd(m, t) odd");
        exponent_ = ipow(BigInt(p), t) + 1;
        break;
    }
    case FunctionKind::PlanarCoulterMatthews: {
        check(p == 3, kind, "requires p = 3");
        const std::uint32_t k = need(params_.k, "k", kind);
        check(k % 2 == 1, kind, "requires k odd");
        check(std::gcd(m, k) == 1, kind, "requires gcd(m, k) = 1");
        exponent_ = (ipow(BigInt(3), k) + 1) / 2;
        break;
    }
    case FunctionKind::PlanarDingYuan:
        check(p == 3, kind, "requires p = 3");
        check(m % 2 == 1, kind, "requires m odd");
        require(params_.u.has_value(), ErrorCode::InvalidParameter, "planar:dy requires parameter u");
        require(field_.contains(*params_.u), ErrorCode::InvalidElement, "u is outside the field");
        check(*params_.u != 0, kind, "requires u != 0");
        break;
    case FunctionKind::Power:
        require(params_.exponent.has_value() && *params_.exponent >= 0, ErrorCode::InvalidParameter,
            "power requires a non-negative exponent");
        exponent_ = *params_.exponent;
        break;
    }
}

std::string NonlinearFunction::describe() const
{
    std::ostringstream out;
    switch (kind_) {
    case FunctionKind::AbTraceVariant:
        out << "x^" << exponent_ << " + (x^" << frobenius_ << " + x) Tr(x^" << exponent_ << " + x)";
        break;
    case FunctionKind::PlanarDingYuan:
        out << "x^10 - u x^6 - u^2 x^2 (u=" << *params_.u << ")";
        break;
    default:
        out << "x^" << exponent_;
    }
    return out.str();
}

Elem NonlinearFunction::operator()(Elem x) const
{
    const Field& f = field_;
    switch (kind_) {
    case FunctionKind::AbTraceVariant: {
        const Elem y = f.pow(x, exponent_);
        const std::uint32_t s = f.trace(f.add(y, x));
        // Tr lands in GF(2), embedded as {0, 1} in GF(2^m).
        return s == 0 ? y : f.add(y, f.add(f.pow(x, frobenius_), x));
    }
    case FunctionKind::PlanarDingYuan: {
        const Elem u = *params_.u;
        const Elem x2 = f.mul(x, x);
        const Elem x4 = f.mul(x2, x2);
        const Elem x6 = f.mul(x4, x2);
        const Elem x10 = f.mul(x6, x4);
        return f.sub(f.sub(x10, f.mul(u, x6)), f.mul(f.mul(u, u), x2));
    }
    default:
        return f.pow(x, exponent_);
    }
}

std::vector<Elem> NonlinearFunction::table() const
{
    std::vector<Elem> out(field_.order());
    for (Elem x = 0; x < out.size(); ++x)
        out[x] = (*this)(x);
    return out;
}

FieldElement evaluate(const NonlinearFunction& f, const FieldElement& x)
{
    require(x.field() == f.field(), ErrorCode::MixedFields, "argument is not in the function's field");
    return f.field().element(f(x.encoding()));
}

std::string_view classification_name(Classification c)
{
    switch (c) {
    case Classification::AlmostBent: return "ALMOST_BENT";
    case Classification::NotAlmostBent: return "NOT_ALMOST_BENT";
    case Classification::Planar: return "PLANAR";
    case Classification::NotPlanar: return "NOT_PLANAR";
    case Classification::SemiBent: return "SEMI_BENT";
    case Classification::NotSemiBent: return "NOT_SEMI_BENT";
    }
    return "UNKNOWN";
}

std::int64_t lambda_value(const NonlinearFunction& g, const FieldElement& a, const FieldElement& b)
{
    const Field& f = g.field();
    require(f.p() == 2, ErrorCode::OddCharacteristic, "lambda is defined over GF(2^m)");
    require(a.field() == f && b.field() == f, ErrorCode::MixedFields, "a, b must lie in the function's field");
    std::int64_t sum = 0;
    for (Elem x = 0; x < f.order(); ++x) {
        const Elem arg = f.add(f.mul(a.encoding(), g(x)), f.mul(b.encoding(), x));
        sum += f.trace(arg) == 0 ? 1 : -1;
    }
    return sum;
}

std::vector<std::uint8_t> component_table(const NonlinearFunction& g, Elem a)
{
    const Field& f = g.field();
    std::vector<std::uint8_t> out(f.order());
    for (Elem x = 0; x < f.order(); ++x)
        out[x] = static_cast<std::uint8_t>(f.trace(f.mul(a, g(x))));
    return out;
}

SpectrumReport is_almost_bent(const NonlinearFunction& g)
{
    const Field& f = g.field();
    require(f.p() == 2, ErrorCode::OddCharacteristic, "almost bent check needs characteristic 2");
    require(f.m() <= kMaxAlmostBentDegree, ErrorCode::FieldTooLarge,
        "exhaustive almost bent check is capped at m <= 9");
    const std::vector<Elem> gx = g.table();
    const std::size_t q = f.order();

    // One chunk per nonzero a; histograms merged in a order.
    std::vector<std::map<std::int64_t, std::uint64_t>> partial(q - 1);
    detail::parallel_chunks(q - 1, [&](std::size_t chunk) {
        const Elem a = static_cast<Elem>(chunk + 1);
        std::vector<std::uint8_t> fb(q);
        for (Elem x = 0; x < q; ++x)
            fb[x] = static_cast<std::uint8_t>(f.trace(f.mul(a, gx[x])));
        for (std::int64_t v : transformed_signs(fb))
            ++partial[chunk][v];
    });

    SpectrumReport report{{}, Classification::AlmostBent};
    for (const auto& h : partial)
        for (const auto& [v, c] : h)
            report.values[v] += c;
    const std::int64_t amp = std::int64_t{1} << ((f.m() + 1) / 2);
    for (const auto& [v, c] : report.values)
        if (f.m() % 2 == 0 || (v != 0 && v != amp && v != -amp))
            report.classification = Classification::NotAlmostBent;
    return report;
}

SpectrumReport is_planar(const NonlinearFunction& fn)
{
    const Field& f = fn.field();
    require(f.p() % 2 == 1, ErrorCode::EvenCharacteristic, "planarity needs odd characteristic");
    require(f.order() <= kMaxPlanarOrder, ErrorCode::FieldTooLarge,
        "exhaustive planarity check is capped at p^m <= 3^7");
    const std::vector<Elem> fx = fn.table();
    const std::size_t q = f.order();

    std::vector<std::uint64_t> image_size(q - 1);
    detail::parallel_chunks(q - 1, [&](std::size_t chunk) {
        const Elem a = static_cast<Elem>(chunk + 1);
        std::vector<std::uint8_t> seen(q, 0);
        std::uint64_t distinct = 0;
        for (Elem x = 0; x < q; ++x) {
            const Elem d = f.sub(fx[f.add(x, a)], fx[x]);
            if (!seen[d]) {
                seen[d] = 1;
                ++distinct;
            }
        }
        image_size[chunk] = distinct;
    });

    SpectrumReport report{{}, Classification::Planar};
    for (std::uint64_t s : image_size) {
        ++report.values[static_cast<std::int64_t>(s)];
        if (s != q)
            report.classification = Classification::NotPlanar;
    }
    return report;
}

std::int64_t walsh_value(const Field& field, std::span<const std::uint8_t> fb, const FieldElement& w)
{
    require(field.p() == 2, ErrorCode::OddCharacteristic, "Walsh transform needs characteristic 2");
    require(fb.size() == field.order(), ErrorCode::InvalidParameter, "table length must be 2^m");
    require(w.field() == field, ErrorCode::MixedFields, "w is not in the table's field");
    std::int64_t sum = 0;
    for (Elem x = 0; x < field.order(); ++x)
        sum += ((fb[x] ^ field.trace(field.mul(w.encoding(), x))) & 1u) ? -1 : 1;
    return sum;
}

std::vector<std::int64_t> walsh_spectrum(const Field& field, std::span<const std::uint8_t> fb)
{
    require(field.p() == 2, ErrorCode::OddCharacteristic, "Walsh transform needs characteristic 2");
    require(fb.size() == field.order(), ErrorCode::InvalidParameter, "table length must be 2^m");
    return spectrum_by_w(field, transformed_signs(fb));
}

SpectrumReport is_semi_bent(const Field& field, std::span<const std::uint8_t> fb)
{
    require(field.p() == 2, ErrorCode::OddCharacteristic, "semi-bent needs characteristic 2");
    require(field.m() % 2 == 1, ErrorCode::EvenDegree, "semi-bent is defined here for odd m");
    SpectrumReport report{{}, Classification::SemiBent};
    const std::int64_t amp = std::int64_t{1} << ((field.m() + 1) / 2);
    for (std::int64_t v : walsh_spectrum(field, fb)) {
        ++report.values[v];
        if (v != 0 && v != amp && v != -amp)
            report.classification = Classification::NotSemiBent;
    }
    return report;
}

} // namespace abcodes
