#include "abcodes/codes.hpp"

#include "abcodes/detail/parallel.hpp"
#include "abcodes/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

namespace abcodes {

namespace {

BigRational rpow(std::int64_t base, std::int64_t e)
{
    if (e >= 0)
        return BigRational(ipow(BigInt(base), static_cast<std::uint64_t>(e)));
    return BigRational(BigInt(1), ipow(BigInt(base), static_cast<std::uint64_t>(-e)));
}

BigInt integral(const BigRational& v, const char* what)
{
    if (denominator(v) != 1)
        fail(ErrorCode::NonIntegralResult, std::string(what) + " is not an integer");
    return numerator(v);
}

void require_odd_m(std::uint32_t m)
{
    require(m % 2 == 1, ErrorCode::EvenM, "m must be odd, got " + std::to_string(m));
    require(m >= 3, ErrorCode::InvalidParameter, "m must be at least 3, got " + std::to_string(m));
}

void require_rank(std::uint32_t r, std::uint32_t lo, std::uint32_t m)
{
    require(r >= lo && r <= m, ErrorCode::RankOutOfRange,
        "r=" + std::to_string(r) + " outside " + std::to_string(lo) + ".." + std::to_string(m));
}

void put(WeightDistribution& wd, std::uint64_t w, const BigInt& c)
{
    if (c < 0)
        fail(ErrorCode::NonIntegralResult, "negative multiplicity at weight " + std::to_string(w));
    if (c != 0)
        wd.counts[static_cast<std::uint32_t>(w)] += c;
}

std::uint64_t upow(std::uint64_t b, std::uint64_t e)
{
    std::uint64_t r = 1;
    while (e--)
        r *= b;
    return r;
}

struct SparseRow {
    std::vector<std::uint32_t> cols;
    std::vector<std::uint32_t> vals;
};

} // namespace

bool power_fits(std::uint32_t p, std::uint64_t k, std::uint64_t limit)
{
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (v > limit / p)
            return false;
        v *= p;
    }
    return v <= limit;
}

std::string Provenance::chain_label() const
{
    std::string out = "code";
    for (const auto& s : chain)
        out += " -> " + s;
    return out;
}

LinearCode::LinearCode(std::uint32_t p, Matrix generators, Provenance provenance)
    : p_(p), generators_(std::move(generators)), provenance_(std::move(provenance))
{
    require(is_prime(p), ErrorCode::NonPrime, std::to_string(p) + " is not prime");
    for (std::size_t i = 0; i < generators_.rows(); ++i)
        for (auto v : generators_.row(i))
            require(v < p, ErrorCode::InvalidElement, "generator entry out of range");
    basis_ = rref(generators_, p_).reduced;
    if (basis_.cols() != generators_.cols())
        basis_ = Matrix(0, generators_.cols());
}

BigInt WeightDistribution::count(std::uint32_t w) const
{
    auto it = counts.find(w);
    return it == counts.end() ? BigInt(0) : it->second;
}

BigInt WeightDistribution::total() const
{
    BigInt s = 0;
    for (const auto& [w, c] : counts)
        s += c;
    return s;
}

std::vector<std::uint32_t> WeightDistribution::nonzero_weights() const
{
    std::vector<std::uint32_t> out;
    for (const auto& [w, c] : counts)
        if (w != 0 && c != 0)
            out.push_back(w);
    return out;
}

std::optional<std::uint32_t> WeightDistribution::min_weight() const
{
    auto ws = nonzero_weights();
    if (ws.empty())
        return std::nullopt;
    return ws.front();
}

std::optional<std::uint32_t> WeightDistribution::max_weight() const
{
    auto ws = nonzero_weights();
    if (ws.empty())
        return std::nullopt;
    return ws.back();
}

WeightEnumerator WeightEnumerator::from(const WeightDistribution& wd)
{
    WeightEnumerator e;
    e.coeffs.assign(wd.n + 1, BigInt(0));
    for (const auto& [w, c] : wd.counts) {
        require(w <= wd.n, ErrorCode::InvalidParameter, "weight exceeds length");
        e.coeffs[w] = c;
    }
    return e;
}

WeightDistribution WeightEnumerator::to_distribution(std::uint32_t k, std::uint32_t p) const
{
    WeightDistribution wd;
    wd.n = coeffs.empty() ? 0 : static_cast<std::uint32_t>(coeffs.size() - 1);
    wd.k = k;
    wd.p = p;
    for (std::size_t w = 0; w < coeffs.size(); ++w)
        if (coeffs[w] != 0)
            wd.counts[static_cast<std::uint32_t>(w)] = coeffs[w];
    return wd;
}

LinearCode build_code(const NonlinearFunction& f, const AdditiveSubgroup& subgroup)
{
    const Field& field = f.field();
    require(field == subgroup.field(), ErrorCode::MixedFields, "function and subgroup live in different fields");
    const auto values = f.table();
    require(values[0] == 0, ErrorCode::NonzeroAtZero, "f(0) must be 0");

    const std::uint32_t m = field.m();
    const std::size_t n = static_cast<std::size_t>(field.order() - 1);
    Matrix g(0, n);
    std::vector<std::uint32_t> row(n);
    for (Elem a : subgroup.basis()) {
        for (std::size_t x = 1; x <= n; ++x)
            row[x - 1] = field.trace(field.mul(a, values[x]));
        g.append_row(row);
    }
    for (std::uint32_t j = 0; j < m; ++j) {
        const Elem b = field.monomial(j);
        for (std::size_t x = 1; x <= n; ++x)
            row[x - 1] = field.trace(field.mul(b, static_cast<Elem>(x)));
        g.append_row(row);
    }

    Provenance prov;
    prov.function_id = f.id();
    prov.function = f.describe();
    prov.subgroup_basis.assign(subgroup.basis().begin(), subgroup.basis().end());
    prov.expected_rank = m + subgroup.rank();
    prov.rank_as_expected = rank(g, field.p()) == *prov.expected_rank;
    return LinearCode(field.p(), std::move(g), std::move(prov));
}

WeightDistribution enumerate_weight_distribution(const LinearCode& code)
{
    const std::uint32_t p = code.p();
    const std::uint32_t n = code.length();
    const std::uint32_t k = code.dimension();
    if (!power_fits(p, k, kEnumerationCap))
        fail(ErrorCode::CodeTooLarge,
            "enumeration of " + std::to_string(p) + "^" + std::to_string(k) + " codewords exceeds 2^24");

    WeightDistribution wd;
    wd.n = n;
    wd.k = k;
    wd.p = p;
    if (k == 0) {
        wd.counts[0] = 1;
        return wd;
    }

    const Matrix& b = code.basis();
    const unsigned workers = detail::worker_count();
    std::uint32_t outer = 0;
    std::uint64_t chunks = 1;
    while (outer < k && chunks < 8ull * workers) {
        chunks *= p;
        ++outer;
    }
    const std::uint32_t inner = k - outer;
    std::vector<std::vector<std::uint64_t>> partial(chunks, std::vector<std::uint64_t>(n + 1, 0));

    if (p == 2 && n <= 64) {
        std::vector<std::uint64_t> rows(k, 0);
        for (std::uint32_t i = 0; i < k; ++i)
            for (std::uint32_t j = 0; j < n; ++j)
                if (b(i, j))
                    rows[i] |= std::uint64_t{1} << j;
        detail::parallel_chunks(chunks, [&](std::size_t c) {
            std::uint64_t start = 0;
            for (std::uint32_t j = 0; j < outer; ++j)
                if ((c >> j) & 1u)
                    start ^= rows[inner + j];
            auto& hist = partial[c];
            const std::uint64_t count = std::uint64_t{1} << inner;
            std::uint64_t cw = start;
            ++hist[std::popcount(cw)];
            for (std::uint64_t g = 1; g < count; ++g) {
                cw ^= rows[std::countr_zero(g)];
                ++hist[std::popcount(cw)];
            }
        });
    } else {
        std::vector<SparseRow> rows(k);
        for (std::uint32_t i = 0; i < k; ++i)
            for (std::uint32_t j = 0; j < n; ++j)
                if (b(i, j)) {
                    rows[i].cols.push_back(j);
                    rows[i].vals.push_back(b(i, j));
                }
        detail::parallel_chunks(chunks, [&](std::size_t c) {
            std::vector<std::uint32_t> cw(n, 0);
            std::size_t rest = c;
            for (std::uint32_t j = 0; j < outer; ++j) {
                const std::uint32_t digit = rest % p;
                rest /= p;
                const auto& r = rows[inner + j];
                for (std::size_t t = 0; t < r.cols.size(); ++t)
                    cw[r.cols[t]] = (cw[r.cols[t]] + digit * r.vals[t]) % p;
            }
            std::int64_t weight = std::count_if(cw.begin(), cw.end(), [](std::uint32_t v) { return v != 0; });
            auto& hist = partial[c];
            ++hist[weight];
            std::vector<std::uint32_t> digits(inner, 0);
            for (;;) {
                std::uint32_t j = 0;
                for (; j < inner; ++j) {
                    const auto& r = rows[j];
                    for (std::size_t t = 0; t < r.cols.size(); ++t) {
                        std::uint32_t& e = cw[r.cols[t]];
                        const std::uint32_t old = e;
                        std::uint32_t nv = old + r.vals[t];
                        if (nv >= p)
                            nv -= p;
                        e = nv;
                        weight += (nv != 0) - (old != 0);
                    }
                    if (++digits[j] < p)
                        break;
                    digits[j] = 0;
                }
                if (j == inner)
                    break;
                ++hist[weight];
            }
        });
    }

    for (std::uint32_t w = 0; w <= n; ++w) {
        std::uint64_t total = 0;
        for (const auto& h : partial)
            total += h[w];
        if (total)
            wd.counts[w] = total;
    }
    return wd;
}

void for_each_codeword(const LinearCode& code, const std::function<void(std::span<const std::uint32_t>)>& visit)
{
    const std::uint32_t p = code.p();
    const std::uint32_t k = code.dimension();
    if (!power_fits(p, k, kEnumerationCap))
        fail(ErrorCode::CodeTooLarge,
            "enumeration of " + std::to_string(p) + "^" + std::to_string(k) + " codewords exceeds 2^24");
    const Matrix& b = code.basis();
    std::vector<std::uint32_t> cw(code.length(), 0), digits(k, 0);
    visit(cw);
    for (;;) {
        std::uint32_t j = 0;
        for (; j < k; ++j) {
            auto row = b.row(j);
            for (std::size_t c = 0; c < cw.size(); ++c) {
                cw[c] += row[c];
                if (cw[c] >= p)
                    cw[c] -= p;
            }
            if (++digits[j] < p)
                break;
            digits[j] = 0;
        }
        if (j == k)
            return;
        visit(cw);
    }
}

WeightDistribution weight_distribution(const LinearCode& code)
{
    const std::uint32_t n = code.length();
    const std::uint32_t k = code.dimension();
    const bool direct = power_fits(code.p(), k, kEnumerationCap);
    const bool via_dual = power_fits(code.p(), n - k, kEnumerationCap);
    if (direct && (k <= n - k || !via_dual))
        return enumerate_weight_distribution(code);
    if (via_dual) {
        auto dual = enumerate_weight_distribution(dual_code(code));
        return macwilliams_transform(dual);
    }
    fail(ErrorCode::CodeTooLarge,
        "neither the [" + std::to_string(n) + "," + std::to_string(k) + "] code nor its dual can be enumerated");
}

WeightEnumerator macwilliams_transform(const WeightEnumerator& a, std::uint32_t n, std::uint32_t k, std::uint32_t p)
{
    require(a.coeffs.size() == static_cast<std::size_t>(n) + 1, ErrorCode::InvalidParameter,
        "enumerator length does not match n");
    BigInt sum = 0;
    for (const auto& c : a.coeffs)
        sum += c;
    const BigInt size = ipow(BigInt(p), k);
    if (sum != size)
        fail(ErrorCode::NonIntegralResult, "coefficients sum to " + to_decimal(sum) + ", expected p^k = " + to_decimal(size));

    std::vector<std::vector<BigInt>> binom(n + 1);
    for (std::uint32_t i = 0; i <= n; ++i) {
        binom[i].assign(i + 1, BigInt(1));
        for (std::uint32_t j = 1; j < i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
    }
    auto C = [&](std::uint32_t nn, std::uint32_t kk) -> const BigInt& {
        static const BigInt zero = 0;
        return kk > nn ? zero : binom[nn][kk];
    };
    std::vector<BigInt> q(n + 1);
    q[0] = 1;
    for (std::uint32_t j = 1; j <= n; ++j)
        q[j] = q[j - 1] * (p - 1);

    WeightEnumerator out;
    out.coeffs.assign(n + 1, BigInt(0));
    for (std::uint32_t w = 0; w <= n; ++w) {
        if (a.coeffs[w] == 0)
            continue;
        for (std::uint32_t j = 0; j <= n; ++j) {
            BigInt kr = 0;
            const std::uint32_t lo = j > n - w ? j - (n - w) : 0;
            const std::uint32_t hi = std::min(j, w);
            for (std::uint32_t i = lo; i <= hi; ++i) {
                BigInt term = C(w, i) * C(n - w, j - i) * q[j - i];
                if (i & 1u)
                    kr -= term;
                else
                    kr += term;
            }
            out.coeffs[j] += a.coeffs[w] * kr;
        }
    }
    for (auto& c : out.coeffs) {
        BigInt rem;
        BigInt quot;
        boost::multiprecision::divide_qr(c, size, quot, rem);
        if (rem != 0)
            fail(ErrorCode::NonIntegralResult, "transformed coefficient is not divisible by p^k");
        c = quot;
    }
    return out;
}

WeightDistribution macwilliams_transform(const WeightDistribution& wd)
{
    auto e = macwilliams_transform(WeightEnumerator::from(wd), wd.n, wd.k, wd.p);
    auto out = e.to_distribution(wd.n - wd.k, wd.p);
    out.n = wd.n;
    return out;
}

WeightDistribution theoretical_wd_ab(std::uint32_t m, std::uint32_t r)
{
    require_odd_m(m);
    require_rank(r, 0, m);
    const std::int64_t h = (m - 1) / 2;
    WeightDistribution wd;
    wd.n = static_cast<std::uint32_t>(upow(2, m) - 1);
    wd.k = m + r;
    wd.p = 2;
    const BigInt two_r = ipow(2, r);
    put(wd, 0, 1);
    put(wd, upow(2, m - 1) - upow(2, h), (two_r - 1) * (ipow(2, m - 2) + ipow(2, h - 1)));
    put(wd, upow(2, m - 1), ipow(2, m - 1) * (two_r + 1) - 1);
    put(wd, upow(2, m - 1) + upow(2, h), (two_r - 1) * (ipow(2, m - 2) - ipow(2, h - 1)));
    return wd;
}

namespace {

// One-weight code spanned by the linear functions alone.
WeightDistribution one_weight(std::uint32_t p, std::uint32_t m)
{
    WeightDistribution wd;
    wd.n = static_cast<std::uint32_t>(upow(p, m) - 1);
    wd.k = m;
    wd.p = p;
    put(wd, 0, 1);
    put(wd, (p - 1) * upow(p, m - 1), ipow(BigInt(p), m) - 1);
    return wd;
}

} // namespace

WeightDistribution theoretical_wd_planar_f1(std::uint32_t p, std::uint32_t m, std::uint32_t r)
{
    require(is_prime(p), ErrorCode::NonPrime, std::to_string(p) + " is not prime");
    require(p != 2, ErrorCode::EvenCharacteristic, "p must be odd");
    require_odd_m(m);
    require_rank(r, 0, m);
    if (r == 0)
        return one_weight(p, m);

    const std::int64_t P = p, M = m, R = r, h = (m - 1) / 2;
    const BigRational half(BigInt(p - 1), BigInt(2));
    BigRational a1 = half * (rpow(P, h + R) + rpow(P, R - 1) * (rpow(P, M) + P - 2) - rpow(P, h) - (P - 1) * rpow(P, M - 1));
    BigRational a2 = rpow(P, M + R - 1) + rpow(P, M + 1) - 2 * rpow(P, M) + rpow(P, M - 1) - rpow(P, R + 1)
        + 3 * rpow(P, R) - 2 * rpow(P, R - 1) - 1;
    BigRational a3 = half * (rpow(P, R - 1) * (rpow(P, M) + P - 2) - rpow(P, h + R) + rpow(P, h) - (P - 1) * rpow(P, M - 1));

    WeightDistribution wd;
    wd.n = static_cast<std::uint32_t>(upow(p, m) - 1);
    wd.k = m + r;
    wd.p = p;
    const std::uint64_t w2 = (p - 1) * upow(p, m - 1);
    put(wd, 0, 1);
    put(wd, w2 - upow(p, h), integral(a1, "multiplicity"));
    put(wd, w2, integral(a2, "multiplicity"));
    put(wd, w2 + upow(p, h), integral(a3, "multiplicity"));
    return wd;
}

WeightDistribution theoretical_wd_planar_p3(std::uint32_t m, std::uint32_t r)
{
    require_odd_m(m);
    require_rank(r, 0, m);
    if (r == 0)
        return one_weight(3, m);

    const std::int64_t M = m, R = r, h = (m - 1) / 2;
    BigRational a1 = rpow(3, M + R - 1) - rpow(3, h) - 2 * rpow(3, M - 1) + rpow(3, R - 1) + rpow(3, h + R);
    BigRational a2 = rpow(3, M + R - 1) - 2 * rpow(3, R - 1) + 4 * rpow(3, M - 1) - 1;
    BigRational a3 = rpow(3, h) - 2 * rpow(3, M - 1) + rpow(3, R - 1) - rpow(3, h + R) + rpow(3, M + R - 1);

    WeightDistribution wd;
    wd.n = static_cast<std::uint32_t>(upow(3, m) - 1);
    wd.k = m + r;
    wd.p = 3;
    const std::uint64_t w2 = 2 * upow(3, m - 1);
    put(wd, 0, 1);
    put(wd, w2 - upow(3, h), integral(a1, "multiplicity"));
    put(wd, w2, integral(a2, "multiplicity"));
    put(wd, w2 + upow(3, h), integral(a3, "multiplicity"));
    return wd;
}

WeightDistribution theoretical_wd_ext_ab(std::uint32_t m, std::uint32_t r)
{
    require_odd_m(m);
    require_rank(r, 1, m);
    const std::uint64_t h = (m - 1) / 2;
    WeightDistribution wd;
    wd.n = static_cast<std::uint32_t>(upow(2, m));
    wd.k = m + r + 1;
    wd.p = 2;
    put(wd, 0, 1);
    put(wd, upow(2, m - 1) - upow(2, h), ipow(2, m - 1) * (ipow(2, r) - 1));
    put(wd, upow(2, m - 1), ipow(2, m + r) + ipow(2, m) - 2);
    put(wd, upow(2, m - 1) + upow(2, h), ipow(2, m - 1) * (ipow(2, r) - 1));
    put(wd, upow(2, m), 1);
    return wd;
}

WeightDistribution theoretical_wd_ext_p3(std::uint32_t m, std::uint32_t r)
{
    require_odd_m(m);
    require_rank(r, 1, m);
    const std::uint64_t h = (m - 1) / 2;
    WeightDistribution wd;
    wd.n = static_cast<std::uint32_t>(upow(3, m));
    wd.k = m + r + 1;
    wd.p = 3;
    const std::uint64_t w2 = 2 * upow(3, m - 1);
    put(wd, 0, 1);
    put(wd, w2 - upow(3, h), ipow(3, m) * (ipow(3, r) - 1));
    put(wd, w2, ipow(3, m + r) + 2 * ipow(3, m) - 3);
    put(wd, w2 + upow(3, h), ipow(3, m) * (ipow(3, r) - 1));
    put(wd, upow(3, m), 2);
    return wd;
}

DualLowWeights dual_low_weights_ab(std::uint32_t m, std::uint32_t r)
{
    require_odd_m(m);
    require_rank(r, 0, m);
    const std::int64_t M = m, R = r;
    const BigRational third(1, 3);
    DualLowWeights out;
    out.scale = ipow(2, m + r);
    out.a3 = integral(third * rpow(2, M - 1) * (rpow(2, M) - rpow(2, R)) * (rpow(2, M) - 2), "scaled A3");
    out.a4 = integral(third * rpow(2, M - 3) * (rpow(2, M) - rpow(2, R)) * (8 - 3 * rpow(2, M + 1) + rpow(4, M)),
        "scaled A4");
    return out;
}

DualLowWeights dual_low_weights_p3(std::uint32_t m, std::uint32_t r, P3Variant variant)
{
    require_odd_m(m);
    require_rank(r, 0, m);
    const std::int64_t M = m, R = r;
    DualLowWeights out;
    if (variant == P3Variant::Code) {
        out.scale = ipow(3, m + r);
        out.a3 = integral(rpow(3, M - 1) * (4 * rpow(3, M) - 3) * (rpow(3, M) - rpow(3, R)), "scaled A3");
        out.a4 = integral(BigRational(1, 4) * rpow(3, M - 1)
                * (14 * rpow(3, M + 1) - rpow(3, 3 + R) + 14 * rpow(3, M + R + 1) - rpow(3, 2 * M + R + 1)
                    - 62 * rpow(9, M) + 8 * rpow(27, M)),
            "scaled A4");
        return out;
    }
    out.scale = ipow(3, m + r + 1);
    out.a3 = integral(rpow(9, M) * (rpow(3, M) - rpow(3, R)), "scaled A3");
    out.a4 = integral(BigRational(1, 4) * rpow(3, 2 * M + 1) * (rpow(3, M) - 3) * (rpow(3, M) - rpow(3, R)), "scaled A4");
    out.a5 = integral(BigRational(1, 4) * rpow(9, M) * (rpow(3, M) - 3) * (-7 * rpow(3, M) + 2 * rpow(3, R + 1) + rpow(9, M)),
        "scaled A5");
    return out;
}

LinearCode dual_code(const LinearCode& code)
{
    Provenance prov = code.provenance();
    prov.chain.push_back("dual");
    prov.expected_rank.reset();
    prov.rank_as_expected = true;
    return LinearCode(code.p(), nullspace(code.basis(), code.p()), std::move(prov));
}

LinearCode extend_code(const LinearCode& code)
{
    const std::uint32_t p = code.p();
    const Matrix& b = code.basis();
    Matrix g(0, b.cols() + 1);
    std::vector<std::uint32_t> row(b.cols() + 1);
    for (std::size_t i = 0; i < b.rows(); ++i) {
        std::uint64_t s = 0;
        for (std::size_t j = 0; j < b.cols(); ++j) {
            row[j] = b(i, j);
            s += b(i, j);
        }
        row[b.cols()] = static_cast<std::uint32_t>((p - s % p) % p);
        g.append_row(row);
    }
    Provenance prov = code.provenance();
    prov.chain.push_back("extended");
    prov.expected_rank.reset();
    prov.rank_as_expected = true;
    return LinearCode(p, std::move(g), std::move(prov));
}

CodeChain derive_chain(const LinearCode& code)
{
    LinearCode dual = dual_code(code);
    LinearCode ext = extend_code(dual);
    LinearCode ede = dual_code(ext);
    return CodeChain{code, std::move(dual), std::move(ext), std::move(ede)};
}

std::uint32_t min_distance(const WeightDistribution& wd)
{
    auto d = wd.min_weight();
    if (!d)
        fail(ErrorCode::ZeroCode, "the zero code has no minimum distance");
    return *d;
}

std::uint32_t min_distance(const LinearCode& code)
{
    if (code.dimension() == 0)
        fail(ErrorCode::ZeroCode, "the zero code has no minimum distance");
    return min_distance(weight_distribution(code));
}

bool pless_check(const WeightDistribution& wd, std::uint32_t n, std::uint32_t k, std::uint32_t p,
    const BigInt& b1, const BigInt& b2)
{
    BigInt s0 = 0, s1 = 0, s2 = 0;
    for (const auto& [w, c] : wd.counts) {
        s0 += c;
        s1 += c * w;
        s2 += c * w * w;
    }
    if (s0 != ipow(BigInt(p), k))
        return false;
    if (k == 0)
        return s1 == 0 && s2 == 0;
    const BigInt q = p - 1;
    const BigInt qn = q * n;
    // p^(k-2) may be fractional at k = 1; compare p^2 * s2 with p^k * (...).
    const BigInt pk = ipow(BigInt(p), k);
    if (s1 * p != pk * (qn - b1))
        return false;
    const BigInt rhs = qn * (qn + 1) - (2 * qn - p + 2) * b1 + 2 * b2;
    return s2 * p * p == pk * rhs;
}

std::pair<BigInt, BigInt> dual_low_weights_from_columns(const LinearCode& code)
{
    const std::uint32_t p = code.p();
    const Matrix& b = code.basis();
    const std::size_t k = b.rows();
    std::uint64_t zero = 0;
    std::map<std::vector<std::uint32_t>, std::uint64_t> classes;
    for (std::size_t j = 0; j < b.cols(); ++j) {
        std::vector<std::uint32_t> col(k);
        std::uint32_t lead = 0;
        for (std::size_t i = 0; i < k; ++i) {
            col[i] = b(i, j);
            if (!lead && col[i])
                lead = col[i];
        }
        if (!lead) {
            ++zero;
            continue;
        }
        const std::uint32_t s = inverse_mod(lead, p);
        for (auto& v : col)
            v = static_cast<std::uint32_t>((std::uint64_t{v} * s) % p);
        ++classes[col];
    }
    BigInt b1 = BigInt(p - 1) * zero;
    BigInt b2 = BigInt(p - 1) * (p - 1) * binomial(zero, 2);
    for (const auto& [col, s] : classes)
        b2 += BigInt(p - 1) * binomial(s, 2);
    return {b1, b2};
}

} // namespace abcodes
