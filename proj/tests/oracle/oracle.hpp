#pragma once

// Independent reference implementations used only by the tests. Deliberately
// naive: polynomial lists, repeated Frobenius, explicit codeword sets.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Poly = std::vector<std::uint32_t>;  // low degree first

struct NaiveField {
    std::uint32_t p;
    std::uint32_t m;
    Poly modulus;  // monic, degree m

    std::uint64_t order() const
    {
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < m; ++i)
            q *= p;
        return q;
    }

    Poly decode(std::uint64_t e) const
    {
        Poly c(m, 0);
        for (std::uint32_t i = 0; i < m; ++i) {
            c[i] = static_cast<std::uint32_t>(e % p);
            e /= p;
        }
        return c;
    }

    std::uint64_t encode(const Poly& c) const
    {
        std::uint64_t e = 0;
        for (std::uint32_t i = m; i-- > 0;)
            e = e * p + (i < c.size() ? c[i] : 0);
        return e;
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const
    {
        Poly x = decode(a), y = decode(b);
        for (std::uint32_t i = 0; i < m; ++i)
            x[i] = (x[i] + y[i]) % p;
        return encode(x);
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const
    {
        Poly x = decode(a), y = decode(b);
        Poly prod(2 * m, 0);
        for (std::uint32_t i = 0; i < m; ++i)
            for (std::uint32_t j = 0; j < m; ++j)
                prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
        for (std::size_t d = prod.size(); d-- > m;) {
            std::uint32_t c = prod[d];
            if (!c)
                continue;
            for (std::uint32_t i = 0; i <= m; ++i)
                prod[d - m + i] = (prod[d - m + i] + (p - c) * modulus[i]) % p;
        }
        prod.resize(m);
        return encode(prod);
    }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const
    {
        std::uint64_t r = 1;
        for (std::uint64_t i = 0; i < e; ++i)
            r = mul(r, a);
        return r;
    }

    // a + a^p + ... + a^(p^(m-1)), which lies in the prime field.
    std::uint32_t trace(std::uint64_t a) const
    {
        std::uint64_t s = 0, y = a;
        for (std::uint32_t i = 0; i < m; ++i) {
            s = add(s, y);
            y = pow(y, p);
        }
        return decode(s)[0];
    }
};

using Word = std::vector<std::uint32_t>;

inline std::uint32_t weight(const Word& w)
{
    return static_cast<std::uint32_t>(std::count_if(w.begin(), w.end(), [](std::uint32_t v) { return v != 0; }));
}

/// Every codeword (Tr(a f(x) + b x))_{x != 0} for a in subgroup, b in the field.
inline std::set<Word> direct_codewords(const NaiveField& F, const std::vector<std::uint64_t>& fvals,
    const std::vector<std::uint64_t>& subgroup)
{
    std::set<Word> out;
    const std::uint64_t q = F.order();
    for (auto a : subgroup)
        for (std::uint64_t b = 0; b < q; ++b) {
            Word w;
            for (std::uint64_t x = 1; x < q; ++x)
                w.push_back(F.trace(F.add(F.mul(a, fvals[x]), F.mul(b, x))));
            out.insert(w);
        }
    return out;
}

inline std::map<std::uint32_t, std::uint64_t> histogram(const std::set<Word>& words)
{
    std::map<std::uint32_t, std::uint64_t> h;
    for (const auto& w : words)
        ++h[weight(w)];
    return h;
}

/// All vectors of GF(p)^n orthogonal to every word of `code` (n small).
inline std::set<Word> brute_dual(const std::set<Word>& code, std::uint32_t p, std::uint32_t n)
{
    std::set<Word> out;
    Word v(n, 0);
    for (;;) {
        bool ok = true;
        for (const auto& c : code) {
            std::uint64_t s = 0;
            for (std::uint32_t i = 0; i < n; ++i)
                s += std::uint64_t{c[i]} * v[i];
            if (s % p) {
                ok = false;
                break;
            }
        }
        if (ok)
            out.insert(v);
        std::uint32_t i = 0;
        for (; i < n; ++i) {
            if (++v[i] < p)
                break;
            v[i] = 0;
        }
        if (i == n)
            break;
    }
    return out;
}

} // namespace oracle
