#include "abcodes/bigint.hpp"

#include "abcodes/error.hpp"

#include <cctype>

namespace abcodes {

BigInt ipow(const BigInt& base, std::uint64_t exp)
{
    BigInt result = 1;
    BigInt b = base;
    while (exp != 0) {
        if (exp & 1u)
            result *= b;
        exp >>= 1;
        if (exp != 0)
            b *= b;
    }
    return result;
}

BigInt ipow(std::uint64_t base, std::uint64_t exp)
{
    return ipow(BigInt(base), exp);
}

BigInt binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt parse_decimal(const std::string& s)
{
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start)
        fail(ErrorCode::ParseError, "empty integer literal");
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            fail(ErrorCode::ParseError, "not a decimal integer: '" + s + "'");
    return BigInt(s);
}

} // namespace abcodes
