#pragma once

#include "abcodes/bigint.hpp"
#include "abcodes/functions.hpp"
#include "abcodes/galois.hpp"
#include "abcodes/linalg.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace abcodes {

/// Exhaustive enumeration budget: at most 2^24 messages.
inline constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 24;

/// True when p^k <= limit.
bool power_fits(std::uint32_t p, std::uint64_t k, std::uint64_t limit);

struct Provenance {
    std::string function_id;
    std::string function;
    std::vector<Elem> subgroup_basis;
    /// Derivation steps applied after construction, e.g. {"dual", "extended", "dual"}.
    std::vector<std::string> chain;
    std::optional<std::uint32_t> expected_rank;
    bool rank_as_expected = true;

    std::string chain_label() const;
};

/// Linear code over GF(p) given by a (possibly redundant) generator matrix.
class LinearCode {
public:
    LinearCode(std::uint32_t p, Matrix generators, Provenance provenance = {});

    std::uint32_t p() const { return p_; }
    std::uint32_t length() const { return static_cast<std::uint32_t>(generators_.cols()); }
    std::uint32_t dimension() const { return static_cast<std::uint32_t>(basis_.rows()); }
    /// Generator rows as supplied.
    const Matrix& generators() const { return generators_; }
    /// Canonical generator matrix: the reduced row echelon form, k rows.
    const Matrix& basis() const { return basis_; }
    const Provenance& provenance() const { return provenance_; }

private:
    std::uint32_t p_;
    Matrix generators_;
    Matrix basis_;
    Provenance provenance_;
};

/// Weight -> multiplicity, zero multiplicities omitted.
struct WeightDistribution {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint32_t p = 2;
    std::map<std::uint32_t, BigInt> counts;

    BigInt count(std::uint32_t w) const;
    BigInt total() const;
    std::vector<std::uint32_t> nonzero_weights() const;
    /// Smallest nonzero weight, if any nonzero codeword exists.
    std::optional<std::uint32_t> min_weight() const;
    std::optional<std::uint32_t> max_weight() const;

    bool operator==(const WeightDistribution&) const = default;
};

struct WeightEnumerator {
    std::vector<BigInt> coeffs;  ///< coeffs[i] = A_i, length n+1

    static WeightEnumerator from(const WeightDistribution& wd);
    WeightDistribution to_distribution(std::uint32_t k, std::uint32_t p) const;
    bool operator==(const WeightEnumerator&) const = default;
};

/// Code of all (Tr(a f(x) + b x)) for x != 0, a in A, b in GF(p^m). Coordinates
/// follow increasing encoding of x; rows are c_{a,0} for the subgroup basis
/// then c_{0,x^j}.
LinearCode build_code(const NonlinearFunction& f, const AdditiveSubgroup& subgroup);

/// Exact distribution by iterating all p^k messages (CodeTooLarge beyond 2^24).
WeightDistribution enumerate_weight_distribution(const LinearCode& code);

/// Calls visit on every codeword in message order (CodeTooLarge beyond 2^24).
void for_each_codeword(const LinearCode& code, const std::function<void(std::span<const std::uint32_t>)>& visit);

/// Exact distribution via whichever of the code and its dual is smaller to
/// enumerate, transforming with MacWilliams when the dual is used.
WeightDistribution weight_distribution(const LinearCode& code);

WeightEnumerator macwilliams_transform(const WeightEnumerator& a, std::uint32_t n, std::uint32_t k, std::uint32_t p);
/// Distribution of the dual code: length n, dimension n - k.
WeightDistribution macwilliams_transform(const WeightDistribution& wd);

// Closed-form distributions.
WeightDistribution theoretical_wd_ab(std::uint32_t m, std::uint32_t r);
WeightDistribution theoretical_wd_planar_f1(std::uint32_t p, std::uint32_t m, std::uint32_t r);
WeightDistribution theoretical_wd_planar_p3(std::uint32_t m, std::uint32_t r);
WeightDistribution theoretical_wd_ext_ab(std::uint32_t m, std::uint32_t r);
WeightDistribution theoretical_wd_ext_p3(std::uint32_t m, std::uint32_t r);

/// Low-weight dual coefficients multiplied by `scale` (the size of the code
/// whose dual they describe).
struct DualLowWeights {
    BigInt scale;
    BigInt a3;
    BigInt a4;
    std::optional<BigInt> a5;
};

DualLowWeights dual_low_weights_ab(std::uint32_t m, std::uint32_t r);

enum class P3Variant { Code, Extended };
/// For Code the scale is 3^(m+r); for Extended (the dual of the extended dual
/// code, dimension m+r+1) the scale is 3^(m+r+1).
DualLowWeights dual_low_weights_p3(std::uint32_t m, std::uint32_t r, P3Variant variant);

LinearCode dual_code(const LinearCode& code);
/// Appends the coordinate -(sum of the row) to every generator row.
LinearCode extend_code(const LinearCode& code);

struct CodeChain {
    LinearCode code;
    LinearCode dual;
    LinearCode extended_dual;
    LinearCode dual_of_extended_dual;
};

CodeChain derive_chain(const LinearCode& code);

std::uint32_t min_distance(const LinearCode& code);
std::uint32_t min_distance(const WeightDistribution& wd);

/// First three power moments. b1, b2 are the dual's weight-1 and weight-2
/// counts; the identities reduce to the usual three-weight system when both
/// vanish.
bool pless_check(const WeightDistribution& wd, std::uint32_t n, std::uint32_t k, std::uint32_t p,
    const BigInt& b1 = 0, const BigInt& b2 = 0);

/// Dual weight-1 and weight-2 counts read off the generator columns (zero
/// columns and proportional column pairs).
std::pair<BigInt, BigInt> dual_low_weights_from_columns(const LinearCode& code);

} // namespace abcodes
