#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mcsep {

using BigInt = boost::multiprecision::cpp_int;

/// -x log2 x - (1-x) log2(1-x) on the open interval (0, 1).
double binary_entropy(double x);
/// As binary_entropy, but with H(0) = H(1) = 0.
double binary_entropy_total(double x);

/// Exact C(n, k) for 0 <= k <= n <= 200.
BigInt binomial(int n, int k);

struct UpperBounds {
    int m = 0;  ///< floor((n+2)/3)
    BigInt sum;   ///< 2 * sum_{j<=m} C(n+2, j)
    BigInt weak;  ///< 2 (m+1) C(n+2, m)
};

/// Upper bounds on the number of minimal separators between two vertices of
/// a graph with n + 2 vertices. Requires 1 <= n <= 200.
UpperBounds upper_bound_counts(int n);

/// 3^floor(n/3), the count realised by the path construction on n interior vertices.
BigInt lower_bound_count(int n);

/// 3^(1/3)
double lower_growth_constant();
/// 2^H(1/3)
double upper_growth_constant();

/// x^(1/n) for a positive exact integer, evaluated in floating point.
double nth_root(const BigInt& x, int n);

struct BoundsRow {
    int n = 0;
    BigInt lower;
    BigInt upper_sum;
    BigInt upper_weak;
    std::optional<BigInt> exact_g;
    double root_lower = 0.0;
    double root_upper = 0.0;
};

/// One row per n = 1..n_max (n_max <= 200). `exact_g` maps interior size to
/// a known exact g value and fills that column where present.
std::vector<BoundsRow> bounds_table(int n_max, const std::map<int, BigInt>& exact_g = {});

/// Columns n,lower,upper_sum,upper_weak,exact_g,root_lower,root_upper; header first.
std::string bounds_to_csv(const std::vector<BoundsRow>& rows);
/// JSON array of row objects. Exact integers are decimal strings, exact_g is null when unknown.
std::string bounds_to_json(const std::vector<BoundsRow>& rows);
/// Aligned human-readable table.
std::string bounds_to_plain(const std::vector<BoundsRow>& rows);

}  // namespace mcsep
