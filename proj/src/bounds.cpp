#include "mcsep/bounds.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mcsep/error.hpp"

namespace mcsep {

namespace {

constexpr int kMaxBoundsN = 200;

std::string fixed(double x, int digits = 10) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << x;
    return os.str();
}

}  // namespace

double binary_entropy(double x) {
    if (!(x > 0.0 && x < 1.0))
        throw Error(ErrorCode::OutOfRange, "binary entropy is defined on (0, 1)");
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double binary_entropy_total(double x) {
    if (x == 0.0 || x == 1.0) return 0.0;
    return binary_entropy(x);
}

namespace {

BigInt binomial_unchecked(int n, int k) {
    k = std::min(k, n - k);
    BigInt out = 1;
    // Each partial product is C(n-k+i, i), so the division is exact.
    for (int i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

}  // namespace

BigInt binomial(int n, int k) {
    if (n < 0 || n > 200 || k < 0 || k > n)
        throw Error(ErrorCode::OutOfRange, "binomial requires 0 <= k <= n <= 200");
    return binomial_unchecked(n, k);
}

UpperBounds upper_bound_counts(int n) {
    if (n < 1 || n > kMaxBoundsN)
        throw Error(ErrorCode::OutOfRange, "upper bounds are tabulated for 1 <= n <= 200");
    UpperBounds out;
    out.m = (n + 2) / 3;
    BigInt sum = 0;
    for (int j = 0; j <= out.m; ++j) sum += binomial_unchecked(n + 2, j);
    out.sum = 2 * sum;
    out.weak = 2 * BigInt(out.m + 1) * binomial_unchecked(n + 2, out.m);
    return out;
}

BigInt lower_bound_count(int n) {
    if (n < 1) throw Error(ErrorCode::OutOfRange, "lower bound requires n >= 1");
    return boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(n / 3));
}

double lower_growth_constant() { return std::cbrt(3.0); }

double upper_growth_constant() { return std::exp2(binary_entropy(1.0 / 3.0)); }

double nth_root(const BigInt& x, int n) {
    if (x <= 0 || n < 1) throw Error(ErrorCode::OutOfRange, "nth_root needs x > 0 and n >= 1");
    // log2 via the top 53 bits so values beyond double range still work.
    const unsigned msb = boost::multiprecision::msb(x);
    const unsigned shift = msb > 60 ? msb - 60 : 0;
    const double head = static_cast<BigInt>(x >> shift).convert_to<double>();
    return std::exp2((std::log2(head) + shift) / n);
}

std::vector<BoundsRow> bounds_table(int n_max, const std::map<int, BigInt>& exact_g) {
    if (n_max < 1 || n_max > kMaxBoundsN)
        throw Error(ErrorCode::OutOfRange, "bounds table size must be in 1..200");
    std::vector<BoundsRow> rows;
    rows.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) {
        BoundsRow row;
        row.n = n;
        row.lower = lower_bound_count(n);
        auto up = upper_bound_counts(n);
        row.upper_sum = std::move(up.sum);
        row.upper_weak = std::move(up.weak);
        if (auto it = exact_g.find(n); it != exact_g.end()) row.exact_g = it->second;
        row.root_lower = nth_root(row.lower, n);
        row.root_upper = nth_root(row.upper_sum, n);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string bounds_to_csv(const std::vector<BoundsRow>& rows) {
    std::ostringstream os;
    os << "n,lower,upper_sum,upper_weak,exact_g,root_lower,root_upper\n";
    for (const auto& r : rows) {
        os << r.n << ',' << r.lower << ',' << r.upper_sum << ',' << r.upper_weak << ',';
        if (r.exact_g) os << *r.exact_g;
        os << ',' << fixed(r.root_lower) << ',' << fixed(r.root_upper) << '\n';
    }
    return os.str();
}

std::string bounds_to_json(const std::vector<BoundsRow>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rows) {
        out.push_back({
            {"n", r.n},
            {"lower", r.lower.str()},
            {"upper_sum", r.upper_sum.str()},
            {"upper_weak", r.upper_weak.str()},
            {"exact_g", r.exact_g ? nlohmann::json(r.exact_g->str()) : nlohmann::json(nullptr)},
            {"root_lower", r.root_lower},
            {"root_upper", r.root_upper},
        });
    }
    return out.dump(2) + "\n";
}

std::string bounds_to_plain(const std::vector<BoundsRow>& rows) {
    std::ostringstream os;
    os << std::setw(4) << "n" << std::setw(14) << "lower" << std::setw(14) << "exact_g"
       << std::setw(12) << "root_lower" << std::setw(12) << "root_upper" << "  upper_sum\n";
    for (const auto& r : rows) {
        os << std::setw(4) << r.n << std::setw(14) << r.lower.str() << std::setw(14)
           << (r.exact_g ? r.exact_g->str() : std::string("-")) << std::setw(12)
           << fixed(r.root_lower, 6) << std::setw(12) << fixed(r.root_upper, 6) << "  "
           << r.upper_sum << '\n';
    }
    return os.str();
}

}  // namespace mcsep
