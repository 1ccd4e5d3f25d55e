#include "phee/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace phee {

std::vector<double> average_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[idx[j + 1]] == values[idx[i]]) ++j;
        const double avg = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t t = i; t <= j; ++t) ranks[idx[t]] = avg;
        i = j + 1;
    }
    return ranks;
}

std::string significance_symbol(Significance s) {
    switch (s) {
        case Significance::Better: return "+";
        case Significance::Worse: return "-";
        default: return "≈";
    }
}

namespace {

double normal_two_sided_p(double w_plus, std::size_t n,
                          const std::vector<std::size_t>& tie_sizes) {
    const double nd = static_cast<double>(n);
    const double mu = nd * (nd + 1.0) / 4.0;
    double var = nd * (nd + 1.0) * (2.0 * nd + 1.0) / 24.0;
    for (std::size_t t : tie_sizes) {
        const double td = static_cast<double>(t);
        var -= td * (td * td - 1.0) / 48.0;
    }
    if (var <= 0.0) return 1.0;
    double diff = w_plus - mu;
    // Continuity correction toward the mean.
    if (diff > 0.5) diff -= 0.5;
    else if (diff < -0.5) diff += 0.5;
    else diff = 0.0;
    const double z = std::fabs(diff) / std::sqrt(var);
    return std::min(1.0, std::erfc(z / std::sqrt(2.0)));
}

// Exact two-sided p by DP over the distribution of W+ under random signs.
// Ranks are average-tie ranks, so doubling them yields exact integers.
double exact_two_sided_p(double w_plus, const std::vector<double>& ranks) {
    const std::size_t n = ranks.size();
    std::size_t total = 0;
    std::vector<std::size_t> scaled(n);
    for (std::size_t i = 0; i < n; ++i) {
        scaled[i] = static_cast<std::size_t>(std::llround(2.0 * ranks[i]));
        total += scaled[i];
    }

    std::vector<double> count(total + 1, 0.0);
    count[0] = 1.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = total; s + 1 > scaled[i]; --s)
            count[s] += count[s - scaled[i]];

    const double worlds = std::ldexp(1.0, static_cast<int>(n)); // 2^n
    const auto w2 = static_cast<std::size_t>(std::llround(2.0 * w_plus));

    double below = 0.0, above = 0.0;
    for (std::size_t s = 0; s <= total; ++s) {
        if (s <= w2) below += count[s];
        if (s >= w2) above += count[s];
    }
    return std::min(1.0, 2.0 * std::min(below, above) / worlds);
}

} // namespace

WilcoxonResult wilcoxon_signed_rank(std::span<const double> x,
                                    std::span<const double> y,
                                    double alpha) {
    if (x.size() != y.size()) throw std::invalid_argument("paired samples differ in length");
    if (x.size() < 5) throw std::invalid_argument("wilcoxon needs at least 5 pairs");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must be in (0,1)");

    WilcoxonResult res;
    std::vector<double> abs_diffs;
    std::vector<int> signs;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        if (d == 0.0) {
            ++res.zeros;
            continue;
        }
        abs_diffs.push_back(std::fabs(d));
        signs.push_back(d > 0.0 ? 1 : -1);
        if (d > 0.0) ++res.better;
        else ++res.worse;
    }

    if (abs_diffs.empty()) {
        res.p_value = 1.0;
        res.decision = Significance::Similar;
        res.exact = true;
        return res;
    }

    const std::vector<double> ranks = average_ranks(abs_diffs);
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (signs[i] > 0) res.w_plus += ranks[i];
        else res.w_minus += ranks[i];
    }

    if (ranks.size() <= 20) {
        res.exact = true;
        res.p_value = exact_two_sided_p(res.w_plus, ranks);
    } else {
        std::vector<std::size_t> tie_sizes;
        std::vector<double> sorted(abs_diffs);
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size();) {
            std::size_t j = i;
            while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
            if (j > i) tie_sizes.push_back(j - i + 1);
            i = j + 1;
        }
        res.p_value = normal_two_sided_p(res.w_plus, ranks.size(), tie_sizes);
    }

    if (res.p_value > alpha) res.decision = Significance::Similar;
    else res.decision = res.w_plus > res.w_minus ? Significance::Better : Significance::Worse;
    return res;
}

} // namespace phee
