#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace phee {

// Ascending 1-based ranks with tied values receiving the average of the
// positions they span: (5,3,3) -> (3, 1.5, 1.5).
std::vector<double> average_ranks(std::span<const double> values);

enum class Significance { Better, Worse, Similar };
// "+", "-", "≈"
std::string significance_symbol(Significance s);

struct WilcoxonResult {
    std::size_t better = 0;  // differences x - y > 0
    std::size_t worse = 0;   // differences x - y < 0
    std::size_t zeros = 0;   // dropped pairs
    double w_plus = 0.0;
    double w_minus = 0.0;
    double p_value = 1.0;
    Significance decision = Significance::Similar;
    bool exact = false;      // exact null distribution vs normal approximation
};

// Two-sided Wilcoxon signed-rank test on paired samples. Zero differences
// are dropped; |difference| ties get average ranks. The null distribution is
// exact (enumerated by dynamic programming over doubled ranks) when at most
// 20 non-zero pairs remain, and a normal approximation with continuity and
// tie corrections otherwise. decision is Similar when p > alpha, else the
// sign of the rank-sum majority. Requires at least 5 pairs.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> x,
                                    std::span<const double> y,
                                    double alpha = 0.05);

} // namespace phee
