#ifndef GAMEPRICE_SUMMATION_HPP
#define GAMEPRICE_SUMMATION_HPP

#include <cstddef>

namespace gameprice {

/// Pairwise (cascade) summation of term(i) for i in [first, last).
/// Error grows as O(log n) instead of O(n) for the naive loop.
template <class Term>
double pairwise_sum(Term&& term, std::size_t first, std::size_t last) {
    constexpr std::size_t block = 8;
    if (last - first <= block) {
        double s = 0.0;
        for (std::size_t i = first; i < last; ++i) s += term(i);
        return s;
    }
    const std::size_t mid = first + (last - first) / 2;
    return pairwise_sum(term, first, mid) + pairwise_sum(term, mid, last);
}

template <class Term>
double pairwise_sum(Term&& term, std::size_t count) {
    return pairwise_sum(term, std::size_t{0}, count);
}

}  // namespace gameprice

#endif  // GAMEPRICE_SUMMATION_HPP
