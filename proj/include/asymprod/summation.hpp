#ifndef ASYMPROD_SUMMATION_HPP
#define ASYMPROD_SUMMATION_HPP

#include <cmath>
#include <cstddef>
#include <limits>

namespace asymprod {

// Kahan-Neumaier compensated accumulator.  The compensation term is kept
// separately so the final value is sum + comp; error_bound() reports a
// conservative bound on the residual rounding error of the compensated sum.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
        abs_sum_ += std::abs(x);
        ++count_;
    }

    double value() const { return sum_ + comp_; }
    std::size_t count() const { return count_; }

    // 2u * sum|x_i| covers the compensated result up to O(n u^2) terms.
    double error_bound() const {
        const double u = std::numeric_limits<double>::epsilon() / 2;
        return 2 * u * abs_sum_ * (1 + static_cast<double>(count_) * u);
    }

private:
    double sum_ = 0;
    double comp_ = 0;
    double abs_sum_ = 0;
    std::size_t count_ = 0;
};

}  // namespace asymprod

#endif
