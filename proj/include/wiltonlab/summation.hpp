#pragma once

#include <cmath>

namespace wiltonlab {

/// Neumaier compensated accumulator. Partial sums of the Bernoulli series
/// run to v ~ 1e7 terms; naive accumulation loses ~3 digits there.
class Kahan {
public:
    void add(double x) {
        const double t = s_ + x;
        if (std::fabs(s_) >= std::fabs(x)) {
            c_ += (s_ - t) + x;
        } else {
            c_ += (x - t) + s_;
        }
        s_ = t;
    }
    double get() const { return s_ + c_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

}  // namespace wiltonlab
