#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace suborbit {

// Reduced non-negative fraction. Every proportion in this project is exact;
// the 5/6 boundary is an equality test, so no floats anywhere.
class ExactRatio {
public:
    ExactRatio() : num_(0), den_(1) {}
    ExactRatio(std::int64_t num, std::int64_t den) {
        if (den <= 0 || num < 0)
            throw std::invalid_argument("ExactRatio: need num >= 0, den > 0");
        const std::int64_t g = std::gcd(num, den);
        num_ = num / g;
        den_ = den / g;
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool operator==(const ExactRatio& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const ExactRatio& o) const { return !(*this == o); }
    bool operator<(const ExactRatio& o) const {
        return num_ * o.den_ < o.num_ * den_;
    }
    bool operator>(const ExactRatio& o) const { return o < *this; }
    bool operator<=(const ExactRatio& o) const { return !(o < *this); }
    bool operator>=(const ExactRatio& o) const { return !(*this < o); }

    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace suborbit
