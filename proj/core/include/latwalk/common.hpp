#ifndef LATWALK_COMMON_HPP
#define LATWALK_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace latwalk {

/// Input was malformed (bad vertex id, unknown graph name, bad config).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A counter exceeded 128 bits. Never silent.
struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The vertex/time budget was exhausted before the computation finished.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A construction step of the polygon pipeline failed.
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An exact mathematical identity was violated. Indicates an enumeration bug.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Exact nonnegative 128-bit counter with mandatory overflow checking.
class Count {
public:
    Count() : v_(0) {}
    Count(std::uint64_t x) : v_(x) {}

    Count& operator+=(const Count& o) {
        unsigned __int128 s = v_ + o.v_;
        if (s < v_) throw OverflowError("128-bit counter overflow in addition");
        v_ = s;
        return *this;
    }
    friend Count operator+(Count a, const Count& b) { return a += b; }

    Count& operator*=(const Count& o) {
        if (v_ != 0 && o.v_ != 0) {
            unsigned __int128 p = v_ * o.v_;
            if (p / v_ != o.v_) throw OverflowError("128-bit counter overflow in multiplication");
            v_ = p;
        } else {
            v_ = 0;
        }
        return *this;
    }
    friend Count operator*(Count a, const Count& b) { return a *= b; }

    Count pow(unsigned e) const {
        Count r(1);
        for (unsigned i = 0; i < e; ++i) r *= *this;
        return r;
    }

    friend bool operator==(const Count& a, const Count& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Count& a, const Count& b) { return a.v_ != b.v_; }
    friend bool operator<(const Count& a, const Count& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Count& a, const Count& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Count& a, const Count& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Count& a, const Count& b) { return a.v_ >= b.v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_even() const { return (v_ & 1) == 0; }

    /// Exact halving; the caller must have checked is_even().
    Count half() const {
        Count r;
        r.v_ = v_ >> 1;
        return r;
    }

    /// Exact value as double (may round for huge counts; used only for estimates).
    double to_double() const { return static_cast<double>(v_); }

    std::uint64_t to_u64() const {
        if (v_ > static_cast<unsigned __int128>(UINT64_MAX))
            throw OverflowError("count does not fit in 64 bits");
        return static_cast<std::uint64_t>(v_);
    }

    std::string str() const {
        if (v_ == 0) return "0";
        unsigned __int128 x = v_;
        std::string s;
        while (x > 0) {
            s.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
            x /= 10;
        }
        return {s.rbegin(), s.rend()};
    }

    static Count parse(const std::string& s) {
        if (s.empty()) throw ConfigError("empty count literal");
        Count r;
        for (char c : s) {
            if (c < '0' || c > '9') throw ConfigError("bad count literal: " + s);
            r *= Count(10);
            r += Count(static_cast<std::uint64_t>(c - '0'));
        }
        return r;
    }

private:
    unsigned __int128 v_;
};

}  // namespace latwalk

#endif
