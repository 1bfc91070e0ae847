#ifndef ABZ_EXT_INT_HPP
#define ABZ_EXT_INT_HPP

#include <compare>
#include <stdexcept>
#include <string>

namespace abz {

// Value in Z united with +infinity. Total order puts +inf above every
// finite value; succ() is saturating at +inf.
class ExtInt {
public:
    constexpr ExtInt() = default;

    static constexpr ExtInt of(long long v) { return ExtInt(v, false); }
    static constexpr ExtInt infinity() { return ExtInt(0, true); }

    bool is_infinite() const { return inf_; }

    long long value() const {
        if (inf_) throw std::logic_error("ExtInt: value() called on +inf");
        return v_;
    }

    ExtInt succ() const { return inf_ ? *this : ExtInt(v_ + 1, false); }

    friend bool operator==(ExtInt a, ExtInt b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
    }
    friend std::strong_ordering operator<=>(ExtInt a, ExtInt b) {
        if (a.inf_ && b.inf_) return std::strong_ordering::equal;
        if (a.inf_) return std::strong_ordering::greater;
        if (b.inf_) return std::strong_ordering::less;
        return a.v_ <=> b.v_;
    }

    friend ExtInt min(ExtInt a, ExtInt b) { return b < a ? b : a; }
    friend ExtInt max(ExtInt a, ExtInt b) { return a < b ? b : a; }

    std::string str() const { return inf_ ? "+inf" : std::to_string(v_); }

private:
    constexpr ExtInt(long long v, bool inf) : v_(v), inf_(inf) {}
    long long v_ = 0;
    bool inf_ = false;
};

} // namespace abz

#endif // ABZ_EXT_INT_HPP
