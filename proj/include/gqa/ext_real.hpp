#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace gqa {

/// Extended real: a finite double or one of the two infinities.
/// Infinities are explicit tags so they never leak into arithmetic.
class ExtReal {
public:
    ExtReal() = default;

    ExtReal(double v) {
        if (std::isnan(v)) {
            throw std::invalid_argument("ExtReal: NaN is not an extended real");
        }
        if (std::isinf(v)) {
            kind_ = v > 0 ? Kind::PosInf : Kind::NegInf;
            value_ = 0.0;
        } else {
            kind_ = Kind::Finite;
            value_ = v;
        }
    }

    static ExtReal neg_inf() {
        ExtReal e;
        e.kind_ = Kind::NegInf;
        return e;
    }

    static ExtReal pos_inf() {
        ExtReal e;
        e.kind_ = Kind::PosInf;
        return e;
    }

    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    bool is_infinite() const { return kind_ != Kind::Finite; }

    /// Finite value; throws on an infinite tag.
    double value() const {
        if (!is_finite()) {
            throw std::logic_error("ExtReal: value() on an infinite endpoint");
        }
        return value_;
    }

    ExtReal operator-() const {
        switch (kind_) {
        case Kind::NegInf: return pos_inf();
        case Kind::PosInf: return neg_inf();
        default: return ExtReal(-value_);
        }
    }

    friend bool operator==(const ExtReal& a, const ExtReal& b) {
        if (a.kind_ != b.kind_) return false;
        return a.kind_ != Kind::Finite || a.value_ == b.value_;
    }

    friend bool operator<(const ExtReal& a, const ExtReal& b) {
        if (a.rank() != b.rank()) return a.rank() < b.rank();
        return a.kind_ == Kind::Finite && a.value_ < b.value_;
    }

    friend bool operator<=(const ExtReal& a, const ExtReal& b) { return a < b || a == b; }
    friend bool operator>(const ExtReal& a, const ExtReal& b) { return b < a; }
    friend bool operator>=(const ExtReal& a, const ExtReal& b) { return b <= a; }
    friend bool operator!=(const ExtReal& a, const ExtReal& b) { return !(a == b); }

    std::string str() const {
        if (is_neg_inf()) return "-inf";
        if (is_pos_inf()) return "inf";
        return std::to_string(value_);
    }

private:
    enum class Kind { NegInf, Finite, PosInf };

    int rank() const { return kind_ == Kind::NegInf ? 0 : (kind_ == Kind::Finite ? 1 : 2); }

    Kind kind_ = Kind::Finite;
    double value_ = 0.0;
};

}  // namespace gqa
