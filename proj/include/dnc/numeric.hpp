#ifndef DNC_NUMERIC_HPP
#define DNC_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

#include "dnc/errors.hpp"

namespace dnc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int pow2(int bits) {
    Int x = 1;
    x <<= bits;
    return x;
}

/// Floor of the integer square root.
inline Int isqrt(const Int& x) {
    if (x < 0) throw Error(ErrorCode::MalformedInstance, "isqrt of negative value");
    return boost::multiprecision::sqrt(x);
}

// ── Exact decimal <-> scaled integer conversion ─────────────────

/// Parse a decimal string (optional sign, optional fraction) into value*scale.
/// The conversion must be exact at the given scale, otherwise ParseError.
inline Int parse_scaled_decimal(const std::string& text, const Int& scale) {
    if (scale <= 0) throw Error(ErrorCode::MalformedInstance, "scale must be positive");
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    std::string int_part, frac_part;
    for (; i < text.size() && text[i] != '.'; ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw Error(ErrorCode::ParseError, "bad decimal literal: " + text);
        int_part.push_back(text[i]);
    }
    if (i < text.size()) {
        ++i;  // skip '.'
        for (; i < text.size(); ++i) {
            if (text[i] < '0' || text[i] > '9')
                throw Error(ErrorCode::ParseError, "bad decimal literal: " + text);
            frac_part.push_back(text[i]);
        }
    }
    if (int_part.empty() && frac_part.empty())
        throw Error(ErrorCode::ParseError, "empty decimal literal");

    Int value = int_part.empty() ? Int(0) : Int(int_part);
    value *= scale;
    if (!frac_part.empty()) {
        // value += scale * 0.frac, exactly or not at all
        Int num(frac_part);
        Int den = 1;
        for (std::size_t k = 0; k < frac_part.size(); ++k) den *= 10;
        Int scaled = num * scale;
        if (scaled % den != 0)
            throw Error(ErrorCode::ParseError,
                        "decimal '" + text + "' is not exact at the given scale");
        value += scaled / den;
    }
    return negative ? Int(-value) : value;
}

/// Format value/scale as an exact decimal string (no trailing-zero trimming
/// beyond removing an all-zero fraction).
inline std::string format_scaled_decimal(Int value, const Int& scale) {
    bool negative = value < 0;
    if (negative) value = -value;
    Int whole = value / scale;
    Int rem = value % scale;
    std::string out = negative ? "-" : "";
    out += whole.str();
    if (rem != 0) {
        // Scale the remainder into decimal digits; scale may not be a power
        // of ten (geometry uses 2^P), so expand until the remainder clears.
        std::string digits;
        Int r = rem;
        while (r != 0) {
            r *= 10;
            digits.push_back(static_cast<char>('0' + static_cast<int>(r / scale)));
            r %= scale;
            if (digits.size() > 200)
                throw Error(ErrorCode::MalformedInstance,
                            "scale does not admit a finite decimal expansion");
        }
        out += ".";
        out += digits;
    }
    return out;
}

// ── Extended values (exact integer or -infinity) ────────────────

/// Revenue-style value: exact scaled integer or the -infinity marker.
struct ExtValue {
    std::optional<Int> v;

    ExtValue() = default;
    explicit ExtValue(Int x) : v(std::move(x)) {}

    static ExtValue neg_inf() { return ExtValue{}; }
    bool finite() const { return v.has_value(); }

    friend bool operator==(const ExtValue& a, const ExtValue& b) {
        if (a.finite() != b.finite()) return false;
        return !a.finite() || *a.v == *b.v;
    }
    friend bool operator<(const ExtValue& a, const ExtValue& b) {
        if (!a.finite()) return b.finite();
        if (!b.finite()) return false;
        return *a.v < *b.v;
    }
    /// -infinity absorbs addition.
    friend ExtValue operator+(const ExtValue& a, const ExtValue& b) {
        if (!a.finite() || !b.finite()) return neg_inf();
        return ExtValue(*a.v + *b.v);
    }
    std::string str() const { return finite() ? v->str() : "-inf"; }
};

inline ExtValue max(const ExtValue& a, const ExtValue& b) { return a < b ? b : a; }

}  // namespace dnc

#endif
