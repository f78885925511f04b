#include "adic/numbers.hpp"

#include <cctype>

namespace adic {

BigRational rational_from_string(std::string_view s) {
    if (s.empty()) throw Error("empty rational literal");
    size_t slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            return BigRational(BigInt(std::string(s)));
        }
        BigInt num{std::string(s.substr(0, slash))};
        BigInt den{std::string(s.substr(slash + 1))};
        if (den <= 0) throw Error("rational denominator must be positive: " + std::string(s));
        return BigRational(num, den);
    } catch (const std::exception& e) {
        throw Error("bad rational literal '" + std::string(s) + "': " + e.what());
    }
}

std::string rational_to_decimal(const BigRational& q, int digits) {
    BigInt num = numerator(q), den = denominator(q);
    bool neg = num < 0;
    if (neg) num = -num;
    BigInt ip = num / den;
    BigInt rem = num % den;
    std::string out = (neg ? "-" : "") + ip.str();
    if (digits <= 0) return out;
    out += '.';
    for (int i = 0; i < digits; ++i) {
        rem *= 10;
        out += static_cast<char>('0' + static_cast<int>(rem / den));
        rem %= den;
    }
    return out;
}

double rational_to_double(const BigRational& q) {
    return q.convert_to<double>();
}

}  // namespace adic
