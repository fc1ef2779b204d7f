#include "effalg/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace effalg {

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto valid = !s.empty();
    auto slash = s.find('/');
    for (std::size_t i = 0; i < s.size() && valid; ++i) {
        char c = s[i];
        if (c == '-' && (i == 0 || i == slash + 1))
            continue;
        if (c == '/' && i == slash && i > 0 && i + 1 < s.size())
            continue;
        if (c < '0' || c > '9')
            valid = false;
    }
    if (!valid)
        throw std::invalid_argument("malformed rational '" + s + "'");
    Rational value;
    if (value.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational '" + s + "'");
    if (value.get_den() == 0)
        throw std::invalid_argument("zero denominator in '" + s + "'");
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value)
{
    Rational copy = value;
    copy.canonicalize();
    return copy.get_str();
}

std::string to_string(const RationalVector& values)
{
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ", ";
        out += to_string(values[i]);
    }
    return out + ")";
}

std::int64_t denominator_lcm(const RationalVector& values)
{
    std::int64_t result = 1;
    for (const auto& v : values) {
        mpz_class den = v.get_den();
        if (!den.fits_slong_p())
            throw std::overflow_error("denominator exceeds 64 bits");
        result = std::lcm(result, static_cast<std::int64_t>(den.get_si()));
    }
    return result;
}

} // namespace effalg
