#include "tourn/rational.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace tourn {

std::string to_string(const Rational& r)
{
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

std::string annotated(const Rational& r)
{
    std::ostringstream out;
    out << to_string(r);
    if (boost::multiprecision::denominator(r) != 1)
        out << " (~" << std::setprecision(6) << r.convert_to<double>() << ")";
    return out.str();
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole)
{
    if (text.empty())
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size())
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    for (std::size_t i = start; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    return BigInt(std::string(text[0] == '+' ? text.substr(1) : text));
}

} // namespace

Rational parse_rational(std::string_view text)
{
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const BigInt num = parse_integer(text.substr(0, slash), text);
        const BigInt den = parse_integer(text.substr(slash + 1), text);
        if (den == 0)
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        const std::string_view frac = text.substr(dot + 1);
        const std::string digits = std::string(text.substr(0, dot)) + std::string(frac);
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        return Rational(parse_integer(digits, text), scale);
    }
    return Rational(parse_integer(text, text));
}

} // namespace tourn
