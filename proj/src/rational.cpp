#include "toughham/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace toughham {

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw InvalidSizeError("empty rational");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string ns = text.substr(0, slash);
        const std::string ds = text.substr(slash + 1);
        if (ns.empty() || ds.empty()) throw InvalidSizeError("bad rational: " + text);
        return Rational(std::strtoll(ns.c_str(), nullptr, 10),
                        std::strtoll(ds.c_str(), nullptr, 10));
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        const std::string whole = text.substr(0, dot);
        const std::string frac = text.substr(dot + 1);
        if (frac.size() > 18) throw InvalidSizeError("decimal too long: " + text);
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        const std::int64_t w = whole.empty() ? 0 : std::strtoll(whole.c_str(), nullptr, 10);
        const std::int64_t f = frac.empty() ? 0 : std::strtoll(frac.c_str(), nullptr, 10);
        const bool neg = !whole.empty() && whole[0] == '-';
        const std::int64_t num = neg ? w * den - f : w * den + f;
        return Rational(num, den);
    }
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-' && c != '+')
            throw InvalidSizeError("bad rational: " + text);
    return Rational(std::strtoll(text.c_str(), nullptr, 10));
}

}  // namespace toughham
