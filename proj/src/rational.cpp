#include "sturmian/rational.hpp"

namespace sturmian {

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(Int(std::string(text)));
        }
        Int num(std::string(text.substr(0, slash)));
        Int den(std::string(text.substr(slash + 1)));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational '" + std::string(text) + "', expected p/q");
    }
}

std::string rational_str(const Rational& r) {
    return rat_num(r).str() + "/" + rat_den(r).str();
}

}  // namespace sturmian
