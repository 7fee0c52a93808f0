#include "nilcone/rational.hpp"

#include "nilcone/errors.hpp"

#include <sstream>

namespace nilcone {

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

std::string to_string(const Int& n) {
    return n.str();
}

Rational parse_rational(std::string_view s) {
    auto parse_int = [](std::string_view t) -> Int {
        if (t.empty()) throw DomainError("empty integer in rational literal");
        size_t pos = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (pos == t.size()) throw DomainError("sign without digits in rational literal");
        for (size_t i = pos; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                throw DomainError("invalid character in rational literal: '" + std::string(t) + "'");
        return Int(std::string(t));
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in rational literal: '" + std::string(s) + "'");
    return Rational(num, den);
}

QVector to_rational(const IVec& v) {
    QVector out;
    out.reserve(v.size());
    for (const Int& x : v) out.emplace_back(x);
    return out;
}

std::string to_string(const QVector& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

std::string to_string(const IVec& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ", ";
        out += v[i].str();
    }
    return out + ")";
}

}  // namespace nilcone
