#include "wavecl/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace wavecl {

Int int_pow(Int base, unsigned long e) {
    Int acc = 1;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Rat rat_pow(const Rat& r, long e) {
    if (e == 0) return Rat(1);
    if (r == 0) {
        if (e < 0) throw std::domain_error("rat_pow: 0 to a negative power");
        return Rat(0);
    }
    const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Int n = int_pow(rat_num(r), a);
    Int d = int_pow(rat_den(r), a);
    return e > 0 ? Rat(n, d) : Rat(d, n);
}

std::optional<Rat> rat_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    if (r == 0) return Rat(0);
    Int sn = boost::multiprecision::sqrt(rat_num(r));
    Int sd = boost::multiprecision::sqrt(rat_den(r));
    if (sn * sn != rat_num(r) || sd * sd != rat_den(r)) return std::nullopt;
    return Rat(sn, sd);
}

std::string rat_to_string(const Rat& r) {
    std::string s = rat_num(r).str();
    if (!rat_is_integer(r)) s += "/" + rat_den(r).str();
    return s;
}

std::optional<Rat> rat_parse(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    try {
        if (slash == std::string::npos) {
            if (!is_int(s)) return std::nullopt;
            return Rat(Int(s));
        }
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) return std::nullopt;
        Int d(den);
        if (d == 0) return std::nullopt;
        return Rat(Int(num), d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace wavecl
