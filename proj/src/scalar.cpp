#include "symderiv/scalar.hpp"

#include <stdexcept>

namespace symderiv {

std::string to_fraction_string(const Scalar& s)
{
    Scalar c = s;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Scalar parse_fraction(std::string_view text)
{
    auto valid_integer = [](std::string_view t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den[0] == '-')
        throw std::invalid_argument("malformed rational: " + std::string(text));
    std::string n(num.front() == '+' ? num.substr(1) : num);
    std::string d(den.front() == '+' ? den.substr(1) : den);
    mpz_class zn(n, 10), zd(d, 10);
    if (zd == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    Scalar q(zn, zd);
    q.canonicalize();
    return q;
}

} // namespace symderiv
