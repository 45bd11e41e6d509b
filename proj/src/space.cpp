#include "symderiv/space.hpp"

#include <stdexcept>

namespace symderiv {

Space Space::symplectic(int genus)
{
    if (genus < 1) throw std::invalid_argument("symplectic space needs genus >= 1");
    return Space(SpaceKind::Symplectic, 2 * genus);
}

Space Space::plain(int dim)
{
    if (dim < 2) throw std::invalid_argument("plain space needs dimension >= 2");
    return Space(SpaceKind::Plain, dim);
}

int Space::genus() const
{
    if (!is_symplectic()) throw std::logic_error("genus of a plain space");
    return dim_ / 2;
}

Generator Space::x(int i) const
{
    if (i < 1 || i > genus()) throw std::out_of_range("x index out of range");
    return i - 1;
}

Generator Space::y(int i) const
{
    if (i < 1 || i > genus()) throw std::out_of_range("y index out of range");
    return genus() + i - 1;
}

Generator Space::e(int i) const
{
    if (is_symplectic()) throw std::logic_error("e_i requested on a symplectic space");
    if (i < 1 || i > dim_) throw std::out_of_range("e index out of range");
    return i - 1;
}

void Space::check_generator(Generator a) const
{
    if (a < 0 || a >= dim_) throw std::out_of_range("generator index out of range");
}

std::string Space::label(Generator a) const
{
    check_generator(a);
    if (!is_symplectic()) return "e" + std::to_string(a + 1);
    int g = dim_ / 2;
    return a < g ? "x" + std::to_string(a + 1) : "y" + std::to_string(a - g + 1);
}

std::string Space::tag() const
{
    return is_symplectic() ? "sympl:" + std::to_string(dim_ / 2) : "plain:" + std::to_string(dim_);
}

int Space::pairing_sign(Generator a, Generator b) const
{
    if (!is_symplectic()) throw std::logic_error("pairing is only defined on symplectic spaces");
    check_generator(a);
    check_generator(b);
    int g = dim_ / 2;
    if (a < g && b == a + g) return 1;
    if (a >= g && b == a - g) return -1;
    return 0;
}

Scalar pairing(const Space& space, Generator a, Generator b) { return space.pairing_sign(a, b); }

} // namespace symderiv
