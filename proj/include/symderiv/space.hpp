#pragma once

#include "symderiv/scalar.hpp"

#include <string>

namespace symderiv {

/// Generator index: 0-based position in the ordered basis of H.
/// Symplectic(g) orders it x_1 .. x_g, y_1 .. y_g; Plain(n) as e_1 .. e_n.
using Generator = int;

enum class SpaceKind { Symplectic, Plain };

/// The rational vector space H with a distinguished basis.
class Space {
public:
    static Space symplectic(int genus);
    static Space plain(int dim);

    SpaceKind kind() const noexcept { return kind_; }
    bool is_symplectic() const noexcept { return kind_ == SpaceKind::Symplectic; }
    int dim() const noexcept { return dim_; }
    /// Throws std::logic_error on a plain space.
    int genus() const;

    /// 1-based symplectic generators x_i, y_i.
    Generator x(int i) const;
    Generator y(int i) const;
    /// 1-based e_i on plain spaces.
    Generator e(int i) const;

    /// "x3", "y1", "e2".
    std::string label(Generator a) const;
    /// "sympl:g" or "plain:n".
    std::string tag() const;

    /// Intersection pairing a.b in {-1, 0, 1}. Throws on plain spaces.
    int pairing_sign(Generator a, Generator b) const;

    friend bool operator==(const Space& a, const Space& b) { return a.kind_ == b.kind_ && a.dim_ == b.dim_; }

private:
    Space(SpaceKind kind, int dim) : kind_(kind), dim_(dim) {}
    void check_generator(Generator a) const;

    SpaceKind kind_;
    int dim_;
};

/// x_i . y_j = delta_ij, y_i . x_j = -delta_ij, all other pairings zero.
Scalar pairing(const Space& space, Generator a, Generator b);

} // namespace symderiv
