#pragma once

#include "symderiv/tensor.hpp"

#include <stdexcept>
#include <vector>

namespace symderiv {

/// A tensor that should be fixed by the cyclic shift is not.
class NotCyclicInvariant : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Degree-k derivation of the tensor algebra T(H), stored by the images of
/// the generators (each of degree k+1) and extended by the Leibniz rule.
class Derivation {
public:
    Derivation(Space space, int degree, std::vector<Tensor> images);
    static Derivation zero(const Space& space, int degree);

    const Space& space() const noexcept { return space_; }
    int degree() const noexcept { return degree_; }
    const Tensor& image(Generator a) const { return images_.at(static_cast<std::size_t>(a)); }
    const std::vector<Tensor>& images() const noexcept { return images_; }
    bool is_zero() const;

    Derivation& operator+=(const Derivation& o);
    Derivation& operator-=(const Derivation& o);
    Derivation& operator*=(const Scalar& c);
    friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
    friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
    friend Derivation operator*(const Scalar& c, Derivation d) { return d *= c; }
    friend bool operator==(const Derivation& a, const Derivation& b)
    {
        return a.space_ == b.space_ && a.degree_ == b.degree_ && a.images_ == b.images_;
    }

private:
    void check_compatible(const Derivation& o) const;

    Space space_;
    int degree_;
    std::vector<Tensor> images_;
};

/// D(u_1 (x) ... (x) u_d) = sum_s u_1 (x) .. D(u_s) .. (x) u_d.
Tensor apply_derivation(const Derivation& d, const Tensor& t);

/// [D, E] = D o E - E o D, computed generator by generator.
Derivation bracket(const Derivation& d, const Derivation& e);

/// True iff D(omega_0) = 0 (symplectic spaces only).
bool kills_omega0(const Derivation& d);

/// D* = sum_i x_i (x) D(y_i) - y_i (x) D(x_i), a tensor of degree k+2.
/// D(omega_0) = D* - sigma(D*), so D kills omega_0 iff D* is cyclic-invariant.
Tensor dual_tensor(const Derivation& d);

/// Inverse of dual_tensor: D(u) = -sum over terms of T of (u . slot_1) times
/// the remaining slots. Throws NotCyclicInvariant unless T is fixed by the
/// cyclic shift.
Derivation from_dual_tensor(const Tensor& t);
/// Same correspondence without the invariance requirement (it is a bijection
/// Hom(H, H^{(x)(k+1)}) <-> H^{(x)(k+2)}).
Derivation from_dual_tensor_unchecked(const Tensor& t);

/// Basis of a_g(k): one derivation per cyclic orbit of words of length k+2,
/// ordered by orbit representative.
std::vector<Derivation> basis_a(int genus, int degree);

// --- derivations of T(H_n) with no symplectic constraint -------------------

/// An element f of the dual space H_n^*, by its values on e_1 .. e_n.
struct DualForm {
    std::vector<Scalar> values;

    static DualForm basis(int n, Generator j);
    Scalar operator()(Generator a) const { return values.at(static_cast<std::size_t>(a)); }
};

/// The derivation f (x) u: w -> f(w) u.
Derivation simple_plain_derivation(const Space& space, const DualForm& f, const Tensor& u);

/// Standard basis e_j^* (x) w of Der(T(H_n))(k), ordered by (j, w); size n^{k+2}.
std::vector<Derivation> basis_der_plain(int n, int degree);

/// Coordinates in H_n^* (x) H_n^{(x)(k+1)}: index j * n^{k+1} + code(w).
SparseVector plain_coordinates(const Derivation& d);
Derivation from_plain_coordinates(const Space& space, int degree, const SparseVector& coords);

/// Bracket restricted to plain spaces (rejects symplectic inputs).
Derivation bracket_plain(const Derivation& d, const Derivation& e);

/// C13(f (x) u_1 (x) u_2 (x) u_3) = f(u_2) u_1 (x) u_3 on Der(T(H_n))(2).
Tensor c13_plain(const Derivation& d);

} // namespace symderiv
