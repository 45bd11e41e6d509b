#include "symderiv/derivation.hpp"

namespace symderiv {

Derivation::Derivation(Space space, int degree, std::vector<Tensor> images)
    : space_(space), degree_(degree), images_(std::move(images))
{
    if (degree < 0) throw std::invalid_argument("negative derivation degree");
    if (static_cast<int>(images_.size()) != space.dim())
        throw std::invalid_argument("a derivation needs one image per generator");
    for (const auto& t : images_) {
        if (!(t.space() == space)) throw std::invalid_argument("derivation image over a different space");
        if (t.degree() != degree + 1) throw std::invalid_argument("derivation image has the wrong degree");
    }
}

Derivation Derivation::zero(const Space& space, int degree)
{
    return Derivation(space, degree, std::vector<Tensor>(static_cast<std::size_t>(space.dim()), Tensor(space, degree + 1)));
}

bool Derivation::is_zero() const
{
    for (const auto& t : images_)
        if (!t.is_zero()) return false;
    return true;
}

void Derivation::check_compatible(const Derivation& o) const
{
    if (!(space_ == o.space_) || degree_ != o.degree_)
        throw std::invalid_argument("derivations of different spaces or degrees");
}

Derivation& Derivation::operator+=(const Derivation& o)
{
    check_compatible(o);
    for (std::size_t a = 0; a < images_.size(); ++a) images_[a] += o.images_[a];
    return *this;
}

Derivation& Derivation::operator-=(const Derivation& o)
{
    check_compatible(o);
    for (std::size_t a = 0; a < images_.size(); ++a) images_[a] -= o.images_[a];
    return *this;
}

Derivation& Derivation::operator*=(const Scalar& c)
{
    for (auto& t : images_) t *= c;
    return *this;
}

Tensor apply_derivation(const Derivation& d, const Tensor& t)
{
    if (!(d.space() == t.space())) throw std::invalid_argument("derivation and tensor over different spaces");
    const int n = t.space().dim();
    const int deg = t.degree();
    const int k1 = d.degree() + 1;
    const int out_degree = deg + d.degree();
    word_count(n, out_degree);

    // powers[i] = n^i
    std::vector<Index> powers(static_cast<std::size_t>(out_degree + 2), 1);
    for (std::size_t i = 1; i < powers.size(); ++i) powers[i] = powers[i - 1] * static_cast<Index>(n);

    SparseAccumulator acc;
    for (const auto& [idx, c] : t.coefficients().entries()) {
        for (int s = 0; s < deg; ++s) {
            const Index tail = powers[deg - s - 1];
            const Index suffix = idx % tail;
            const Index prefix = idx / (tail * n);
            const auto letter = static_cast<Generator>((idx / tail) % n);
            const Tensor& img = d.image(letter);
            if (img.is_zero()) continue;
            const Index prefix_shift = prefix * powers[k1 + deg - s - 1];
            for (const auto& [j, b] : img.coefficients().entries())
                acc.add(prefix_shift + j * tail + suffix, c * b);
        }
    }
    return Tensor(t.space(), out_degree, acc.take());
}

Derivation bracket(const Derivation& d, const Derivation& e)
{
    if (!(d.space() == e.space())) throw std::invalid_argument("bracket of derivations over different spaces");
    const Space& space = d.space();
    std::vector<Tensor> images;
    images.reserve(static_cast<std::size_t>(space.dim()));
    for (Generator a = 0; a < space.dim(); ++a)
        images.push_back(apply_derivation(d, e.image(a)) - apply_derivation(e, d.image(a)));
    return Derivation(space, d.degree() + e.degree(), std::move(images));
}

bool kills_omega0(const Derivation& d) { return apply_derivation(d, omega0(d.space())).is_zero(); }

Tensor dual_tensor(const Derivation& d)
{
    const Space& space = d.space();
    const int g = space.genus();
    Tensor out(space, d.degree() + 2);
    for (int i = 1; i <= g; ++i) {
        out += product(Tensor::generator(space, space.x(i)), d.image(space.y(i)));
        out -= product(Tensor::generator(space, space.y(i)), d.image(space.x(i)));
    }
    return out;
}

Derivation from_dual_tensor_unchecked(const Tensor& t)
{
    const Space& space = t.space();
    if (!space.is_symplectic()) throw std::logic_error("dual tensors need a symplectic space");
    if (t.degree() < 2) throw std::invalid_argument("dual tensor must have degree >= 2");
    const int n = space.dim();
    const int k1 = t.degree() - 1;
    const Index tail = word_count(n, k1);
    std::vector<SparseAccumulator> acc(static_cast<std::size_t>(n));
    for (const auto& [idx, c] : t.coefficients().entries()) {
        const auto first = static_cast<Generator>(idx / tail);
        const Index rest = idx % tail;
        // only u with u . first != 0 receives this term
        for (Generator u = 0; u < n; ++u) {
            int s = space.pairing_sign(u, first);
            if (s != 0) acc[u].add(rest, s > 0 ? Scalar(-c) : c);
        }
    }
    std::vector<Tensor> images;
    images.reserve(static_cast<std::size_t>(n));
    for (Generator u = 0; u < n; ++u) images.emplace_back(space, k1, acc[u].take());
    return Derivation(space, k1 - 1, std::move(images));
}

Derivation from_dual_tensor(const Tensor& t)
{
    if (!is_cyclic_invariant(t)) throw NotCyclicInvariant("from_dual_tensor: tensor is not cyclic-invariant");
    return from_dual_tensor_unchecked(t);
}

std::vector<Derivation> basis_a(int genus, int degree)
{
    if (degree < 1) throw std::invalid_argument("basis_a needs degree >= 1");
    CyclicOrbitIndex orbits(Space::symplectic(genus), degree + 2);
    std::vector<Derivation> out;
    out.reserve(orbits.size());
    for (std::size_t o = 0; o < orbits.size(); ++o) out.push_back(from_dual_tensor_unchecked(orbits.orbit_sum(o)));
    return out;
}

// ---------------------------------------------------------------------------

DualForm DualForm::basis(int n, Generator j)
{
    DualForm f;
    f.values.assign(static_cast<std::size_t>(n), Scalar(0));
    f.values.at(static_cast<std::size_t>(j)) = 1;
    return f;
}

namespace {

void require_plain(const Space& space)
{
    if (space.is_symplectic()) throw std::logic_error("operation is defined on plain spaces only");
}

} // namespace

Derivation simple_plain_derivation(const Space& space, const DualForm& f, const Tensor& u)
{
    require_plain(space);
    if (static_cast<int>(f.values.size()) != space.dim()) throw std::invalid_argument("dual form of the wrong size");
    if (u.degree() < 1) throw std::invalid_argument("derivation image must have degree >= 1");
    std::vector<Tensor> images;
    for (Generator a = 0; a < space.dim(); ++a) images.push_back(f(a) * u);
    return Derivation(space, u.degree() - 1, std::move(images));
}

std::vector<Derivation> basis_der_plain(int n, int degree)
{
    if (degree < 0) throw std::invalid_argument("negative degree");
    Space space = Space::plain(n);
    const Index words = word_count(n, degree + 1);
    std::vector<Derivation> out;
    out.reserve(static_cast<std::size_t>(words) * static_cast<std::size_t>(n));
    for (Generator j = 0; j < n; ++j) {
        for (Index w = 0; w < words; ++w) {
            Derivation d = Derivation::zero(space, degree);
            std::vector<Tensor> images = d.images();
            images[j] = Tensor(space, degree + 1, SparseVector::unit(w));
            out.emplace_back(space, degree, std::move(images));
        }
    }
    return out;
}

SparseVector plain_coordinates(const Derivation& d)
{
    require_plain(d.space());
    const Index words = word_count(d.space().dim(), d.degree() + 1);
    std::vector<SparseVector::Entry> entries;
    for (Generator j = 0; j < d.space().dim(); ++j)
        for (const auto& [w, c] : d.image(j).coefficients().entries())
            entries.emplace_back(static_cast<Index>(j) * words + w, c);
    return SparseVector::from_entries(std::move(entries));
}

Derivation from_plain_coordinates(const Space& space, int degree, const SparseVector& coords)
{
    require_plain(space);
    const Index words = word_count(space.dim(), degree + 1);
    std::vector<std::vector<SparseVector::Entry>> parts(static_cast<std::size_t>(space.dim()));
    for (const auto& [i, c] : coords.entries()) {
        if (i / words >= static_cast<Index>(space.dim())) throw std::out_of_range("plain coordinate out of range");
        parts[i / words].emplace_back(i % words, c);
    }
    std::vector<Tensor> images;
    for (auto& p : parts) images.emplace_back(space, degree + 1, SparseVector::from_entries(std::move(p)));
    return Derivation(space, degree, std::move(images));
}

Derivation bracket_plain(const Derivation& d, const Derivation& e)
{
    require_plain(d.space());
    require_plain(e.space());
    return bracket(d, e);
}

Tensor c13_plain(const Derivation& d)
{
    require_plain(d.space());
    if (d.degree() != 2) throw std::invalid_argument("c13_plain is defined on degree-2 derivations");
    const int n = d.space().dim();
    SparseAccumulator acc;
    for (Generator f = 0; f < n; ++f) {
        // f = e_f^*; it pairs with the middle letter u_2 of each image word
        for (const auto& [idx, c] : d.image(f).coefficients().entries()) {
            Word w = decode_word(idx, n, 3);
            if (w[1] != f) continue;
            Generator kept[2] = {w[0], w[2]};
            acc.add(encode_word(kept, n), c);
        }
    }
    return Tensor(d.space(), 2, acc.take());
}

} // namespace symderiv
