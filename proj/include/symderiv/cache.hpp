#pragma once

#include "symderiv/subspace.hpp"
#include "symderiv/tensor.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace symderiv {

/// Text form of a list of homogeneous tensors over one space:
///
///   degree=<d> dim=<count> space=<sympl:g|plain:n>
///   1,5,2,6:-3/2
///   --
///   ...
///
/// Letters are 1-based generator numbers, coefficients are in lowest terms,
/// lines within a tensor are sorted by word index and tensors are separated
/// by a line "--".
std::string serialize_tensors(const Space& space, int degree, const std::vector<Tensor>& tensors);

struct TensorList {
    Space space;
    int degree;
    std::vector<Tensor> tensors;
};
/// Throws std::runtime_error on malformed input.
TensorList parse_tensors(const std::string& text);

/// A SubspaceBasis whose indices are word codes of the given degree.
std::string serialize_basis(const Space& space, int degree, const SubspaceBasis& basis);
SubspaceBasis parse_basis(const std::string& text);

/// Directory of cached tensor lists, one file per key. A default-constructed
/// cache is disabled: every load misses and store does nothing.
class Cache {
public:
    Cache() = default;
    explicit Cache(std::filesystem::path dir);

    /// $SYMDERIV_CACHE if set, else ./.symderiv-cache.
    static std::filesystem::path default_dir();

    bool enabled() const noexcept { return !dir_.empty(); }
    const std::filesystem::path& dir() const noexcept { return dir_; }

    /// Returns the list stored under key if present and it matches the space
    /// and degree.
    std::optional<std::vector<Tensor>> load(const std::string& key, const Space& space, int degree);
    void store(const std::string& key, const Space& space, int degree, const std::vector<Tensor>& tensors);

    std::size_t hits() const noexcept { return hits_; }
    std::size_t misses() const noexcept { return misses_; }

private:
    std::filesystem::path path_for(const std::string& key) const;

    std::filesystem::path dir_;
    std::size_t hits_ = 0;
    std::size_t misses_ = 0;
};

} // namespace symderiv
