#include "symderiv/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace symderiv {

namespace {

Space parse_space(const std::string& tag)
{
    const auto colon = tag.find(':');
    if (colon == std::string::npos) throw std::runtime_error("cache: bad space tag " + tag);
    const std::string kind = tag.substr(0, colon);
    const int value = std::stoi(tag.substr(colon + 1));
    if (kind == "sympl") return Space::symplectic(value);
    if (kind == "plain") return Space::plain(value);
    throw std::runtime_error("cache: bad space tag " + tag);
}

void write_vector(std::ostream& out, const SparseVector& v, int n, int degree)
{
    for (const auto& [idx, c] : v.entries()) {
        const Word w = decode_word(idx, n, degree);
        for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << w[i] + 1;
        out << ':' << to_fraction_string(c) << '\n';
    }
}

struct Parsed {
    Space space;
    int degree;
    std::vector<SparseVector> vectors;
};

Parsed parse_vectors(const std::string& text)
{
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error("cache: empty input");
    int degree = -1;
    long count = -1;
    std::string tag;
    std::istringstream hs(header);
    for (std::string field; hs >> field;) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) throw std::runtime_error("cache: bad header field " + field);
        const std::string key = field.substr(0, eq), value = field.substr(eq + 1);
        if (key == "degree") degree = std::stoi(value);
        else if (key == "dim") count = std::stol(value);
        else if (key == "space") tag = value;
        else throw std::runtime_error("cache: unknown header field " + key);
    }
    if (degree < 0 || count < 0 || tag.empty()) throw std::runtime_error("cache: incomplete header");
    Parsed out{parse_space(tag), degree, {}};
    const int n = out.space.dim();

    // separators sit between entries, so a nonempty list always ends with one
    std::vector<SparseVector::Entry> current;
    auto flush = [&] {
        out.vectors.push_back(SparseVector::from_entries(std::move(current)));
        current.clear();
    };
    for (std::string line; std::getline(in, line);) {
        if (line == "--") {
            flush();
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw std::runtime_error("cache: bad line " + line);
        Word w;
        std::istringstream ls(line.substr(0, colon));
        for (std::string letter; std::getline(ls, letter, ',');) {
            const int a = std::stoi(letter);
            if (a < 1 || a > n) throw std::runtime_error("cache: letter out of range in " + line);
            w.push_back(a - 1);
        }
        if (static_cast<int>(w.size()) != degree) throw std::runtime_error("cache: word of wrong length in " + line);
        current.emplace_back(encode_word(w, n), parse_fraction(line.substr(colon + 1)));
    }
    if (count > 0) flush();
    if (out.vectors.size() != static_cast<std::size_t>(count))
        throw std::runtime_error("cache: header promises " + std::to_string(count) + " entries, found " +
                                 std::to_string(out.vectors.size()));
    return out;
}

std::string serialize_vectors(const Space& space, int degree, const std::vector<SparseVector>& vectors)
{
    std::ostringstream out;
    out << "degree=" << degree << " dim=" << vectors.size() << " space=" << space.tag() << '\n';
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (i) out << "--\n";
        write_vector(out, vectors[i], space.dim(), degree);
    }
    return out.str();
}

} // namespace

std::string serialize_tensors(const Space& space, int degree, const std::vector<Tensor>& tensors)
{
    std::vector<SparseVector> vs;
    vs.reserve(tensors.size());
    for (const auto& t : tensors) {
        if (!(t.space() == space) || t.degree() != degree) throw std::invalid_argument("serialize_tensors: mixed tensors");
        vs.push_back(t.coefficients());
    }
    return serialize_vectors(space, degree, vs);
}

TensorList parse_tensors(const std::string& text)
{
    Parsed p = parse_vectors(text);
    TensorList out{p.space, p.degree, {}};
    for (auto& v : p.vectors) out.tensors.emplace_back(p.space, p.degree, std::move(v));
    return out;
}

std::string serialize_basis(const Space& space, int degree, const SubspaceBasis& basis)
{
    return serialize_vectors(space, degree, basis.vectors());
}

SubspaceBasis parse_basis(const std::string& text)
{
    SubspaceBasis basis;
    for (const auto& v : parse_vectors(text).vectors) basis.insert(v);
    return basis;
}

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path Cache::default_dir()
{
    if (const char* env = std::getenv("SYMDERIV_CACHE"); env && *env) return env;
    return ".symderiv-cache";
}

std::filesystem::path Cache::path_for(const std::string& key) const
{
    std::string name;
    for (char c : key) name += std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' ? c : '_';
    return dir_ / (name + ".txt");
}

std::optional<std::vector<Tensor>> Cache::load(const std::string& key, const Space& space, int degree)
{
    if (!enabled()) return std::nullopt;
    std::ifstream in(path_for(key));
    if (!in) {
        ++misses_;
        return std::nullopt;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        TensorList list = parse_tensors(buf.str());
        if (!(list.space == space) || list.degree != degree) {
            ++misses_;
            return std::nullopt;
        }
        ++hits_;
        return std::move(list.tensors);
    } catch (const std::exception&) {
        // unreadable entries are treated as absent and later overwritten
        ++misses_;
        return std::nullopt;
    }
}

void Cache::store(const std::string& key, const Space& space, int degree, const std::vector<Tensor>& tensors)
{
    if (!enabled()) return;
    std::filesystem::create_directories(dir_);
    const auto target = path_for(key);
    const auto tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cache: cannot write " + tmp);
        out << serialize_tensors(space, degree, tensors);
    }
    std::filesystem::rename(tmp, target);
}

} // namespace symderiv
