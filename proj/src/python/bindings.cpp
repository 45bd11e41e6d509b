#include "symderiv/commands.hpp"
#include "symderiv/free_lie.hpp"
#include "symderiv/homology.hpp"
#include "symderiv/modular.hpp"
#include "symderiv/rep_theory.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace symderiv;

namespace {

// tuple of 1-based letters -> "p/q"
py::dict tensor_terms(const Tensor& t)
{
    py::dict out;
    t.for_each_term([&](const Word& w, const Scalar& c) {
        py::tuple letters(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) letters[i] = w[i] + 1;
        out[letters] = to_fraction_string(c);
    });
    return out;
}

AlgebraHandle handle(const std::string& kind, int parameter)
{
    if (kind == "a") return AlgebraHandle::a(parameter);
    if (kind == "l") return AlgebraHandle::l(parameter);
    if (kind == "der") return AlgebraHandle::der(parameter);
    throw py::value_error("algebra kind must be 'a', 'l' or 'der'");
}

std::string scalar_text(const Scalar& s) { return to_fraction_string(s); }

CommandContext context(Cache& cache, const std::string& tier, unsigned threads)
{
    if (tier != "fast" && tier != "full") throw py::value_error("tier must be 'fast' or 'full'");
    return {&cache, threads, tier == "full" ? Tier::Full : Tier::Fast};
}

} // namespace

PYBIND11_MODULE(_symderiv, m)
{
    m.doc() = "Exact computations with symplectic derivation Lie algebras";
    m.attr("__version__") = version();

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<RankDisagreement>(m, "RankDisagreement", PyExc_RuntimeError);

    py::class_<Tensor>(m, "Tensor")
        .def_property_readonly("degree", &Tensor::degree)
        .def_property_readonly("space", [](const Tensor& t) { return t.space().tag(); })
        .def("terms", &tensor_terms, "Map from 1-based letter tuples to 'p/q' coefficients")
        .def("is_zero", &Tensor::is_zero)
        .def("__len__", &Tensor::term_count)
        .def("__eq__", [](const Tensor& a, const Tensor& b) { return a == b; })
        .def("__repr__", &Tensor::to_string);

    m.def("necklace_count", &necklace_count, py::arg("n"), py::arg("m"));
    m.def("witt_number", &witt_number, py::arg("n"), py::arg("d"));
    m.def("lyndon_words", [](int n, int d) {
        std::vector<std::vector<int>> out;
        for (const auto& w : lyndon_words(n, d)) out.emplace_back(w.begin(), w.end());
        return out;
    }, py::arg("n"), py::arg("d"));
    m.def("omega0", [](int g) { return omega0(Space::symplectic(g)); }, py::arg("genus"));
    m.def("cyclic_shift", &cyclic_shift);
    m.def("is_cyclic_invariant", &is_cyclic_invariant);

    m.def("dim_a", [](int g, int k) { return CyclicOrbitIndex(Space::symplectic(g), k + 2).size(); },
          py::arg("genus"), py::arg("degree"));
    m.def("dim_l", [](int g, int k) { return lie_derivation_dimension(g, k).dim(); }, py::arg("genus"),
          py::arg("degree"));
    m.def("degree_basis", [](const std::string& kind, int parameter, int degree) {
        return degree_basis(handle(kind, parameter), degree);
    }, py::arg("kind"), py::arg("parameter"), py::arg("degree"));
    m.def("bracket", [](const std::string& kind, int parameter, const Tensor& a, const Tensor& b) {
        return bracket_element(handle(kind, parameter), a, b);
    }, py::arg("kind"), py::arg("parameter"), py::arg("a"), py::arg("b"));

    m.def("h1_weight", [](const std::string& kind, int parameter, int weight) {
        const H1Result r = h1_weight(handle(kind, parameter), weight);
        py::dict d;
        d["algebra"] = r.algebra.name();
        d["weight"] = r.weight;
        d["ambient_dim"] = r.ambient_dim;
        d["image_dim"] = r.image_dim;
        d["quotient_dim"] = r.quotient_dim;
        d["method"] = r.method;
        d["representatives"] = r.representatives;
        return d;
    }, py::arg("kind"), py::arg("parameter"), py::arg("weight"));

    m.def("verify_exact_sequence", [](int g, std::optional<std::string> cache_dir) {
        Cache cache = cache_dir ? Cache(*cache_dir) : Cache();
        ExactSequenceOptions opts;
        opts.cache = &cache;
        const ExactSequenceReport r = verify_exact_sequence(g, opts);
        py::dict d;
        d["genus"] = r.genus;
        d["pairs_checked"] = r.pairs_checked;
        d["c13_nonzero"] = r.c13_nonzero;
        d["c13_rank"] = r.c13_rank;
        d["ambient_dim"] = r.ambient_dim;
        d["image_dim"] = r.image_dim;
        d["certified"] = r.certified;
        d["exact"] = r.exact();
        d["method"] = r.method;
        d["cache_hit"] = r.cache_hit;
        return d;
    }, py::arg("genus"), py::arg("cache_dir") = py::none());

    m.def("polygon_contract", [](int k, std::optional<int> g, bool symmetric) {
        return scalar_text(polygon_contract(k, g.value_or(k), symmetric ? FactorKind::Symmetric : FactorKind::Wedge));
    }, py::arg("k"), py::arg("genus") = py::none(), py::arg("symmetric") = false);
    m.def("disconnected_contract", [](int k1, int k2) { return scalar_text(disconnected_contract(k1, k2, k1 + k2)); },
          py::arg("k1"), py::arg("k2"));

    m.def("weyl_dim", [](const std::string& label, int g) { return weyl_dim(IrrepLabel::parse(label), g); },
          py::arg("label"), py::arg("genus"));
    m.def("named_vector_identities", [](int g) {
        std::vector<std::tuple<std::string, std::string, bool>> out;
        for (const auto& id : named_vector_identities(named_vectors(g))) out.emplace_back(id.name, id.group, id.holds);
        return out;
    }, py::arg("genus") = 4);

    // commands return the report as a JSON string
    m.def("run_dims", [](std::optional<int> genus, std::optional<int> plain, int max_degree) {
        Cache cache;
        DimsParams p{genus, plain, 1, max_degree};
        return cmd_dims(p, context(cache, "fast", 1)).dump(false);
    }, py::arg("genus") = py::none(), py::arg("plain") = py::none(), py::arg("max_degree") = 3);
    m.def("run_polygon", [](int k_min, int k_max, bool symmetric) {
        Cache cache;
        return cmd_polygon(k_min, k_max, symmetric ? FactorKind::Symmetric : FactorKind::Wedge,
                           context(cache, "fast", 1))
            .dump(false);
    }, py::arg("k_min"), py::arg("k_max"), py::arg("symmetric") = false);
    m.def("run_conjecture", [](int n) {
        Cache cache;
        return cmd_conjecture(n, context(cache, "fast", 1)).dump(false);
    }, py::arg("n"));
    m.def("run_decompose", [](int g) {
        Cache cache;
        return cmd_decompose(g, context(cache, "fast", 1)).dump(false);
    }, py::arg("genus"));
    m.def("run_verify_paper", [](const std::string& tier, std::optional<std::string> cache_dir) {
        Cache cache = cache_dir ? Cache(*cache_dir) : Cache();
        return cmd_verify_paper(context(cache, tier, 1)).dump(false);
    }, py::arg("tier") = "fast", py::arg("cache_dir") = py::none());
}
