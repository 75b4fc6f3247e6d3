#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bsi/dilation.hpp"
#include "bsi/errors.hpp"
#include "bsi/interpolation.hpp"
#include "bsi/io.hpp"
#include "bsi/linalg.hpp"
#include "bsi/structure.hpp"
#include "bsi/torus.hpp"
#include "bsi/vn.hpp"

namespace py = pybind11;
using namespace bsi;

namespace {

using Array = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

CMatrix to_matrix(const Array& a) {
    if (a.ndim() != 2) throw InputError("expected a 2-d array");
    const auto rows = static_cast<std::size_t>(a.shape(0));
    const auto cols = static_cast<std::size_t>(a.shape(1));
    return CMatrix(rows, cols, std::vector<cplx>(a.data(), a.data() + a.size()));
}

Array to_array(const CMatrix& m) {
    Array out({m.rows(), m.cols()});
    std::copy(m.data().begin(), m.data().end(), out.mutable_data());
    return out;
}

std::vector<CMatrix> to_matrices(const std::vector<Array>& arrays) {
    std::vector<CMatrix> out;
    out.reserve(arrays.size());
    for (const auto& a : arrays) out.push_back(to_matrix(a));
    return out;
}

std::vector<Array> to_arrays(const std::vector<CMatrix>& mats) {
    std::vector<Array> out;
    out.reserve(mats.size());
    for (const auto& m : mats) out.push_back(to_array(m));
    return out;
}

// Reports cross the boundary in the same layout as the CLI's JSON.
py::object to_py(const io::Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

io::Json from_py(const py::object& o) {
    return io::Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

ContractionTuple tuple_of(const std::vector<Array>& mats, double tol) {
    return ContractionTuple(to_matrices(mats), Tolerance{tol});
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Discretised interpolation of commuting contractions";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const io::Json::exception& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("kappa", &kappa, py::arg("k"), py::arg("k_prime"), py::arg("n"));
    m.def("koopman_u", [](std::int64_t n, std::size_t d, std::size_t axis, std::int64_t k) {
        return to_array(koopman_u(n, d, axis, k));
    }, py::arg("n"), py::arg("d"), py::arg("axis"), py::arg("k"));
    m.def("projector_p", [](std::int64_t n, std::size_t d, std::size_t axis, std::int64_t k) {
        return to_array(projector_p(n, d, axis, k));
    }, py::arg("n"), py::arg("d"), py::arg("axis"), py::arg("k"));
    m.def("bscr_q", [](std::int64_t n, std::int64_t s, std::int64_t t) { return to_array(bscr_q(n, s, t)); },
          py::arg("n"), py::arg("s_num"), py::arg("t_num"));
    m.def("bscr_check", &bscr_check, py::arg("n"), py::arg("s_num"), py::arg("t_num"));

    m.def("eval_discretized", [](const std::vector<Array>& mats, std::int64_t n, std::vector<std::int64_t> nums,
                                 double tol) {
        const DiscretizedSemigroup sg(tuple_of(mats, tol), n);
        return to_array(eval_discretized(sg, GridTime(n, std::move(nums))));
    }, py::arg("tuple"), py::arg("n"), py::arg("nums"), py::arg("tol") = 1e-10);
    m.def("compress_discretized", [](const std::vector<Array>& mats, std::int64_t n, std::vector<std::int64_t> nums,
                                     double tol) {
        const DiscretizedSemigroup sg(tuple_of(mats, tol), n);
        return to_array(compress_discretized(sg, GridTime(n, std::move(nums))));
    }, py::arg("tuple"), py::arg("n"), py::arg("nums"), py::arg("tol") = 1e-10);
    m.def("multilinear_compress", [](const std::vector<Array>& mats, const std::vector<double>& t, double tol) {
        return to_array(multilinear_compress(tuple_of(mats, tol), t));
    }, py::arg("tuple"), py::arg("t"), py::arg("tol") = 1e-10);
    m.def("check_semigroup_laws", [](const std::vector<Array>& mats, std::int64_t n, std::int64_t max_num,
                                     double tol) {
        const DiscretizedSemigroup sg(tuple_of(mats, tol), n);
        return to_py(io::to_json(check_semigroup_laws(sg, max_num > 0 ? max_num : 2 * n)));
    }, py::arg("tuple"), py::arg("n"), py::arg("max_num") = 0, py::arg("tol") = 1e-10);
    m.def("approx_error_sweep", [](const std::vector<Array>& generators, const std::vector<double>& eps_list,
                                   double tmax, int steps) {
        const auto gens = to_matrices(generators);
        if (gens.empty()) throw InputError("at least one generator is required");
        return to_py(io::to_json(approx_error_sweep(gens, eps_list, cube_time_grid(gens.size(), tmax, steps))));
    }, py::arg("generators"), py::arg("eps_list"), py::arg("tmax"), py::arg("steps"));

    m.def("parrott_tuple", [](const Array& r1, const Array& r2, bool allow_contractive_r2) {
        ParrottOptions opts;
        opts.require_r2_unitary = !allow_contractive_r2;
        const auto p = parrott_tuple(to_matrix(r1), to_matrix(r2), opts);
        return py::make_tuple(to_arrays(p.tuple.mats()), p.warnings);
    }, py::arg("r1"), py::arg("r2"), py::arg("allow_contractive_r2") = false);
    m.def("egervary_dilation", [](const Array& s, unsigned m_copies) {
        return to_py(io::to_json(egervary_dilation(to_matrix(s), m_copies)));
    }, py::arg("s"), py::arg("m") = 6);
    m.def("power_dilation_verify", [](const std::vector<Array>& mats, const py::object& candidate, double tol) {
        const auto cand = io::candidate_from_json(from_py(candidate));
        return to_py(io::to_json(power_dilation_verify(tuple_of(mats, tol), cand, Tolerance{tol})));
    }, py::arg("tuple"), py::arg("candidate"), py::arg("tol") = 1e-10);

    m.def("eval_poly", [](const std::vector<Array>& mats, const py::object& poly, double tol) {
        return to_array(eval_poly(tuple_of(mats, tol), io::poly_from_json(from_py(poly))));
    }, py::arg("tuple"), py::arg("poly"), py::arg("tol") = 1e-10);
    m.def("torus_sup", [](const py::object& poly, std::int64_t grid) {
        const auto ts = torus_sup(io::poly_from_json(from_py(poly)), grid);
        py::dict out;
        out["grid_sup"] = ts.grid_sup;
        out["lipschitz_pad"] = ts.lipschitz_pad;
        out["sup_upper"] = ts.sup_upper;
        return out;
    }, py::arg("poly"), py::arg("grid"));
    m.def("vn_check", [](const std::vector<Array>& mats, const py::object& poly, std::int64_t grid, double tol) {
        return to_py(io::to_json(vn_check(tuple_of(mats, tol), io::poly_from_json(from_py(poly)), grid,
                                          Tolerance{tol})));
    }, py::arg("tuple"), py::arg("poly"), py::arg("grid") = 256, py::arg("tol") = 1e-10);
    m.def("vn_search", [](std::size_t d, std::size_t dim, std::size_t trials, std::uint64_t seed, std::int64_t grid,
                          bool include_crabb_davie) {
        std::vector<VnFixture> fixtures;
        if (include_crabb_davie) fixtures.push_back(crabb_davie_fixture());
        return to_py(io::to_json(vn_search(d, dim, trials, seed, grid, fixtures)));
    }, py::arg("d"), py::arg("dim"), py::arg("trials"), py::arg("seed"), py::arg("grid") = 64,
       py::arg("include_crabb_davie") = false);
    m.def("crabb_davie_fixture", [] {
        const auto fx = crabb_davie_fixture();
        return py::make_tuple(to_arrays(fx.tuple.mats()), to_py(io::to_json(fx.poly)));
    });

    m.def("structure_report", [](const Array& a, double tol) {
        return to_py(io::to_json(structure_report(to_matrix(a), Tolerance{tol})));
    }, py::arg("a"), py::arg("tol") = 1e-10);
    m.def("bimarkov_check", [](const Array& a, double tol) { return bimarkov_check(to_matrix(a), Tolerance{tol}); },
          py::arg("a"), py::arg("tol") = 1e-10);
    m.def("preservation_suite", [](const std::vector<Array>& mats, std::int64_t n, std::int64_t max_num,
                                   double tol) {
        const auto tuple = tuple_of(mats, tol);
        return to_py(io::to_json(preservation_suite(tuple, n, grid_times(n, tuple.d(), max_num > 0 ? max_num : 2 * n))));
    }, py::arg("tuple"), py::arg("n"), py::arg("max_num") = 0, py::arg("tol") = 1e-10);

    m.def("op_norm", [](const Array& a) { return op_norm(to_matrix(a)); }, py::arg("a"));
}
