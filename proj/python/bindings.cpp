#include "canord/cycliccover.hpp"
#include "canord/lattice.hpp"
#include "canord/mckay.hpp"
#include "canord/ramdata.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace canord;

namespace {

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

CanonicalType make_type(const std::string& family, int n, int e, const std::string& group) {
    Family f = parse_family(family);
    CanonicalType t;
    switch (f) {
        case Family::A12: t = CanonicalType::a12(e); break;
        case Family::Anz: t = CanonicalType::anz(n, e); break;
        case Family::ADE:
            if (group.size() < 2) throw std::invalid_argument("the ADE row needs a group such as 'E6'");
            t = CanonicalType::ade(group[0], std::stoi(group.substr(1)));
            break;
        default: t = CanonicalType::with_n(f, n);
    }
    t.validate();
    return t;
}

}  // namespace

PYBIND11_MODULE(_canord, m) {
    m.doc() = "Reflexive module counts for canonical orders, checked against the group side";

    m.def(
        "verify",
        [](const std::string& family, int n, int e, const std::string& group) {
            McKayReport r = verify(make_type(family, n, e, group));
            py::dict d = to_python(to_json(r));
            d["ok"] = r.ok();
            return d;
        },
        py::arg("family"), py::arg("n") = 0, py::arg("e") = 0, py::arg("group") = "");

    m.def(
        "count_from_group",
        [](const std::string& family, int n, int e, const std::string& group) {
            return count_from_group(make_type(family, n, e, group));
        },
        py::arg("family"), py::arg("n") = 0, py::arg("e") = 0, py::arg("group") = "");

    m.def(
        "count_from_resolution",
        [](const std::string& family, int n, int e, const std::string& group) {
            CanonicalType t = make_type(family, n, e, group);
            return count_from_resolution(resolution_ram(t), t).total;
        },
        py::arg("family"), py::arg("n") = 0, py::arg("e") = 0, py::arg("group") = "");

    m.def(
        "resolution",
        [](const std::string& family, int n, int e, const std::string& group) {
            return to_python(to_json(resolution_ram(make_type(family, n, e, group))));
        },
        py::arg("family"), py::arg("n") = 0, py::arg("e") = 0, py::arg("group") = "");

    m.def(
        "lattice_dot",
        [](const std::string& family, int n, int e, const std::string& group) {
            ResolutionRamData res = resolution_ram(make_type(family, n, e, group));
            return to_dot(res.lattice, res.ram);
        },
        py::arg("family"), py::arg("n") = 0, py::arg("e") = 0, py::arg("group") = "");

    m.def("mckay_quiver", [](char letter, int rank) {
        McKayQuiver q = mckay_quiver(ade_group(letter, rank));
        py::dict d;
        d["dims"] = q.dims;
        d["adjacency"] = q.adjacency;
        d["trivial"] = q.trivial;
        d["affine"] = graphs_isomorphic(q.adjacency, affine_diagram(letter, rank));
        return d;
    });

    m.def("fundamental_cycle", [](char letter, int rank) {
        IntersectionLattice lat = ade_config(letter, rank);
        std::vector<int> ex = lat.exceptional();
        Divisor z = fundamental_cycle(lat, ex);
        std::vector<long> out;
        for (int i : ex) out.push_back(z[i]);
        return out;
    });

    m.def(
        "cover_structure_check",
        [](int e, int n, int d) {
            CoverReport r = cover_structure_check(e, n, d);
            py::dict out;
            out["ok"] = r.ok;
            out["failures"] = r.failures;
            out["checked_products"] = r.checked_products;
            out["checked_triples"] = r.checked_triples;
            return out;
        },
        py::arg("e"), py::arg("n"), py::arg("d") = 12);

    py::register_exception<CapExceeded>(m, "CapExceeded");
}
