#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nilorb/classify.hpp"
#include "nilorb/finiteness.hpp"
#include "nilorb/invariants.hpp"
#include "nilorb/json_io.hpp"
#include "nilorb/linalg.hpp"
#include "nilorb/normal_form.hpp"
#include "nilorb/poset.hpp"
#include "nilorb/quiver.hpp"
#include "nilorb/sampling.hpp"
#include "nilorb/selftest.hpp"

namespace py = pybind11;
using namespace nilorb;

namespace {

// Matrices cross the boundary as lists of rows; entries are ints or exact
// "p/q" strings, and always come back as strings.
Mat mat_from_py(const py::object& obj) {
    auto rows = obj.cast<std::vector<std::vector<py::object>>>();
    int r = int(rows.size());
    int c = r ? int(rows[0].size()) : 0;
    Mat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (int(rows[i].size()) != c) throw DomainError("ragged matrix");
        for (int j = 0; j < c; ++j) {
            const py::object& v = rows[i][j];
            if (py::isinstance<py::int_>(v))
                m(i, j) = rat_from_string(py::str(v).cast<std::string>());
            else
                m(i, j) = rat_from_string(v.cast<std::string>());
        }
    }
    return m;
}

py::list mat_to_py(const Mat& m) {
    py::list out;
    for (int i = 0; i < m.rows(); ++i) {
        py::list row;
        for (int j = 0; j < m.cols(); ++j) row.append(rat_to_string(m(i, j)));
        out.append(row);
    }
    return out;
}

BlockData blocks_from_py(const std::vector<int>& b) { return BlockData(b); }

SampleKind kind_from_string(const std::string& k) {
    if (k == "parabolic") return SampleKind::Parabolic;
    if (k == "unipotent") return SampleKind::Unipotent;
    if (k == "nilpotent") return SampleKind::Nilpotent;
    throw DomainError("unknown sample kind '" + k + "'");
}

}  // namespace

PYBIND11_MODULE(_nilorb, m) {
    m.doc() = "Exact orbit calculus for parabolic conjugation on nilpotent matrices";

    py::register_exception<DomainError>(m, "DomainError");
    py::register_exception<ParseError>(m, "ParseError");

    m.def("rank", [](const py::object& mat) { return rank(mat_from_py(mat)); });
    m.def("nilpotency_degree", [](const py::object& mat) -> py::object {
        auto d = nilpotency_degree(mat_from_py(mat));
        return d ? py::cast(*d) : py::none();
    });
    m.def("corner_submatrix", [](const py::object& mat, int a, int b) {
        return mat_to_py(corner_submatrix(mat_from_py(mat), a, b));
    });
    m.def("sample", [](const std::string& kind, const std::vector<int>& blocks, int x, uint64_t seed) {
        return mat_to_py(sample(kind_from_string(kind), blocks_from_py(blocks), x, seed));
    });

    m.def("enumerate_orbits", [](const std::vector<int>& blocks) {
        BlockData b = blocks_from_py(blocks);
        py::list out;
        for (const Eolp& e : enumerate_eolps(b)) {
            nlohmann::json j = eolp_to_json(e, b);
            j["dim"] = orbit_dimension(to_multiplicities(e), b);
            out.append(py::module_::import("json").attr("loads")(j.dump()));
        }
        return out;
    });
    m.def("classify", [](const py::object& mat, const std::vector<int>& blocks) {
        BlockData b = blocks_from_py(blocks);
        nlohmann::json j = eolp_to_json(classify(mat_from_py(mat), b), b);
        return py::module_::import("json").attr("loads")(j.dump());
    });
    m.def("representative_matrix", [](const std::string& eolp_json) {
        auto [e, b] = eolp_from_json(nlohmann::json::parse(eolp_json));
        return mat_to_py(representative_matrix(e, b));
    });
    m.def("leq", [](const std::string& a_json, const std::string& b_json) {
        auto [ea, ba] = eolp_from_json(nlohmann::json::parse(a_json));
        auto [eb, bb] = eolp_from_json(nlohmann::json::parse(b_json));
        if (!(ba == bb)) throw DomainError("patterns have different block data");
        return leq_deg(ea, eb, ba);
    });
    m.def("hasse_json", [](const std::vector<int>& blocks) {
        BlockData b = blocks_from_py(blocks);
        return py::module_::import("json").attr("loads")(poset_to_json(hasse(b), b).dump());
    });
    m.def("hasse_dot", [](const std::vector<int>& blocks) {
        BlockData b = blocks_from_py(blocks);
        return to_dot(hasse(b), b);
    });

    m.def("hom_dim_oracle", [](const std::string& label_a, int ia, int ja, const std::string& label_b,
                               int ib, int jb, int p) {
        auto mk = [](const std::string& k, int i, int j) {
            return k == "V" ? IndecLabel::V(i) : IndecLabel::U(i, j);
        };
        return hom_dim_oracle(build_indecomposable(mk(label_a, ia, ja), p),
                              build_indecomposable(mk(label_b, ib, jb), p));
    });

    m.def("is_generic", [](const py::object& mat, const std::vector<int>& blocks) {
        return is_generic(mat_from_py(mat), blocks_from_py(blocks));
    });
    m.def("normal_form", [](const py::object& mat, const std::vector<int>& blocks) {
        GenericNormalForm nf = normal_form(mat_from_py(mat), blocks_from_py(blocks));
        return py::make_tuple(mat_to_py(nf.h), mat_to_py(nf.g));
    });
    m.def("u_normal_form", [](const py::object& mat) {
        UNormalForm un = u_normal_form(mat_from_py(mat));
        return py::make_tuple(mat_to_py(un.h), mat_to_py(un.u));
    });

    m.def("builtin_datum", [](const std::string& name, int n, int i, int j) {
        return datum_to_json(builtin(name, n, i, j)).dump();
    }, py::arg("name"), py::arg("n"), py::arg("i") = 0, py::arg("j") = 0);
    m.def("evaluate_datum", [](const std::string& datum_json, const py::object& mat) {
        return rat_to_string(evaluate(datum_from_json(nlohmann::json::parse(datum_json)), mat_from_py(mat)));
    });
    m.def("datum_weight", [](const std::string& datum_json, int n) {
        return weight(datum_from_json(nlohmann::json::parse(datum_json)), n).omega;
    });
    m.def("is_sum_free", [](const std::string& datum_json) {
        return is_sum_free(datum_from_json(nlohmann::json::parse(datum_json)));
    });
    m.def("toric_check", [](const std::string& datum_json, int n, int trials, uint64_t seed) {
        ToricCheck tc = is_toric_on_samples(datum_from_json(nlohmann::json::parse(datum_json)), n,
                                            trials, seed);
        return py::make_tuple(tc.toric, rat_to_string(tc.error_bound));
    });
    m.def("toric_exponents", [](const std::string& datum_json, int n) {
        ToricData td = toric_exponents(datum_from_json(nlohmann::json::parse(datum_json)), n);
        return py::make_tuple(td.measured, td.predicted, td.match);
    });

    m.def("is_finite", [](const std::vector<int>& blocks, int x) {
        FinitenessVerdict v = is_finite(blocks_from_py(blocks), x);
        py::dict out;
        out["finite"] = v.finite;
        out["reason"] = to_string(v.reason);
        out["witness"] = v.witness ? py::cast(to_string(*v.witness)) : py::none();
        return out;
    });
    m.def("witness_family", [](const std::string& kind, const std::vector<int>& blocks, int x,
                               const std::string& lambda) {
        WitnessKind k = kind == "D" ? WitnessKind::D : kind == "E" ? WitnessKind::E : WitnessKind::F;
        return mat_to_py(witness_family(k, blocks_from_py(blocks), x, rat_from_string(lambda)));
    });
    m.def("are_conjugate", [](const py::object& a, const py::object& b, const std::vector<int>& blocks,
                              uint64_t seed, int trials) {
        ConjugacyResult cr = are_conjugate(mat_from_py(a), mat_from_py(b), blocks_from_py(blocks),
                                           seed, trials);
        py::dict out;
        out["result"] = cr.status == ConjugacyResult::Status::Yes   ? "yes"
                        : cr.status == ConjugacyResult::Status::No ? "no"
                                                                   : "unknown";
        out["g"] = cr.g ? py::object(mat_to_py(*cr.g)) : py::object(py::none());
        out["certificate"] = py::module_::import("json").attr("loads")(cr.certificate.dump());
        return out;
    }, py::arg("a"), py::arg("b"), py::arg("blocks"), py::arg("seed") = 12345, py::arg("trials") = 10);

    m.def("selftest", []() {
        SelftestResult r = run_selftest();
        return py::make_tuple(r.passed, r.failed, r.failures);
    });
}
