#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kgraphlab/graph_io.hpp"
#include "kgraphlab/reports.hpp"

namespace py = pybind11;
using namespace kgraphlab;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case nlohmann::detail::value_t::null: return py::none();
        case nlohmann::detail::value_t::boolean: return py::bool_(j.get<bool>());
        case nlohmann::detail::value_t::number_integer: return py::int_(j.get<long long>());
        case nlohmann::detail::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case nlohmann::detail::value_t::number_float: return py::float_(j.get<double>());
        case nlohmann::detail::value_t::string: return py::str(j.get<std::string>());
        case nlohmann::detail::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case nlohmann::detail::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it) out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

std::set<Path> to_path_set(const KGraph& g, const std::vector<std::string>& literals) {
    std::set<Path> out;
    for (const auto& s : literals) out.insert(g.parse_path(s));
    return out;
}

std::vector<std::string> from_path_set(const KGraph& g, const std::set<Path>& paths) {
    std::vector<std::string> out;
    for (const Path& p : paths) out.push_back(g.path_str(p));
    return out;
}

std::set<FESet> to_collection(const KGraph& g, const std::vector<std::vector<std::string>>& sets) {
    std::set<FESet> out;
    for (const auto& s : sets) out.insert(make_fe_set(g, to_path_set(g, s)));
    return out;
}

std::vector<std::vector<std::string>> from_collection(const KGraph& g, const std::set<FESet>& col) {
    std::vector<std::vector<std::string>> out;
    for (const FESet& E : col) out.push_back(from_path_set(g, E.elements));
    return out;
}

int vertex_of(const KGraph& g, const std::string& name) {
    auto it = g.vertex_id.find(name);
    if (it == g.vertex_id.end()) throw Error(ErrorCode::InvalidArgument, "unknown vertex '" + name + "'");
    return it->second;
}

Degree to_degree(const KGraph& g, const std::vector<int>& coords) {
    if (static_cast<int>(coords.size()) != g.k)
        throw Error(ErrorCode::InvalidArgument, "degree rank does not match the graph");
    return Degree(coords);
}

}  // namespace

PYBIND11_MODULE(kgraphlab, m) {
    m.doc() = "path algebra, satiation closures and truncated twisted Toeplitz families for finite k-graphs";

    py::register_exception<Error>(m, "KGraphError");

    py::class_<Path>(m, "Path")
        .def_property_readonly("degree", [](const Path& p) { return p.degree.coords; })
        .def("is_vertex", &Path::is_vertex)
        .def(py::self == py::self)
        .def(py::self < py::self);

    py::class_<KGraph>(m, "KGraph")
        .def_property_readonly("k", [](const KGraph& g) { return g.k; })
        .def_property_readonly("vertices", [](const KGraph& g) { return g.vertex_names; })
        .def_property_readonly("edges",
                               [](const KGraph& g) {
                                   std::vector<std::string> out;
                                   for (const auto& e : g.edges) out.push_back(e.name);
                                   return out;
                               })
        .def("path", &KGraph::parse_path)
        .def("path_str", &KGraph::path_str)
        .def("compose", &KGraph::compose)
        .def("segment",
             [](const KGraph& g, const Path& p, const std::vector<int>& m, const std::vector<int>& n) {
                 return g.segment(p, to_degree(g, m), to_degree(g, n));
             })
        .def("paths_of_degree",
             [](const KGraph& g, const std::optional<std::string>& vertex, const std::vector<int>& n) {
                 std::optional<int> v;
                 if (vertex) v = vertex_of(g, *vertex);
                 return from_path_set(g, g.paths_of_degree(v, to_degree(g, n)));
             },
             py::arg("vertex"), py::arg("degree"))
        .def("paths_up_to", [](const KGraph& g, const std::vector<int>& bound) {
            return from_path_set(g, g.paths_up_to(to_degree(g, bound)));
        })
        .def("to_text", [](const KGraph& g) { return graph_to_text(g); })
        .def("__repr__", [](const KGraph& g) {
            return "<KGraph k=" + std::to_string(g.k) + " |V|=" + std::to_string(g.num_vertices()) + " |E|=" +
                   std::to_string(g.edges.size()) + ">";
        });

    m.def("load_graph", &load_graph_file, py::arg("path"));
    m.def("parse_graph", &parse_graph_text, py::arg("text"));

    m.def("lambda_min", [](const KGraph& g, const std::string& mu, const std::string& nu) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const MinPair& p : lambda_min(g, g.parse_path(mu), g.parse_path(nu)))
            out.emplace_back(g.path_str(p.alpha), g.path_str(p.beta));
        return out;
    });
    m.def("mce", [](const KGraph& g, const std::string& mu, const std::string& nu) {
        return from_path_set(g, mce(g, g.parse_path(mu), g.parse_path(nu)));
    });
    m.def("ext", [](const KGraph& g, const std::string& mu, const std::vector<std::string>& E) {
        return from_path_set(g, ext(g, g.parse_path(mu), to_path_set(g, E)));
    });
    m.def("mce_of_set", [](const KGraph& g, const std::vector<std::string>& F) {
        return from_path_set(g, mce_of_set(g, to_path_set(g, F)));
    });
    m.def("vee_closure", [](const KGraph& g, const std::vector<std::string>& F) {
        return from_path_set(g, vee_closure(g, to_path_set(g, F)));
    });
    m.def("pi_closure", [](const KGraph& g, const std::vector<std::string>& E) {
        return from_path_set(g, pi_closure(g, to_path_set(g, E)).elements);
    });
    m.def("iota_kappa", [](const KGraph& g, const std::string& lam, const std::vector<std::string>& E) {
        auto pi = pi_closure(g, to_path_set(g, E));
        auto [iota, kappa] = iota_kappa(g, g.parse_path(lam), pi);
        return std::make_pair(g.path_str(iota), g.path_str(kappa));
    });
    m.def("check_finitely_aligned", [](const KGraph& g, const std::vector<int>& D) {
        return json_to_py(alignment_report_json(check_finitely_aligned(g, to_degree(g, D))));
    });

    m.def("is_exhaustive", [](const KGraph& g, const std::vector<std::string>& E, const std::vector<int>& D) {
        return json_to_py(exhaustive_json(g, is_exhaustive(g, to_path_set(g, E), to_degree(g, D))));
    });
    m.def("enumerate_fe",
          [](const KGraph& g, const std::string& v, const std::vector<int>& D, size_t max_size) {
              return from_collection(g, enumerate_fe(g, vertex_of(g, v), to_degree(g, D), max_size));
          });
    m.def("satiate", [](const KGraph& g, const std::vector<std::vector<std::string>>& col,
                        const std::vector<int>& D) {
        return json_to_py(satiation_json(g, satiate(g, to_collection(g, col), to_degree(g, D))));
    });
    m.def("is_satiated", [](const KGraph& g, const std::vector<std::vector<std::string>>& col,
                            const std::vector<int>& D) {
        auto res = is_satiated(g, to_collection(g, col), to_degree(g, D));
        py::dict out;
        out["satiated_within_bound"] = res.yes_within_bound;
        if (!res.yes_within_bound) {
            out["axiom"] = res.axiom;
            out["witness"] = from_path_set(g, res.witness->elements);
        }
        return out;
    });

    py::class_<Cocycle>(m, "Cocycle")
        .def_static("trivial", &Cocycle::trivial)
        .def_static("rotation", &Cocycle::rotation)
        .def("eval", [](const Cocycle& c, const KGraph& g, const std::string& mu, const std::string& nu) {
            return c.eval(g, g.parse_path(mu), g.parse_path(nu));
        });
    m.def("check_cocycle_identity",
          [](const Cocycle& c, const KGraph& g, const std::vector<int>& D) {
              return json_to_py(cocycle_report_json(check_cocycle_identity(c, g, to_degree(g, D))));
          });

    py::class_<SparseOperator>(m, "SparseOperator")
        .def_property_readonly("dim", [](const SparseOperator& op) { return op.space().dim(); })
        .def("entries",
             [](const SparseOperator& op) {
                 std::vector<std::tuple<int, int, Complex>> out;
                 for (const auto& [rc, v] : op.entries()) out.emplace_back(rc.first, rc.second, v);
                 return out;
             })
        .def("max_abs", &SparseOperator::max_abs)
        .def("column_norm", &SparseOperator::column_norm)
        .def("adjoint", &SparseOperator::adjoint)
        .def("__add__", &SparseOperator::operator+)
        .def("__sub__", &SparseOperator::operator-)
        .def("__mul__",
             [](const SparseOperator& a, const SparseOperator& b) { return a * b; });

    py::class_<ToeplitzFamily>(m, "ToeplitzFamily")
        .def("op", [](const ToeplitzFamily& f, const std::string& lam) { return f.op(f.graph().parse_path(lam)); })
        .def("basis",
             [](const ToeplitzFamily& f) {
                 std::vector<std::string> out;
                 for (const Path& p : f.space().basis()) out.push_back(f.graph().path_str(p));
                 return out;
             })
        .def("basis_index", [](const ToeplitzFamily& f, const std::string& p) {
            return f.space().index(f.graph().parse_path(p));
        });

    m.def("build_family",
          [](const KGraph& g, const Cocycle& c, const std::vector<int>& D, const std::vector<int>& M) {
              return build_family(g, c, to_degree(g, D), to_degree(g, M));
          });
    m.def("verify_tck", [](const ToeplitzFamily& fam, const std::vector<int>& cap) {
        return json_to_py(tck_report_json(verify_tck(fam, to_degree(fam.graph(), cap))));
    });
    m.def("commutation_check", [](const ToeplitzFamily& fam) { return commutation_check(fam); });
    m.def("gap_projection", [](const ToeplitzFamily& fam, const std::vector<std::string>& E) {
        return gap_projection(fam, to_path_set(fam.graph(), E));
    });
    m.def("q_lambda", [](const ToeplitzFamily& fam, const std::string& lam, const std::vector<std::string>& E) {
        return q_lambda(fam, fam.graph().parse_path(lam), to_path_set(fam.graph(), E));
    });
    m.def("theta_unit", [](const ToeplitzFamily& fam, const std::string& lam, const std::string& mu,
                           const std::vector<std::string>& E) {
        auto pi = pi_closure(fam.graph(), to_path_set(fam.graph(), E));
        return theta_unit(fam, fam.graph().parse_path(lam), fam.graph().parse_path(mu), pi);
    });
    m.def("core_blocks", [](const ToeplitzFamily& fam, const std::vector<std::string>& E) {
        auto pi = pi_closure(fam.graph(), to_path_set(fam.graph(), E));
        return json_to_py(core_blocks_json(fam.graph(), core_blocks(fam, pi)));
    });
    m.def("inclusion_check", [](const ToeplitzFamily& fb, const ToeplitzFamily& fc,
                                const std::vector<std::string>& E, const std::vector<std::string>& G) {
        return json_to_py(
            inclusion_json(inclusion_check(fb, fc, to_path_set(fb.graph(), E), to_path_set(fb.graph(), G))));
    });
    m.def("omega_ladder", [](const ToeplitzFamily& fb, const ToeplitzFamily& fc,
                             const std::vector<std::vector<std::string>>& chain) {
        std::vector<std::set<Path>> levels;
        for (const auto& level : chain) levels.push_back(to_path_set(fb.graph(), level));
        return json_to_py(ladder_json(omega_ladder(fb, fc, levels)));
    });
    m.def("conditional_expectation", &conditional_expectation);
    m.def("gauge_average", &gauge_average, py::arg("op"), py::arg("grid") = 5);
    m.def("induced_subgraph_family", [](const ToeplitzFamily& fam, const std::vector<std::string>& H) {
        std::set<int> ids;
        for (const auto& v : H) ids.insert(vertex_of(fam.graph(), v));
        return induced_subgraph_family(fam, ids);
    });

    m.def("hereditary_closure", [](const KGraph& g, const std::vector<std::string>& S) {
        std::set<int> ids;
        for (const auto& v : S) ids.insert(vertex_of(g, v));
        std::vector<std::string> out;
        for (int v : hereditary_closure(g, ids)) out.push_back(g.vertex_names[v]);
        return out;
    });
    m.def("quotient_graph", [](const KGraph& g, const std::vector<std::string>& H) {
        std::set<int> ids;
        for (const auto& v : H) ids.insert(vertex_of(g, v));
        return quotient_graph(g, ids);
    });
    m.def("enumerate_ideal_pairs", [](const KGraph& g, const std::vector<std::vector<std::string>>& col,
                                      const std::vector<int>& D, size_t max_size) {
        return json_to_py(
            ideal_pairs_json(g, nullptr, enumerate_ideal_pairs(g, to_collection(g, col), to_degree(g, D), max_size)));
    });
    m.def("boundary_prefix_witness",
          [](const KGraph& g, const std::vector<std::vector<std::string>>& col, const std::string& v,
             const std::optional<std::vector<std::string>>& avoid, const std::vector<int>& D) -> py::object {
              std::optional<std::set<Path>> av;
              if (avoid) av = to_path_set(g, *avoid);
              auto w = boundary_prefix_witness(g, to_collection(g, col), vertex_of(g, v), av, to_degree(g, D));
              if (!w) return py::none();
              return py::str(g.path_str(w->path));
          });
}
