#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kgraphlab/graph_io.hpp"
#include "kgraphlab/reports.hpp"

namespace kg = kgraphlab;

namespace {

struct Options {
    std::string graph;
    std::string output;
    std::string cocycle = "trivial";
    std::string cocycle_b = "trivial";
    std::string cocycle_c = "trivial";
    std::string bound;
    std::string margin;
    std::string op_cap;
    std::string degree;
    std::string up_to;
    std::string vertex;
    std::string mu, nu;
    std::string set_literal;
    std::string avoid_literal;
    std::string chain_literal;
    std::string relations_file;
    std::string hereditary_literal;
    size_t max_size = 3;
};

[[maybe_unused]] int g_thread_cap = 1;  // verifications are sequential today, so the cap always holds

void emit(const Options& opt, const kg::Json& payload, const std::string& summary) {
    std::string text = payload.dump(2);
    text += "\n";
    if (opt.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.output, std::ios::binary);
        if (!out) throw kg::Error(kg::ErrorCode::InvalidArgument, "cannot write '" + opt.output + "'");
        out << text;
    }
    std::cerr << summary << "\n";
}

kg::Json wrap(const std::string& command) {
    kg::Json j;
    j["schema"] = kg::kReportSchema;
    j["command"] = command;
    return j;
}

std::set<kg::Path> parse_path_set(const kg::KGraph& g, const std::string& literal) {
    std::set<kg::Path> out;
    std::stringstream ss(literal);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.insert(g.parse_path(tok));
    }
    return out;
}

std::set<kg::FESet> load_relations(const kg::KGraph& g, const std::string& file) {
    if (file.empty()) return {};
    std::ifstream in(file);
    if (!in) throw kg::Error(kg::ErrorCode::ParseError, "cannot open relations file '" + file + "'");
    kg::Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw kg::Error(kg::ErrorCode::ParseError, std::string("bad JSON relations file: ") + e.what());
    }
    return kg::fe_collection_from_json(g, j);
}

int run_command(const std::string& cmd, const Options& opt) {
    kg::KGraph g = kg::load_graph_file(opt.graph);
    kg::Json j = wrap(cmd);

    if (cmd == "validate") {
        j["valid"] = true;
        j["graph"] = kg::graph_json(g);
        j["finite_alignment"] = kg::alignment_report_json(
            kg::check_finitely_aligned(g, opt.bound.empty() ? kg::Degree::zero(g.k) : kg::parse_degree(opt.bound, g.k)));
        emit(opt, j, "valid k-graph: " + std::to_string(g.num_vertices()) + " vertices, " +
                         std::to_string(g.edges.size()) + " edges");
        return 0;
    }
    if (cmd == "paths") {
        std::optional<int> v;
        if (!opt.vertex.empty()) {
            auto it = g.vertex_id.find(opt.vertex);
            if (it == g.vertex_id.end())
                throw kg::Error(kg::ErrorCode::InvalidArgument, "unknown vertex '" + opt.vertex + "'");
            v = it->second;
        }
        std::set<kg::Path> out;
        if (!opt.degree.empty())
            out = g.paths_of_degree(v, kg::parse_degree(opt.degree, g.k));
        else if (!opt.up_to.empty())
            out = g.paths_up_to(v, kg::parse_degree(opt.up_to, g.k));
        else
            throw kg::Error(kg::ErrorCode::InvalidArgument, "paths needs --degree or --up-to");
        j["result"] = kg::path_list_json(g, out);
        j["size"] = out.size();
        emit(opt, j, std::to_string(out.size()) + " paths");
        return 0;
    }
    if (cmd == "mce" || cmd == "ext" || cmd == "pi" || cmd == "vee") {
        kg::Json query;
        std::set<kg::Path> result;
        if (cmd == "mce") {
            kg::Path mu = g.parse_path(opt.mu), nu = g.parse_path(opt.nu);
            query["mu"] = g.path_str(mu);
            query["nu"] = g.path_str(nu);
            result = kg::mce(g, mu, nu);
        } else if (cmd == "ext") {
            kg::Path mu = g.parse_path(opt.mu);
            auto E = parse_path_set(g, opt.set_literal);
            query["mu"] = g.path_str(mu);
            query["set"] = kg::path_list_json(g, E);
            result = kg::ext(g, mu, E);
        } else if (cmd == "pi") {
            auto E = parse_path_set(g, opt.set_literal);
            query["set"] = kg::path_list_json(g, E);
            result = kg::pi_closure(g, E).elements;
        } else {
            auto E = parse_path_set(g, opt.set_literal);
            query["set"] = kg::path_list_json(g, E);
            result = kg::vee_closure(g, E);
        }
        j["query"] = query;
        j["result"] = kg::path_list_json(g, result);
        j["size"] = result.size();
        emit(opt, j, cmd + ": " + std::to_string(result.size()) + " paths");
        return 0;
    }
    if (cmd == "fe") {
        auto it = g.vertex_id.find(opt.vertex);
        if (it == g.vertex_id.end())
            throw kg::Error(kg::ErrorCode::InvalidArgument, "unknown vertex '" + opt.vertex + "'");
        kg::Degree D = kg::parse_degree(opt.bound, g.k);
        auto sets = kg::enumerate_fe(g, it->second, D, opt.max_size);
        j["vertex"] = opt.vertex;
        j["bound"] = D.coords;
        j["max_size"] = opt.max_size;
        j["derived"] = kg::fe_collection_json(g, sets);
        j["size"] = sets.size();
        emit(opt, j, std::to_string(sets.size()) + " finite exhaustive sets within bound");
        return 0;
    }
    if (cmd == "satiate") {
        kg::Degree D = kg::parse_degree(opt.bound, g.k);
        auto col = load_relations(g, opt.relations_file);
        auto res = kg::satiate(g, col, D);
        j.update(kg::satiation_json(g, res));
        emit(opt, j, "satiation: " + std::to_string(res.derived.size()) + " sets, dropped " +
                         std::to_string(res.dropped));
        return 0;
    }
    if (cmd == "cocycle-check") {
        kg::Degree D = kg::parse_degree(opt.bound, g.k);
        kg::Cocycle c = kg::parse_cocycle_spec(g, opt.cocycle, D);
        auto rep = kg::check_cocycle_identity(c, g, D, kg::kPhaseIdentityTolerance);
        j["cocycle"] = opt.cocycle;
        j["bound"] = D.coords;
        j.update(kg::cocycle_report_json(rep));
        emit(opt, j, rep.pass ? "cocycle identities hold" : "cocycle identity violated");
        return rep.pass ? 0 : 1;
    }
    if (cmd == "verify-tck") {
        kg::Degree D = kg::parse_degree(opt.bound, g.k);
        kg::Degree M = kg::parse_degree(opt.margin, g.k);
        kg::Degree cap = opt.op_cap.empty() ? M : kg::parse_degree(opt.op_cap, g.k);
        kg::Cocycle c = kg::parse_cocycle_spec(g, opt.cocycle, D);
        auto fam = kg::build_family(g, c, D, M);
        auto rep = kg::verify_tck(fam, cap);
        j["cocycle"] = opt.cocycle;
        j["bound"] = D.coords;
        j["margin"] = M.coords;
        j["op_cap"] = cap.coords;
        j.update(kg::tck_report_json(rep));
        emit(opt, j, rep.pass ? "all TCK relations hold on the interior" : "TCK relation violated");
        return rep.pass ? 0 : 1;
    }
    if (cmd == "core") {
        kg::Degree D = kg::parse_degree(opt.bound, g.k);
        kg::Degree M = kg::parse_degree(opt.margin, g.k);
        kg::Cocycle c = kg::parse_cocycle_spec(g, opt.cocycle, D);
        auto fam = kg::build_family(g, c, D, M);
        auto pi = kg::pi_closure(g, parse_path_set(g, opt.set_literal));
        auto blocks = kg::core_blocks(fam, pi);
        j["set"] = kg::path_list_json(g, pi.generators);
        j["pi_closure"] = kg::path_list_json(g, pi.elements);
        j["blocks"] = kg::core_blocks_json(g, blocks);
        emit(opt, j, std::to_string(blocks.size()) + " core blocks");
        return 0;
    }
    if (cmd == "ladder") {
        kg::Degree D = kg::parse_degree(opt.bound, g.k);
        kg::Degree M = kg::parse_degree(opt.margin, g.k);
        kg::Cocycle b = kg::parse_cocycle_spec(g, opt.cocycle_b, D);
        kg::Cocycle c = kg::parse_cocycle_spec(g, opt.cocycle_c, D);
        auto fam_b = kg::build_family(g, b, D, M);
        auto fam_c = kg::build_family(g, c, D, M);
        std::vector<std::set<kg::Path>> chain;
        std::stringstream ss(opt.chain_literal);
        std::string level;
        while (std::getline(ss, level, '|')) chain.push_back(parse_path_set(g, level));
        auto rep = kg::omega_ladder(fam_b, fam_c, chain);
        j["b"] = opt.cocycle_b;
        j["c"] = opt.cocycle_c;
        j.update(kg::ladder_json(rep));
        emit(opt, j, rep.pass ? "ladder squares commute" : "ladder square broken");
        return rep.pass ? 0 : 1;
    }
    if (cmd == "ideals") {
        kg::Degree D = kg::parse_degree(opt.bound, g.k);
        auto col = load_relations(g, opt.relations_file);
        auto pairs = kg::enumerate_ideal_pairs(g, col, D, opt.max_size);
        j["bound"] = D.coords;
        j["max_size"] = opt.max_size;
        j["pairs"] = kg::ideal_pairs_json(g, nullptr, pairs);
        j["size"] = pairs.size();
        emit(opt, j, std::to_string(pairs.size()) + " ideal pairs within bound");
        return 0;
    }
    if (cmd == "witness") {
        kg::Degree D = kg::parse_degree(opt.bound, g.k);
        auto it = g.vertex_id.find(opt.vertex);
        if (it == g.vertex_id.end())
            throw kg::Error(kg::ErrorCode::InvalidArgument, "unknown vertex '" + opt.vertex + "'");
        auto col = load_relations(g, opt.relations_file);
        std::optional<std::set<kg::Path>> avoid;
        if (!opt.avoid_literal.empty()) avoid = parse_path_set(g, opt.avoid_literal);
        auto w = kg::boundary_prefix_witness(g, col, it->second, avoid, D);
        j["vertex"] = opt.vertex;
        j["bound"] = D.coords;
        if (w) {
            j["found"] = true;
            j["prefix"] = g.path_str(w->path);
            j["degree"] = w->path.degree.coords;
            kg::Json assignment = kg::Json::array();
            for (const kg::Degree& n : kg::degrees_up_to(w->path.degree)) {
                kg::Json step;
                step["n"] = n.coords;
                step["path"] = g.path_str(g.segment(w->path, g.zero_degree(), n));
                assignment.push_back(step);
            }
            j["assignment"] = assignment;
        } else {
            j["found"] = false;
            j["reason"] = "NotFoundWithinBound";
        }
        emit(opt, j, w ? "witness prefix " + g.path_str(w->path) : "no witness within bound");
        return w ? 0 : 1;
    }
    if (cmd == "quotient") {
        std::set<int> H;
        std::stringstream ss(opt.hereditary_literal);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            auto it = g.vertex_id.find(tok);
            if (it == g.vertex_id.end())
                throw kg::Error(kg::ErrorCode::InvalidArgument, "unknown vertex '" + tok + "'");
            H.insert(it->second);
        }
        kg::KGraph q = kg::quotient_graph(g, H);
        j["graph"] = kg::graph_json(q);
        j["text"] = kg::graph_to_text(q);
        emit(opt, j, "quotient has " + std::to_string(q.num_vertices()) + " vertices");
        return 0;
    }
    throw kg::Error(kg::ErrorCode::UnknownCommand, "unknown command '" + cmd + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial and finite-dimensional computations for twisted relative Cuntz-Krieger theory"};
    app.require_subcommand(1);

    if (const char* env = std::getenv("KGRAPHLAB_THREADS")) {
        try {
            g_thread_cap = std::max(1, std::stoi(env));
        } catch (const std::exception&) {
            std::cerr << "ParseError: KGRAPHLAB_THREADS must be a positive integer\n";
            return 2;
        }
    }

    Options opt;
    std::vector<std::pair<std::string, CLI::App*>> subs;
    for (const char* name : {"validate", "paths", "mce", "ext", "pi", "vee", "fe", "satiate", "cocycle-check",
                             "verify-tck", "core", "ladder", "ideals", "witness", "quotient"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--graph", opt.graph, "graph description file")->required();
        sub->add_option("--output", opt.output, "write the JSON report here instead of stdout");
        subs.emplace_back(name, sub);
    }
    auto sub = [&](const std::string& name) {
        for (auto& [n, s] : subs)
            if (n == name) return s;
        return static_cast<CLI::App*>(nullptr);
    };
    sub("validate")->add_option("--bound", opt.bound, "also audit finite alignment up to this degree");
    sub("paths")->add_option("--vertex", opt.vertex);
    sub("paths")->add_option("--degree", opt.degree);
    sub("paths")->add_option("--up-to", opt.up_to);
    sub("mce")->add_option("--mu", opt.mu)->required();
    sub("mce")->add_option("--nu", opt.nu)->required();
    sub("ext")->add_option("--mu", opt.mu)->required();
    sub("ext")->add_option("--set", opt.set_literal)->required();
    sub("pi")->add_option("--set", opt.set_literal)->required();
    sub("vee")->add_option("--set", opt.set_literal)->required();
    sub("fe")->add_option("--vertex", opt.vertex)->required();
    sub("fe")->add_option("--bound", opt.bound)->required();
    sub("fe")->add_option("--max-size", opt.max_size);
    sub("satiate")->add_option("--relations", opt.relations_file)->required();
    sub("satiate")->add_option("--bound", opt.bound)->required();
    sub("cocycle-check")->add_option("--cocycle", opt.cocycle);
    sub("cocycle-check")->add_option("--theta", opt.cocycle, "shorthand for --cocycle theta=<val>")
        ->transform([](std::string s) { return "theta=" + s; });
    sub("cocycle-check")->add_option("--bound", opt.bound)->required();
    sub("verify-tck")->add_option("--cocycle", opt.cocycle);
    sub("verify-tck")->add_option("--bound", opt.bound)->required();
    sub("verify-tck")->add_option("--margin", opt.margin)->required();
    sub("verify-tck")->add_option("--op-cap", opt.op_cap, "max degree of tested generators (default: margin)");
    sub("core")->add_option("--cocycle", opt.cocycle);
    sub("core")->add_option("--bound", opt.bound)->required();
    sub("core")->add_option("--margin", opt.margin)->required();
    sub("core")->add_option("--set", opt.set_literal)->required();
    sub("ladder")->add_option("--b", opt.cocycle_b)->required();
    sub("ladder")->add_option("--c", opt.cocycle_c)->required();
    sub("ladder")->add_option("--bound", opt.bound)->required();
    sub("ladder")->add_option("--margin", opt.margin)->required();
    sub("ladder")->add_option("--chain", opt.chain_literal, "levels separated by '|', paths by ','")->required();
    sub("ideals")->add_option("--relations", opt.relations_file);
    sub("ideals")->add_option("--bound", opt.bound)->required();
    sub("ideals")->add_option("--max-size", opt.max_size);
    sub("witness")->add_option("--vertex", opt.vertex)->required();
    sub("witness")->add_option("--avoid", opt.avoid_literal);
    sub("witness")->add_option("--bound", opt.bound)->required();
    sub("witness")->add_option("--relations", opt.relations_file);
    sub("quotient")->add_option("--hereditary", opt.hereditary_literal)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    std::string cmd;
    for (auto& [name, s] : subs)
        if (s->parsed()) cmd = name;

    try {
        return run_command(cmd, opt);
    } catch (const kg::Error& e) {
        kg::Json j = wrap(cmd);
        j["error"] = kg::error_code_name(e.code());
        j["message"] = e.detail();
        if (e.line() >= 1) j["line"] = e.line();
        std::cout << j.dump(2) << "\n";
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
