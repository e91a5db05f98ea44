#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "fc/classify.hpp"
#include "fc/decomposition.hpp"
#include "fc/harness.hpp"
#include "fc/io.hpp"
#include "fc/kernelize.hpp"
#include "fc/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitBudget = 3;

int run_kernelize(const std::string &in, const std::string &out, const std::string &trace) {
    fc::Instance inst = fc::parse_instance_file(in);
    fc::KernelizeResult res = fc::kernelize(inst);
    std::string text = fc::serialize_instance(res.kernel);
    if (out.empty())
        std::cout << text;
    else {
        std::ofstream os(out);
        os << text;
    }
    if (!trace.empty()) {
        std::ofstream ts(trace);
        ts << fc::trace_json(res) << "\n";
    }
    std::cerr << "kernelize: " << res.kernel.graph.num_vertices() << " vertices, "
              << res.kernel.graph.num_edges() << " edges, hint " << res.decision_hint
              << "\n";
    return kExitOk;
}

int run_solve(const std::string &in) {
    fc::Instance inst = fc::parse_instance_file(in);
    int fcn = fc::fcn_exact(inst.graph);
    std::cout << "fcn = " << fc::sat_str(fcn) << "\n";
    std::cout << "decision = " << (fcn <= inst.k ? "YES" : "NO") << " (k = " << inst.k
              << ")\n";
    return kExitOk;
}

int run_classify(const std::string &in) {
    fc::Instance inst = fc::parse_instance_file(in);
    if (inst.graph.num_vertices() < 3 || !fc::is_biconnected(inst.graph)) {
        std::cerr << "classify: instance must be biconnected with >= 3 vertices\n";
        return kExitBadInput;
    }
    fc::SprTree t = fc::spr_tree(inst.graph);
    fc::Classifier cls(t);
    for (int i = 0; i < t.size(); ++i) {
        const char *ty = t.nodes[i].type == fc::SprType::S   ? "S"
                         : t.nodes[i].type == fc::SprType::P ? "P"
                                                             : "R";
        std::cout << i << " " << ty << " " << fc::to_string(cls.classify(i)) << " "
                  << cls.component_terminals(i).size() << "\n";
    }
    return kExitOk;
}

int run_decompose(const std::string &in, const std::string &dot) {
    fc::Instance inst = fc::parse_instance_file(in);
    if (inst.graph.num_vertices() < 3 || !fc::is_biconnected(inst.graph)) {
        std::cerr << "decompose: instance must be biconnected with >= 3 vertices\n";
        return kExitBadInput;
    }
    fc::SprTree t = fc::spr_tree(inst.graph);
    std::string d = fc::spr_dot(t);
    if (dot.empty())
        std::cout << d;
    else {
        std::ofstream os(dot);
        os << d;
    }
    std::cerr << "decompose: " << t.size() << " nodes\n";
    return kExitOk;
}

int run_verify(const std::string &orig_path, const std::string &kern_path) {
    fc::Instance orig = fc::parse_instance_file(orig_path);
    fc::Instance kern = fc::parse_instance_file(kern_path);
    int fa = fc::fcn_exact(orig.graph);
    int fb = fc::fcn_exact(kern.graph);
    bool da = fa <= orig.k, db = fb <= kern.k;
    std::cout << "original: fcn = " << fc::sat_str(fa) << ", k = " << orig.k << "\n";
    std::cout << "kernel:   fcn = " << fc::sat_str(fb) << ", k = " << kern.k << "\n";
    std::cout << (da == db ? "PASS: decisions agree" : "FAIL: decisions differ") << "\n";
    return da == db ? kExitOk : 1;
}

int run_gen(const fc::GenParams &params, const std::string &out) {
    fc::Instance inst = fc::gen_planar(params);
    std::string text = fc::serialize_instance(inst);
    if (out.empty())
        std::cout << text;
    else {
        std::ofstream os(out);
        os << text;
    }
    return kExitOk;
}

int run_suite(const std::string &name) {
    fc::SuiteReport rep = fc::run_suite(name);
    std::cout << rep.to_json() << "\n";
    return rep.pass ? kExitOk : 1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Face cover number kernelization toolkit"};
    app.require_subcommand(1);

    std::string in, out, trace, dot;
    fc::GenParams gen_params;
    std::string suite_name;
    std::string kern_path;
    bool exact = false;

    auto *k = app.add_subcommand("kernelize", "Kernelize an instance");
    k->add_option("input", in)->required();
    k->add_option("-o,--output", out);
    k->add_option("--trace", trace);

    auto *s = app.add_subcommand("solve", "Solve exactly by enumeration");
    s->add_flag("--exact", exact);
    s->add_option("input", in)->required();

    auto *c = app.add_subcommand("classify", "Classify SPR components");
    c->add_option("input", in)->required();

    auto *d = app.add_subcommand("decompose", "Export the SPR tree");
    d->add_option("input", in)->required();
    d->add_option("--dot", dot);

    auto *v = app.add_subcommand("verify", "Compare instance and kernel decisions");
    v->add_option("original", in)->required();
    v->add_option("kernel", kern_path)->required();

    auto *g = app.add_subcommand("gen", "Generate a random planar instance");
    g->add_option("--seed", gen_params.seed);
    g->add_option("--n", gen_params.n);
    g->add_option("--density", gen_params.density);
    g->add_option("--terminals", gen_params.terminal_fraction);
    g->add_option("--k", gen_params.k);
    g->add_option("-o,--output", out);

    auto *su = app.add_subcommand("suite", "Run a verification suite");
    su->add_option("name", suite_name)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (k->parsed()) return run_kernelize(in, out, trace);
        if (s->parsed()) {
            if (!exact) {
                std::cerr << "solve: only --exact is available\n";
                return kExitBadInput;
            }
            return run_solve(in);
        }
        if (c->parsed()) return run_classify(in);
        if (d->parsed()) return run_decompose(in, dot);
        if (v->parsed()) return run_verify(in, kern_path);
        if (g->parsed()) return run_gen(gen_params, out);
        if (su->parsed()) return run_suite(suite_name);
    } catch (const fc::ParseError &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const fc::BudgetError &e) {
        std::cerr << "budget refusal: " << e.what() << "\n";
        return kExitBudget;
    } catch (const fc::StructuralError &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitOk;
}
