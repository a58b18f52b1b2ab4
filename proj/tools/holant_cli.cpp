// Command-line front end: classify signature sets, solve grids, compose
// gadgets, and emit the named corpus signatures.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "holant/classify.hpp"
#include "holant/corpus.hpp"
#include "holant/errors.hpp"
#include "holant/families.hpp"
#include "holant/solvers.hpp"
#include "holant/text_io.hpp"

using namespace holant;

namespace {

Signature generate_named(const std::string& name) {
    if (name.rfind("sym=", 0) == 0) {
        std::string body = name.substr(4);
        if (body.size() < 2 || body.front() != '[' || body.back() != ']')
            throw ParseError("symmetric sugar must look like sym=[v0,v1,...]");
        body = body.substr(1, body.size() - 2);
        std::vector<Cyc8> vals;
        std::string cur;
        for (char c : body) {
            if (c == ',') {
                vals.push_back(parse_cyc8(cur));
                cur.clear();
            } else {
                cur += c;
            }
        }
        vals.push_back(parse_cyc8(cur));
        return Signature::from_symmetric(vals, "sym");
    }
    if (name == "delta0") return corpus::gen_delta(0);
    if (name == "delta1") return corpus::gen_delta(1);
    if (name == "f7a_pm") return corpus::gen_f7_alpha_pm();
    if (name.rfind("eq", 0) == 0) return corpus::gen_equality(std::stoi(name.substr(2)));
    if (name.front() == 'f') {
        int arity = std::stoi(name.substr(1));
        for (int r = 1; r <= 6; ++r)
            if ((1 << r) - 1 == arity) return corpus::gen_f_chain(r);
        throw Error("chain arity must be one of 1,3,7,15,31,63");
    }
    throw Error("unknown generator: " + name +
                " (try eqN, delta0, delta1, f1..f63, f7a_pm, sym=[...])");
}

void emit_signature(const Signature& f, const std::string& out) {
    if (out.empty())
        std::cout << signature_to_text(f);
    else
        save_signature_file(f, out);
}

int run(int argc, char** argv) {
    CLI::App app{"exact Holant evaluation and dichotomy classification"};
    app.require_subcommand(1);

    // ---- gen
    auto* gen = app.add_subcommand("gen", "write a named signature");
    std::string gen_name, gen_out;
    gen->add_option("name", gen_name, "generator name")->required();
    gen->add_option("-o,--out", gen_out, "output file (default stdout)");

    // ---- classify-fn
    auto* cfn = app.add_subcommand("classify-fn", "family memberships of one signature");
    std::string cfn_file;
    cfn->add_option("file", cfn_file, "signature file")->required();

    // ---- classify-set
    auto* cset = app.add_subcommand("classify-set", "dichotomy verdict for a set");
    std::vector<std::string> cset_files;
    std::string cset_mode = "csp2c";
    cset->add_option("files", cset_files, "signature files")->required();
    cset->add_option("--mode", cset_mode, "csp2c or holantc")
        ->check(CLI::IsMember({"csp2c", "holantc"}));

    // ---- solve / oracle
    auto* solve = app.add_subcommand("solve", "evaluate a closed grid");
    auto* oracle = app.add_subcommand("oracle", "evaluate by brute force only");
    std::string grid_file;
    bool force_brute = false, quiet = false;
    int max_edges = kDefaultBruteCap;
    for (auto* cmd : {solve, oracle}) {
        cmd->add_option("grid", grid_file, "grid file")->required();
        cmd->add_option("--max-brute-edges", max_edges, "brute-force edge cap");
        cmd->add_flag("--quiet", quiet, "print the value only");
    }
    solve->add_flag("--force-brute", force_brute, "skip the solver dispatch");

    // ---- compose
    auto* comp = app.add_subcommand("compose", "contract a gadget into a signature");
    std::string comp_file, comp_out;
    comp->add_option("grid", comp_file, "grid file with dangling ports")->required();
    comp->add_option("-o,--out", comp_out, "output signature file");

    // ---- check
    auto* check = app.add_subcommand("check", "run a named construction replay");
    std::string check_name;
    check->add_option("name", check_name, "replay name (figure1)")->required();

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) {
        emit_signature(generate_named(gen_name), gen_out);
        return 0;
    }

    if (cfn->parsed()) {
        Signature f = load_signature_file(cfn_file);
        std::cout << "signature " << (f.name().empty() ? cfn_file : f.name()) << ": arity "
                  << f.arity() << ", support " << f.support_size() << "\n";
        std::cout << "  product:      " << (in_product_type(f) ? "yes" : "no") << "\n";
        std::cout << "  affine:       " << (in_affine(f) ? "yes" : "no") << "\n";
        std::cout << "  alpha-affine: " << (in_alpha_affine(f) ? "yes" : "no") << "\n";
        LocalAffineCheck l = in_local_affine(f);
        std::cout << "  local-affine: " << (l.ok ? "yes" : "no");
        if (!l.ok && !l.equation.empty()) std::cout << "  [" << l.equation << "]";
        std::cout << "\n";
        return 0;
    }

    if (cset->parsed()) {
        std::vector<Signature> fs;
        for (const std::string& path : cset_files) fs.push_back(load_signature_file(path));
        ClassVerdict v =
            (cset_mode == "holantc") ? classify_holant_c(fs) : classify_csp2c(fs);
        std::cout << verdict_to_text(v);
        return 0;
    }

    if (solve->parsed() || oracle->parsed()) {
        GridDocument doc = load_grid_file(grid_file);
        if (!doc.grid.dangling.empty())
            throw MalformedGrid("grid has dangling ports; use compose");
        if (oracle->parsed()) {
            Cyc8 v = holant_brute(doc.grid, max_edges);
            if (quiet)
                std::cout << cyc8_to_string(v) << "\n";
            else
                std::cout << "holant = " << cyc8_with_approx(v) << "  [method: brute]\n";
        } else {
            SolveOutcome out = solve_auto(doc.grid, max_edges, force_brute);
            if (quiet)
                std::cout << cyc8_to_string(out.value) << "\n";
            else
                std::cout << "holant = " << cyc8_with_approx(out.value) << "  [method: "
                          << method_name(out.method) << "]\n";
        }
        return 0;
    }

    if (comp->parsed()) {
        GridDocument doc = load_grid_file(comp_file);
        Signature derived = compose_gadget(doc.grid).with_name("composed");
        emit_signature(derived, comp_out);
        return 0;
    }

    if (check->parsed()) {
        if (check_name != "figure1") throw Error("unknown replay: " + check_name);
        corpus::Figure1Replay r = corpus::replay_figure1();
        std::cout << "derived arity: " << r.derived.arity() << ", support "
                  << r.derived.support_size() << "\n";
        std::cout << "proportional to the direct construction: "
                  << (r.proportional ? "yes" : "no") << "\n";
        return r.proportional ? 0 : 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const TooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotRealValued& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
