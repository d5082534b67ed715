// Command-line surface for the exact Hopf-algebra stabilizer kernel.
//
// Exit codes: 0 all checks pass, 1 usage or I/O error, 2 malformed input
// document, 3 a mathematical check failed on well-formed input.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hopfstab/catalog.hpp"
#include "hopfstab/io.hpp"

using namespace hopfstab;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot write file: " + out_path);
    out << text;
}

/// Prints a report in the chosen format and returns the exit code.
int finish_report(const Report& rep, const std::string& format, const std::string& out_path) {
    write_output(format == "structured" ? emit_report(rep) : rep.text(), out_path);
    return rep.passed() ? 0 : 3;
}

ModuleRep load_module(const std::string& path, const ComodAlg& k) {
    FieldSpec f;
    std::size_t over = 0;
    ModuleRep m = parse_module(read_file(path), &f, &over);
    if (f != k.alg.field) throw ParseError(path + ": module field differs from the algebra's");
    if (over != k.alg.dim)
        throw ParseError(path + ": module is over dimension " + std::to_string(over) +
                         ", algebra has dimension " + std::to_string(k.alg.dim));
    Report ax = m.check(k.alg);
    if (!ax.passed()) throw ParseError(path + ": module axioms fail:\n" + ax.text());
    return m;
}

std::map<std::string, std::string> input_hashes(const ComodAlg& k, const ModuleRep& u,
                                                const ModuleRep& w) {
    return {{"comodalg", content_hash(emit_comodalg(k))},
            {"module", content_hash(emit_module(k.alg.field, k.alg.dim, u))},
            {"module2", content_hash(emit_module(k.alg.field, k.alg.dim, w))}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact stabilizer computations for finite-dimensional Hopf algebras"};
    app.require_subcommand(1);

    std::string hopf_path, comodalg_path, modalg_path, module_path, module2_path;
    std::string subspace_path, stabilizer_path, out_path, case_name;
    std::string format = "text", which = "op", side = "two-sided";
    for (auto* sub : {&app}) (void)sub;

    auto add_common = [&](CLI::App* s) {
        s->add_option("--out", out_path, "Write output to this file instead of stdout");
        s->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "structured"}));
    };

    auto* c_validate = app.add_subcommand("validate", "Run the axiom checker for a document");
    c_validate->add_option("--hopf", hopf_path, "Hopf algebra document");
    c_validate->add_option("--comodalg", comodalg_path, "Comodule algebra document");
    c_validate->add_option("--modalg", modalg_path, "Module algebra document");
    c_validate->add_option("--stabilizer", stabilizer_path, "Stabilizer document");
    c_validate->add_option("--module", module_path, "Module document (with --comodalg)");
    c_validate->add_option("--module2", module2_path, "Second module document");
    add_common(c_validate);

    auto* c_dual = app.add_subcommand("dual", "Emit the dual Hopf algebra");
    c_dual->add_option("--hopf", hopf_path)->required();
    add_common(c_dual);

    auto* c_variant = app.add_subcommand("variant", "Emit an op/cop/bop variant");
    c_variant->add_option("--hopf", hopf_path)->required();
    c_variant->add_option("--which", which, "Variant")->check(CLI::IsMember({"op", "cop", "bop"}));
    add_common(c_variant);

    auto* c_stab = app.add_subcommand("stab", "Compute a stabilizer subspace");
    c_stab->add_option("--comodalg", comodalg_path)->required();
    c_stab->add_option("--module", module_path, "Domain module")->required();
    c_stab->add_option("--module2", module2_path, "Codomain module (default: domain)");
    add_common(c_stab);

    auto* c_dstab = app.add_subcommand("dual-stab", "Compute a mirrored-chirality stabilizer");
    c_dstab->add_option("--comodalg", comodalg_path)->required();
    c_dstab->add_option("--module", module_path)->required();
    c_dstab->add_option("--module2", module2_path);
    add_common(c_dstab);

    auto* c_dims = app.add_subcommand("dims", "Check the stabilizer dimension formula");
    c_dims->add_option("--comodalg", comodalg_path)->required();
    c_dims->add_option("--module", module_path)->required();
    c_dims->add_option("--module2", module2_path);
    add_common(c_dims);

    auto* c_dual_chk = app.add_subcommand("duality-check", "Double centralizer duality");
    c_dual_chk->add_option("--comodalg", comodalg_path)->required();
    c_dual_chk->add_option("--module", module_path)->required();
    add_common(c_dual_chk);

    auto* c_hsimple = app.add_subcommand("hsimple", "Decide H-simplicity");
    c_hsimple->add_option("--comodalg", comodalg_path)->required();
    c_hsimple->add_option("--side", side)->check(CLI::IsMember({"left", "right", "two-sided"}));
    add_common(c_hsimple);

    auto* c_decomp = app.add_subcommand("decompose", "Search for an H-ideal decomposition");
    c_decomp->add_option("--comodalg", comodalg_path)->required();
    add_common(c_decomp);

    auto* c_smash = app.add_subcommand("smash", "Emit the smash product comodule algebra");
    c_smash->add_option("--modalg", modalg_path)->required();
    add_common(c_smash);

    auto* c_heis = app.add_subcommand("heisenberg-check", "Heisenberg realization checks");
    c_heis->add_option("--hopf", hopf_path)->required();
    add_common(c_heis);

    auto* c_coideal = app.add_subcommand("coideal-check", "Coideal subalgebra stabilizer checks");
    c_coideal->add_option("--hopf", hopf_path)->required();
    c_coideal->add_option("--subspace", subspace_path, "Span of the coideal subalgebra")
        ->required();
    add_common(c_coideal);

    auto* c_group = app.add_subcommand("group-check", "Twisted group algebra stabilizer checks");
    c_group->add_option("--case", case_name, "Built-in case name")->required();
    add_common(c_group);

    auto* c_galois = app.add_subcommand("galois-check", "Hopf-Galois extension checks");
    c_galois->add_option("--case", case_name, "Built-in case name")->required();
    add_common(c_galois);

    auto* c_catalog = app.add_subcommand("catalog", "Run the full built-in acceptance suite");
    add_common(c_catalog);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (c_validate->parsed()) {
            if (!hopf_path.empty())
                return finish_report(check_hopf(parse_hopf(read_file(hopf_path))), format,
                                     out_path);
            if (!modalg_path.empty())
                return finish_report(check_module_algebra(parse_modalg(read_file(modalg_path))),
                                     format, out_path);
            if (!stabilizer_path.empty()) {
                std::map<std::string, std::string> prov;
                StabSpace st = parse_stabilizer(read_file(stabilizer_path), &prov);
                Report rep{"stabilizer document"};
                rep.add("well-formed", true);
                if (!comodalg_path.empty() && !module_path.empty()) {
                    ComodAlg k = parse_comodalg(read_file(comodalg_path));
                    ModuleRep u = load_module(module_path, k);
                    ModuleRep w = module2_path.empty() ? u : load_module(module2_path, k);
                    check_stab_provenance(prov, input_hashes(k, u, w));
                    rep.add("provenance hashes match the inputs", true);
                    for (auto& it : stab_membership_check(k, u, w, st).items)
                        rep.items.push_back(it);
                }
                return finish_report(rep, format, out_path);
            }
            if (!comodalg_path.empty()) {
                ComodAlg k = parse_comodalg(read_file(comodalg_path));
                Report rep = check_comodule_algebra(k);
                if (!module_path.empty()) {
                    ModuleRep u = load_module(module_path, k);
                    for (auto& it : u.check(k.alg, "domain module axioms").items)
                        rep.items.push_back(it);
                    if (!module2_path.empty()) {
                        ModuleRep w = load_module(module2_path, k);
                        for (auto& it : w.check(k.alg, "codomain module axioms").items)
                            rep.items.push_back(it);
                    }
                }
                return finish_report(rep, format, out_path);
            }
            throw UsageError("validate: give one of --hopf, --comodalg, --modalg, --stabilizer");
        }
        if (c_dual->parsed()) {
            write_output(emit_hopf(dual_hopf(parse_hopf(read_file(hopf_path)))), out_path);
            return 0;
        }
        if (c_variant->parsed()) {
            HopfVariant v = which == "op"    ? HopfVariant::Op
                            : which == "cop" ? HopfVariant::Cop
                                             : HopfVariant::Bop;
            write_output(emit_hopf(variant(parse_hopf(read_file(hopf_path)), v)), out_path);
            return 0;
        }
        if (c_stab->parsed() || c_dstab->parsed()) {
            ComodAlg k = parse_comodalg(read_file(comodalg_path));
            ModuleRep u = load_module(module_path, k);
            ModuleRep w = module2_path.empty() ? u : load_module(module2_path, k);
            StabSpace st = c_stab->parsed() ? stab_space(k, u, w) : dual_stab_space(k, u, w);
            if (c_stab->parsed()) {
                Report mem = stab_membership_check(k, u, w, st);
                if (!mem.passed()) {
                    std::cerr << mem.text();
                    return 3;
                }
            }
            write_output(emit_stabilizer(st, input_hashes(k, u, w)), out_path);
            return 0;
        }
        if (c_dims->parsed()) {
            ComodAlg k = parse_comodalg(read_file(comodalg_path));
            ModuleRep u = load_module(module_path, k);
            ModuleRep w = module2_path.empty() ? u : load_module(module2_path, k);
            return finish_report(dim_formula_check(k, u, w), format, out_path);
        }
        if (c_dual_chk->parsed()) {
            ComodAlg s = parse_comodalg(read_file(comodalg_path));
            ModuleRep w = load_module(module_path, s);
            return finish_report(duality_check(s, w), format, out_path);
        }
        if (c_hsimple->parsed()) {
            ComodAlg k = parse_comodalg(read_file(comodalg_path));
            IdealSide is = side == "left"    ? IdealSide::Left
                           : side == "right" ? IdealSide::Right
                                             : IdealSide::TwoSided;
            SimplicityVerdict sv = h_simplicity(k, is);
            Report rep{"h-simplicity"};
            Verdict v = sv.status == SimplicityStatus::Simple      ? Verdict::Pass
                        : sv.status == SimplicityStatus::NotSimple ? Verdict::Fail
                                                                   : Verdict::Undecided;
            std::string wit = sv.method;
            if (sv.witness)
                wit += "; witness ideal dimension " + std::to_string(sv.witness->dim());
            rep.add_verdict("simple", v, wit);
            write_output(format == "structured" ? emit_report(rep) : rep.text(), out_path);
            return 0;  // a query, not a theorem check
        }
        if (c_decomp->parsed()) {
            ComodAlg k = parse_comodalg(read_file(comodalg_path));
            DecomposabilityVerdict dv = h_indecomposable(k);
            Report rep{"h-decomposability"};
            Verdict v = dv.status == DecomposabilityVerdict::Status::Indecomposable
                            ? Verdict::Pass
                        : dv.status == DecomposabilityVerdict::Status::Decomposable
                            ? Verdict::Fail
                            : Verdict::Undecided;
            std::string wit = dv.method;
            if (dv.ideal_i)
                wit += "; splits as " + std::to_string(dv.ideal_i->dim()) + " + " +
                       std::to_string(dv.ideal_j->dim());
            rep.add_verdict("indecomposable", v, wit);
            write_output(format == "structured" ? emit_report(rep) : rep.text(), out_path);
            return 0;  // a query, not a theorem check
        }
        if (c_smash->parsed()) {
            ModAlg r = parse_modalg(read_file(modalg_path));
            Report ax = check_module_algebra(r);
            if (!ax.passed()) {
                std::cerr << ax.text();
                return 3;
            }
            ComodAlg s = smash_product(r);
            Report sx = check_comodule_algebra(s);
            if (!sx.passed()) {
                std::cerr << sx.text();
                return 3;
            }
            write_output(emit_comodalg(s), out_path);
            return 0;
        }
        if (c_heis->parsed())
            return finish_report(heisenberg_check(parse_hopf(read_file(hopf_path))), format,
                                 out_path);
        if (c_coideal->parsed()) {
            HopfData h = parse_hopf(read_file(hopf_path));
            Subspace span = parse_subspace(read_file(subspace_path));
            if (span.ambient_dim() != h.dim())
                throw ParseError(subspace_path + ": ambient dimension differs from the Hopf's");
            return finish_report(coideal_subalgebra_check(h, span), format, out_path);
        }
        if (c_group->parsed()) {
            for (const auto& gc : catalog_group_cases())
                if (gc.name == case_name)
                    return finish_report(
                        group_stab_iso_check(gc.field, gc.g, gc.f_elems, gc.sigma, gc.v), format,
                        out_path);
            throw UsageError("group-check: unknown case \"" + case_name + "\"");
        }
        if (c_galois->parsed()) {
            for (const auto& g : catalog_galois_cases())
                if (g.name == case_name)
                    return finish_report(galois_check(g.h, g.incl, g.k, g.w), format, out_path);
            throw UsageError("galois-check: unknown case \"" + case_name + "\"");
        }
        if (c_catalog->parsed()) {
            std::vector<Report> reps = run_acceptance();
            bool ok = true;
            std::ostringstream text;
            Report merged{"catalog acceptance"};
            for (const auto& rep : reps) {
                ok = ok && rep.passed();
                text << rep.text();
                for (const auto& it : rep.items)
                    merged.items.push_back({rep.title + ": " + it.name, it.verdict, it.witness});
            }
            write_output(format == "structured" ? emit_report(merged) : text.str(), out_path);
            return ok ? 0 : 3;
        }
        throw UsageError("no subcommand selected");
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const FieldError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ShapeError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
