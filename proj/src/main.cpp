// homres: validate workspaces, compute homological data, run the
// resolution constructions, and render dimension reports.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "homres/dimension.hpp"
#include "homres/gorenstein.hpp"
#include "homres/workspace.hpp"

using json = nlohmann::ordered_json;

namespace homres {
namespace {

std::string tri_str(TriState t) {
    switch (t) {
        case TriState::Unchecked: return "unchecked";
        case TriState::VerifiedYes: return "yes";
        case TriState::VerifiedNo: return "no";
    }
    return "?";
}

json module_json(const Module& m) { return json{{"name", m.name}, {"dim", m.dim}}; }

json terms_json(const std::vector<Module>& terms) {
    json arr = json::array();
    for (const Module& t : terms) arr.push_back(module_json(t));
    return arr;
}

json window_json(const AugmentedResolution& r) {
    json body;
    body["direction"] =
        r.direction == Direction::Resolution ? "resolution" : "coresolution";
    body["target"] = module_json(r.target);
    body["terms"] = terms_json(r.terms);
    body["flags"] = json{{"exact", tri_str(r.exact)},
                         {"terms_in_c", tri_str(r.terms_in_c)},
                         {"proper", tri_str(r.proper)},
                         {"strongly_proper", tri_str(r.strongly_proper)},
                         {"other_side", tri_str(r.other_side)}};
    body["subcategory"] = r.subcategory;
    return body;
}

json sequence_json(const Sequence& s) {
    json objs = json::array();
    for (std::size_t i = 0; i <= s.length(); ++i) objs.push_back(module_json(s.object(i)));
    return json{{"objects", objs}};
}

json ses_json(const ShortExactSeq& s) {
    return json{{"A", module_json(s.A)}, {"B", module_json(s.B)}, {"C", module_json(s.C)}};
}

json complete_json(const CompleteResolution& c) {
    json body;
    json dims = json::array();
    for (std::size_t i = 0; i <= c.window.length(); ++i)
        dims.push_back(c.window.object(i).dim);
    body["window_dims"] = std::move(dims);
    body["pivot"] = module_json(c.pivot);
    body["pivot_pos"] = c.pivot_pos;
    body["depth"] = c.depth;
    body["flags"] = json{{"exact", tri_str(c.exact)},
                         {"from_c", tri_str(c.from_c)},
                         {"into_c", tri_str(c.into_c)},
                         {"terms_in_c", tri_str(c.terms_in_c)}};
    body["subcategory"] = c.subcategory;
    return body;
}

json report_json(const DimensionReport& r) {
    json body;
    body["module"] = module_json(r.m);
    body["bound"] = r.bound;
    if (r.upper)
        body["upper"] = *r.upper;
    else
        body["upper"] = nullptr;
    body["upper_unknown"] = r.upper_unknown;
    body["lower"] = r.lower;
    body["lower_reason"] = r.lower_reason;
    if (r.candidate) body["candidate"] = *r.candidate;
    if (r.witness) body["witness"] = sequence_json(*r.witness);
    if (r.left_end)
        body["left_end"] = json{{"verdict", r.left_end->verdict == GVerdict::VerifiedToDepth
                                                ? "verified"
                                                : r.left_end->verdict == GVerdict::Refuted
                                                      ? "refuted"
                                                      : "inconclusive"},
                                {"reason", r.left_end->reason}};
    body["agree"] = r.agree;
    body["finiteness_asserted"] = r.finiteness_asserted;
    body["notes"] = r.notes;
    return body;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw WorkspaceError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw WorkspaceError("cannot write file: " + path);
    out << text;
}

ShortExactSeq ses_of(const Workspace& w, const std::string& name) {
    const Sequence& s = w.sequence(name);
    if (s.length() != 2)
        throw std::invalid_argument("sequence " + name +
                                    " does not have exactly two maps");
    return make_ses(s.maps[0], s.maps[1]);
}

/// Interprets a stored chain as a window in display order: resolutions
/// read C_n -> ... -> C_0 -> M (augmentation last), coresolutions read
/// M -> C^0 -> ... -> C^n (augmentation first).
AugmentedResolution as_window(const Sequence& s, Direction dir,
                              const std::string& subname) {
    AugmentedResolution r;
    r.direction = dir;
    r.subcategory = subname;
    std::size_t n = s.length();
    if (dir == Direction::Resolution) {
        r.target = s.object(n);
        for (std::size_t i = 0; i < n; ++i) r.terms.push_back(s.object(n - 1 - i));
        for (std::size_t i = 0; i < n; ++i) r.maps.push_back(s.maps[n - 1 - i]);
    } else {
        r.target = s.object(0);
        for (std::size_t i = 1; i <= n; ++i) r.terms.push_back(s.object(i));
        for (std::size_t i = 0; i < n; ++i) r.maps.push_back(s.maps[i]);
    }
    return r;
}

/// "SEQ@POS@PIVOT" -> verified complete resolution.
CompleteResolution parse_complete(const Workspace& w, const Subcategory& C,
                                  const std::string& token) {
    auto a = token.find('@');
    auto b = token.rfind('@');
    if (a == std::string::npos || b == a)
        throw WorkspaceError("complete-window spec must look like SEQ@POS@PIVOT: " + token);
    const Sequence& s = w.sequence(token.substr(0, a));
    std::size_t pos = std::stoul(token.substr(a + 1, b - a - 1));
    const Module& pivot = w.module(token.substr(b + 1));
    auto chk = verify_complete_resolution(C, s, pos, pivot);
    if (!chk.ok)
        throw std::invalid_argument("hypothesis violation: window " + token +
                                    " is not a verified complete resolution: " + chk.failure);
    return *chk.value;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

struct GlobalOpts {
    std::string workspace_path = "data/fixtures.json";
    std::string out_path;
    std::string dot_path;
    std::string expect;  // "", "pass", "fail"
};

void emit(const GlobalOpts& g, const json& report,
          const std::map<std::string, Sequence>& dot_chains) {
    std::string text = report.dump(2) + "\n";
    if (g.out_path.empty())
        std::cout << text;
    else
        write_file(g.out_path, text);
    if (!g.dot_path.empty()) write_file(g.dot_path, to_dot(dot_chains));
}

int settle(const GlobalOpts& g, bool ok, bool default_exit_on_fail) {
    if (!g.expect.empty()) return ok == (g.expect == "pass") ? 0 : 1;
    return ok || !default_exit_on_fail ? 0 : 1;
}

// ---- validate ---------------------------------------------------------------

int cmd_validate(const GlobalOpts& g, const Workspace& w) {
    json entities = json::object();
    bool all_ok = true;
    auto note = [&](const std::string& name, const ValidationResult& v) {
        entities[name] = json{{"ok", v.ok}, {"message", v.message}};
        all_ok = all_ok && v.ok;
    };
    for (const auto& [name, a] : w.algebras) note("algebra " + name, validate(*a));
    for (const auto& [name, m] : w.modules) note("module " + name, validate(m));
    for (const auto& [name, f] : w.morphisms) note("morphism " + name, validate(f));
    json report{{"command", "validate"}, {"ok", all_ok}, {"entities", entities}};
    emit(g, report, w.sequences);
    return settle(g, all_ok, true);
}

// ---- compute ----------------------------------------------------------------

int cmd_compute(const GlobalOpts& g, const Workspace& w, const std::string& kind,
                const std::vector<std::string>& args, std::size_t upto,
                const std::string& side) {
    json report{{"command", "compute"}, {"kind", kind}};
    bool ok = true;
    std::map<std::string, Sequence> dot_chains;
    auto need = [&](std::size_t n) {
        if (args.size() != n)
            throw WorkspaceError("compute " + kind + " needs " + std::to_string(n) +
                                 " name arguments");
    };
    if (kind == "hom") {
        need(2);
        report["source"] = args[0];
        report["target"] = args[1];
        report["dim"] = hom_basis(w.module(args[0]), w.module(args[1])).size();
    } else if (kind == "ext") {
        need(2);
        auto table = ext_dims(w.module(args[0]), w.module(args[1]), upto);
        report["source"] = args[0];
        report["target"] = args[1];
        report["dims"] = table.dims;
        ok = true;
        for (std::size_t i = 1; i < table.dims.size(); ++i)
            if (table.dims[i] != 0) ok = false;
        report["vanishing_above_zero"] = ok;
    } else if (kind == "approx") {
        need(2);
        const Subcategory& C = w.subcategory(args[0]);
        const Module& m = w.module(args[1]);
        Approximation ap = side == "left" ? left_approx(C, m) : right_approx(C, m);
        report["side"] = side;
        report["source"] = module_json(ap.map.source);
        report["target"] = module_json(ap.map.target);
        report["covers"] = ap.covers;
        ok = ap.covers;
        dot_chains.emplace("approx", Sequence{{ap.map}});
    } else if (kind == "exactness") {
        need(1);
        const Sequence& s = w.sequence(args[0]);
        auto rep = is_exact(s);
        report["sequence"] = args[0];
        report["exact"] = rep.exact;
        if (!rep.exact) {
            report["failure_position"] = rep.failure_position;
            report["detail"] = rep.detail;
        }
        ok = rep.exact;
        dot_chains.emplace(args[0], s);
    } else if (kind == "membership") {
        need(2);
        const Subcategory& C = w.subcategory(args[0]);
        auto mem = is_in_add(C, w.module(args[1]));
        report["subcategory"] = args[0];
        report["module"] = args[1];
        report["member"] = mem.yes;
        ok = mem.yes;
    } else {
        throw WorkspaceError("unknown compute kind: " + kind);
    }
    report["ok"] = ok;
    emit(g, report, dot_chains);
    return settle(g, ok, false);
}

// ---- construct ----------------------------------------------------------------

struct ConstructOpts {
    std::string theorem;
    std::string sub, ses, res0, res1, longseq, inputs;
    std::string outer, window, pivot, inner_left, inner_right, idempotent;
    std::string c, gen, cogen, seq, side = "gen";
    std::string x, gcat, module;
    std::size_t pivot_pos = 0, n = 0, t = 0, bound = 4;
    bool verify = false;
};

int cmd_construct(const GlobalOpts& g, const Workspace& w, const ConstructOpts& o) {
    json report{{"command", "construct"}, {"theorem", o.theorem}};
    std::map<std::string, Sequence> dot_chains;
    const std::string& th = o.theorem;

    auto window_arg = [&](const std::string& name, Direction dir,
                          const std::string& subname) {
        return as_window(w.sequence(name), dir, subname);
    };

    if (th == "3.2" || th == "3.4" || th == "3.6" || th == "3.8") {
        const Subcategory& C = w.subcategory(o.sub);
        Direction dir = (th == "3.2" || th == "3.6") ? Direction::Resolution
                                                     : Direction::Coresolution;
        auto ses = ses_of(w, o.ses);
        auto r0 = window_arg(o.res0, dir, C.name);
        auto r1 = window_arg(o.res1, dir, C.name);
        ConstructResult out;
        if (th == "3.2") out = thm_3_2_construct(C, ses, r0, r1);
        if (th == "3.4") out = thm_3_4_construct(C, ses, r0, r1);
        if (th == "3.6") out = thm_3_6_construct(C, ses, r0, r1);
        if (th == "3.8") out = thm_3_8_construct(C, ses, r0, r1);
        if (o.verify) verify_all(C, out.output);
        report["output"] = window_json(out.output);
        if (out.bridge) report["bridge"] = ses_json(*out.bridge);
        dot_chains.emplace("output", out.output.chain());
    } else if (th == "3.3" || th == "3.5" || th == "3.7" || th == "3.9") {
        const Subcategory& C = w.subcategory(o.sub);
        IterateMode mode = th == "3.3"   ? IterateMode::FirstTerm
                           : th == "3.5" ? IterateMode::CoFirstTerm
                           : th == "3.7" ? IterateMode::LastTerm
                                         : IterateMode::CoLastTerm;
        Direction dir = (mode == IterateMode::FirstTerm || mode == IterateMode::LastTerm)
                            ? Direction::Resolution
                            : Direction::Coresolution;
        std::vector<AugmentedResolution> ins;
        for (const std::string& name : split_csv(o.inputs))
            ins.push_back(window_arg(name, dir, C.name));
        auto out = iterate_construct(mode, C, w.sequence(o.longseq), ins);
        if (o.verify) verify_all(C, out.output);
        report["output"] = window_json(out.output);
        if (out.aux) report["aux"] = sequence_json(*out.aux);
        dot_chains.emplace("output", out.output.chain());
    } else if (th == "4.1") {
        const Subcategory& C = w.subcategory(o.sub);
        CompleteResolution outer = parse_complete(w, C, o.outer);
        std::vector<CompleteResolution> left, right;
        for (const std::string& tok : split_csv(o.inner_left))
            left.push_back(parse_complete(w, C, tok));
        for (const std::string& tok : split_csv(o.inner_right))
            right.push_back(parse_complete(w, C, tok));
        auto out = thm_4_1_collapse(C, outer, left, right);
        if (o.verify) {
            auto chk = verify_complete_resolution(C, out.window, out.pivot_pos, out.pivot);
            if (!chk.ok) throw std::logic_error("re-verification failed: " + chk.failure);
        }
        report["output"] = complete_json(out);
        dot_chains.emplace("output", out.window);
    } else if (th == "4.6") {
        const Subcategory& C = w.subcategory(o.sub);
        CompleteResolution win = parse_complete(w, C, o.window);
        auto out = thm_4_6_summand(C, win, w.morphism(o.idempotent));
        if (o.verify && !out.pivot.is_zero()) {
            auto chk = verify_complete_resolution(C, out.window, out.pivot_pos, out.pivot);
            if (!chk.ok) throw std::logic_error("re-verification failed: " + chk.failure);
        }
        report["output"] = complete_json(out);
        dot_chains.emplace("output", out.window);
    } else if (th == "5.1" || th == "5.3") {
        auto pair = make_gencogen(w.subcategory(o.c), w.subcategory(o.gen),
                                  w.subcategory(o.cogen));
        GcSide side = o.side == "cogen" ? GcSide::Cogen : GcSide::Gen;
        if (th == "5.1") {
            auto out = prop_5_1_rebuild(pair, w.sequence(o.seq), side);
            report["output"] = sequence_json(out.seq);
            report["new_c"] = module_json(out.new_c);
            report["new_x"] = module_json(out.new_x);
            dot_chains.emplace("output", out.seq);
        } else {
            auto out = thm_5_3_swap(pair, w.sequence(o.seq), side);
            report["swapped"] = sequence_json(out.swapped);
            report["connecting"] = ses_json(out.connecting);
            dot_chains.emplace("swapped", out.swapped);
            dot_chains.emplace("connecting", out.connecting.chain());
        }
    } else if (th == "5.5") {
        auto pair = make_gencogen(w.subcategory(o.c), w.subcategory(o.gen),
                                  w.subcategory(o.cogen));
        auto out = thm_5_5_witness(pair, w.module(o.module), o.n, o.t);
        if (o.verify) {
            auto rep = is_exact(padded(out));
            if (!rep.exact) throw std::logic_error("re-verification failed: " + rep.detail);
        }
        report["output"] = sequence_json(out);
        dot_chains.emplace("output", out);
    } else if (th == "5.12") {
        const Subcategory& X = w.subcategory(o.x);
        const Module& m = w.module(o.module);
        auto gd = gdim_report(X, m, o.bound);
        auto out = cor_5_12_sequences(X, w.subcategory(o.gcat), m, gd);
        report["gdim"] = report_json(gd);
        report["approx_ses"] = ses_json(out.approx_ses);
        report["embed_ses"] = ses_json(out.embed_ses);
        dot_chains.emplace("approx", out.approx_ses.chain());
        dot_chains.emplace("embed", out.embed_ses.chain());
    } else {
        throw WorkspaceError("unknown theorem: " + th);
    }
    emit(g, report, dot_chains);
    return settle(g, true, false);
}

// ---- report -------------------------------------------------------------------

int cmd_report(const GlobalOpts& g, const Workspace& w, const std::string& mod,
               const std::string& sub, std::size_t bound, const std::string& kind) {
    const Subcategory& C = w.subcategory(sub);
    const Module& m = w.module(mod);
    DimensionReport rep;
    if (kind == "gdim")
        rep = gdim_report(C, m, bound);
    else if (kind == "codim")
        rep = codim_report(C, m, bound);
    else
        rep = c_dim_report(C, m, bound);
    json report{{"command", "report"},
                {"kind", kind},
                {"subcategory", sub},
                {"report", report_json(rep)}};
    std::map<std::string, Sequence> dot_chains;
    if (rep.witness) dot_chains.emplace("witness", *rep.witness);
    emit(g, report, dot_chains);
    bool ok = rep.upper.has_value() && rep.agree;
    return settle(g, ok, false);
}

int run(int argc, char** argv) {
    CLI::App app{"homres: exact homological computations over finite-field algebras"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--workspace", g.workspace_path, "workspace JSON file")
        ->capture_default_str();
    app.add_option("--out", g.out_path, "write the JSON report here (default stdout)");
    app.add_option("--dot", g.dot_path, "write a DOT rendering of the result here");
    app.add_option("--expect", g.expect, "pass|fail: exit 0 iff the verdict matches")
        ->check(CLI::IsMember({"pass", "fail"}));

    auto* validate_cmd = app.add_subcommand("validate", "validate every workspace entity");

    auto* compute_cmd = app.add_subcommand("compute", "hom/ext/approx/exactness/membership");
    std::string kind, side = "right";
    std::vector<std::string> args;
    std::size_t upto = 3;
    compute_cmd->add_option("kind", kind)->required();
    compute_cmd->add_option("args", args, "entity names");
    compute_cmd->add_option("--upto", upto, "largest Ext degree");
    compute_cmd->add_option("--side", side)->check(CLI::IsMember({"right", "left"}));

    auto* construct_cmd = app.add_subcommand("construct", "run a resolution construction");
    ConstructOpts o;
    construct_cmd->add_option("theorem", o.theorem)->required();
    construct_cmd->add_option("--sub", o.sub, "subcategory name");
    construct_cmd->add_option("--ses", o.ses, "short exact sequence name");
    construct_cmd->add_option("--res0", o.res0, "first window (sequence name)");
    construct_cmd->add_option("--res1", o.res1, "second window (sequence name)");
    construct_cmd->add_option("--longseq", o.longseq, "long exact sequence name");
    construct_cmd->add_option("--inputs", o.inputs, "comma-separated window names");
    construct_cmd->add_option("--outer", o.outer, "outer window as SEQ@POS@PIVOT");
    construct_cmd->add_option("--inner-left", o.inner_left,
                              "comma-separated SEQ@POS@PIVOT specs");
    construct_cmd->add_option("--inner-right", o.inner_right,
                              "comma-separated SEQ@POS@PIVOT specs");
    construct_cmd->add_option("--window", o.window, "complete window as SEQ@POS@PIVOT");
    construct_cmd->add_option("--idempotent", o.idempotent, "endomorphism name");
    construct_cmd->add_option("--c", o.c, "ambient subcategory");
    construct_cmd->add_option("--gen", o.gen, "generator subcategory");
    construct_cmd->add_option("--cogen", o.cogen, "cogenerator subcategory");
    construct_cmd->add_option("--seq", o.seq, "input sequence name");
    construct_cmd->add_option("--side", o.side)->check(CLI::IsMember({"gen", "cogen"}));
    construct_cmd->add_option("--x", o.x, "self-orthogonal subcategory");
    construct_cmd->add_option("--gcat", o.gcat, "finite window of verified objects");
    construct_cmd->add_option("--module", o.module, "module name");
    construct_cmd->add_option("--n", o.n, "resolution length");
    construct_cmd->add_option("--t", o.t, "syzygy position");
    construct_cmd->add_option("--bound", o.bound, "search bound");
    construct_cmd->add_flag("--verify", o.verify, "re-verify the output from scratch");

    auto* report_cmd = app.add_subcommand("report", "dimension report for a module");
    std::string rep_module, rep_sub, rep_kind = "cdim";
    std::size_t rep_bound = 4;
    report_cmd->add_option("--module", rep_module)->required();
    report_cmd->add_option("--sub", rep_sub)->required();
    report_cmd->add_option("--bound", rep_bound)->capture_default_str();
    report_cmd->add_option("--kind", rep_kind)
        ->check(CLI::IsMember({"cdim", "gdim", "codim"}));

    CLI11_PARSE(app, argc, argv);

    Workspace w = parse_workspace(read_file(g.workspace_path));
    if (validate_cmd->parsed()) return cmd_validate(g, w);
    if (compute_cmd->parsed()) return cmd_compute(g, w, kind, args, upto, side);
    if (construct_cmd->parsed()) return cmd_construct(g, w, o);
    return cmd_report(g, w, rep_module, rep_sub, rep_bound, rep_kind);
}

}  // namespace
}  // namespace homres

int main(int argc, char** argv) {
    try {
        return homres::run(argc, argv);
    } catch (const homres::WorkspaceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
