// Acceptance suite: one PASS/FAIL line per criterion, exit nonzero on any
// failure.  argv[1] (optional) is the canonical workspace file used by the
// round-trip checks; defaults to data/fixtures.json.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "homres/dimension.hpp"
#include "homres/fixtures.hpp"
#include "homres/gorenstein.hpp"
#include "homres/workspace.hpp"

using namespace homres;
using namespace homres::fixtures;

namespace {

int failures = 0;

void line(int k, bool ok, const std::string& what) {
    std::cout << "CRITERION " << k << ": " << (ok ? "PASS" : "FAIL") << " - " << what
              << "\n";
    if (!ok) ++failures;
}

Subcategory free1() { return make_subcategory("add(REG1)", {reg1()}); }
Subcategory triv1() { return make_subcategory("add(K1)", {k1()}); }
Subcategory all1() { return make_subcategory("add(REG1+K1)", {reg1(), k1()}); }
Subcategory proj_a2() {
    return make_subcategory("add(LAMBDA)", {regular_module(a2(), "LAMBDA")});
}

// ---- criterion 1: independent Ext^1 oracle ---------------------------------

/// All modules of dimension <= 2 over a GF(2) algebra, by exhaustive
/// enumeration of action-matrix tuples.
std::vector<Module> small_modules(const AlgebraPtr& alg) {
    std::vector<Module> out;
    out.push_back(zero_module(alg));
    for (std::size_t d = 1; d <= 2; ++d) {
        std::size_t entries = alg->dim * d * d;
        for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << entries); ++bits) {
            Module m;
            m.algebra = alg;
            m.name = "E" + std::to_string(d) + "_" + std::to_string(bits);
            m.dim = d;
            std::uint64_t b = bits;
            for (std::size_t i = 0; i < alg->dim; ++i) {
                Matrix x(2, d, d);
                for (auto& v : x.a) {
                    v = i64(b & 1);
                    b >>= 1;
                }
                m.action.push_back(std::move(x));
            }
            if (validate(m).ok) out.push_back(std::move(m));
        }
    }
    return out;
}

/// dim Ext^1(m, n) by enumerating all middle-term action tuples
/// [[n_i, c_i], [0, m_i]] and all splitting coboundaries, then counting
/// equivalence classes.  Returns SIZE_MAX if the counts are inconsistent.
std::size_t oracle_ext1(const Module& m, const Module& n) {
    const Algebra& alg = *m.algebra;
    std::size_t nm = n.dim * m.dim;
    std::size_t entries = alg.dim * nm;
    auto decode = [&](std::uint64_t bits) {
        std::vector<Matrix> c;
        for (std::size_t i = 0; i < alg.dim; ++i) {
            Matrix x(2, n.dim, m.dim);
            for (auto& v : x.a) {
                v = i64(bits & 1);
                bits >>= 1;
            }
            c.push_back(std::move(x));
        }
        return c;
    };
    std::size_t zcount = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << entries); ++bits) {
        auto c = decode(bits);
        // unit acts as the identity: the off-diagonal block must vanish
        Matrix u = Matrix::zero(2, n.dim, m.dim);
        for (std::size_t i = 0; i < alg.dim; ++i)
            if (alg.unit[i]) u = u + c[i];
        if (!is_zero(u)) continue;
        // multiplicativity of the block action
        bool ok = true;
        for (std::size_t i = 0; i < alg.dim && ok; ++i)
            for (std::size_t j = 0; j < alg.dim && ok; ++j) {
                Matrix lhs = n.action[i] * c[j] + c[i] * m.action[j];
                Matrix rhs = Matrix::zero(2, n.dim, m.dim);
                for (std::size_t k = 0; k < alg.dim; ++k)
                    if (alg.c(i, j, k)) rhs = rhs + c[k];
                ok = lhs == rhs;
            }
        if (ok) ++zcount;
    }
    std::set<std::vector<i64>> boundaries;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << nm); ++bits) {
        Matrix h(2, n.dim, m.dim);
        std::uint64_t b = bits;
        for (auto& v : h.a) {
            v = i64(b & 1);
            b >>= 1;
        }
        std::vector<i64> flat;
        for (std::size_t i = 0; i < alg.dim; ++i) {
            Matrix bi = n.action[i] * h - h * m.action[i];
            flat.insert(flat.end(), bi.a.begin(), bi.a.end());
        }
        boundaries.insert(std::move(flat));
    }
    std::size_t bcount = boundaries.size();
    if (bcount == 0 || zcount % bcount != 0) return std::size_t(-1);
    std::size_t q = zcount / bcount, e = 0;
    while (q > 1) {
        if (q % 2 != 0) return std::size_t(-1);
        q /= 2;
        ++e;
    }
    return e;
}

bool criterion1() {
    for (const AlgebraPtr& alg : {lambda1(), a2()}) {
        auto mods = small_modules(alg);
        for (const Module& m : mods)
            for (const Module& n : mods)
                if (oracle_ext1(m, n) != ext_dims(m, n, 1).dims[1]) return false;
    }
    return true;
}

// ---- criterion 2: split sequence, proper but never strongly ----------------

bool criterion2() {
    auto sum = direct_sum({k1(), k1()});
    Morphism f = sum.injections[0], g = sum.projections[1];
    Subcategory C = triv1();

    AugmentedResolution res;
    res.direction = Direction::Resolution;
    res.target = k1();
    res.terms = {sum.module, k1()};
    res.maps = {g, f};
    verify_all(C, res);

    AugmentedResolution cores;
    cores.direction = Direction::Coresolution;
    cores.target = k1();
    cores.terms = {sum.module, k1()};
    cores.maps = {f, g};
    verify_all(C, cores);

    Sequence s{{f, g}};
    auto strong_from = is_strongly_exact(C, s, Side::FromC);
    auto strong_into = is_strongly_exact(C, s, Side::IntoC);
    return res.exact == TriState::VerifiedYes && res.proper == TriState::VerifiedYes &&
           res.strongly_proper == TriState::VerifiedNo &&
           cores.exact == TriState::VerifiedYes && cores.proper == TriState::VerifiedYes &&
           cores.strongly_proper == TriState::VerifiedNo && !strong_from.ok &&
           strong_from.ext_dim == 1 && !strong_into.ok && strong_into.ext_dim == 1 &&
           ext_dims(k1(), k1(), 1).dims[1] == 1;
}

// ---- criterion 3: randomized zig-zag construction laws ---------------------

std::mt19937 rng(20260826);

Morphism random_hom(const Module& a, const Module& b) {
    auto basis = hom_basis(a, b);
    Matrix f = Matrix::zero(a.algebra->p, b.dim, a.dim);
    std::uniform_int_distribution<i64> dist(0, a.algebra->p - 1);
    for (const Morphism& e : basis) {
        i64 c = dist(rng);
        if (c) f = f + scale(e.matrix, c);
    }
    return Morphism{a, b, f};
}

Module random_module(const AlgebraPtr& alg, bool wide = false) {
    Module r = regular_module(alg, "F");
    Module f1 = wide && rng() % 2 ? direct_sum({r, r}).module : r;
    return cokernel(random_hom(r, f1)).module;
}

ShortExactSeq random_ses(const AlgebraPtr& alg) {
    Module b = random_module(alg);
    auto im = image(random_hom(regular_module(alg, "F"), b));
    return make_ses(im.mono, cokernel(im.mono).projection);
}

Module injective_cogenerator(const AlgebraPtr& alg) {
    return dual_module(regular_module(dual_algebra(alg), "DREG"));
}

bool iso_check(const Module& got, const std::vector<Module>& parts) {
    auto sum = direct_sum(parts);
    if (got.dim != sum.module.dim) return false;
    // The constructions assemble terms by the same direct sums, so the
    // identity is usually the certificate; otherwise scan the hom space.
    if (got.same_as(sum.module)) return true;
    return find_isomorphism(got, sum.module).has_value();
}

bool criterion3() {
    std::vector<AlgebraPtr> algebras = {lambda1(), lambda2(), a2()};
    for (int trial = 0; trial < 200; ++trial) {
        const AlgebraPtr& alg = algebras[trial % 3];
        int which = (trial / 3) % 4;  // 0: 3.2, 1: 3.6, 2: 3.4, 3: 3.8
        bool co = which >= 2;
        Subcategory C =
            co ? make_subcategory("add(INJ)", {injective_cogenerator(alg)})
               : make_subcategory("add(FREE)", {regular_module(alg, "FREE")});
        ShortExactSeq ses = random_ses(alg);
        std::size_t len = 2 + trial % 2;
        auto build = [&](const Module& m) -> std::optional<AugmentedResolution> {
            auto o = co ? build_coproper_coresolution(C, m, len)
                        : build_proper_resolution(C, m, len);
            return o.res;
        };
        auto wb = build(ses.B);
        auto wother = build(which == 0 || which == 3 ? ses.C : ses.A);
        if (!wb || !wother) return false;

        ConstructResult out;
        try {
            switch (which) {
                case 0: out = thm_3_2_construct(C, ses, *wb, *wother); break;
                case 1: out = thm_3_6_construct(C, ses, *wb, *wother); break;
                case 2: out = thm_3_4_construct(C, ses, *wb, *wother); break;
                default: out = thm_3_8_construct(C, ses, *wb, *wother); break;
            }
        } catch (const std::exception&) {
            return false;  // hypotheses were all certified; no failure allowed
        }

        // (a) exactness of the output chain
        verify_all(C, out.output);
        if (out.output.exact != TriState::VerifiedYes) return false;
        // (c) properness/strongness re-verification passes (certificates
        // were present: proper windows over a projective/injective add)
        if (out.output.terms_in_c != TriState::VerifiedYes ||
            out.output.proper != TriState::VerifiedYes ||
            out.output.strongly_proper != TriState::VerifiedYes)
            return false;
        // (b) degreewise direct-sum shapes, with isomorphism certificates
        const auto& t = out.output.terms;
        if (which == 0 || which == 2) {
            for (std::size_t i = 1; i < t.size(); ++i) {
                if (i >= wb->terms.size() || i + 1 >= wother->terms.size()) break;
                if (!iso_check(t[i], {wother->terms[i + 1], wb->terms[i]})) return false;
            }
            if (out.bridge && !is_exact(out.bridge->chain()).exact) return false;
        } else {
            if (!iso_check(t[0], {wb->terms[0]})) return false;
            for (std::size_t i = 1; i < t.size(); ++i) {
                if (i >= wb->terms.size() || i - 1 >= wother->terms.size()) break;
                if (!iso_check(t[i], {wb->terms[i], wother->terms[i - 1]})) return false;
            }
        }
    }

    // Missing hypothesis certificates are rejected, not silently accepted.
    AugmentedResolution wy;
    wy.direction = Direction::Resolution;
    wy.target = reg1();
    wy.terms = {reg1(), zero_module(lambda1())};
    wy.maps = {identity_morphism(reg1()),
               zero_morphism(zero_module(lambda1()), reg1())};
    // res1 resolves the first term K1 but its top term REG1 is not in
    // add(K1): the demanded membership certificate must refuse it.
    AugmentedResolution bad;
    bad.direction = Direction::Resolution;
    bad.target = k1();
    bad.terms = {reg1(), k1()};
    bad.maps = {quo(), soc_inc()};
    try {
        thm_3_6_construct(triv1(), make_ses(soc_inc(), quo()), wy, bad);
        return false;
    } catch (const std::invalid_argument&) {
        return true;
    }
}

// ---- criteria 4 & 5: collapse and summand closure ---------------------------

Sequence x_window(std::size_t nmaps) {
    Morphism x = compose(soc_inc(), quo());
    Sequence w;
    for (std::size_t i = 0; i < nmaps; ++i) w.maps.push_back(x);
    return w;
}

CompleteResolution k1_window(std::size_t depth) {
    auto check = verify_complete_resolution(free1(), x_window(2 * depth), depth - 1, k1());
    if (!check.ok) throw std::runtime_error("fixture window failed: " + check.failure);
    return *check.value;
}

CompleteResolution collapse_once(const CompleteResolution& outer) {
    std::size_t left_n = outer.pivot_pos + 1;
    std::size_t right_n = outer.window.length() - outer.pivot_pos;
    std::vector<CompleteResolution> il, ir;
    for (std::size_t j = 0; j < left_n; ++j) {
        auto g = g_membership(free1(), outer.window.object(outer.pivot_pos - j), 2);
        if (!g.witness) throw std::runtime_error("no inner window: " + g.reason);
        il.push_back(*g.witness);
    }
    for (std::size_t j = 0; j < right_n; ++j) {
        auto g = g_membership(free1(), outer.window.object(outer.pivot_pos + 1 + j), 2);
        if (!g.witness) throw std::runtime_error("no inner window: " + g.reason);
        ir.push_back(*g.witness);
    }
    return thm_4_1_collapse(free1(), outer, il, ir);
}

bool criterion4() {
    CompleteResolution outer = k1_window(3);
    CompleteResolution out = collapse_once(outer);
    auto recheck = verify_complete_resolution(free1(), out.window, out.pivot_pos, out.pivot);
    if (!recheck.ok || recheck.value->depth < 2) return false;
    if (!find_isomorphism(out.pivot, outer.pivot)) return false;
    CompleteResolution again = collapse_once(out);  // the induction step
    return again.exact == TriState::VerifiedYes && again.depth >= 2 &&
           find_isomorphism(again.pivot, outer.pivot).has_value();
}

bool criterion5() {
    // Product window for M = K1 + REG1: K1's periodic window plus REG1's
    // contractible window (identity at the pivot, zero elsewhere).
    CompleteResolution wk = k1_window(3);
    auto sum = direct_sum({k1(), reg1()});
    Sequence pw;
    Module z = zero_module(lambda1());
    std::vector<Module> contr;
    for (std::size_t i = 0; i <= wk.window.length(); ++i)
        contr.push_back(i == wk.pivot_pos || i == wk.pivot_pos + 1 ? reg1() : z);
    for (std::size_t i = 0; i < wk.window.length(); ++i) {
        Morphism second = i == wk.pivot_pos ? identity_morphism(reg1())
                                            : zero_morphism(contr[i], contr[i + 1]);
        auto s0 = direct_sum({wk.window.object(i), contr[i]});
        auto s1 = direct_sum({wk.window.object(i + 1), contr[i + 1]});
        pw.maps.push_back(
            compose(s1.injections[0], compose(wk.window.maps[i], s0.projections[0])) +
            compose(s1.injections[1], compose(second, s0.projections[1])));
    }
    auto check = verify_complete_resolution(free1(), pw, wk.pivot_pos, sum.module);
    if (!check.ok) return false;
    CompleteResolution w_m = *check.value;

    auto pattern_ok = [&](const CompleteResolution& out) {
        AugmentedResolution l = out.left_half(), in_l = w_m.left_half();
        std::size_t want = 0;
        for (std::size_t k = 0; k < l.terms.size(); ++k) {
            if (k >= in_l.terms.size()) break;
            want += in_l.terms[k].dim;
            if (l.terms[k].dim != want) return false;
        }
        return true;
    };
    for (std::size_t which = 0; which < 2; ++which) {
        Morphism e = compose(sum.injections[which], sum.projections[which]);
        CompleteResolution out = thm_4_6_summand(free1(), w_m, e);
        auto re = verify_complete_resolution(free1(), out.window, out.pivot_pos, out.pivot);
        if (!re.ok) return false;
        if (out.pivot.dim != (which == 0 ? 1u : 2u)) return false;
        if (!pattern_ok(out)) return false;
    }
    return true;
}

// ---- criterion 6: randomized syzygy swaps -----------------------------------

Morphism random_auto(const Module& o) {
    if (o.dim == 0) return identity_morphism(o);
    auto eb = hom_basis(o, o);
    std::uniform_int_distribution<i64> dist(0, o.algebra->p - 1);
    for (int t = 0; t < 200; ++t) {
        Matrix f = Matrix::zero(o.algebra->p, o.dim, o.dim);
        for (const Morphism& e : eb) {
            i64 c = dist(rng);
            if (c) f = f + scale(e.matrix, c);
        }
        if (inverse(f)) return Morphism{o, o, f};
    }
    return identity_morphism(o);
}

/// A random exact sequence 0 -> A -> C_n -> .. -> C_1 -> M -> 0 with middle
/// terms in add(REG1+K1): a degreewise direct sum of x-chain and split
/// blocks, conjugated by random automorphisms at every position.
Sequence random_54_sequence(std::size_t n) {
    Module z = zero_module(lambda1());
    std::vector<Sequence> blocks;
    auto x_chain = [&] {
        Sequence b;
        b.maps.push_back(soc_inc());
        for (std::size_t i = 1; i < n; ++i) b.maps.push_back(compose(soc_inc(), quo()));
        b.maps.push_back(quo());
        return b;
    };
    auto split_block = [&](const Module& p_mod, bool at_top) {
        Sequence b;
        if (at_top) {
            b.maps.push_back(identity_morphism(p_mod));  // A = P -> C_n = P
            b.maps.push_back(zero_morphism(p_mod, z));
            for (std::size_t i = 2; i <= n; ++i) b.maps.push_back(zero_morphism(z, z));
        } else {
            b.maps.push_back(zero_morphism(z, p_mod));  // A = 0 -> C_n = P
            for (std::size_t i = 1; i + 1 < n; ++i)
                b.maps.push_back(identity_morphism(p_mod));
            if (n >= 2) b.maps.push_back(identity_morphism(p_mod));
            b.maps.push_back(n >= 2 ? zero_morphism(p_mod, z)
                                    : identity_morphism(p_mod));
        }
        return b;
    };
    std::size_t nx = 1 + rng() % 2;
    for (std::size_t i = 0; i < nx; ++i) blocks.push_back(x_chain());
    if (rng() % 2) blocks.push_back(split_block(rng() % 2 ? k1() : reg1(), rng() % 2));
    // degreewise direct sum
    Sequence s;
    for (std::size_t d = 0; d <= n + 1 - 1; ++d) {
        std::vector<Module> srcs, tgts;
        for (const Sequence& b : blocks) {
            srcs.push_back(b.object(d));
            tgts.push_back(b.object(d + 1));
        }
        auto ds = direct_sum(srcs);
        auto dt = direct_sum(tgts);
        Morphism map = zero_morphism(ds.module, dt.module);
        for (std::size_t b = 0; b < blocks.size(); ++b)
            map = map + compose(dt.injections[b],
                                compose(blocks[b].maps[d], ds.projections[b]));
        s.maps.push_back(map);
    }
    // conjugate by random automorphisms of every object
    std::vector<Morphism> autos;
    for (std::size_t i = 0; i <= s.length(); ++i) autos.push_back(random_auto(s.object(i)));
    Sequence out;
    for (std::size_t i = 0; i < s.length(); ++i) {
        auto inv = inverse(autos[i].matrix);
        Morphism gi{s.object(i), s.object(i), *inv};
        out.maps.push_back(compose(autos[i + 1], compose(s.maps[i], gi)));
    }
    return out;
}

bool criterion6() {
    GenCogenPair pair = make_gencogen(all1(), free1(), free1());
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + trial % 2;
        Sequence s = random_54_sequence(n);
        if (!is_exact(padded(s)).exact) return false;

        SwapResult sw;
        try {
            sw = thm_5_3_swap(pair, s, GcSide::Cogen);
        } catch (const std::exception&) {
            return false;
        }
        if (!is_exact(padded(sw.swapped)).exact) return false;
        // swap conservation: the leftmost object (the n-syzygy) is kept
        if (!sw.swapped.object(0).same_as(s.object(0))) return false;
        // instance-wise equivalence: the original middles witness the
        // n-C-syzygy, the swapped middles witness the n-cogen-syzygy
        for (std::size_t i = 1; i <= n; ++i) {
            if (!is_in_add(all1(), s.object(i)).yes) return false;
            if (!is_in_add(free1(), sw.swapped.object(i)).yes) return false;
        }
        if (!is_exact(sw.connecting.chain()).exact) return false;
    }
    return true;
}

// ---- criterion 7: dimension agreement over the enumerated modules -----------

bool criterion7() {
    // Over A2: every direct sum of indecomposables with total dim <= 3.
    std::vector<Module> inde = {sa(), sb(), pa()};
    Subcategory X = proj_a2();
    for (std::size_t na = 0; na <= 3; ++na)
        for (std::size_t nb = 0; nb + na <= 3; ++nb)
            for (std::size_t nc = 0; na + nb + 2 * nc <= 3; ++nc) {
                std::vector<Module> parts;
                for (std::size_t i = 0; i < na; ++i) parts.push_back(sa());
                for (std::size_t i = 0; i < nb; ++i) parts.push_back(sb());
                for (std::size_t i = 0; i < nc; ++i) parts.push_back(pa());
                Module m = parts.empty() ? zero_module(a2()) : direct_sum(parts).module;
                auto g = gdim_report(X, m, 3);
                auto c = c_dim_report(X, m, 3);
                if (!g.candidate || !c.upper || *g.candidate != *c.upper) return false;
                if (!g.upper || *g.upper != *c.upper) return false;
            }
    // Split sequences ending in a projective: both ends report the same value.
    for (const Module& tail : {sa(), sb()}) {
        auto mid = direct_sum({tail, pa()});
        auto r_tail = gdim_report(X, tail, 3);
        auto r_mid = gdim_report(X, mid.module, 3);
        if (!r_tail.upper || !r_mid.upper || *r_tail.upper != *r_mid.upper) return false;
    }
    // Over LAMBDA1 with add(REG1): everything has verified dimension zero.
    for (std::size_t na = 0; na <= 3; ++na)
        for (std::size_t nb = 0; na + 2 * nb <= 3; ++nb) {
            std::vector<Module> parts;
            for (std::size_t i = 0; i < na; ++i) parts.push_back(k1());
            for (std::size_t i = 0; i < nb; ++i) parts.push_back(reg1());
            Module m = parts.empty() ? zero_module(lambda1()) : direct_sum(parts).module;
            auto g = gdim_report(free1(), m, 3);
            if (!g.upper || *g.upper != 0) return false;
        }
    return true;
}

// ---- criterion 8: precover certificate --------------------------------------

bool criterion8() {
    Subcategory X = proj_a2();
    auto gd = gdim_report(X, sa(), 3);
    if (!gd.upper || *gd.upper != 1) return false;
    auto out = cor_5_12_sequences(X, X, sa(), gd);
    if (!is_exact(out.approx_ses.chain()).exact) return false;
    for (const Module& g : {regular_module(a2(), "LAMBDA"), pa(), sb()})
        if (ext_dims(g, out.approx_ses.A, 1).dims[1] != 0) return false;
    return is_exact(out.embed_ses.chain()).exact;
}

// ---- criterion 9: determinism and round-trip ---------------------------------

std::string report_bundle(const std::string& text) {
    Workspace w = parse_workspace(text);
    std::ostringstream os;
    os << serialize(w);
    auto t = ext_dims(w.module("K1"), w.module("K1"), 3);
    for (std::size_t d : t.dims) os << d << ',';
    auto c = c_dim_report(w.subcategory("add(LAMBDA)"), w.module("SA"), 3);
    os << c.lower << '|' << (c.upper ? i64(*c.upper) : i64(-1)) << '|' << c.lower_reason
       << '|' << c.notes << '\n';
    auto g = gdim_report(w.subcategory("add(REG1)"), w.module("K1"), 3);
    os << g.lower << '|' << (g.upper ? i64(*g.upper) : i64(-1)) << '|' << g.notes << '\n';
    os << to_dot(w.sequences);
    return os.str();
}

bool criterion9(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "cannot read " << path << "\n";
        return false;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (serialize(parse_workspace(text)) != text) return false;
    return report_bundle(text) == report_bundle(text);
}

}  // namespace

int main(int argc, char** argv) {
    std::string path = argc > 1 ? argv[1] : "data/fixtures.json";
    try {
        line(1, criterion1(), "Ext^1 matches the exhaustive extension-enumeration oracle");
        line(2, criterion2(), "split sequence proper and coproper, both strong variants refuted");
        line(3, criterion3(), "200 randomized zig-zag constructions: exactness, shapes, certificates");
        line(4, criterion4(), "stability collapse at depth 2, idempotent on its own output");
        line(5, criterion5(), "summand windows for both idempotents with the cumulative pattern");
        line(6, criterion6(), "100 randomized syzygy swaps with both witnesses verified");
        line(7, criterion7(), "dimension reports agree on all enumerated modules");
        line(8, criterion8(), "approximation sequence is a certified precover");
        line(9, criterion9(path), "byte-identical reports and serialize/parse round-trip");
    } catch (const std::exception& e) {
        std::cout << "UNEXPECTED ERROR: " << e.what() << "\n";
        return 1;
    }
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT") << "\n";
    return failures == 0 ? 0 : 1;
}
