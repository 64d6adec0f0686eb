#include "homres/workspace.hpp"

#include <json.hpp>
#include <sstream>

#include "homres/fixtures.hpp"

namespace homres {

using nlohmann::json;

namespace {

template <typename M>
const typename M::mapped_type& lookup(const M& m, const std::string& name, const char* kind) {
    auto it = m.find(name);
    if (it == m.end())
        throw WorkspaceError(std::string("unknown ") + kind + ": " + name);
    return it->second;
}

i64 reduce(i64 v, i64 p) { return ((v % p) + p) % p; }

Matrix parse_matrix(const json& arr, i64 p, std::size_t rows, std::size_t cols,
                    const std::string& where) {
    if (!arr.is_array() || arr.size() != rows * cols)
        throw WorkspaceError(where + ": expected " + std::to_string(rows * cols) +
                             " integer entries");
    Matrix m(p, rows, cols);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_number_integer()) throw WorkspaceError(where + ": non-integer entry");
        m.a[i] = reduce(arr[i].get<i64>(), p);
    }
    return m;
}

json dump_matrix(const Matrix& m) {
    json arr = json::array();
    for (i64 v : m.a) arr.push_back(v);
    return arr;
}

const json& field(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw WorkspaceError(where + ": missing field '" + key + "'");
    return *it;
}

}  // namespace

const AlgebraPtr& Workspace::algebra(const std::string& n) const {
    return lookup(algebras, n, "algebra");
}
const Module& Workspace::module(const std::string& n) const {
    return lookup(modules, n, "module");
}
const Morphism& Workspace::morphism(const std::string& n) const {
    return lookup(morphisms, n, "morphism");
}
const Subcategory& Workspace::subcategory(const std::string& n) const {
    return lookup(subcategories, n, "subcategory");
}
const Sequence& Workspace::sequence(const std::string& n) const {
    return lookup(sequences, n, "sequence");
}

Workspace parse_workspace(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw WorkspaceError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw WorkspaceError("top level must be an object");

    Workspace w;
    if (doc.contains("algebras")) {
        for (auto& [name, body] : doc["algebras"].items()) {
            auto a = std::make_shared<Algebra>();
            a->name = name;
            a->p = field(body, "p", name).get<i64>();
            if (!is_prime(a->p)) throw WorkspaceError(name + ": p must be prime");
            a->dim = field(body, "dim", name).get<std::size_t>();
            const json& unit = field(body, "unit", name);
            const json& mult = field(body, "mult", name);
            if (unit.size() != a->dim)
                throw WorkspaceError(name + ": unit must have dim entries");
            if (mult.size() != a->dim * a->dim * a->dim)
                throw WorkspaceError(name + ": mult must have dim^3 entries");
            for (const auto& v : unit) a->unit.push_back(reduce(v.get<i64>(), a->p));
            for (const auto& v : mult) a->mult.push_back(reduce(v.get<i64>(), a->p));
            w.algebras.emplace(name, std::move(a));
        }
    }
    if (doc.contains("modules")) {
        for (auto& [name, body] : doc["modules"].items()) {
            Module m;
            m.algebra = w.algebra(field(body, "algebra", name).get<std::string>());
            m.name = name;
            m.dim = field(body, "dim", name).get<std::size_t>();
            const json& act = field(body, "action", name);
            if (!act.is_array() || act.size() != m.algebra->dim)
                throw WorkspaceError(name + ": action must list one matrix per basis element");
            for (std::size_t e = 0; e < act.size(); ++e)
                m.action.push_back(parse_matrix(act[e], m.algebra->p, m.dim, m.dim,
                                                name + ".action[" + std::to_string(e) + "]"));
            w.modules.emplace(name, std::move(m));
        }
    }
    if (doc.contains("morphisms")) {
        for (auto& [name, body] : doc["morphisms"].items()) {
            Morphism f;
            f.source = w.module(field(body, "source", name).get<std::string>());
            f.target = w.module(field(body, "target", name).get<std::string>());
            if (f.source.algebra != f.target.algebra)
                throw WorkspaceError(name + ": source and target live over different algebras");
            f.matrix = parse_matrix(field(body, "matrix", name), f.source.algebra->p,
                                    f.target.dim, f.source.dim, name + ".matrix");
            w.morphisms.emplace(name, std::move(f));
        }
    }
    if (doc.contains("subcategories")) {
        for (auto& [name, body] : doc["subcategories"].items()) {
            std::vector<Module> gens;
            for (const auto& g : field(body, "generators", name))
                gens.push_back(w.module(g.get<std::string>()));
            if (gens.empty()) throw WorkspaceError(name + ": needs at least one generator");
            w.subcategories.emplace(name, make_subcategory(name, std::move(gens)));
        }
    }
    if (doc.contains("sequences")) {
        for (auto& [name, body] : doc["sequences"].items()) {
            Sequence s;
            for (const auto& g : field(body, "maps", name))
                s.maps.push_back(w.morphism(g.get<std::string>()));
            if (s.maps.empty()) throw WorkspaceError(name + ": needs at least one map");
            for (std::size_t i = 0; i + 1 < s.maps.size(); ++i)
                if (!s.maps[i].target.same_as(s.maps[i + 1].source))
                    throw WorkspaceError(name + ": maps " + std::to_string(i) + " and " +
                                         std::to_string(i + 1) + " are not composable");
            w.sequences.emplace(name, std::move(s));
        }
    }
    return w;
}

std::string serialize(const Workspace& w) {
    json doc = json::object();
    doc["algebras"] = json::object();
    for (const auto& [name, a] : w.algebras) {
        json body;
        body["dim"] = a->dim;
        body["mult"] = a->mult;
        body["p"] = a->p;
        body["unit"] = a->unit;
        doc["algebras"][name] = std::move(body);
    }
    doc["modules"] = json::object();
    for (const auto& [name, m] : w.modules) {
        json body;
        json act = json::array();
        for (const Matrix& x : m.action) act.push_back(dump_matrix(x));
        body["action"] = std::move(act);
        body["algebra"] = m.algebra->name;
        body["dim"] = m.dim;
        doc["modules"][name] = std::move(body);
    }
    doc["morphisms"] = json::object();
    for (const auto& [name, f] : w.morphisms) {
        json body;
        body["matrix"] = dump_matrix(f.matrix);
        body["source"] = f.source.name;
        body["target"] = f.target.name;
        doc["morphisms"][name] = std::move(body);
    }
    doc["subcategories"] = json::object();
    for (const auto& [name, c] : w.subcategories) {
        json gens = json::array();
        for (const Module& g : c.generators) gens.push_back(g.name);
        doc["subcategories"][name] = json{{"generators", std::move(gens)}};
    }
    doc["sequences"] = json::object();
    for (const auto& [name, s] : w.sequences) {
        json maps = json::array();
        // Morphisms are stored by name in the workspace; recover the name
        // by matrix identity among the registered morphisms.
        for (const Morphism& f : s.maps) {
            std::string found;
            for (const auto& [mn, g] : w.morphisms)
                if (g.source.name == f.source.name && g.target.name == f.target.name &&
                    g.matrix == f.matrix) {
                    found = mn;
                    break;
                }
            if (found.empty())
                throw WorkspaceError("sequence " + name + " uses an unregistered morphism");
            maps.push_back(found);
        }
        doc["sequences"][name] = json{{"maps", std::move(maps)}};
    }
    return doc.dump(2) + "\n";
}

Workspace fixture_workspace() {
    using namespace fixtures;
    Workspace w;
    w.algebras = {{"A2", a2()}, {"LAMBDA1", lambda1()}, {"LAMBDA2", lambda2()}};

    auto add_mod = [&](Module m) { w.modules.emplace(m.name, std::move(m)); };
    add_mod(k1());
    add_mod(reg1());
    add_mod(k2());
    add_mod(m2());
    add_mod(reg2());
    add_mod(sa());
    add_mod(sb());
    add_mod(pa());
    add_mod(regular_module(a2(), "LAMBDA"));

    w.morphisms.emplace("soc_inc", soc_inc());
    w.morphisms.emplace("quo", quo());
    w.morphisms.emplace("x", compose(soc_inc(), quo()));

    w.subcategories.emplace("add(K1)", make_subcategory("add(K1)", {k1()}));
    w.subcategories.emplace("add(LAMBDA)",
                            make_subcategory("add(LAMBDA)", {regular_module(a2(), "LAMBDA")}));
    w.subcategories.emplace("add(REG1)", make_subcategory("add(REG1)", {reg1()}));
    w.subcategories.emplace("add(REG1+K1)",
                            make_subcategory("add(REG1+K1)", {reg1(), k1()}));

    w.sequences.emplace("nonsplit", Sequence{{soc_inc(), quo()}});
    w.sequences.emplace("period2",
                        Sequence{{soc_inc(), compose(soc_inc(), quo()), quo()}});
    return w;
}

std::string to_dot(const std::map<std::string, Sequence>& named) {
    std::ostringstream out;
    out << "digraph chains {\n";
    for (const auto& [name, s] : named) {
        auto rep = is_exact(s);
        for (std::size_t i = 0; i <= s.length(); ++i) {
            const Module& m = s.object(i);
            out << "  \"" << name << "." << i << "\" [label=\"" << m.name << " (dim "
                << m.dim << ")\"];\n";
        }
        for (std::size_t i = 0; i < s.length(); ++i) {
            std::size_t rank = image(s.maps[i]).module.dim;
            bool interior = i > 0;
            bool ok = !interior || rep.exact || rep.failure_position != i;
            out << "  \"" << name << "." << i << "\" -> \"" << name << "." << i + 1
                << "\" [label=\"rank " << rank
                << (interior ? (ok ? ", exact" : ", not exact") : "") << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace homres
