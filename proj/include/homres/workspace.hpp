#pragma once

// Named workspaces loaded from JSON, their canonical serialization, and
// the DOT rendering of sequences.

#include <map>
#include <string>

#include "homres/approx.hpp"
#include "homres/modcat.hpp"

namespace homres {

/// Malformed input: unparsable JSON, missing fields, dangling names,
/// dimension mismatches.  Distinct from semantic validation failures.
struct WorkspaceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Workspace {
    std::map<std::string, AlgebraPtr> algebras;
    std::map<std::string, Module> modules;
    std::map<std::string, Morphism> morphisms;
    std::map<std::string, Subcategory> subcategories;
    std::map<std::string, Sequence> sequences;

    const AlgebraPtr& algebra(const std::string& name) const;
    const Module& module(const std::string& name) const;
    const Morphism& morphism(const std::string& name) const;
    const Subcategory& subcategory(const std::string& name) const;
    const Sequence& sequence(const std::string& name) const;
};

/// Parses a workspace document; every integer entry is reduced mod the
/// owning algebra's p, and all name references are resolved (throwing
/// WorkspaceError on any structural problem).
Workspace parse_workspace(const std::string& text);

/// Canonical serialization: sorted names, row-major integer matrices,
/// two-space indentation, trailing newline.  parse/serialize round-trips
/// byte-identically on canonical files.
std::string serialize(const Workspace& w);

/// The shipped example workspace.
Workspace fixture_workspace();

/// DOT rendering: objects as nodes labeled with dimensions, morphisms as
/// edges labeled with their rank and the exactness verdict at their
/// source position.
std::string to_dot(const std::map<std::string, Sequence>& named);

}  // namespace homres
