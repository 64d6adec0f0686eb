#pragma once

// Shipped example algebras and modules used throughout the tests and the
// default workspace: the smallest algebras exhibiting non-split
// extensions, self-injectivity and hereditary behavior.

#include "homres/modcat.hpp"

namespace homres::fixtures {

/// GF(2)[x]/(x^2), basis {1, x}.
AlgebraPtr lambda1();
/// GF(3)[x]/(x^3), basis {1, x, x^2}.
AlgebraPtr lambda2();
/// Path algebra of the quiver 1 -> 2 over GF(2), basis {eps1, eps2, arrow}.
AlgebraPtr a2();

/// Trivial (one-dimensional, x acts by zero) module over lambda1.
Module k1();
/// Regular module over lambda1.
Module reg1();
/// Socle inclusion k1 -> reg1.
Morphism soc_inc();
/// Canonical quotient reg1 -> k1.
Morphism quo();

/// Trivial module over lambda2.
Module k2();
/// lambda2 / (x^2), dimension 2.
Module m2();
Module reg2();

/// A module over a2 from quiver data: vertex dimensions and the arrow's
/// n2 x n1 matrix (basis: vertex-1 coordinates first).
Module a2_module(std::size_t n1, std::size_t n2, const Matrix& arrow,
                 const std::string& name);
/// Simple at the source vertex (not projective).
Module sa();
/// Simple at the target vertex (projective).
Module sb();
/// The indecomposable projective of dimension 2 (cover of sa).
Module pa();

}  // namespace homres::fixtures
