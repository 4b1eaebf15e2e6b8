#pragma once

#include "cedille/term.hpp"

namespace cedille {

// Computational content of an annotated term. The result never contains
// projections, beta, delta, sigma, erased application, rho, erased lambda,
// intersection introduction, phi or let. Term-level lambdas lose their
// annotation; type-level lambdas keep an erased one. A let binding a term
// variable becomes a redex; type- and kind-level lets are substituted away.
Term erase(const Term& t);

}  // namespace cedille
