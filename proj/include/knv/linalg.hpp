#pragma once

#include <optional>
#include <vector>

#include "knv/ring.hpp"

namespace knv {

// Solve M x = b over the fraction field by Gaussian elimination.
// Returns nullopt when the system is singular or inconsistent.
std::optional<std::vector<RingElem>> solve_linear(std::vector<std::vector<RingElem>> m,
                                                  std::vector<RingElem> b);

// Basis of the right kernel of m.
std::vector<std::vector<RingElem>> kernel_basis(std::vector<std::vector<RingElem>> m);

// Basis of the linear relations sum_i c_i elems_i = 0 with c_i in the
// constants field Q(p0..p4, alpha, beta, gamma). Exact: denominators are
// cleared and the kernel is read off the jet-monomial coefficient matrix.
std::vector<std::vector<RingElem>> constant_relations(const std::vector<RingElem>& elems);

// Coefficients of k in span(basis) over the constants field, or nullopt.
std::optional<std::vector<RingElem>> solve_constant_span(const RingElem& k,
                                                         const std::vector<RingElem>& basis);

}  // namespace knv
