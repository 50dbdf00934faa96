#pragma once

#include <string_view>

#include "csf/expansion.hpp"
#include "csf/sym.hpp"

namespace csf {

enum class NSymBasis { Lambda, S, Psi, R };

const char* basis_name(NSymBasis b);
NSymBasis parse_nsym_basis(std::string_view name);

/// A noncommutative symmetric function in the Lambda, S, Psi or ribbon basis.
using NSymPoly = Expansion<Composition, NSymBasis>;

NSymPoly nsym_add(const NSymPoly& f, const NSymPoly& g);
NSymPoly nsym_scale(const NSymPoly& f, const Rational& c);
/// Concatenation product in Lambda, S or Psi. Ribbon products are rejected.
NSymPoly nsym_mul(const NSymPoly& f, const NSymPoly& g);

NSymPoly psi_to_lambda(const NSymPoly& f);
NSymPoly lambda_to_psi(const NSymPoly& f);
NSymPoly lambda_to_ribbon(const NSymPoly& f);
NSymPoly psi_to_ribbon(const NSymPoly& f);
NSymPoly ribbon_to_complete(const NSymPoly& f);
NSymPoly complete_to_lambda(const NSymPoly& f);
NSymPoly lambda_to_complete(const NSymPoly& f);

/// Converts between any two of the four bases.
NSymPoly convert(const NSymPoly& f, NSymBasis target);

/// rho: Lambda -> e, S -> h, Psi -> p; ribbons go through S and land in h.
SymPoly project(const NSymPoly& f);
SymPoly project_to_e(const NSymPoly& f);

using NSymPositivity = PositivityReport<NSymPoly>;

/// Nonnegativity of the coefficients in the stored basis.
NSymPositivity is_positive(const NSymPoly& f);

}  // namespace csf
