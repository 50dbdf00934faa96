#pragma once

#include <string_view>

#include "csf/expansion.hpp"

namespace csf {

enum class SymBasis { e, h, p };

const char* basis_name(SymBasis b);
SymBasis parse_sym_basis(std::string_view name);

/// A symmetric function in one of the multiplicative bases e, h, p.
using SymPoly = Expansion<Partition, SymBasis>;

SymPoly sym_add(const SymPoly& f, const SymPoly& g);
SymPoly sym_scale(const SymPoly& f, const Rational& c);
/// b_lambda * b_mu = b_{lambda mu}, sorted.
SymPoly sym_mul(const SymPoly& f, const SymPoly& g);

SymPoly p_to_e(const SymPoly& f);
SymPoly h_to_p(const SymPoly& f);
SymPoly h_to_e(const SymPoly& f);
SymPoly e_to_p(const SymPoly& f);
/// Any of e, h, p converted to e.
SymPoly to_e(const SymPoly& f);

/// p_k written in the e basis (Newton's identities).
const SymPoly& power_sum_in_e(int k);
/// h_k written in the p basis.
const SymPoly& complete_in_p(int k);

using SymPositivity = PositivityReport<SymPoly>;

/// Converts to e and checks every coefficient is nonnegative.
SymPositivity is_e_positive(const SymPoly& f);

}  // namespace csf
