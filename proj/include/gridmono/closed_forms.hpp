#pragma once

#include <optional>
#include <string>

#include "gridmono/partition_value.hpp"

namespace gridmono {

// Each id names one closed-form product for the partition function:
// the 2D dimer products (x = 0) and the monopole-dimer products with
// vertex weight x. Mixed is the l-cylindrical family, 1 <= l <= d.
enum class FormulaId {
    Dimer2DFree,
    Dimer2DCyl,
    Dimer2DTor,
    Dimer2DMob,
    Dimer2DKlein,
    MD_Free,
    MD_Cyl,
    MD_Mixed,
    MD_Tor,
    MD_Mob3,
    MD_Klein3,
};

std::string to_string(FormulaId id);

// The monopole-dimer formula applicable to a spec, when one exists.
std::optional<FormulaId> formula_for_spec(const GridSpec& spec);
// The 2D dimer formula for a 2D spec, when one exists.
std::optional<FormulaId> dimer_formula_for_spec(const GridSpec& spec);

// Evaluates the product in high-precision reals, multiplying factors in
// ascending magnitude order, then raising to the stated power (2^(d-1)
// for the monopole-dimer families, 4 for the d = 3 twisted ones, 1 for
// the 2D dimer products). bits = 0 uses the default precision. The 2D
// dimer ids ignore x. Throws on odd dims or id/spec mismatch.
PartitionValue eval_formula(FormulaId id, const GridSpec& spec, const WeightSpec& w,
                            unsigned bits = 0);

// True iff the cylindrical value on [4*n1, 2*n2, 2*n3] equals the square
// of the twisted value on [2*n1, 2*n2, 2*n3]; compares exactly when both
// round to integers, else within rel_tol.
bool check_cyl_moebius_relation(int n1, int n2, int n3, const WeightSpec& w,
                                double rel_tol = 1e-10);

// Returns the nearest integer when |v - round(v)| <= tol * max(1, |v|),
// otherwise nothing (caller keeps the real value).
std::optional<BigInt> round_if_near_integer(const Real& v, double tol);

}  // namespace gridmono
