#pragma once

#include <string>
#include <vector>

#include "gridmono/grid.hpp"
#include "gridmono/kasteleyn.hpp"

namespace gridmono {

struct CheckCase {
    std::string name;
    bool pass = false;
    std::string detail;  // values involved; empty when passing and uninteresting
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckCase> cases;

    bool all_pass() const;
    std::size_t failed_count() const;
    void add(std::string name, bool pass, std::string detail = "");
};

// Deterministic pseudo-random weights; values lie in [1/max_den, max_num].
WeightSpec random_weights(int d, unsigned seed, int max_num = 8, int max_den = 4,
                          bool zero_x = false);

// All dims tuples with min_entry <= n_i, dimension <= max_d and product <= max_product.
std::vector<std::vector<int>> dims_tuples(int min_entry, int max_d, long max_product);
// Tuples of even entries >= 2 with product <= max_product.
std::vector<std::vector<int>> even_dims_tuples(int max_d, long max_product);

// Enumeration equals determinant (exactly) on every small spec across all
// boundary modes, three random rational weight tuples each.
SuiteResult suite_small(long max_vertices = 10);

// Closed-form products against determinants for every formula family:
// exhaustive exact equality (efficient below exact_cap vertices, spot checks
// at the boundary) plus 1e-8 relative agreement across all instances up to
// max_vertices. Also checks the mixed-family consistency identities.
SuiteResult suite_formulas(long max_vertices = 256, long exact_cap = 96);

// The two 4D twisted-boundary determinant identities at sampled rational
// weights, plus the not-an-8th-power witness.
SuiteResult suite_counterexamples();

// Cylindrical = twisted^2 identity on [4n1,2n2,2n3] vs [2n1,2n2,2n3].
SuiteResult suite_relation();

// Perfect-matching count == |Pf| == rounded 2D dimer product on every
// boundary mode up to 4x4, symmetric and asymmetric weights.
SuiteResult suite_dimer();

// Odd orientation on every twisted spec up to max_vertices; d = 3 dashed
// sign pattern equals its Kronecker form; graph and Kronecker builders
// produce identical matrices (and determinants at the size boundary).
SuiteResult suite_orientation(long max_vertices = 256, long det_boundary = 512);

// Inductive boustrophedon labels equal the closed 3D indexing formula on
// all even 3D specs up to max_vertices, every coordinate.
SuiteResult suite_labelling(long max_vertices = 4096);

}  // namespace gridmono
