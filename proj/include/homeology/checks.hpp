#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "homeology/coefficients.hpp"
#include "homeology/complex.hpp"
#include "homeology/spectral.hpp"

namespace hml {

struct CheckReport {
    std::string check;
    bool pass = false;
    std::string lhs;
    std::string rhs;
    std::vector<std::string> notes;
};

/// Cell-wise direct sum.
BigradedTable table_sum(const BigradedTable& a, const BigradedTable& b);
/// ⊕ a(p1,q1) ⊗ b(p2,q2) placed at (p1+p2+shift, q1+q2+shift).
BigradedTable table_tensor(const BigradedTable& a, const BigradedTable& b, int shift);
bool table_is_free(const BigradedTable& t);

/// Σ (-1)^{q-p} rank ℋ^{p,q}(K) against χ(K).
CheckReport check_euler(const SimplicialComplex& k);
/// rank ℋ^{n,n} against the component count for every n, torsion-free diagonal, and the
/// enumerated components when K has at most face_budget faces.
CheckReport check_components(const SimplicialComplex& k, std::size_t face_budget = 64);
/// Reduced ℋ(K*L) against the tensor of the reduced tables shifted by one.
/// Throws Error(Hypothesis) when either table has torsion.
CheckReport check_kunneth_join(const SimplicialComplex& k, const SimplicialComplex& l);
/// ℋ of the product block complex against the tensor of the factor tables.
CheckReport check_kunneth_product(const SimplicialComplex& k, const SimplicialComplex& l);

enum class GlueCase { A, BI, BII, CI, CII };
const char* glue_case_name(GlueCase c);
/// ℋ(K ∪ L) against the prediction for an intersection 2^σ.
/// identification maps L labels to K labels. Throws Error(Hypothesis) unless K ∩ L is one closed simplex.
CheckReport check_glue(const SimplicialComplex& k, const SimplicialComplex& l,
                       const std::map<std::string, std::string>& identification, std::size_t face_budget = 64);

/// Table for (reduced, homological) variant.
using TableEngine = std::function<BigradedTable(const SimplicialComplex&, const Coefficients&, bool, bool)>;
BigradedTable default_table_engine(const SimplicialComplex& k, const Coefficients& coeffs, bool reduced,
                                   bool homological);

struct InvarianceReport {
    bool pass = true;
    int steps = 0;
    std::vector<std::string> log;
    std::string failure;
};

/// Applies `count` seeded stellar subdivisions at faces of dimension >= 1 and compares all four
/// tables after each one. Throws Error(Budget) once the complex exceeds face_budget faces.
InvarianceReport verify_invariance(const SimplicialComplex& k, int count, std::uint64_t seed,
                                   const Coefficients& coeffs = {}, std::size_t face_budget = 4000,
                                   const TableEngine& engine = default_table_engine);

}  // namespace hml
