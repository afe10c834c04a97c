#pragma once

#include <string>
#include <vector>

#include "detrees/shape.hpp"

namespace detrees {

struct VerifyConfig {
    int kmax = 3;                     // power/product checks run for k = 2..kmax
    int degmax = 6;                   // Hilbert-function comparison degree bound
    int sagbi_degmax = 4;             // three-way fiber degeneration degree bound
    int elim_budget = 5;              // max n for elimination-based checks
    long long pair_budget = 200000;   // S-pair estimate cap for power/product checks
    long long product_budget = 20000; // cap on expanded minor products per degree
    std::vector<std::string> only;    // when nonempty, run_all runs only these checks
};

enum class CheckStatus { Pass, Fail, Skip };

struct InvariantComparison {
    std::string quantity;
    std::string formula;   // closed-form value
    std::string computed;  // engine value
    bool equal = false;
};

struct CheckReport {
    std::string name;
    Shape shape;
    CheckStatus status = CheckStatus::Pass;
    std::vector<std::string> witnesses;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<InvariantComparison> comparisons;
    std::string skip_reason;
    double millis = 0.0;

    bool passed() const { return status == CheckStatus::Pass; }
    bool failed() const { return status == CheckStatus::Fail; }
};

/// Minors are a Groebner basis under the diagonal order and their initial
/// ideal equals the closed-form Ferrers ideal.
CheckReport check_minors_gb(const Shape& sh);

/// in(I^k) equals (in I)^k as monomial ideals.
CheckReport check_power_initial(const Shape& sh, int k, const VerifyConfig& cfg = {});

/// The k-fold products of minors are a Groebner basis of I^k.
CheckReport check_products_gb(const Shape& sh, int k, const VerifyConfig& cfg = {});

/// Eliminated Rees kernel equals the ideal of linear + Plucker relations
/// (two-sided reduction certificates); the reduced basis is quadratic in the
/// y-variables (relation type <= 2) and its y-linear part lies in the linear
/// relations' ideal (fiber type).
CheckReport check_rees_kernel(const Shape& sh, const VerifyConfig& cfg = {});

/// Eliminated fiber kernel equals the Plucker ideal; with use_initial, the
/// kernel on the initial monomials equals the ladder-minor ideal I2(L).
CheckReport check_fiber_kernel(const Shape& sh, bool use_initial, const VerifyConfig& cfg = {});

/// The pi-initial forms of the relations biject onto the 2x2 minors of the
/// extended ladder, up to sign, with the expected index correspondence.
CheckReport check_pi_leading_forms(const Shape& sh);

/// Hilbert functions of S/I2(L') and S/J agree up to degree D; together with
/// the leading-form bijection this certifies the weight-Groebner property.
CheckReport check_pi_gb(const Shape& sh, int D, const VerifyConfig& cfg = {});

/// Three-way Hilbert agreement: dim (I^d) in degree 2d, the count of distinct
/// d-fold products of initial monomials, and HF(T/I2(L)) at d, for d <= D.
CheckReport check_sagbi_fiber(const Shape& sh, int D, const VerifyConfig& cfg = {});

/// Computed (dim, h, e, reg, a) of the special fiber against the closed forms,
/// plus the Gorenstein h-symmetry criterion.
CheckReport check_fiber_invariants(const Shape& sh);

/// Computed (dim, h, e, reg, a) of the Rees algebra against the closed forms.
CheckReport check_rees_invariants(const Shape& sh);

/// Runs every checker whose resource estimate fits the budgets; checks that
/// do not fit are reported as skipped with a reason, never dropped.
std::vector<CheckReport> run_all(const Shape& sh, const VerifyConfig& cfg = {});

}  // namespace detrees
