// Worked application cases. Each case returns a CaseResult: named values,
// each optionally paired with a reference and a provenance tag
// ("closed-form" for in-code exact expressions, "reference-table" for
// pinned tabulated decimals, "derived-oracle" for pinned values from
// independent numerical computation, "none" when unreferenced), plus an
// optional grid for report-style output.
#pragma once

#include <string>
#include <vector>

#include "asympt/pade.hpp"
#include "asympt/series.hpp"

namespace asympt {

struct CaseValue {
    std::string name;
    double computed = 0.0;
    bool has_reference = false;
    double reference = 0.0;
    std::string provenance = "none";
    double deviation = 0.0;  // |computed - reference| when referenced
};

struct CaseGrid {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

struct CaseResult {
    std::string case_id;
    std::vector<CaseValue> values;
    CaseGrid grid;

    const CaseValue* find(const std::string& name) const;
    // Computed entry by name; throws InvalidInput when absent.
    double value(const std::string& name) const;
};

enum class Lattice { SC, BCC, FCC };

// -- building blocks, exposed for direct use and testing ------------------

// Quintic x^5 + x = 1, three expansion routes and the exact root.
PowerSeries quintic_direct_series(int order);    // x(eps) about eps=0 of x^5+eps*x=1, eps-coefficients at eps=1 diverge
PowerSeries quintic_root_series(int order);      // x(eps) for x^5 + eps*x = 1
PowerSeries quintic_exponent_series(int order);  // x(delta) for x^(1+delta) + x = 1
double quintic_exact_root();

double oscillator_period(double n);  // closed-form period of the x^n oscillator

RationalApproximant vdp_tppa();      // [3/2] two-point fit of the relaxation period
double vdp_period(double eps);

RationalApproximant laplace_tppa_approximant();  // [1/2] two-point fit of (1+t^2)^(-1/2)
double laplace_k0_model(double t);               // additive exponential model, t > 1

double schrodinger_ground_energy(double n);

double conductivity_cmax(Lattice l);
double conductivity_virial(Lattice l, double c);  // 0 <= c <= cmax
double conductivity_aef(Lattice l, double c);     // 0 <= c < cmax

double dispersion_discrete(double kh);
double dispersion_continuum(double kh);
double dispersion_higher_order(double kh);
double dispersion_quasi(double kh);

RationalApproximant padeon_approximant();       // [1/2] of the kink seed series
double padeon_wave(double x, double amplitude); // approximant at u = amplitude*exp(-x)

PowerSeries blowup_series(double alpha, double t);  // amplitude expansion at time t
double blowup_time(double alpha, double eps);       // pole-crossing time, bisection

double bvp_aef_value(double xi);      // matched closed form for y'' = xi*y, y(0)=1, y(inf)=0
double bvp_slope();                   // y'(0) from RK4 shooting
std::vector<double> bvp_oracle_grid();  // shooting y at xi = 0.00 .. 5.00 step 0.01

// -- assembled cases -------------------------------------------------------

CaseResult quintic_case();
CaseResult oscillator_case(double n);
CaseResult vdp_case(double eps);
CaseResult laplace_tppa_case();
CaseResult laplace_k0_case();
CaseResult schrodinger_case(double n);
CaseResult conductivity_case(Lattice l, double c);
CaseResult dispersion_case(double kh);
CaseResult padeon_case();
CaseResult blowup_case();
CaseResult bvp_case();

struct CaseParams {
    double eps = 1.0;                      // vdp
    double n = 3.0;                        // oscillator, schrodinger
    Lattice lattice = Lattice::SC;         // conductivity
    double c = 0.05;                       // conductivity
    double kh = 3.14159265358979323846;    // dispersion
};

const std::vector<std::string>& case_ids();
CaseResult run_case(const std::string& id, const CaseParams& params);

}  // namespace asympt
