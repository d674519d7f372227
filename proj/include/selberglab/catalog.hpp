#ifndef SELBERGLAB_CATALOG_HPP
#define SELBERGLAB_CATALOG_HPP

#include "selberglab/classifier.hpp"
#include "selberglab/core.hpp"

#include <string>
#include <vector>

namespace selberglab {

struct CatalogEntry {
    std::string name;
    LFunctionData data;
    ExactComplex expected_chi;
    ExactComplex expected_xi;
    ExactComplex expected_omega_F;
    Classification::Verdict expected_verdict = Classification::Verdict::ZetaSquared;
};

// names: "zeta_squared", "ramanujan_normalized", "hecke(mu)", "maass(eps,kappa)";
// parameters parse as exact rationals ("7/2") or floats.  Entries self-test
// against their stored expectations on load.
CatalogEntry load_entry(const std::string& name, int n_max = 32);

// d(n) = number of divisors, n = 1..n_max
std::vector<Integer> divisor_counts(int n_max);

// tau(n) from the 24th power of the Euler product, n = 1..n_max
std::vector<Integer> ramanujan_tau(int n_max);

// JSON schema:
// { "Q": {"rational": "p/q", "two_exp": int, "pi_exp": int} | float,
//   "omega": {"re": "p/q"|float, "im": "p/q"|float},
//   "factors": [{"lambda": "p/q"|float, "mu": {"re": ..., "im": ...}}, ...],
//   "coefficients": {"kind": "zeta_squared"|"ramanujan"|"list", "values": [...], "n_max": int},
//   "pole_order": int }
LFunctionData parse_gamma_json(const std::string& text);

// canonical form; lossless for exact-mode data (parse . serialize = id)
std::string serialize_gamma(const LFunctionData& f);

}  // namespace selberglab

#endif
