#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "steerkit/engine.hpp"
#include "steerkit/lsi.hpp"
#include "steerkit/states.hpp"

namespace steerkit {

/// A named inequality with its closed-form reference threshold(s) and, when
/// known, the state and settings attaining the quantum optimum.
struct CatalogEntry {
    std::string name;
    std::map<std::string, double> parameters;
    std::optional<FullOperatorSpec> full;
    std::optional<LsiSpec> lsi;
    std::optional<double> reference_beta;
    std::optional<double> reference_gamma;
    std::optional<StateSpec> optimal_state;
    std::optional<double> optimal_expectation;
    std::string notes;           // closed-form reference, printed on mismatch
    bool symmetric = false;      // permutation symmetric: symmetric path valid
    std::string scan_parameter;  // default parameter swept by `scan`
};

CatalogEntry chsh_accompanied();
CatalogEntry pauli_two_setting(double theta, double scale = 1.0,
                               const ComplexMatrix& basis_unitary = ComplexMatrix::identity(2));
CatalogEntry pauli_three_setting(double theta, double phi, double scale = 1.0,
                                 const ComplexMatrix& basis_unitary = ComplexMatrix::identity(2));
CatalogEntry mub_lsi(std::size_t d);
/// Same operator with explicit orthonormal bases for the untrusted side
/// (columns of the two unitaries).
CatalogEntry mub_lsi(std::size_t d, const ComplexMatrix& alice_basis_1, const ComplexMatrix& alice_basis_2);
CatalogEntry mub_omega_lsi(std::size_t d, double omega);
CatalogEntry haar_lsi(std::size_t d);
CatalogEntry tilted_chsh(double delta, double alpha);
CatalogEntry pironio(std::size_t d);
/// Pironio operator over caller-supplied measurements (for random POVM sweeps).
CatalogEntry pironio_with(std::size_t d, const std::vector<Povm>& alice, const std::vector<Povm>& bob);
CatalogEntry witness_lsi();
CatalogEntry svetlichny();
CatalogEntry mermin();
CatalogEntry ghz_type();
CatalogEntry ghz_type_weighted(double alpha);
CatalogEntry ghz_type_gamma_delta(double gamma, double delta);
CatalogEntry nghz(std::size_t n);
CatalogEntry nghz_global(std::size_t n, std::size_t m);

/// Harmonic number H_d = 1 + 1/2 + ... + 1/d.
double harmonic_number(std::size_t d);
/// Analytic expectations of the uniform-setting operator family.
double haar_werner_expectation(std::size_t d, double w);        // (1-w)/d
double haar_isotropic_expectation(std::size_t d, double eta);   // (1+(d-1)eta)/d

/// N-qubit ladder operators: first = sum of the two cross-diagonal products,
/// second = their i-weighted difference; both Hermitian with spectrum
/// {+1, -1, 0...}. Used by the nghz family.
std::pair<ComplexMatrix, ComplexMatrix> nghz_pair_operators(std::size_t n);

/// CLI-addressable names.
std::vector<std::string> catalog_names();
/// Parameter keys an entry accepts (empty for parameterless entries).
std::vector<std::string> entry_parameter_names(const std::string& name);
/// Build an entry by CLI name with named parameters (defaults applied).
/// Throws InvalidParameterError for unknown names or parameters.
CatalogEntry make_entry(const std::string& name, const std::map<std::string, double>& params);

/// Threshold dispatch: one-way for bare LsiSpec entries, two-way for
/// bipartite operators, symmetric or full partition enumeration for
/// multipartite ones, closed forms for the analytic uniform-setting entry.
ThresholdReport compute_threshold(const CatalogEntry& entry, const EnumerationOptions& opts = {});

}  // namespace steerkit
