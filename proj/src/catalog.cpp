#include "steerkit/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "steerkit/random.hpp"

namespace steerkit {

namespace {

constexpr double kPi = std::numbers::pi;

ComplexMatrix pauli_matrix(char axis) { return pauli(axis).matrix; }

Observable rotated_pauli(char axis, const ComplexMatrix& u, const std::string& label) {
    return Observable::make_two_valued(u * pauli_matrix(axis) * u.adjoint(), label);
}

std::optional<TermFactor> by_value(std::size_t setting) { return TermFactor{setting, std::nullopt}; }
std::optional<TermFactor> by_outcome(std::size_t setting, std::size_t outcome) {
    return TermFactor{setting, outcome};
}

/// n qubit parties, each carrying the observables named by `axes` ("xy", "xyz").
FullOperatorSpec qubit_spec(std::size_t n, const std::string& axes) {
    FullOperatorSpec spec;
    spec.layout.dims.assign(n, 2);
    spec.measurements.resize(n);
    for (std::size_t p = 0; p < n; ++p)
        for (char axis : axes) spec.measurements[p].push_back(pauli(axis));
    return spec;
}

/// Term from an axis string over {'x','y','z','i'}; 'i' = identity factor.
void add_string_term(FullOperatorSpec& spec, const std::string& axes, double weight,
                     const std::string& term) {
    OperatorTerm t;
    t.weight = weight;
    t.factors.resize(spec.layout.n_parties());
    for (std::size_t p = 0; p < term.size(); ++p) {
        if (term[p] == 'i') continue;
        t.factors[p] = TermFactor{axes.find(term[p]), std::nullopt};
    }
    spec.terms.push_back(std::move(t));
}

struct PauliString {
    double coeff;
    std::string axes;  // over {'x','y'}
};

/// The recursive pair expansion underlying the nghz family. Each step maps
/// (A1, A2) -> ( (A1 x X + A2 x Y)/2, (-A1 x Y + A2 x X)/2 ), starting from
/// A1 = X, A2 = -Y on one qubit.
std::pair<std::vector<PauliString>, std::vector<PauliString>> nghz_expansion(std::size_t n) {
    std::vector<PauliString> a1{{1.0, "x"}};
    std::vector<PauliString> a2{{-1.0, "y"}};
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<PauliString> n1, n2;
        n1.reserve(a1.size() + a2.size());
        n2.reserve(a1.size() + a2.size());
        for (const PauliString& t : a1) {
            n1.push_back({0.5 * t.coeff, t.axes + "x"});
            n2.push_back({-0.5 * t.coeff, t.axes + "y"});
        }
        for (const PauliString& t : a2) {
            n1.push_back({0.5 * t.coeff, t.axes + "y"});
            n2.push_back({0.5 * t.coeff, t.axes + "x"});
        }
        a1 = std::move(n1);
        a2 = std::move(n2);
    }
    return {std::move(a1), std::move(a2)};
}

ComplexMatrix realize_strings(const std::vector<PauliString>& strings) {
    const std::size_t n = strings.front().axes.size();
    ComplexMatrix out(std::size_t{1} << n);
    for (const PauliString& t : strings) {
        ComplexMatrix factor = ComplexMatrix::identity(1);
        for (char axis : t.axes) factor = kron(factor, pauli_matrix(axis));
        out += Complex{t.coeff, 0.0} * factor;
    }
    return out;
}

Povm computational_povm(std::size_t d, const std::string& label) {
    std::vector<std::vector<Complex>> basis(d, std::vector<Complex>(d));
    for (std::size_t a = 0; a < d; ++a) basis[a][a] = 1.0;
    return Povm::projective(basis, label);
}

Povm dichotomic_projector_povm(const ComplexMatrix& p, const std::string& label) {
    return Povm::make({p, ComplexMatrix::identity(p.dim()) - p}, label);
}

std::vector<std::vector<Complex>> unitary_columns(const ComplexMatrix& u) {
    std::vector<std::vector<Complex>> cols(u.dim(), std::vector<Complex>(u.dim()));
    for (std::size_t j = 0; j < u.dim(); ++j)
        for (std::size_t i = 0; i < u.dim(); ++i) cols[j][i] = u(i, j);
    return cols;
}

CatalogEntry mub_like_entry(std::size_t d, double weight_1, double weight_2,
                            const std::vector<std::vector<Complex>>& alice_1,
                            const std::vector<std::vector<Complex>>& alice_2) {
    const MubFamily fam = mub_family(d);
    FullOperatorSpec spec;
    spec.layout.dims = {d, d};
    spec.measurements.resize(2);
    spec.measurements[0].push_back(Povm::projective(alice_1, "P1"));
    spec.measurements[0].push_back(Povm::projective(alice_2, "P2"));
    spec.measurements[1].push_back(fam.basis_povm(0, "M1"));
    spec.measurements[1].push_back(fam.basis_povm(1, "M2"));
    for (std::size_t mu = 0; mu < 2; ++mu)
        for (std::size_t a = 0; a < d; ++a) {
            OperatorTerm t;
            t.weight = mu == 0 ? weight_1 : weight_2;
            t.factors = {by_outcome(mu, a), by_outcome(mu, a)};
            spec.terms.push_back(std::move(t));
        }

    CatalogEntry entry;
    entry.full = std::move(spec);
    return entry;
}

double max_cross_overlap(const std::vector<std::vector<Complex>>& basis_1,
                         const std::vector<std::vector<Complex>>& basis_2) {
    double best = 0.0;
    for (const auto& a : basis_1)
        for (const auto& b : basis_2) {
            Complex ov{};
            for (std::size_t i = 0; i < a.size(); ++i) ov += std::conj(a[i]) * b[i];
            best = std::max(best, std::abs(ov));
        }
    return best;
}

}  // namespace

double harmonic_number(std::size_t d) {
    double h = 0.0;
    for (std::size_t k = 1; k <= d; ++k) h += 1.0 / static_cast<double>(k);
    return h;
}

double haar_werner_expectation(std::size_t d, double w) { return (1.0 - w) / static_cast<double>(d); }

double haar_isotropic_expectation(std::size_t d, double eta) {
    return (1.0 + (static_cast<double>(d) - 1.0) * eta) / static_cast<double>(d);
}

std::pair<ComplexMatrix, ComplexMatrix> nghz_pair_operators(std::size_t n) {
    auto [a1, a2] = nghz_expansion(n);
    return {realize_strings(a1), realize_strings(a2)};
}

namespace {

Observable labeled_pauli(char axis, std::string label) {
    Observable o = pauli(axis);
    o.label = std::move(label);
    return o;
}

}  // namespace

CatalogEntry chsh_accompanied() {
    const double s = 1.0 / std::sqrt(2.0);
    CatalogEntry entry;
    entry.name = "chsh";
    FullOperatorSpec spec;
    spec.layout.dims = {2, 2};
    spec.measurements.resize(2);
    spec.measurements[0] = {labeled_pauli('z', "A1"), labeled_pauli('x', "A2")};
    spec.measurements[1] = {
        Observable::make_two_valued(Complex{s, 0.0} * (pauli_matrix('z') + pauli_matrix('x')), "B1"),
        Observable::make_two_valued(Complex{s, 0.0} * (pauli_matrix('z') - pauli_matrix('x')), "B2")};
    spec.terms = {
        OperatorTerm{1.0, {by_value(0), by_value(0)}},
        OperatorTerm{1.0, {by_value(0), by_value(1)}},
        OperatorTerm{1.0, {by_value(1), by_value(0)}},
        OperatorTerm{-1.0, {by_value(1), by_value(1)}},
    };
    entry.full = std::move(spec);
    entry.reference_beta = 2.0;
    entry.optimal_state = StateSpec::max_entangled(2);
    entry.optimal_expectation = 2.0 * std::sqrt(2.0);
    entry.notes = "beta = 2 for any two-value settings; quantum optimum 2*sqrt(2)";
    return entry;
}

CatalogEntry pauli_two_setting(double theta, double scale, const ComplexMatrix& basis_unitary) {
    CatalogEntry entry;
    entry.name = "pauli2";
    entry.parameters = {{"theta", theta}, {"scale", scale}};
    FullOperatorSpec spec;
    spec.layout.dims = {2, 2};
    spec.measurements.resize(2);
    spec.measurements[0] = {rotated_pauli('x', basis_unitary, "A1"), rotated_pauli('z', basis_unitary, "A2")};
    spec.measurements[1] = {pauli('x'), pauli('z')};
    spec.terms = {
        OperatorTerm{scale * std::sin(theta), {by_value(0), by_value(0)}},
        OperatorTerm{scale * std::cos(theta), {by_value(1), by_value(1)}},
    };
    entry.full = std::move(spec);
    entry.reference_beta = scale;
    entry.scan_parameter = "theta";
    entry.notes = "beta = scale in both directions under the conjugated-Pauli constraint";
    return entry;
}

CatalogEntry pauli_three_setting(double theta, double phi, double scale,
                                 const ComplexMatrix& basis_unitary) {
    CatalogEntry entry;
    entry.name = "pauli3";
    entry.parameters = {{"theta", theta}, {"phi", phi}, {"scale", scale}};
    FullOperatorSpec spec;
    spec.layout.dims = {2, 2};
    spec.measurements.resize(2);
    spec.measurements[0] = {rotated_pauli('x', basis_unitary, "A1"), rotated_pauli('z', basis_unitary, "A2"),
                            rotated_pauli('y', basis_unitary, "A3")};
    spec.measurements[1] = {pauli('x'), pauli('z'), pauli('y')};
    spec.terms = {
        OperatorTerm{scale * std::sin(theta) * std::cos(phi), {by_value(0), by_value(0)}},
        OperatorTerm{scale * std::cos(theta), {by_value(1), by_value(1)}},
        OperatorTerm{scale * std::sin(theta) * std::sin(phi), {by_value(2), by_value(2)}},
    };
    entry.full = std::move(spec);
    entry.reference_beta = scale;
    entry.scan_parameter = "theta";
    entry.notes = "beta = scale in both directions under the conjugated-Pauli constraint";
    return entry;
}

CatalogEntry mub_lsi(std::size_t d) {
    const MubFamily fam = mub_family(d);
    CatalogEntry entry = mub_like_entry(d, 1.0, 1.0, fam.bases[0], fam.bases[1]);
    entry.name = "mub";
    entry.parameters = {{"d", static_cast<double>(d)}};
    entry.reference_beta = 1.0 + 1.0 / std::sqrt(static_cast<double>(d));
    entry.notes = "beta = 1 + 1/sqrt(d) in both directions for unbiased bases";
    return entry;
}

CatalogEntry mub_lsi(std::size_t d, const ComplexMatrix& alice_basis_1, const ComplexMatrix& alice_basis_2) {
    const auto cols_1 = unitary_columns(alice_basis_1);
    const auto cols_2 = unitary_columns(alice_basis_2);
    CatalogEntry entry = mub_like_entry(d, 1.0, 1.0, cols_1, cols_2);
    entry.name = "mub";
    entry.parameters = {{"d", static_cast<double>(d)}};
    entry.reference_beta = 1.0 + max_cross_overlap(cols_1, cols_2);
    entry.notes = "beta = 1 + max_ab |<psi^a_1|psi^b_2>| for projective untrusted bases";
    return entry;
}

CatalogEntry mub_omega_lsi(std::size_t d, double omega) {
    const MubFamily fam = mub_family(d);
    CatalogEntry entry =
        mub_like_entry(d, 1.0 + std::cos(omega), 1.0 - std::cos(omega), fam.bases[0], fam.bases[1]);
    entry.name = "mub-omega";
    entry.parameters = {{"d", static_cast<double>(d)}, {"omega", omega}};
    const double c = std::cos(omega), s = std::sin(omega);
    entry.reference_beta = 1.0 + std::sqrt(c * c + s * s / static_cast<double>(d));
    entry.scan_parameter = "omega";
    entry.notes = "beta = 1 + sqrt(cos^2(omega) + sin^2(omega)/d)";
    return entry;
}

CatalogEntry haar_lsi(std::size_t d) {
    if (d < 2) throw InvalidParameterError("haar: d must be >= 2");
    CatalogEntry entry;
    entry.name = "haar";
    entry.parameters = {{"d", static_cast<double>(d)}};
    entry.reference_beta = harmonic_number(d) / static_cast<double>(d);
    entry.reference_gamma = 1.0 / static_cast<double>(d * d);
    entry.notes =
        "uniform-setting family: gamma = 1/d^2, beta = H_d/d; Werner expectation (1-w)/d, "
        "isotropic expectation (1+(d-1)eta)/d";
    return entry;
}

CatalogEntry tilted_chsh(double delta, double alpha) {
    if (delta < 0.0) throw InvalidParameterError("tilted: delta must be >= 0");
    if (alpha < 1.0) throw InvalidParameterError("tilted: alpha must be >= 1");
    const double s = 1.0 / std::sqrt(2.0);
    CatalogEntry entry;
    entry.name = "tilted";
    entry.parameters = {{"delta", delta}, {"alpha", alpha}};
    FullOperatorSpec spec;
    spec.layout.dims = {2, 2};
    spec.measurements.resize(2);
    spec.measurements[0] = {labeled_pauli('z', "A1"), labeled_pauli('x', "A2")};
    spec.measurements[1] = {
        Observable::make_two_valued(Complex{s, 0.0} * (pauli_matrix('z') + pauli_matrix('x')), "B1"),
        Observable::make_two_valued(Complex{s, 0.0} * (pauli_matrix('z') - pauli_matrix('x')), "B2")};
    spec.terms = {
        OperatorTerm{delta, {by_value(0), std::nullopt}},
        OperatorTerm{alpha, {by_value(0), by_value(0)}},
        OperatorTerm{alpha, {by_value(0), by_value(1)}},
        OperatorTerm{1.0, {by_value(1), by_value(0)}},
        OperatorTerm{-1.0, {by_value(1), by_value(1)}},
    };
    entry.full = std::move(spec);
    entry.reference_beta = delta + 2.0 * alpha;
    entry.scan_parameter = "alpha";
    entry.notes = "beta = delta + 2*alpha overall; A->B direction: delta + sqrt(2*(alpha^2+1))";
    return entry;
}

CatalogEntry pironio_with(std::size_t d, const std::vector<Povm>& alice, const std::vector<Povm>& bob) {
    if (d < 3) throw InvalidParameterError("pironio: d must be >= 3");
    if (alice.size() != d || bob.size() != 2)
        throw InvalidParameterError("pironio: expected d two-outcome settings for A and 2 settings for B");
    CatalogEntry entry;
    entry.name = "pironio";
    entry.parameters = {{"d", static_cast<double>(d)}};
    FullOperatorSpec spec;
    spec.layout.dims = {d, d};
    spec.measurements.resize(2);
    for (const Povm& p : alice) spec.measurements[0].push_back(p);
    for (const Povm& p : bob) spec.measurements[1].push_back(p);
    spec.terms.push_back(OperatorTerm{1.0, {by_outcome(0, 0), by_outcome(1, 0)}});
    spec.terms.push_back(OperatorTerm{-1.0, {by_outcome(0, 0), by_outcome(0, 0)}});
    for (std::size_t i = 1; i < d; ++i) {
        spec.terms.push_back(OperatorTerm{-1.0, {by_outcome(i, 0), by_outcome(0, i)}});
        spec.terms.push_back(OperatorTerm{-1.0, {by_outcome(i, 1), by_outcome(1, 0)}});
    }
    entry.full = std::move(spec);
    entry.reference_beta = 0.0;
    entry.notes = "beta = 0 in both directions for rank-deficient realizations";
    return entry;
}

CatalogEntry pironio(std::size_t d) {
    if (d < 3) throw InvalidParameterError("pironio: d must be >= 3");
    std::vector<Povm> alice;
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Complex> e(d);
        e[i] = 1.0;
        alice.push_back(dichotomic_projector_povm(projector(e), "P" + std::to_string(i)));
    }
    std::vector<Complex> e0(d);
    e0[0] = 1.0;
    std::vector<Povm> bob = {computational_povm(d, "M0"),
                             dichotomic_projector_povm(projector(e0), "M1")};
    return pironio_with(d, alice, bob);
}

CatalogEntry witness_lsi() {
    CatalogEntry entry;
    entry.name = "witness";
    FullOperatorSpec spec = qubit_spec(2, "xyz");
    add_string_term(spec, "xyz", 0.25, "ii");
    add_string_term(spec, "xyz", -0.25, "xx");
    add_string_term(spec, "xyz", 0.25, "yy");
    add_string_term(spec, "xyz", -0.25, "zz");
    entry.full = std::move(spec);
    entry.reference_beta = (1.0 + std::sqrt(3.0)) / 4.0;
    entry.reference_gamma = (1.0 - std::sqrt(3.0)) / 4.0;
    entry.optimal_state = StateSpec::max_entangled(2);
    entry.optimal_expectation = -0.5;
    entry.notes = "(1-sqrt(3))/4 <= <W> <= (1+sqrt(3))/4";
    return entry;
}

CatalogEntry svetlichny() {
    const double s = 1.0 / std::sqrt(2.0);
    CatalogEntry entry;
    entry.name = "svetlichny";
    FullOperatorSpec spec;
    spec.layout.dims = {2, 2, 2};
    spec.measurements.resize(3);
    spec.measurements[0] = {pauli('x'), pauli('y')};
    spec.measurements[1] = {
        Observable::make_two_valued(Complex{s, 0.0} * (pauli_matrix('x') - pauli_matrix('y')), "B1"),
        Observable::make_two_valued(Complex{s, 0.0} * (pauli_matrix('x') + pauli_matrix('y')), "B2")};
    spec.measurements[2] = {pauli('x'), pauli('y')};
    const int signs[8][4] = {
        // a, b, c, sign for the term A_a B_b C_c
        {0, 0, 0, +1}, {0, 0, 1, +1}, {1, 0, 0, +1}, {1, 0, 1, -1},
        {0, 1, 0, +1}, {0, 1, 1, -1}, {1, 1, 0, -1}, {1, 1, 1, -1},
    };
    for (const auto& row : signs)
        spec.terms.push_back(OperatorTerm{
            static_cast<double>(row[3]),
            {by_value(static_cast<std::size_t>(row[0])), by_value(static_cast<std::size_t>(row[1])),
             by_value(static_cast<std::size_t>(row[2]))}});
    entry.full = std::move(spec);
    entry.reference_beta = 4.0;
    entry.optimal_state = StateSpec::ghz(3);
    entry.optimal_expectation = 4.0 * std::sqrt(2.0);
    entry.notes = "beta = 4 over all partitions; quantum optimum 4*sqrt(2)";
    return entry;
}

CatalogEntry mermin() {
    CatalogEntry entry;
    entry.name = "mermin";
    FullOperatorSpec spec = qubit_spec(3, "xy");
    add_string_term(spec, "xy", 1.0, "xxx");
    add_string_term(spec, "xy", -1.0, "xyy");
    add_string_term(spec, "xy", -1.0, "yxy");
    add_string_term(spec, "xy", -1.0, "yyx");
    entry.full = std::move(spec);
    entry.reference_beta = 2.0 * std::sqrt(2.0);
    entry.optimal_state = StateSpec::ghz(3);
    entry.optimal_expectation = 4.0;
    entry.symmetric = true;
    entry.notes = "beta = 2*sqrt(2) over all partitions; quantum optimum 4";
    return entry;
}

CatalogEntry ghz_type() {
    CatalogEntry entry = ghz_type_weighted(1.0);
    entry.name = "ghz";
    entry.parameters.clear();
    entry.reference_beta = 1.0 + 2.0 * std::sqrt(3.0);
    entry.optimal_state = StateSpec::ghz(3);
    entry.optimal_expectation = 7.0;
    entry.notes = "beta = 1 + 2*sqrt(3); quantum optimum 7";
    return entry;
}

CatalogEntry ghz_type_weighted(double alpha) {
    CatalogEntry entry;
    entry.name = "ghz-weighted";
    entry.parameters = {{"alpha", alpha}};
    FullOperatorSpec spec = qubit_spec(3, "xyz");
    add_string_term(spec, "xyz", 1.0, "xxx");
    add_string_term(spec, "xyz", -1.0, "xyy");
    add_string_term(spec, "xyz", -1.0, "yxy");
    add_string_term(spec, "xyz", -1.0, "yyx");
    add_string_term(spec, "xyz", alpha, "ziz");
    add_string_term(spec, "xyz", alpha, "izz");
    add_string_term(spec, "xyz", alpha, "zzi");
    entry.full = std::move(spec);
    entry.reference_beta = std::abs(alpha) + 2.0 * std::sqrt(alpha * alpha + 2.0);
    entry.symmetric = true;
    entry.scan_parameter = "alpha";
    entry.notes = "beta = |alpha| + 2*sqrt(alpha^2 + 2)";
    return entry;
}

CatalogEntry ghz_type_gamma_delta(double gamma, double delta) {
    if (gamma < 0.0) throw InvalidParameterError("ghz-gd: gamma must be >= 0");
    CatalogEntry entry;
    entry.name = "ghz-gd";
    entry.parameters = {{"gamma", gamma}, {"delta", delta}};
    FullOperatorSpec spec = qubit_spec(3, "xyz");
    for (const char* t : {"iiz", "zii", "izi", "zzz"}) add_string_term(spec, "xyz", gamma, t);
    for (const char* t : {"zzi", "izz", "ziz"}) add_string_term(spec, "xyz", 1.0, t);
    add_string_term(spec, "xyz", delta, "xxx");
    for (const char* t : {"yyx", "xyy", "yxy"}) add_string_term(spec, "xyz", -delta, t);
    entry.full = std::move(spec);
    entry.reference_beta =
        1.0 + 2.0 * gamma + 2.0 * std::sqrt((1.0 + gamma) * (1.0 + gamma) + 2.0 * delta * delta);
    entry.symmetric = true;
    entry.scan_parameter = "omega";
    entry.notes = "beta = 1 + 2*gamma + 2*sqrt((1+gamma)^2 + 2*delta^2)";
    return entry;
}

CatalogEntry nghz(std::size_t n) {
    if (n < 2 || n > 6) throw InvalidParameterError("nghz: n must lie in [2, 6]");
    CatalogEntry entry;
    entry.name = "nghz";
    entry.parameters = {{"n", static_cast<double>(n)}};
    FullOperatorSpec spec = qubit_spec(n, "xy");
    for (const PauliString& t : nghz_expansion(n).first) add_string_term(spec, "xy", t.coeff, t.axes);
    entry.full = std::move(spec);
    entry.reference_beta = std::sqrt(2.0) / 2.0;
    entry.optimal_state = StateSpec::ghz(n);
    entry.optimal_expectation = 1.0;
    entry.symmetric = true;
    entry.notes = "beta = sqrt(2)/2 for every split of every size";
    return entry;
}

CatalogEntry nghz_global(std::size_t n, std::size_t m) {
    if (n < 3) throw InvalidParameterError("nghz-global: n must be >= 3");
    if (m < 2 || m + 1 > n) throw InvalidParameterError("nghz-global: m must lie in [2, n-1]");
    CatalogEntry entry;
    entry.name = "nghz-global";
    entry.parameters = {{"n", static_cast<double>(n)}, {"m", static_cast<double>(m)}};

    const auto [a1, a2] = nghz_pair_operators(n - m);
    LsiSpec lsi;
    lsi.layout.dims = {std::size_t{1} << m, std::size_t{1} << (n - m)};
    lsi.trusted_parties = {1};
    lsi.settings = {UntrustedSetting{"A1", SettingKind::Outcomes, 3},
                    UntrustedSetting{"A2", SettingKind::Outcomes, 3}};
    // Outcome 0 is the kernel effect and selects nothing; outcomes 1 and 2
    // are the +1/-1 eigenprojectors of the untrusted block operators.
    const ComplexMatrix f1 = Complex{0.5, 0.0} * a1;
    const ComplexMatrix f2 = Complex{-0.5, 0.0} * a2;
    lsi.terms = {
        LsiTerm{0, 1, 1.0, f1},
        LsiTerm{0, 2, -1.0, f1},
        LsiTerm{1, 1, 1.0, f2},
        LsiTerm{1, 2, -1.0, f2},
    };
    entry.lsi = std::move(lsi);
    entry.reference_beta = std::sqrt(2.0) / 2.0;
    entry.notes = "beta = sqrt(2)/2; strategy table: one 0, four 1/2, four sqrt(2)/2";
    return entry;
}

std::vector<std::string> catalog_names() {
    return {"chsh",    "pauli2",  "pauli3",     "mub",    "mub-omega", "haar",
            "tilted",  "pironio", "witness",    "svetlichny", "mermin", "ghz",
            "ghz-weighted", "ghz-gd", "nghz",   "nghz-global"};
}

namespace {

const std::map<std::string, std::vector<std::string>>& parameter_table() {
    static const std::map<std::string, std::vector<std::string>> table{
        {"chsh", {}},
        {"pauli2", {"theta", "scale", "u-seed"}},
        {"pauli3", {"theta", "phi", "scale", "u-seed"}},
        {"mub", {"d"}},
        {"mub-omega", {"d", "omega"}},
        {"haar", {"d"}},
        {"tilted", {"delta", "alpha"}},
        {"pironio", {"d"}},
        {"witness", {}},
        {"svetlichny", {}},
        {"mermin", {}},
        {"ghz", {}},
        {"ghz-weighted", {"alpha"}},
        {"ghz-gd", {"gamma", "delta", "omega"}},
        {"nghz", {"n"}},
        {"nghz-global", {"n", "m"}},
    };
    return table;
}

double get_param(const std::map<std::string, double>& params, const std::string& key, double fallback) {
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

std::size_t get_size(const std::map<std::string, double>& params, const std::string& key,
                     std::size_t fallback) {
    const auto it = params.find(key);
    if (it == params.end()) return fallback;
    if (it->second < 0 || it->second != std::floor(it->second))
        throw InvalidParameterError("parameter '" + key + "' must be a nonnegative integer");
    return static_cast<std::size_t>(it->second);
}

void check_known(const std::string& name, const std::map<std::string, double>& params) {
    const std::vector<std::string>& known = parameter_table().at(name);
    for (const auto& [key, value] : params) {
        (void)value;
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            std::string allowed;
            for (const std::string& k : known) {
                if (!allowed.empty()) allowed += ", ";
                allowed += k;
            }
            throw InvalidParameterError("entry '" + name + "': unknown parameter '" + key +
                                        "' (allowed: " + (allowed.empty() ? "none" : allowed) + ")");
        }
    }
}

ComplexMatrix unitary_from_seed(const std::map<std::string, double>& params) {
    const auto it = params.find("u-seed");
    if (it == params.end()) return ComplexMatrix::identity(2);
    std::mt19937_64 rng(static_cast<std::uint64_t>(it->second));
    return random_unitary(2, rng);
}

}  // namespace

std::vector<std::string> entry_parameter_names(const std::string& name) {
    const auto it = parameter_table().find(name);
    if (it == parameter_table().end())
        throw InvalidParameterError("unknown catalog entry '" + name + "'");
    return it->second;
}

CatalogEntry make_entry(const std::string& name, const std::map<std::string, double>& params) {
    if (!parameter_table().count(name))
        throw InvalidParameterError("unknown catalog entry '" + name + "'");
    check_known(name, params);

    if (name == "chsh") return chsh_accompanied();
    if (name == "pauli2")
        return pauli_two_setting(get_param(params, "theta", kPi / 4.0), get_param(params, "scale", 1.0),
                                 unitary_from_seed(params));
    if (name == "pauli3")
        return pauli_three_setting(get_param(params, "theta", kPi / 4.0),
                                   get_param(params, "phi", kPi / 4.0), get_param(params, "scale", 1.0),
                                   unitary_from_seed(params));
    if (name == "mub") return mub_lsi(get_size(params, "d", 2));
    if (name == "mub-omega")
        return mub_omega_lsi(get_size(params, "d", 2), get_param(params, "omega", kPi / 2.0));
    if (name == "haar") return haar_lsi(get_size(params, "d", 2));
    if (name == "tilted")
        return tilted_chsh(get_param(params, "delta", 0.0), get_param(params, "alpha", 1.0));
    if (name == "pironio") return pironio(get_size(params, "d", 3));
    if (name == "witness") return witness_lsi();
    if (name == "svetlichny") return svetlichny();
    if (name == "mermin") return mermin();
    if (name == "ghz") return ghz_type();
    if (name == "ghz-weighted") return ghz_type_weighted(get_param(params, "alpha", 1.0));
    if (name == "ghz-gd") {
        if (params.count("omega")) {
            const double omega = params.at("omega");
            CatalogEntry entry = ghz_type_gamma_delta(std::cos(omega), std::sin(omega));
            entry.parameters["omega"] = omega;
            return entry;
        }
        return ghz_type_gamma_delta(get_param(params, "gamma", 1.0), get_param(params, "delta", 1.0));
    }
    if (name == "nghz") return nghz(get_size(params, "n", 3));
    return nghz_global(get_size(params, "n", 3), get_size(params, "m", 2));
}

ThresholdReport compute_threshold(const CatalogEntry& entry, const EnumerationOptions& opts) {
    if (entry.lsi) {
        ThresholdReport report;
        DirectionalThreshold dir = one_way_threshold(*entry.lsi, opts);
        report.beta_overall = dir.beta;
        report.gamma_overall = dir.gamma;
        report.per_direction.emplace("A->B", std::move(dir));
        return report;
    }
    if (entry.full) {
        if (entry.full->layout.n_parties() == 2) return two_way_threshold(*entry.full, opts);
        return entry.symmetric ? symmetric_gmst_threshold(*entry.full, opts)
                               : gmst_threshold(*entry.full, opts);
    }
    if (entry.reference_beta && entry.reference_gamma) {
        // Analytic-only entry: both directions carry the closed-form bounds.
        ThresholdReport report;
        DirectionalThreshold dir;
        dir.beta = *entry.reference_beta;
        dir.gamma = *entry.reference_gamma;
        report.beta_overall = dir.beta;
        report.gamma_overall = dir.gamma;
        report.per_direction.emplace("A->B", dir);
        report.per_direction.emplace("A<-B", dir);
        return report;
    }
    throw InvalidParameterError("entry '" + entry.name + "' carries no computable threshold");
}

}  // namespace steerkit
