#include "steerkit/states.hpp"

#include <cmath>
#include <string>

namespace steerkit {

namespace {

double require_param(const StateSpec& spec, const std::string& key) {
    const auto it = spec.params.find(key);
    if (it == spec.params.end())
        throw InvalidParameterError("state: missing parameter '" + key + "'");
    return it->second;
}

double param_or(const StateSpec& spec, const std::string& key, double fallback) {
    const auto it = spec.params.find(key);
    return it == spec.params.end() ? fallback : it->second;
}

std::size_t size_param(const StateSpec& spec, const std::string& key, std::size_t min_value) {
    const double raw = require_param(spec, key);
    if (raw < static_cast<double>(min_value) || raw != std::floor(raw))
        throw InvalidParameterError("state: parameter '" + key + "' must be an integer >= " +
                                    std::to_string(min_value));
    return static_cast<std::size_t>(raw);
}

ComplexMatrix maximally_entangled(std::size_t d) {
    std::vector<Complex> psi(d * d);
    const double a = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t i = 0; i < d; ++i) psi[i * d + i] = a;
    return projector(psi);
}

}  // namespace

StateSpec StateSpec::werner(double w, std::size_t d) {
    return StateSpec{StateFamily::Werner, {{"w", w}, {"d", static_cast<double>(d)}}, {}};
}
StateSpec StateSpec::isotropic(double eta, std::size_t d) {
    return StateSpec{StateFamily::Isotropic, {{"eta", eta}, {"d", static_cast<double>(d)}}, {}};
}
StateSpec StateSpec::ghz(std::size_t n) {
    return StateSpec{StateFamily::Ghz, {{"n", static_cast<double>(n)}}, {}};
}
StateSpec StateSpec::gen_ghz(double omega) {
    return StateSpec{StateFamily::GenGhz, {{"omega", omega}}, {}};
}
StateSpec StateSpec::noisy_ghz(double v, std::size_t n) {
    return StateSpec{StateFamily::NoisyGhz, {{"v", v}, {"n", static_cast<double>(n)}}, {}};
}
StateSpec StateSpec::max_entangled(std::size_t d) {
    return StateSpec{StateFamily::MaxEntangled, {{"d", static_cast<double>(d)}}, {}};
}
StateSpec StateSpec::custom_state(ComplexMatrix m) {
    return StateSpec{StateFamily::Custom, {}, std::move(m)};
}

ComplexMatrix ghz_state(std::size_t n) {
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Complex> psi(dim);
    psi.front() = psi.back() = 1.0 / std::sqrt(2.0);
    return projector(psi);
}

ComplexMatrix flip_operator(std::size_t d) {
    ComplexMatrix v(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) v(i * d + j, j * d + i) = 1.0;
    return v;
}

ComplexMatrix make_state(const StateSpec& spec) {
    switch (spec.family) {
        case StateFamily::Werner: {
            const double w = require_param(spec, "w");
            const std::size_t d = size_param(spec, "d", 2);
            if (w < 0.0 || w > 1.0) throw InvalidParameterError("werner: w outside [0,1]");
            const double dd = static_cast<double>(d);
            ComplexMatrix state =
                Complex{(dd - 1.0 + w) / ((dd - 1.0) * dd * dd), 0.0} * ComplexMatrix::identity(d * d);
            state -= Complex{w / ((dd - 1.0) * dd), 0.0} * flip_operator(d);
            return state;
        }
        case StateFamily::Isotropic: {
            const double eta = require_param(spec, "eta");
            const std::size_t d = size_param(spec, "d", 2);
            if (eta < 0.0 || eta > 1.0) throw InvalidParameterError("isotropic: eta outside [0,1]");
            const double dd = static_cast<double>(d);
            ComplexMatrix state =
                Complex{(1.0 - eta) / (dd * dd), 0.0} * ComplexMatrix::identity(d * d);
            state += Complex{eta, 0.0} * maximally_entangled(d);
            return state;
        }
        case StateFamily::Ghz:
            return ghz_state(size_param(spec, "n", 2));
        case StateFamily::GenGhz: {
            const double omega = require_param(spec, "omega");
            if (!(omega > 0.0) || omega > std::acos(-1.0) / 2.0 + 1e-12)
                throw InvalidParameterError("gen-ghz: omega outside (0, pi/2]");
            std::vector<Complex> psi(8);
            psi[0] = std::cos(omega / 2.0);
            psi[7] = std::sin(omega / 2.0);
            return projector(psi);
        }
        case StateFamily::NoisyGhz: {
            const double v = require_param(spec, "v");
            const auto n = static_cast<std::size_t>(param_or(spec, "n", 3.0));
            if (v < 0.0 || v > 1.0) throw InvalidParameterError("noisy-ghz: v outside [0,1]");
            if (n < 2) throw InvalidParameterError("noisy-ghz: n must be >= 2");
            const std::size_t dim = std::size_t{1} << n;
            ComplexMatrix state = Complex{v, 0.0} * ghz_state(n);
            state += Complex{(1.0 - v) / static_cast<double>(dim), 0.0} * ComplexMatrix::identity(dim);
            return state;
        }
        case StateFamily::MaxEntangled:
            return maximally_entangled(size_param(spec, "d", 2));
        case StateFamily::Custom: {
            if (spec.custom.empty()) throw InvalidParameterError("custom state: matrix missing");
            return spec.custom;
        }
    }
    throw InvalidParameterError("state: unknown family");
}

Assemblage assemblage_of(const ComplexMatrix& state, const std::vector<std::size_t>& dims,
                         const std::vector<std::size_t>& untrusted, const std::vector<Povm>& povms) {
    std::size_t total = 1, untrusted_dim = 1;
    for (std::size_t d : dims) total *= d;
    if (total != state.dim()) throw DimensionMismatchError("assemblage_of: dims do not match state");
    for (std::size_t i = 0; i < untrusted.size(); ++i) {
        if (untrusted[i] >= dims.size()) throw DimensionMismatchError("assemblage_of: untrusted party out of range");
        if (i > 0 && untrusted[i] <= untrusted[i - 1])
            throw DimensionMismatchError("assemblage_of: untrusted parties must be sorted and unique");
        untrusted_dim *= dims[untrusted[i]];
    }

    std::vector<std::size_t> trusted;
    for (std::size_t p = 0; p < dims.size(); ++p)
        if (std::find(untrusted.begin(), untrusted.end(), p) == untrusted.end()) trusted.push_back(p);
    if (trusted.empty()) throw DimensionMismatchError("assemblage_of: no trusted party left");

    Assemblage out;
    for (std::size_t mu = 0; mu < povms.size(); ++mu) {
        if (povms[mu].dim() != untrusted_dim)
            throw DimensionMismatchError("assemblage_of: povm dim does not match untrusted subsystem");
        for (std::size_t a = 0; a < povms[mu].outcomes(); ++a) {
            const ComplexMatrix full = embed_operator(povms[mu].effects[a], dims, untrusted);
            out.members.emplace(std::make_pair(mu, a), partial_trace(full * state, dims, trusted));
        }
    }
    return out;
}

}  // namespace steerkit
