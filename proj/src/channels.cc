// Copyright 2026 The QECI Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qeci/channels.h"

#include <array>
#include <cmath>
#include <string>

#include "qeci/error.h"

namespace qeci {

namespace {

constexpr double kAmplitudeNormTol = 1e-9;

void require_probability(double x, const char *name) {
    if (!(x >= 0 && x <= 1)) {
        throw QeciError(ErrorKind::InvalidParameter, std::string(name) + " = " + std::to_string(x) + " not in [0, 1]");
    }
}

void require_normalized(QubitAmplitudes c) {
    double norm = c.gamma * c.gamma + c.lambda * c.lambda;
    if (!(std::abs(norm - 1) <= kAmplitudeNormTol)) {
        throw QeciError(
            ErrorKind::NotNormalized, "gamma^2 + lambda^2 = " + std::to_string(norm) + " must equal 1");
    }
}

ComplexMatrix ket4(std::array<double, 4> amps) {
    return ComplexMatrix::column({amps[0], amps[1], amps[2], amps[3]});
}

}  // namespace

ChannelKind parse_channel_kind(std::string_view name) {
    if (name == "qsc") {
        return ChannelKind::Qsc;
    }
    if (name == "gqsc") {
        return ChannelKind::Gqsc;
    }
    if (name == "depolarizing") {
        return ChannelKind::Depolarizing;
    }
    if (name == "bitflip") {
        return ChannelKind::Bitflip;
    }
    throw QeciError(ErrorKind::InvalidParameter, "unknown channel '" + std::string(name) + "'");
}

std::string_view channel_kind_name(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::Qsc:
            return "qsc";
        case ChannelKind::Gqsc:
            return "gqsc";
        case ChannelKind::Depolarizing:
            return "depolarizing";
        case ChannelKind::Bitflip:
            return "bitflip";
    }
    return "?";
}

DensityMatrix ChannelSpec::joint(double p) const {
    switch (kind) {
        case ChannelKind::Qsc:
            return qsc_computational(q, p);
        case ChannelKind::Gqsc:
            return qsc_hadamard(q, p);
        case ChannelKind::Depolarizing:
            return depolarizing_mixture(q, c1, c2, p);
        case ChannelKind::Bitflip:
            return bitflip_entangled(p);
    }
    throw QeciError(ErrorKind::InvalidParameter, "unknown channel kind");
}

DensityMatrix qsc_computational(double q, double p) {
    require_probability(q, "q");
    require_probability(p, "p");
    return validate_density(
        ComplexMatrix::diagonal({q * (1 - p), q * p, (1 - q) * p, (1 - q) * (1 - p)}), {2, 2});
}

DensityMatrix qsc_hadamard(double q, double p) {
    require_probability(q, "q");
    require_probability(p, "p");
    double h = 1 / std::sqrt(2.0);
    ComplexMatrix plus = ComplexMatrix::column({h, h});
    ComplexMatrix minus = ComplexMatrix::column({h, -h});
    ComplexMatrix rho(4, 4);
    rho += Complex{q * (1 - p)} * outer(kron(plus, plus));
    rho += Complex{q * p} * outer(kron(plus, minus));
    rho += Complex{(1 - q) * p} * outer(kron(minus, plus));
    rho += Complex{(1 - q) * (1 - p)} * outer(kron(minus, minus));
    return validate_density(rho, {2, 2});
}

DensityMatrix depolarizing_component(double gamma, double lambda, double p) {
    require_probability(p, "p");
    require_normalized({gamma, lambda});
    double g2 = gamma * gamma;
    double l2 = lambda * lambda;
    double gl = gamma * lambda;
    ComplexMatrix rho(4, 4);
    rho += Complex{1 - p} * outer(ket4({g2, gl, gl, l2}));
    rho += Complex{p / 3} * outer(ket4({g2, -gl, gl, -l2}));
    rho += Complex{p / 3} * outer(ket4({gl, g2, l2, gl}));
    rho += Complex{p / 3} * outer(ket4({-gl, g2, -l2, gl}));
    return validate_density(rho, {2, 2});
}

DensityMatrix depolarizing_mixture(double q, QubitAmplitudes c1, QubitAmplitudes c2, double p) {
    require_probability(q, "q");
    ComplexMatrix rho = Complex{q} * depolarizing_component(c1.gamma, c1.lambda, p).mat();
    rho += Complex{1 - q} * depolarizing_component(c2.gamma, c2.lambda, p).mat();
    return validate_density(rho, {2, 2});
}

DensityMatrix bitflip_entangled(double p) {
    require_probability(p, "p");
    return validate_density(ComplexMatrix::diagonal({(1 - p) / 2, p / 2, p / 2, (1 - p) / 2}), {2, 2});
}

ComplexMatrix bitflip_exogenous(double p) {
    require_probability(p, "p");
    return ComplexMatrix::diagonal({(1 - p) / 2, p / 2, p / 2, (1 - p) / 2});
}

}  // namespace qeci
