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

#ifndef QECI_CHANNELS_H
#define QECI_CHANNELS_H

#include <string_view>

#include "qeci/density.h"

// Two-qubit joint states produced by sending the second qubit of a prepared
// pair through a noisy channel. Basis order is |00>, |01>, |10>, |11>.

namespace qeci {

enum class ChannelKind { Qsc, Gqsc, Depolarizing, Bitflip };

ChannelKind parse_channel_kind(std::string_view name);
std::string_view channel_kind_name(ChannelKind kind);

/// Real amplitudes (gamma, lambda) of gamma|0> + lambda|1>.
struct QubitAmplitudes {
    double gamma;
    double lambda;
};

struct ChannelSpec {
    ChannelKind kind = ChannelKind::Qsc;
    double q = 0.4;
    QubitAmplitudes c1{0.6, 0.8};
    QubitAmplitudes c2{0.70710678118654752, 0.70710678118654752};

    /// Joint density for error probability p.
    DensityMatrix joint(double p) const;
};

/// diag(q(1-p), qp, (1-q)p, (1-q)(1-p)).
DensityMatrix qsc_computational(double q, double p);

/// The same mixture in the Hadamard basis |+>, |->.
DensityMatrix qsc_hadamard(double q, double p);

/// Pure product (gamma|0> + lambda|1>)^{(x)2} with the second qubit sent
/// through a depolarizing channel: weight 1-p on the clean state and p/3 on
/// each of three error images.
DensityMatrix depolarizing_component(double gamma, double lambda, double p);

/// q * component(c1, p) + (1 - q) * component(c2, p).
DensityMatrix depolarizing_mixture(double q, QubitAmplitudes c1, QubitAmplitudes c2, double p);

/// (1-p)/2 (|00><00| + |11><11|) + p/2 (|01><01| + |10><10|).
DensityMatrix bitflip_entangled(double p);

/// Exogenous density diag(1-p, p, p, 1-p)/2 of the bit-flip structural equation.
ComplexMatrix bitflip_exogenous(double p);

}  // namespace qeci

#endif
