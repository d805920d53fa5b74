// Copyright 2026 The qmean authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "qmean/errors.hpp"

namespace qmean {

/// Gate alphabet of the simulator.
///
/// H, X and RY(theta) are the gates circuits are built from. XPow(a) = X^a
/// only appears in circuits produced by lower_multicontrolled: X has no real
/// square root, so the square-root recursion needs the complex root family.
enum class GateKind : std::uint8_t { H, X, RY, XPow };

/// A control condition: the gate fires when the qubit reads 1 (Closed) or
/// 0 (Open).
enum class Polarity : std::uint8_t { Open, Closed };

struct Control {
    std::size_t qubit;
    Polarity polarity;

    bool operator==(const Control&) const = default;
};

/// One gate application: a kind, an optional parameter (RY angle in radians,
/// XPow exponent), a target qubit and any number of polarity-tagged controls.
struct GateOp {
    GateKind kind = GateKind::H;
    std::size_t target = 0;
    double param = 0.0;
    std::vector<Control> controls;

    static GateOp h(std::size_t target, std::vector<Control> controls = {});
    static GateOp x(std::size_t target, std::vector<Control> controls = {});
    static GateOp ry(std::size_t target, double angle,
                     std::vector<Control> controls = {});
    static GateOp xpow(std::size_t target, double exponent,
                       std::vector<Control> controls = {});

    std::size_t control_arity() const { return controls.size(); }

    /// True for gates whose 2x2 matrix has no imaginary part.
    bool is_real() const { return kind != GateKind::XPow; }

    /// Throws LayoutError unless target/controls are distinct, in range and
    /// the parameter is finite.
    void validate(std::size_t num_qubits) const;

    bool operator==(const GateOp&) const = default;
};

/// 2x2 gate matrix in row-major order.
struct GateMatrix {
    std::array<std::complex<double>, 4> m;
    bool real; // imaginary parts all zero
};

GateMatrix gate_matrix(const GateOp& op);

const char* gate_kind_name(GateKind kind);

/// An ordered gate list over a fixed qubit count. append() validates ops.
class Circuit {
  public:
    explicit Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {}

    std::size_t num_qubits() const { return num_qubits_; }
    const std::vector<GateOp>& ops() const { return ops_; }

    void append(GateOp op) {
        op.validate(num_qubits_);
        ops_.push_back(std::move(op));
    }

    void append_all(const std::vector<GateOp>& ops) {
        for (const auto& op : ops) {
            append(op);
        }
    }

  private:
    std::size_t num_qubits_;
    std::vector<GateOp> ops_;
};

} // namespace qmean
