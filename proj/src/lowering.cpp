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
#include "qmean/lowering.hpp"

#include <numbers>
#include <utility>

namespace qmean {

namespace {

// V with V^2 = U. RY halves the angle; X and its fractional powers root
// through XPow. H has no square root in this family (det -1) and is instead
// split as H = RY(-pi/2) * X before recursing.
std::pair<GateKind, double> square_root_of(GateKind kind, double param) {
    switch (kind) {
    case GateKind::RY:
        return {GateKind::RY, param / 2.0};
    case GateKind::X:
        return {GateKind::XPow, 0.5};
    case GateKind::XPow:
        return {GateKind::XPow, param / 2.0};
    case GateKind::H:
        break;
    }
    return {GateKind::H, 0.0}; // unreachable; H is rewritten before rooting
}

GateOp make_gate(GateKind kind, double param, std::size_t target,
                 std::vector<Control> controls) {
    return {kind, target, param, std::move(controls)};
}

GateOp dagger(const GateOp& op) {
    GateOp inverse = op;
    inverse.param = -inverse.param; // RY(-a) and XPow(-a); H/X are involutions
    return inverse;
}

// All controls closed from here on.
void lower_closed(GateKind kind, double param, std::size_t target,
                  const std::vector<std::size_t>& controls,
                  std::vector<GateOp>& out) {
    if (controls.empty()) {
        out.push_back(make_gate(kind, param, target, {}));
        return;
    }
    if (controls.size() == 1) {
        out.push_back(make_gate(kind, param, target,
                                {{controls[0], Polarity::Closed}}));
        return;
    }
    if (kind == GateKind::H) {
        lower_closed(GateKind::X, 0.0, target, controls, out);
        lower_closed(GateKind::RY, -std::numbers::pi / 2.0, target, controls,
                     out);
        return;
    }

    const auto [vkind, vparam] = square_root_of(kind, param);
    const std::size_t pivot = controls.back();
    const std::vector<std::size_t> rest(controls.begin(), controls.end() - 1);

    const GateOp v = make_gate(vkind, vparam, target, {{pivot, Polarity::Closed}});
    out.push_back(v);
    lower_closed(GateKind::X, 0.0, pivot, rest, out);
    out.push_back(dagger(v));
    lower_closed(GateKind::X, 0.0, pivot, rest, out);
    lower_closed(vkind, vparam, target, rest, out);
}

void lower_op(const GateOp& op, std::vector<GateOp>& out) {
    if (op.control_arity() <= 1) {
        out.push_back(op);
        return;
    }
    std::vector<std::size_t> open_controls;
    std::vector<std::size_t> closed;
    closed.reserve(op.controls.size());
    for (const auto& c : op.controls) {
        if (c.polarity == Polarity::Open) {
            open_controls.push_back(c.qubit);
        }
        closed.push_back(c.qubit);
    }
    for (std::size_t q : open_controls) {
        out.push_back(GateOp::x(q));
    }
    lower_closed(op.kind, op.param, op.target, closed, out);
    for (std::size_t q : open_controls) {
        out.push_back(GateOp::x(q));
    }
}

} // namespace

Circuit lower_multicontrolled(const Circuit& circuit) {
    std::vector<GateOp> ops;
    for (const auto& op : circuit.ops()) {
        lower_op(op, ops);
    }
    Circuit lowered(circuit.num_qubits());
    lowered.append_all(ops);
    return lowered;
}

GateCountReport gate_counts(const Circuit& circuit) {
    GateCountReport report;
    for (const auto& op : circuit.ops()) {
        ++report.by_kind[op.kind];
        ++report.by_control_arity[op.control_arity()];
        ++report.total;
        report.max_control_arity =
            std::max(report.max_control_arity, op.control_arity());
    }
    return report;
}

} // namespace qmean
