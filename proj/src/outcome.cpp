// Copyright (c) ncsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "ncsp/outcome.hpp"

namespace ncsp {

const char* to_string(Verdict verdict) {
    switch (verdict) {
    case Verdict::nearly_conservative:
        return "nearly-conservative";
    case Verdict::not_nearly_conservative:
        return "not-nearly-conservative";
    }
    return "?";
}

const char* to_string(WitnessKind kind) {
    switch (kind) {
    case WitnessKind::forest_cycle:
        return "forest-cycle";
    case WitnessKind::negative_ordinary_cycle:
        return "negative-cycle";
    case WitnessKind::tree_violation:
        return "tree-violation";
    case WitnessKind::spanning_arc_violation:
        return "spanning-arc-violation";
    }
    return "?";
}

} // namespace ncsp
