#pragma once

#include <string>

#include "unfolder/document.hpp"

namespace unfolder {

/// Plain-text summary printed by `unfolder analyze`: dimension, face counts,
/// connectivity, balance, group of projectivities, odd subcomplex,
/// pseudo-manifold type, orientability and Euler characteristic.
std::string analyze_report(const Document& doc, int base = 0);

}  // namespace unfolder
