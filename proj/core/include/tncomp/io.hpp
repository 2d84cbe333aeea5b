#pragma once

#include "tncomp/compress.hpp"
#include "tncomp/mps.hpp"
#include "tncomp/network.hpp"
#include "tncomp/tensor.hpp"

#include <string>
#include <vector>

namespace tncomp {

/// All formats are JSON text documents. Numbers round-trip bit-exactly
/// (doubles are printed in shortest-round-trip form). Parsing is strict:
/// entry counts must match shape products and structural invariants are
/// enforced; violations raise std::invalid_argument.
///
/// Tensor document:    { "shape": [..], "entries": [[re,im],..],
///                       "labels": [..]? }
/// Template document:  { "vertices": [{"id","filled", "tensor"?,
///                       "edge_order"?}..], "edges": [{"id","from","to",
///                       "dim"}..] }
///                     A template whose filled vertices all carry tensors
///                     parses as a network as well.
/// Chain document:     { "boundary": {"type": "open"|"periodic"|"variable",
///                       "left"?, "right"?}, "sites": [Tensor..] }
/// Circuit document:   { "input_dims": [..], "memory_dim": k, "layers":
///                       [[{"site_begin","site_end","in_dims","isometry"}..]..] }
/// States document:    { "states": [[[re,im],..]..] }

std::string tensor_to_text(const Tensor& t);
Tensor tensor_from_text(const std::string& text);

std::string template_to_text(const TemplateSpec& tmpl);
TemplateSpec template_from_text(const std::string& text);

std::string network_to_text(const NetworkSpec& net);
NetworkSpec network_from_text(const std::string& text);

std::string mps_to_text(const Mps& mps);
Mps mps_from_text(const std::string& text);

std::string circuit_to_text(const EncodingCircuit& circuit);
EncodingCircuit circuit_from_text(const std::string& text);

std::string states_to_text(const std::vector<std::vector<Complex>>& states);
std::vector<std::vector<Complex>> states_from_text(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace tncomp
