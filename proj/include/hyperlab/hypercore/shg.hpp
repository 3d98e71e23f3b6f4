#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hyperlab/hypercore/hypergraph.hpp"

namespace hyperlab {

/// Text format:
///   s <arity> n <vertex count>
///   [v <label> ...]        required unless the labels are exactly 1..n
///   <label> ... <label>    one edge per line
/// '#' starts a comment.
Hypergraph parse_shg(std::string_view text);
std::string to_shg(const Hypergraph& g);

Hypergraph read_shg(const std::filesystem::path& path);
void write_shg(const std::filesystem::path& path, const Hypergraph& g);

}  // namespace hyperlab
