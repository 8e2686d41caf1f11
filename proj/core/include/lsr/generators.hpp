#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lsr/graph.hpp"

namespace lsr {

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// Lattice [d_1] x ... x [d_k]; vertices are mixed-radix indices with the
/// first coordinate varying fastest.
Graph grid_graph(std::span<const std::size_t> dims);
Graph hypercube_graph(std::size_t d);
/// Uniform simple d-regular graph via the pairing model with rejection;
/// also rejects disconnected samples.
Graph random_regular_graph(std::size_t n, std::size_t d, std::uint64_t seed);
/// Uniform labelled tree from a random Pruefer sequence.
Graph random_tree(std::size_t n, std::uint64_t seed);
/// 2^(depth+1) - 1 vertices, children of i are 2i+1 and 2i+2.
Graph complete_binary_tree(std::size_t depth);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t n);

namespace family {
struct Path { std::size_t n; };
struct Cycle { std::size_t n; };
struct Grid { std::vector<std::size_t> dims; };
struct Hypercube { std::size_t d; };
struct RandomRegular { std::size_t n; std::size_t d; std::uint64_t seed; };
struct RandomTree { std::size_t n; std::uint64_t seed; };
struct CompleteBinaryTree { std::size_t depth; };
struct Complete { std::size_t n; };
struct Star { std::size_t n; };
}  // namespace family

using Family = std::variant<family::Path, family::Cycle, family::Grid, family::Hypercube,
                            family::RandomRegular, family::RandomTree, family::CompleteBinaryTree,
                            family::Complete, family::Star>;

Graph generate(const Family& family);

/// Parses "path:N", "cycle:N", "grid:AxB[xC..]", "hypercube:D",
/// "regular:N:D", "tree:N", "bintree:DEPTH", "complete:N", "star:N".
/// Random families take `seed`.
Family parse_family(std::string_view spec, std::uint64_t seed = 0);
std::string describe(const Family& family);

/// Separation number known for the family (exact for trees and cycles,
/// an upper bound for grids); nullopt when unknown.
std::optional<std::size_t> known_separation(const Family& family);

}  // namespace lsr
