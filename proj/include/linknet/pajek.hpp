#pragma once

#include <string>
#include <string_view>

#include "linknet/coupling.hpp"
#include "linknet/network.hpp"

namespace linknet::pajek {

/// Reads the `*Vertices` / `*Arcs` / `*Edges` subset of the Pajek `.net`
/// format.
///
/// `*Vertices n n1` declares a two-mode network with rows 1..n1 and columns
/// n1+1..n; without n1 the network is one-mode. Vertices without a label
/// line are labeled by their number. One-mode edges expand to opposite arc
/// pairs, two-mode edges are read as row-to-column links. Duplicate links
/// are summed and a missing weight means 1. Lines starting with `%` are
/// comments; LF and CRLF line endings are accepted.
///
/// Throws `ParseError`, `BadVertexCount` or `IndexOutOfRange`, all carrying
/// the offending line number.
SparseNetwork read_net(std::string_view text);

enum class LinkStyle {
  automatic,  ///< `*Edges` for symmetric one-mode, undirected and two-mode networks
  arcs,       ///< always `*Arcs`
};

/// Serializes a network; an empty network is header only. Weights use the shortest representation that reads
/// back to the same double; integral weights have no decimal point.
/// Undirected networks written as arcs are unfolded first.
std::string write_net(const SparseNetwork& net, LinkStyle style = LinkStyle::automatic);

/// Serializes a pair table, keeping explicit zero values. Each line of
/// `comment` becomes a leading `%` comment line.
std::string write_pairs(const PairTable& table, std::string_view comment = {});

/// Reads a `.vec` file: `*Vertices n` followed by n values. `nan` marks a
/// missing value.
WeightVector read_vec(std::string_view text);

/// As above; throws `CompatibilityError` when the length differs from `nodes`.
WeightVector read_vec(std::string_view text, NodeSetPtr nodes);

std::string write_vec(const WeightVector& vec);

std::string format_number(double value);

}  // namespace linknet::pajek
