#pragma once

#include "fairdiv/allocation.hpp"
#include "fairdiv/instance.hpp"
#include "fairdiv/reduction.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace fairdiv {

// Instance files come in two forms.
//
// Normalized:              Denormalized (leading "raw"):
//   2 4                      raw 2 4
//   50 3                     50 50 1 1
//   LLSS                     3 1 1 1
//   LSSS
//
// The first line carries agent and good counts; the normalized form then
// lists one ratio per agent ("p" or "p/q") and one L/S row per agent, while
// the raw form lists one value row per agent and is normalized on read.
// Writers emit the canonical form, so written files round-trip byte for byte.
Instance read_instance(std::istream& in);
void write_instance(std::ostream& out, const Instance& inst);

// Allocation files: good count on the first line, then one owner per good
// (-1 for unassigned).
Allocation read_allocation(std::istream& in);
void write_allocation(std::ostream& out, const Allocation& alloc);

// Bipartite graph files: "|A| |B| k" on the first line, then one "a b" edge
// per line, 0-indexed.
struct BipartiteGraphFile {
  BipartiteGraph graph;
  int k = 0;
};
BipartiteGraphFile read_bipartite_graph(std::istream& in);

// Verdict records: "PO" alone, or "NOT_PO" followed by one transfer per line
// as "good from to".
std::string po_record(const std::optional<Improvement>& certificate);

// File helpers; throw Error(parse) with the path on failure.
std::string slurp_file(const std::string& path);
void spill_file(const std::string& path, const std::string& content);

Instance read_instance_file(const std::string& path);
Allocation read_allocation_file(const std::string& path);
BipartiteGraphFile read_bipartite_graph_file(const std::string& path);

}  // namespace fairdiv
