// Copyright 2026 The qfim Authors
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

#pragma once

#include <string>
#include <vector>

#include "qfim/state.hpp"

namespace qfim {

/// Simple hypergraph on vertices 1..n_vertices. Edges are stored canonically:
/// each edge as a sorted vertex list, the edge set sorted lexicographically,
/// no duplicates, no loops (edges of size < 2 are rejected). Ordinary graphs
/// are the all-arity-2 special case.
class Hypergraph {
  public:
    Hypergraph(int n_vertices, std::vector<std::vector<int>> edges);

    int n_vertices() const { return n_vertices_; }
    const std::vector<std::vector<int>> &edges() const { return edges_; }

    /// Canonical edge-list text: "n; e1; e2; ...".
    std::string to_edge_list() const;

  private:
    int n_vertices_;
    std::vector<std::vector<int>> edges_;
};

/// |G> = prod_e C^(|e|-1)Z_e |+>^n. Edge order does not matter; all the
/// controlled-Z gates commute.
QubitState build_state(const Hypergraph &h, int max_qubits = kDefaultMaxQubits);

/// Parses "n; v v ...; v v ...". Tokens are space-separated vertex labels;
/// edges are separated by ';'. Malformed tokens, out-of-range vertices,
/// loops, and duplicate edges raise ParseError with line/column diagnostics.
Hypergraph parse_hypergraph(const std::string &text);

/// Parses the CLI flag form: --vertices n --edges "1 2,2 3,3 1".
Hypergraph parse_hypergraph_flags(int n_vertices, const std::string &comma_edges);

}  // namespace qfim
