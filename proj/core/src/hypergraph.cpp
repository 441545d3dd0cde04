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

#include "qfim/hypergraph.hpp"

#include <algorithm>
#include <sstream>

namespace qfim {

Hypergraph::Hypergraph(int n_vertices, std::vector<std::vector<int>> edges)
    : n_vertices_(n_vertices), edges_(std::move(edges)) {
    if (n_vertices_ < 1) {
        throw InvalidSizeError("hypergraph needs at least one vertex");
    }
    for (auto &e : edges_) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        if (e.size() < 2) {
            throw InvalidSizeError("edge of size < 2 (loops and empty edges are rejected)");
        }
        for (int v : e) {
            if (v < 1 || v > n_vertices_) {
                throw InvalidSizeError("vertex " + std::to_string(v) + " outside [1, " +
                                       std::to_string(n_vertices_) + "]");
            }
        }
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); i++) {
        if (edges_[i] == edges_[i - 1]) {
            throw InvalidSizeError("duplicate edge in edge set");
        }
    }
}

std::string Hypergraph::to_edge_list() const {
    std::ostringstream out;
    out << n_vertices_;
    for (const auto &e : edges_) {
        out << ";";
        for (int v : e) {
            out << " " << v;
        }
    }
    return out.str();
}

QubitState build_state(const Hypergraph &h, int max_qubits) {
    QubitState state = plus_state(h.n_vertices(), max_qubits);
    for (const auto &e : h.edges()) {
        state = apply_cz(state, e);
    }
    return state;
}

namespace {

struct Cursor {
    const std::string &text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    void advance() {
        if (text[pos] == '\n') {
            line++;
            col = 1;
        } else {
            col++;
        }
        pos++;
    }
    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
};

int parse_int_token(Cursor &c, const char *what) {
    while (!c.done() && (c.peek() == ' ' || c.peek() == '\t' || c.peek() == '\n')) {
        c.advance();
    }
    const int at_line = c.line, at_col = c.col;
    std::string tok;
    while (!c.done() && c.peek() != ' ' && c.peek() != '\t' && c.peek() != '\n' && c.peek() != ';' &&
           c.peek() != ',') {
        tok += c.peek();
        c.advance();
    }
    if (tok.empty()) {
        throw ParseError(std::string("expected ") + what + ", found nothing", at_line, at_col);
    }
    if (tok.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError(std::string("malformed ") + what + " '" + tok + "'", at_line, at_col);
    }
    try {
        return std::stoi(tok);
    } catch (const std::exception &) {
        throw ParseError(std::string("malformed ") + what + " '" + tok + "'", at_line, at_col);
    }
}

Hypergraph parse_with_separator(const std::string &text, char edge_sep) {
    Cursor c{text};
    const int n = parse_int_token(c, "vertex count");
    if (n < 1) {
        throw ParseError("vertex count must be positive", 1, 1);
    }
    std::vector<std::vector<int>> edges;
    while (true) {
        while (!c.done() && (c.peek() == ' ' || c.peek() == '\t' || c.peek() == '\n')) {
            c.advance();
        }
        if (c.done()) {
            break;
        }
        if (c.peek() != edge_sep) {
            throw ParseError(std::string("expected '") + edge_sep + "' between edges", c.line, c.col);
        }
        c.advance();
        std::vector<int> edge;
        const int at_line = c.line, at_col = c.col;
        while (true) {
            while (!c.done() && (c.peek() == ' ' || c.peek() == '\t' || c.peek() == '\n')) {
                c.advance();
            }
            if (c.done() || c.peek() == edge_sep) {
                break;
            }
            const int vl = c.line, vc = c.col;
            const int v = parse_int_token(c, "vertex label");
            if (v < 1 || v > n) {
                throw ParseError("vertex " + std::to_string(v) + " outside [1, " +
                                     std::to_string(n) + "]",
                                 vl, vc);
            }
            edge.push_back(v);
        }
        if (edge.empty()) {
            // Trailing separator is tolerated; anything else is an empty edge.
            if (c.done()) {
                break;
            }
            throw ParseError("empty edge", at_line, at_col);
        }
        std::sort(edge.begin(), edge.end());
        if (std::adjacent_find(edge.begin(), edge.end()) != edge.end() || edge.size() < 2) {
            throw ParseError("edge touches fewer than 2 distinct vertices (loop rejected)", at_line,
                             at_col);
        }
        for (std::size_t i = 0; i < edges.size(); i++) {
            if (edges[i] == edge) {
                throw ParseError("duplicate edge", at_line, at_col);
            }
        }
        edges.push_back(std::move(edge));
    }
    return Hypergraph(n, std::move(edges));
}

}  // namespace

Hypergraph parse_hypergraph(const std::string &text) { return parse_with_separator(text, ';'); }

Hypergraph parse_hypergraph_flags(int n_vertices, const std::string &comma_edges) {
    return parse_with_separator(std::to_string(n_vertices) + "," + comma_edges, ',');
}

}  // namespace qfim
