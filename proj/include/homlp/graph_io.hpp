#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "homlp/error.hpp"
#include "homlp/graph.hpp"
#include "json.hpp"

namespace homlp {

namespace detail {

// Recursive-descent reader for constructor expressions:
//   K(p/q)  K(n)  C(n)  Q(n/k)  P(<expr>, n, k)
class ExpressionReader {
 public:
  explicit ExpressionReader(std::string_view text) : text_(text) {}

  Graph read_all() {
    Graph g = read_expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing characters", pos_);
    return g;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  int read_int() {
    skip_space();
    std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000) throw ParseError("integer too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected integer", start);
    return static_cast<int>(value);
  }

  Graph read_expr() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("expected graph expression", pos_);
    const std::size_t at = pos_;
    const char head = text_[pos_++];
    switch (head) {
      case 'K': {
        expect('(');
        int p = read_int();
        int q = 1;
        if (accept('/')) q = read_int();
        expect(')');
        return q == 1 ? complete(p) : circular_complete(p, q);
      }
      case 'C': {
        expect('(');
        int n = read_int();
        expect(')');
        return cycle(n);
      }
      case 'Q': {
        expect('(');
        int n = read_int();
        expect('/');
        int k = read_int();
        expect(')');
        return power_graph(complete(2), n, k);
      }
      case 'P': {
        expect('(');
        Graph base = read_expr();
        expect(',');
        int n = read_int();
        expect(',');
        int k = read_int();
        expect(')');
        return power_graph(base, n, k);
      }
      default:
        throw ParseError(std::string("unknown graph constructor '") + head + "'", at);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Reads either an edge-list document {"n": N, "edges": [[u,v], ...]} or a
/// constructor expression such as "K(11/4)", "C(7)", "Q(3/2)", "P(K(3),2,1)".
inline Graph parse_graph(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("malformed graph document: ") + e.what(), e.byte);
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges") ||
        !doc["n"].is_number_integer() || !doc["edges"].is_array()) {
      throw ParseError("graph document needs integer \"n\" and array \"edges\"", first);
    }
    std::vector<Edge> edges;
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        throw ParseError("each edge must be a pair of integers", first);
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::from_edges(doc["n"].get<int>(), std::move(edges));
  }
  return detail::ExpressionReader(text).read_all();
}

inline nlohmann::ordered_json graph_to_json(const Graph& g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.order();
  doc["edges"] = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) doc["edges"].push_back({u, v});
  return doc;
}

/// Canonical edge-list document; parse_graph(serialize_graph(g)) == g.
inline std::string serialize_graph(const Graph& g) { return graph_to_json(g).dump(); }

}  // namespace homlp
