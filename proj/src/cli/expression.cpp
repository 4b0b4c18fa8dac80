#include <cctype>
#include <charconv>
#include <memory>

#include "zforce/cli.hpp"
#include "zforce/errors.hpp"

namespace zforce::cli {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(' || c == ')') {
      out.push_back({std::string(1, c), static_cast<int>(i) + 1});
      ++i;
    } else {
      const std::size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             text[i] != '(' && text[i] != ')')
        ++i;
      out.push_back({std::string(text.substr(start, i - start)), static_cast<int>(start) + 1});
    }
  }
  return out;
}

std::optional<ProductOp> as_op(const std::string& word) {
  if (word == "box" || word == "cartesian") return ProductOp::kCartesian;
  if (word == "strong") return ProductOp::kStrong;
  if (word == "lex" || word == "lexicographic") return ProductOp::kLexicographic;
  if (word == "corona") return ProductOp::kCorona;
  return std::nullopt;
}

FamilySpec parse_family(const Token& token) {
  const std::string& t = token.text;
  std::vector<int> params;
  std::size_t colon = t.find(':');
  const std::string name = t.substr(0, colon);
  if (colon != std::string::npos) {
    std::size_t pos = colon + 1;
    while (true) {
      std::size_t end = t.find_first_of(":,", pos);
      if (end == std::string::npos) end = t.size();
      int value = 0;
      auto [ptr, ec] = std::from_chars(t.data() + pos, t.data() + end, value);
      if (ec != std::errc{} || ptr != t.data() + end)
        throw ParseError("bad parameter in '" + t + "'", 0,
                         token.column + static_cast<int>(pos));
      params.push_back(value);
      if (end == t.size()) break;
      pos = end + 1;
    }
  }
  auto expect = [&](std::size_t count) {
    if (params.size() != count)
      throw ParseError("'" + name + "' takes " + std::to_string(count) + " parameter(s)", 0,
                       token.column);
  };
  if (name == "path") return expect(1), FamilySpec::path(params[0]);
  if (name == "cycle") return expect(1), FamilySpec::cycle(params[0]);
  if (name == "complete") return expect(1), FamilySpec::complete(params[0]);
  if (name == "complete_bipartite" || name == "bipartite")
    return expect(2), FamilySpec::complete_bipartite(params[0], params[1]);
  if (name == "wheel") return expect(1), FamilySpec::wheel(params[0]);
  if (name == "petersen") return expect(0), FamilySpec::petersen();
  if (name == "mary_tree" || name == "tree")
    return expect(2), FamilySpec::mary_tree(params[0], params[1]);
  if (name == "empty") return expect(1), FamilySpec::empty(params[0]);
  throw ParseError("unknown family '" + name + "'", 0, token.column);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)), end_column_(static_cast<int>(text.size()) + 1) {}

  GraphExpr top() {
    GraphExpr left = expr();
    if (!at_end()) {
      const ProductOp op = op_token();
      GraphExpr right = expr();
      left = std::make_shared<const ProductSpec>(ProductSpec{op, left, right});
    }
    if (!at_end())
      throw ParseError("unexpected '" + peek().text + "' (use parentheses to nest)", 0,
                       peek().column);
    return left;
  }

 private:
  bool at_end() const { return pos_ >= tokens_.size(); }
  const Token& peek() const { return tokens_[pos_]; }

  [[noreturn]] void fail_end(const std::string& what) const {
    throw ParseError(what + " at end of expression", 0, end_column_);
  }

  ProductOp op_token() {
    if (at_end()) fail_end("expected an operator");
    auto op = as_op(peek().text);
    if (!op)
      throw ParseError("expected box|strong|lex|corona, found '" + peek().text + "'", 0,
                       peek().column);
    ++pos_;
    return *op;
  }

  GraphExpr expr() {
    if (at_end()) fail_end("expected a graph");
    const Token& t = peek();
    if (t.text == "(") {
      ++pos_;
      GraphExpr left = expr();
      const ProductOp op = op_token();
      GraphExpr right = expr();
      if (at_end()) fail_end("expected ')'");
      if (peek().text != ")")
        throw ParseError("expected ')', found '" + peek().text + "'", 0, peek().column);
      ++pos_;
      return std::make_shared<const ProductSpec>(ProductSpec{op, left, right});
    }
    if (t.text == ")" || as_op(t.text))
      throw ParseError("expected a graph, found '" + t.text + "'", 0, t.column);
    ++pos_;
    return parse_family(t);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int end_column_;
};

}  // namespace

GraphExpr parse_expression(std::string_view text) { return Parser(text).top(); }

}  // namespace zforce::cli
