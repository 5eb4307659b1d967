// Copyright 2026 The mcmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mcmap/qasm.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <vector>

namespace mcmap {

QasmError::QasmError(const std::string &message, std::size_t line,
                     std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { Ident, Number, String, Symbol, End };

struct Token {
  Tok type;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const std::size_t tl = line, tc = col, start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) ||
              src[j] == '_')) {
        ++j;
      }
      advance(j - i);
      out.push_back({Tok::Ident, std::string(src.substr(start, j - start)),
                     tl, tc});
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isdigit(static_cast<unsigned char>(src[j])) ||
              src[j] == '.')) {
        ++j;
      }
      if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
        if (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) {
          j = k;
          while (j < src.size() &&
                 std::isdigit(static_cast<unsigned char>(src[j]))) {
            ++j;
          }
        }
      }
      advance(j - i);
      out.push_back({Tok::Number, std::string(src.substr(start, j - start)),
                     tl, tc});
    } else if (c == '"') {
      std::size_t j = i + 1;
      while (j < src.size() && src[j] != '"' && src[j] != '\n') ++j;
      if (j >= src.size() || src[j] != '"') {
        throw QasmError("unterminated string literal", tl, tc);
      }
      advance(j + 1 - i);
      out.push_back(
          {Tok::String, std::string(src.substr(start + 1, j - start - 1)), tl,
           tc});
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      advance(2);
      out.push_back({Tok::Symbol, "->", tl, tc});
    } else if (std::string_view(";,[]()+-*/^").find(c) !=
               std::string_view::npos) {
      advance(1);
      out.push_back({Tok::Symbol, std::string(1, c), tl, tc});
    } else {
      throw QasmError(std::string("unexpected character '") + c + "'", tl, tc);
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

struct GateInfo {
  std::size_t arity;
  std::size_t num_params;
};

const std::map<std::string, GateInfo, std::less<>> &supported_gates() {
  static const std::map<std::string, GateInfo, std::less<>> table = {
      {"h", {1, 0}},  {"x", {1, 0}},   {"y", {1, 0}},  {"z", {1, 0}},
      {"s", {1, 0}},  {"sdg", {1, 0}}, {"t", {1, 0}},  {"tdg", {1, 0}},
      {"rx", {1, 1}}, {"ry", {1, 1}},  {"rz", {1, 1}}, {"u1", {1, 1}},
      {"u2", {1, 2}}, {"u3", {1, 3}},  {"cx", {2, 0}}, {"cz", {2, 0}},
      {"cp", {2, 1}}, {"crz", {2, 1}}, {"swap", {2, 0}},
  };
  return table;
}

struct Register {
  std::size_t offset;
  std::size_t width;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Circuit run() {
    struct Pending {
      std::string label;
      std::vector<Qubit> qubits;
      std::vector<double> params;
    };
    std::vector<Pending> pending;
    bool first = true;
    while (peek().type != Tok::End) {
      const Token &head = peek();
      if (head.type != Tok::Ident) fail("expected a statement", head);
      const std::string &kw = head.text;
      if (kw == "OPENQASM") {
        if (!first) fail("OPENQASM header must come first", head);
        next();
        const Token &ver = expect(Tok::Number, "version number");
        if (ver.text != "2.0" && ver.text != "2") {
          fail("unsupported OpenQASM version " + ver.text, ver);
        }
        expect_symbol(";");
      } else if (kw == "include") {
        next();
        expect(Tok::String, "include file name");
        expect_symbol(";");
      } else if (kw == "qreg" || kw == "creg") {
        next();
        const Token &name = expect(Tok::Ident, "register name");
        expect_symbol("[");
        const std::size_t width = parse_index();
        expect_symbol("]");
        expect_symbol(";");
        if (kw == "qreg") {
          if (width == 0) fail("zero-width quantum register", name);
          if (qregs_.count(name.text) || cregs_.count(name.text)) {
            fail("register '" + name.text + "' redeclared", name);
          }
          qregs_[name.text] = {num_qubits_, width};
          num_qubits_ += width;
        } else {
          if (qregs_.count(name.text) || cregs_.count(name.text)) {
            fail("register '" + name.text + "' redeclared", name);
          }
          cregs_[name.text] = {0, width};
        }
      } else if (kw == "measure") {
        next();
        skip_arg(qregs_);
        expect_symbol("->");
        skip_arg(cregs_);
        expect_symbol(";");
      } else if (kw == "barrier") {
        next();
        skip_arg(qregs_);
        while (peek_symbol(",")) {
          next();
          skip_arg(qregs_);
        }
        expect_symbol(";");
      } else if (auto it = supported_gates().find(kw);
                 it != supported_gates().end()) {
        const Token &where = next();
        std::vector<double> params;
        if (peek_symbol("(")) {
          next();
          if (!peek_symbol(")")) {
            params.push_back(parse_expr());
            while (peek_symbol(",")) {
              next();
              params.push_back(parse_expr());
            }
          }
          expect_symbol(")");
        }
        if (params.size() != it->second.num_params) {
          fail("gate '" + kw + "' takes " +
                   std::to_string(it->second.num_params) + " parameter(s)",
               where);
        }
        std::vector<Qubit> qubits;
        qubits.push_back(parse_qubit());
        while (peek_symbol(",")) {
          next();
          qubits.push_back(parse_qubit());
        }
        expect_symbol(";");
        if (qubits.size() != it->second.arity) {
          fail("gate '" + kw + "' acts on " +
                   std::to_string(it->second.arity) + " qubit(s)",
               where);
        }
        if (qubits.size() == 2 && qubits[0] == qubits[1]) {
          fail("duplicate qubit in gate '" + kw + "'", where);
        }
        pending.push_back({kw, std::move(qubits), std::move(params)});
      } else {
        fail("unsupported statement '" + kw + "'", head);
      }
      first = false;
    }
    if (num_qubits_ == 0) {
      fail("no quantum register declared", peek());
    }
    Circuit circuit(num_qubits_);
    for (auto &p : pending) {
      circuit.add(Gate(std::move(p.label), std::move(p.qubits),
                       std::move(p.params)));
    }
    return circuit;
  }

 private:
  [[noreturn]] static void fail(const std::string &msg, const Token &at) {
    throw QasmError(msg, at.line, at.column);
  }

  const Token &peek() const { return toks_[pos_]; }
  const Token &next() {
    const Token &t = toks_[pos_];
    if (t.type != Tok::End) ++pos_;
    return t;
  }
  bool peek_symbol(std::string_view s) const {
    return peek().type == Tok::Symbol && peek().text == s;
  }
  const Token &expect(Tok type, const std::string &what) {
    if (peek().type != type) {
      fail("expected " + what + ", found '" + peek().text + "'", peek());
    }
    return next();
  }
  void expect_symbol(std::string_view s) {
    if (!peek_symbol(s)) {
      fail("expected '" + std::string(s) + "', found '" + peek().text + "'",
           peek());
    }
    next();
  }

  std::size_t parse_index() {
    const Token &t = expect(Tok::Number, "integer");
    std::size_t value = 0;
    auto [end, ec] =
        std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || end != t.text.data() + t.text.size()) {
      fail("expected integer, found '" + t.text + "'", t);
    }
    return value;
  }

  Qubit parse_qubit() {
    const Token &name = expect(Tok::Ident, "qubit argument");
    auto reg = qregs_.find(name.text);
    if (reg == qregs_.end()) {
      fail("unknown quantum register '" + name.text + "'", name);
    }
    if (!peek_symbol("[")) {
      fail("register broadcast is not supported; index the qubit", name);
    }
    next();
    const Token &idx_tok = peek();
    const std::size_t idx = parse_index();
    expect_symbol("]");
    if (idx >= reg->second.width) {
      fail("qubit index " + std::to_string(idx) + " out of range for '" +
               name.text + "[" + std::to_string(reg->second.width) + "]'",
           idx_tok);
    }
    return static_cast<Qubit>(reg->second.offset + idx);
  }

  void skip_arg(const std::map<std::string, Register> &regs) {
    const Token &name = expect(Tok::Ident, "register argument");
    auto reg = regs.find(name.text);
    if (reg == regs.end()) {
      fail("unknown register '" + name.text + "'", name);
    }
    if (peek_symbol("[")) {
      next();
      const Token &idx_tok = peek();
      if (parse_index() >= reg->second.width) {
        fail("index out of range for '" + name.text + "'", idx_tok);
      }
      expect_symbol("]");
    }
  }

  double parse_expr() {
    double v = parse_term();
    while (peek_symbol("+") || peek_symbol("-")) {
      const bool plus = next().text == "+";
      const double rhs = parse_term();
      v = plus ? v + rhs : v - rhs;
    }
    return v;
  }

  double parse_term() {
    double v = parse_factor();
    while (peek_symbol("*") || peek_symbol("/")) {
      const bool mul = next().text == "*";
      const double rhs = parse_factor();
      v = mul ? v * rhs : v / rhs;
    }
    return v;
  }

  double parse_factor() {
    if (peek_symbol("-")) {
      next();
      return -parse_factor();
    }
    if (peek_symbol("+")) {
      next();
      return parse_factor();
    }
    double base = parse_primary();
    if (peek_symbol("^")) {
      next();
      return std::pow(base, parse_factor());
    }
    return base;
  }

  double parse_primary() {
    const Token &t = peek();
    if (t.type == Tok::Number) {
      next();
      double value = 0;
      auto [end, ec] =
          std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
      if (ec != std::errc() || end != t.text.data() + t.text.size()) {
        fail("malformed number '" + t.text + "'", t);
      }
      return value;
    }
    if (t.type == Tok::Symbol && t.text == "(") {
      next();
      const double v = parse_expr();
      expect_symbol(")");
      return v;
    }
    if (t.type == Tok::Ident) {
      next();
      if (t.text == "pi") return std::numbers::pi;
      static const std::map<std::string, double (*)(double), std::less<>>
          funcs = {{"sin", [](double x) { return std::sin(x); }},
                   {"cos", [](double x) { return std::cos(x); }},
                   {"tan", [](double x) { return std::tan(x); }},
                   {"exp", [](double x) { return std::exp(x); }},
                   {"ln", [](double x) { return std::log(x); }},
                   {"sqrt", [](double x) { return std::sqrt(x); }}};
      auto f = funcs.find(t.text);
      if (f == funcs.end()) fail("unknown identifier '" + t.text + "'", t);
      expect_symbol("(");
      const double arg = parse_expr();
      expect_symbol(")");
      return f->second(arg);
    }
    fail("expected expression, found '" + t.text + "'", t);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, Register> qregs_;
  std::map<std::string, Register> cregs_;
  std::size_t num_qubits_ = 0;
};

void append_double(std::string &out, double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, end);
}

}  // namespace

Circuit parse_qasm(std::string_view text) {
  return Parser(tokenize(text)).run();
}

std::string serialize_qasm(const Circuit &circuit) {
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[";
  out += std::to_string(circuit.num_qubits());
  out += "];\n";
  for (const Gate &g : circuit.gates()) {
    out += g.label();
    if (!g.params().empty()) {
      out += '(';
      for (std::size_t i = 0; i < g.params().size(); ++i) {
        if (i) out += ',';
        append_double(out, g.params()[i]);
      }
      out += ')';
    }
    for (std::size_t i = 0; i < g.qubits().size(); ++i) {
      out += i ? ",q[" : " q[";
      out += std::to_string(g.qubits()[i]);
      out += ']';
    }
    out += ";\n";
  }
  return out;
}

}  // namespace mcmap
