#pragma once

// Text forms accepted on the command line.
//
//   multivector   "(1+0i)1 + (-2+0i)e1e2", "e1 + i*e2", "0.5*e1 - e2", "I"
//   operator      "identity", "zero", "create:e1", "leftmul:e1e2",
//                 "leftmul:(1+0i)1 + e1", "e1obs:1,2,3,4", "Pplus:e1",
//                 "Pminus:e1", "log:<operator>"
//   base operator "identity", "diag:1,2,3", "proj:e1"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "fermiga/blade.hpp"
#include "fermiga/creation.hpp"
#include "fermiga/evolution.hpp"
#include "fermiga/extension.hpp"
#include "fermiga/multivector.hpp"
#include "fermiga/operator.hpp"

namespace fermiga {

namespace detail {

class TextCursor {
public:
  explicit TextCursor(std::string_view text) {
    for (const char c : text)
      if (!std::isspace(static_cast<unsigned char>(c)))
        s_ += c;
  }

  [[nodiscard]] bool done() const { return pos_ >= s_.size(); }
  [[nodiscard]] char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0';
  }
  bool consume(char c) {
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!consume(c))
      fail(std::string("expected '") + c + "'");
  }

  double number() {
    const char *begin = s_.c_str() + pos_;
    char *end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || !std::isfinite(v))
      fail("expected a finite number");
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }

  // Maximal blade token: "1", "I", or a run of e<digits>.
  std::string blade_token() {
    const std::size_t start = pos_;
    if (peek() == 'I' || peek() == '1') {
      ++pos_;
    } else {
      while (peek() == 'e') {
        ++pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
          ++pos_;
      }
    }
    if (pos_ == start)
      fail("expected a blade");
    return s_.substr(start, pos_ - start);
  }

  [[noreturn]] void fail(const std::string &why) const {
    throw parse_error("'" + s_ + "' at offset " + std::to_string(pos_) + ": " + why);
  }

private:
  std::string s_;
  std::size_t pos_ = 0;
};

// "(a+bi)", "(a)", "(bi)".
inline complex parenthesized_complex(TextCursor &cur) {
  cur.expect('(');
  const double a = cur.number();
  complex c{a, 0.0};
  if (cur.consume('i')) {
    c = {0.0, a};
  } else if (cur.peek() == '+' || cur.peek() == '-') {
    const double b = cur.number();
    cur.expect('i');
    c = {a, b};
  }
  cur.expect(')');
  return c;
}

} // namespace detail

[[nodiscard]] inline Multivector parse_multivector(std::string_view text, int n) {
  check_dimension(n);
  detail::TextCursor cur(text);
  if (cur.done())
    throw parse_error("empty multivector");
  if (cur.peek() == '0' && cur.peek(1) == '\0')
    return Multivector(n);
  Multivector out(n);
  bool first = true;
  while (!cur.done()) {
    double sign = 1.0;
    if (cur.consume('-'))
      sign = -1.0;
    else if (!cur.consume('+') && !first)
      cur.fail("expected '+' or '-' between terms");
    first = false;

    complex coef{1.0, 0.0};
    bool bare_scalar = false;
    if (cur.peek() == '(') {
      coef = detail::parenthesized_complex(cur);
      cur.consume('*');
    } else if (cur.peek() == 'i') {
      cur.consume('i');
      cur.expect('*');
      coef = {0.0, 1.0};
    } else if (std::isdigit(static_cast<unsigned char>(cur.peek())) || cur.peek() == '.') {
      // "1" alone is the scalar blade; "2", "2*e1", "2i*e1" carry a coefficient.
      if (cur.peek() == '1' && !std::isdigit(static_cast<unsigned char>(cur.peek(1))) &&
          cur.peek(1) != '.' && cur.peek(1) != 'i' && cur.peek(1) != '*' && cur.peek(1) != 'e' &&
          cur.peek(1) != 'E') {
        // fall through to blade parsing
      } else {
        const double v = cur.number();
        coef = cur.consume('i') ? complex{0.0, v} : complex{v, 0.0};
        if (!cur.consume('*'))
          bare_scalar = true;
      }
    }
    const Blade blade = bare_scalar ? Blade::scalar(n) : parse_blade(cur.blade_token(), n);
    out.accumulate(blade.mask(), sign * coef);
  }
  return out;
}

[[nodiscard]] inline std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  detail::TextCursor cur(text);
  if (cur.done())
    throw parse_error("empty number list");
  do {
    out.push_back(cur.number());
  } while (cur.consume(','));
  if (!cur.done())
    cur.fail("trailing characters in number list");
  return out;
}

namespace detail {

inline int generator_argument(std::string_view arg, int n) {
  const Blade b = parse_blade(arg, n);
  if (b.grade() != 1)
    throw parse_error("'" + std::string(arg) + "' is not a single generator e_i");
  return std::countr_zero(b.mask()) + 1;
}

inline std::pair<std::string_view, std::string_view> split_kind(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    return {spec, {}};
  return {spec.substr(0, colon), spec.substr(colon + 1)};
}

} // namespace detail

[[nodiscard]] inline Operator parse_operator(std::string_view spec, int n, DenseCap cap = {}) {
  check_dimension(n);
  const auto [kind, arg] = detail::split_kind(spec);
  if (kind == "identity" && arg.empty())
    return Operator::identity(n, cap);
  if (kind == "zero" && arg.empty())
    return Operator::zero(n, cap);
  if (kind == "create")
    return creation_operator(CreationSpec(detail::generator_argument(arg, n), n), cap);
  if (kind == "leftmul")
    return left_mul_operator(parse_multivector(arg, n), cap);
  if (kind == "Pplus" || kind == "Pminus") {
    auto pair = creation_projections(CreationSpec(detail::generator_argument(arg, n), n), cap);
    return kind == "Pplus" ? std::move(pair.plus) : std::move(pair.minus);
  }
  if (kind == "e1obs") {
    if (n != 2)
      throw parse_error("e1obs is defined on G(C^2) only (n=2)");
    const auto w = parse_real_list(arg);
    if (w.size() != 4)
      throw parse_error("e1obs takes exactly four weights");
    return e1_observable({w[0], w[1], w[2], w[3]});
  }
  if (kind == "log")
    return hamiltonian_of_unitary(parse_operator(arg, n, cap));
  throw parse_error("unknown operator spec '" + std::string(spec) + "'");
}

[[nodiscard]] inline BaseOperator parse_base_operator(std::string_view spec, int n) {
  check_dimension(n);
  const auto [kind, arg] = detail::split_kind(spec);
  if (kind == "identity" && arg.empty())
    return BaseOperator::identity(n);
  if (kind == "diag") {
    const auto lambda = parse_real_list(arg);
    if (static_cast<int>(lambda.size()) != n)
      throw parse_error("diag needs " + std::to_string(n) + " entries");
    return BaseOperator::diagonal(lambda);
  }
  if (kind == "proj")
    return BaseOperator::projection_onto(detail::generator_argument(arg, n), n);
  throw parse_error("unknown base operator spec '" + std::string(spec) + "'");
}

} // namespace fermiga
