#pragma once

// Subcommands of the fermiga tool. Each command validates its flags, writes
// its report to `out` and returns the process exit code:
//   0 success, 1 numerical contract failure, 2 usage or parse error, 3 resource cap.

#include <cmath>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fermiga/fermiga.hpp"

namespace fermiga::cli {

enum ExitCode : int { kOk = 0, kContract = 1, kUsage = 2, kCap = 3 };

inline constexpr std::uint64_t kMaxListedBlades = std::uint64_t{1} << 20;

// Computed results are reported with round-off below this magnitude set to 0.
inline constexpr double kChop = 1e-13;

struct Options {
  int n = 0;
  std::string op;
  std::string state;
  std::string effect;
  std::string observable;
  std::string hamiltonian;
  double t = 0.0;
  int steps = 1;
  std::string format = "text";
  int max_dense_n = kDefaultDenseCap;
  double tolerance = kClusterTolerance;
  std::string base;
  std::string alpha;
  std::string product = "exterior";
  bool spectrum = false;
  int m = 0;
  int r = 0;
  bool list_basis = false;
  std::optional<int> grade;
  bool normalize = false;
};

class usage_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline double chop(double x) { return std::abs(x) < kChop ? 0.0 : x; }
inline complex chop(complex c) { return {chop(c.real()), chop(c.imag())}; }

inline Multivector chop(const Multivector &a) {
  Multivector out(a.dimension());
  for (const auto &[blade, c] : a.canonical_terms())
    if (const complex d = chop(c); d != complex(0.0))
      out.accumulate(blade.mask(), d);
  return out;
}

inline Operator chop(const Operator &t) {
  return {t.dimension(), t.matrix().unaryExpr([](complex c) { return chop(c); })};
}

inline void require_format(const Options &o) {
  if (o.format != "text" && o.format != "json")
    throw usage_error("--format must be text or json, got '" + o.format + "'");
}

inline void require_n(const Options &o) {
  if (o.n < 1 || o.n > kMaxDimension)
    throw usage_error("--n must be in [1, " + std::to_string(kMaxDimension) + "], got " +
                      std::to_string(o.n));
}

inline DenseCap dense_cap(const Options &o) {
  if (o.max_dense_n < 1 || o.max_dense_n > kMaxDimension)
    throw usage_error("--max-dense-n must be in [1, " + std::to_string(kMaxDimension) + "]");
  return {o.max_dense_n};
}

inline void require_flag(const std::string &value, const char *flag) {
  if (value.empty())
    throw usage_error(std::string(flag) + " is required");
}

inline bool is_json(const std::string &text) {
  const auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && text[p] == '{';
}

inline json parse_json(const std::string &text) {
  try {
    return json::parse(text);
  } catch (const json::exception &e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
}

inline Multivector read_state(const Options &o) {
  require_flag(o.state, "--state");
  Multivector psi = is_json(o.state) ? multivector_from_json(parse_json(o.state))
                                     : parse_multivector(o.state, o.n);
  if (psi.dimension() != o.n)
    throw usage_error("state is over n=" + std::to_string(psi.dimension()) + ", --n is " +
                      std::to_string(o.n));
  if (o.normalize) {
    if (psi.is_zero())
      throw contract_error("cannot normalize the zero state");
    psi = scale(1.0 / norm(psi), psi);
  }
  return psi;
}

inline Operator read_operator(const std::string &spec, const char *flag, const Options &o) {
  require_flag(spec, flag);
  const DenseCap cap = dense_cap(o);
  Operator t = is_json(spec) ? operator_from_json(parse_json(spec), cap)
                             : parse_operator(spec, o.n, cap);
  if (t.dimension() != o.n)
    throw usage_error(std::string(flag) + " is over n=" + std::to_string(t.dimension()) +
                      ", --n is " + std::to_string(o.n));
  return t;
}

inline BaseOperator read_base(const Options &o) {
  require_flag(o.base, "--base");
  BaseOperator b = is_json(o.base) ? base_operator_from_json(parse_json(o.base))
                                   : parse_base_operator(o.base, o.n);
  if (b.dimension() != o.n)
    throw usage_error("--base is over n=" + std::to_string(b.dimension()) + ", --n is " +
                      std::to_string(o.n));
  return b;
}

inline AlphaVector read_alpha(const Options &o) {
  require_flag(o.alpha, "--alpha");
  if (o.alpha == "simple")
    return AlphaVector::simple(o.n);
  if (o.alpha == "trivial")
    return AlphaVector::trivial(o.n);
  const auto values = parse_real_list(o.alpha);
  if (static_cast<int>(values.size()) != o.n)
    throw usage_error("--alpha needs " + std::to_string(o.n) + " entries, got " +
                      std::to_string(values.size()));
  return AlphaVector(values);
}

inline LeibnizProduct read_product(const Options &o) {
  if (o.product == "exterior")
    return LeibnizProduct::exterior;
  if (o.product == "geometric")
    return LeibnizProduct::geometric;
  throw usage_error("--product must be exterior or geometric, got '" + o.product + "'");
}

// Diagonal entries of a base operator with no off-diagonal part, real on the diagonal.
inline std::optional<std::vector<double>> real_diagonal(const BaseOperator &b) {
  std::vector<double> lambda;
  for (Eigen::Index i = 0; i < b.rows().rows(); ++i)
    for (Eigen::Index j = 0; j < b.rows().cols(); ++j) {
      const complex c = b.rows()(i, j);
      if (i == j) {
        if (c.imag() != 0.0)
          return std::nullopt;
        lambda.push_back(c.real());
      } else if (c != complex{}) {
        return std::nullopt;
      }
    }
  return lambda;
}

inline std::string basis_header(int n) {
  std::string s = "# basis:";
  const BasisOrder order(n);
  for (const mask_t m : order.masks())
    s += " " + to_string(Blade(m, n));
  return s;
}

inline void write_matrix_text(std::ostream &out, const Operator &t) {
  out << basis_header(t.dimension()) << "\n";
  for (Eigen::Index k = 0; k < t.side(); ++k) {
    for (Eigen::Index j = 0; j < t.side(); ++j)
      out << (j ? " " : "") << format_entry(t(k, j));
    out << "\n";
  }
}

inline void write_spectrum(std::ostream &out, const Options &o, const SpectralDecomposition &d,
                           const std::string &kind) {
  const auto mult = d.multiplicities();
  if (o.format == "json") {
    json values = json::array();
    for (std::size_t j = 0; j < d.terms().size(); ++j)
      values.push_back({{"value", printable(chop(d.terms()[j].eigenvalue))}, {"multiplicity", mult[j]}});
    out << json{{"n", o.n}, {"kind", kind}, {"eigenvalues", std::move(values)}}.dump(2) << "\n";
    return;
  }
  out << "kind " << kind << "\n";
  for (std::size_t j = 0; j < d.terms().size(); ++j)
    out << "eigenvalue " << format_real(chop(d.terms()[j].eigenvalue)) << " multiplicity " << mult[j]
        << "\n";
}

} // namespace detail

// Runs `body`, mapping library exceptions to exit codes and messages on `err`.
inline int guarded(std::ostream &err, const std::function<int()> &body) {
  try {
    return body();
  } catch (const usage_error &e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const parse_error &e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const dimension_error &e) {
    err << "dimension error: " << e.what() << "\n";
    return kUsage;
  } catch (const cap_error &e) {
    err << "resource cap: " << e.what() << "\n";
    return kCap;
  } catch (const contract_error &e) {
    err << "contract failure: " << e.what() << "\n";
    return kContract;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kContract;
  }
}

inline int cmd_algebra_info(const Options &o, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    detail::require_format(o);
    detail::require_n(o);
    std::vector<std::uint64_t> grades;
    for (int j = 0; j <= o.n; ++j)
      grades.push_back(binomial(o.n, j));
    const std::uint64_t total = std::uint64_t{1} << o.n;
    if (o.format == "json") {
      out << json{{"n", o.n}, {"dimension", total}, {"grades", grades}}.dump(2) << "\n";
    } else {
      out << "n " << o.n << "\ndimension " << total << "\ngrades";
      for (const auto g : grades)
        out << " " << g;
      out << "\n";
    }
    return kOk;
  });
}

inline int cmd_op_matrix(const Options &o, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    detail::require_format(o);
    detail::require_n(o);
    const Operator t = detail::chop(detail::read_operator(o.op, "--op", o));
    if (o.format == "json")
      out << to_json(t).dump(2) << "\n";
    else
      detail::write_matrix_text(out, t);
    return kOk;
  });
}

inline int cmd_spectrum(const Options &o, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    detail::require_format(o);
    detail::require_n(o);
    const Operator t = detail::read_operator(o.op, "--op", o);
    if (is_self_adjoint(t, 1e-9)) {
      detail::write_spectrum(out, o, spectral_decompose(t, o.tolerance), "self-adjoint");
      return kOk;
    }
    if (!is_unitary(t, 1e-9))
      throw contract_error("operator is neither self-adjoint nor unitary");
    const auto terms = unitary_spectral_decompose(t, o.tolerance);
    if (o.format == "json") {
      json values = json::array();
      for (const auto &term : terms)
        values.push_back({{"re", printable(detail::chop(term.eigenvalue.real()))},
                          {"im", printable(detail::chop(term.eigenvalue.imag()))},
                          {"phase", printable(detail::chop(term.phase))},
                          {"multiplicity", std::llround(trace(term.projection).real())}});
      out << json{{"n", o.n}, {"kind", "unitary"}, {"eigenvalues", std::move(values)}}.dump(2)
          << "\n";
    } else {
      out << "kind unitary\n";
      for (const auto &term : terms)
        out << "eigenvalue " << format_complex(detail::chop(term.eigenvalue)) << " phase "
            << format_real(detail::chop(term.phase)) << " multiplicity "
            << std::llround(trace(term.projection).real()) << "\n";
    }
    return kOk;
  });
}

inline int cmd_evolve(const Options &o, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    detail::require_format(o);
    detail::require_n(o);
    if (!std::isfinite(o.t))
      throw usage_error("--t must be finite");
    if (o.steps < 0)
      throw usage_error("--steps must be >= 0");
    const Multivector psi = detail::read_state(o);
    const Operator a = detail::read_operator(o.hamiltonian, "--hamiltonian", o);
    const SpectralDecomposition d = spectral_decompose(a, o.tolerance);
    const Vector v = to_coordinates(psi);
    std::vector<Vector> pieces;
    for (const auto &term : d.terms())
      pieces.emplace_back(term.projection.matrix() * v);

    json states = json::array();
    for (int k = 0; k <= o.steps; ++k) {
      const double time = o.t * k;
      Vector w = Vector::Zero(v.size());
      for (std::size_t j = 0; j < pieces.size(); ++j)
        w += std::polar(1.0, std::numbers::pi * time * d.terms()[j].eigenvalue) * pieces[j];
      const Multivector state = detail::chop(from_coordinates(o.n, w));
      if (o.format == "json")
        states.push_back({{"t", printable(time)}, {"state", to_json(state)}});
      else
        out << "t " << format_real(time) << " " << to_string(state) << "\n";
    }
    if (o.format == "json")
      out << json{{"n", o.n}, {"dt", printable(o.t)}, {"steps", o.steps}, {"states", std::move(states)}}
                 .dump(2)
          << "\n";
    return kOk;
  });
}

inline int cmd_probability(const Options &o, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    detail::require_format(o);
    detail::require_n(o);
    if (o.effect.empty() == o.observable.empty())
      throw usage_error("give exactly one of --effect or --observable");
    const DensityState rho = pure_state(detail::read_state(o), detail::dense_cap(o));
    if (!o.effect.empty()) {
      const double p = detail::chop(probability(rho, detail::read_operator(o.effect, "--effect", o)));
      if (o.format == "json")
        out << json{{"probability", printable(p)}}.dump(2) << "\n";
      else
        out << format_real(p) << "\n";
      return kOk;
    }
    const auto [kind, arg] = fermiga::detail::split_kind(o.observable);
    std::optional<Observable> obs;
    if (kind == "create") {
      const auto pp = creation_projections(
          CreationSpec(fermiga::detail::generator_argument(arg, o.n), o.n), detail::dense_cap(o));
      obs.emplace(std::vector<Observable::outcome>{{"+1", pp.plus}, {"-1", pp.minus}});
    } else if (kind == "e1obs") {
      if (o.n != 2)
        throw usage_error("e1obs is defined for n=2 only");
      const auto w = parse_real_list(arg);
      if (w.size() != 4)
        throw usage_error("e1obs takes exactly four weights");
      obs.emplace(e1_observable_effects({w[0], w[1], w[2], w[3]}));
    } else {
      throw parse_error("unknown observable spec '" + o.observable + "'");
    }
    const auto dist = distribution(rho, *obs);
    if (o.format == "json") {
      json rows = json::array();
      for (const auto &[label, p] : dist)
        rows.push_back({{"outcome", label}, {"probability", printable(detail::chop(p))}});
      out << json{{"distribution", std::move(rows)}}.dump(2) << "\n";
    } else {
      for (const auto &[label, p] : dist)
        out << label << " " << format_real(detail::chop(p)) << "\n";
    }
    return kOk;
  });
}

inline int cmd_extend(const Options &o, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    detail::require_format(o);
    detail::require_n(o);
    const BaseOperator b = detail::read_base(o);
    const AlphaVector alpha = detail::read_alpha(o);
    const LeibnizProduct product = detail::read_product(o);
    const DenseCap cap = detail::dense_cap(o);
    if (!o.spectrum) {
      const Operator t = detail::chop(alpha_extend(b, alpha, cap, product));
      if (o.format == "json")
        out << to_json(t).dump(2) << "\n";
      else
        detail::write_matrix_text(out, t);
      return kOk;
    }
    if (const auto lambda = detail::real_diagonal(b); lambda && alpha.is_real()) {
      detail::write_spectrum(out, o, diagonal_alpha_extension(*lambda, alpha, o.tolerance, cap),
                             "diagonal");
      return kOk;
    }
    const Operator t = alpha_extend(b, alpha, cap, product);
    if (!is_self_adjoint(t, 1e-9))
      throw contract_error("alpha-extension is not self-adjoint; no real spectrum");
    detail::write_spectrum(out, o, spectral_decompose(t, o.tolerance), "self-adjoint");
    return kOk;
  });
}

inline int cmd_fock(const Options &o, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    detail::require_format(o);
    const std::uint64_t k = fock_dim(o.m, o.r);
    if (k > static_cast<std::uint64_t>(kMaxDimension))
      throw cap_error("boson-fermion field needs k=" + std::to_string(k) +
                      " generators, above the cap " + std::to_string(kMaxDimension));
    const BosonFermionField field(o.m, o.r);
    if (o.grade && (*o.grade < 0 || *o.grade > field.dimension()))
      throw usage_error("--grade must be in [0, " + std::to_string(field.dimension()) + "]");
    std::vector<Blade> basis;
    if (o.list_basis) {
      const std::uint64_t count =
          o.grade ? binomial(field.dimension(), *o.grade) : field.basis_size();
      if (count > kMaxListedBlades)
        throw cap_error("listing " + std::to_string(count) + " blades exceeds the cap " +
                        std::to_string(kMaxListedBlades));
      basis = field.basis(o.grade);
    }
    if (o.format == "json") {
      json words = json::array();
      for (const auto &w : field.words())
        words.push_back(w.ascii());
      json j = {{"m", o.m}, {"r", o.r}, {"k", field.dimension()},
                {"basis_size", field.basis_size()}, {"words", std::move(words)}};
      if (o.list_basis) {
        json rows = json::array();
        for (const auto &b : basis)
          rows.push_back({{"index", canonical_index(b)}, {"mask", b.mask()}, {"blade", to_string(b)},
                          {"label", field.label(b)}, {"ascii", field.ascii_label(b)}});
        j["basis"] = std::move(rows);
      }
      out << j.dump(2) << "\n";
      return kOk;
    }
    out << "m " << o.m << "\nr " << o.r << "\nk " << field.dimension() << "\nbasis_size "
        << field.basis_size() << "\nwords";
    for (const auto &w : field.words())
      out << " " << w.ascii();
    out << "\n";
    for (const auto &b : basis)
      out << canonical_index(b) << " " << b.mask() << " " << to_string(b) << " " << field.label(b)
          << "\n";
    return kOk;
  });
}

// Dispatch by subcommand name; unknown names are usage errors.
inline int run(const std::string &command, const Options &o, std::ostream &out, std::ostream &err) {
  if (command == "algebra-info")
    return cmd_algebra_info(o, out, err);
  if (command == "op-matrix")
    return cmd_op_matrix(o, out, err);
  if (command == "spectrum")
    return cmd_spectrum(o, out, err);
  if (command == "evolve")
    return cmd_evolve(o, out, err);
  if (command == "probability")
    return cmd_probability(o, out, err);
  if (command == "extend")
    return cmd_extend(o, out, err);
  if (command == "fock")
    return cmd_fock(o, out, err);
  err << "usage error: unknown command '" << command << "'\n";
  return kUsage;
}

} // namespace fermiga::cli
