#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "srkit/actions.hpp"
#include "srkit/bounds.hpp"
#include "srkit/codes.hpp"
#include "srkit/errors.hpp"
#include "srkit/io.hpp"
#include "srkit/pascal.hpp"
#include "srkit/search.hpp"
#include "srkit/toeplitz.hpp"

namespace py = pybind11;
using namespace srkit;

namespace {

/// FieldPtr aliases shared_ptr-to-const, which cannot be a pybind11 holder;
/// python sees this value wrapper instead.
struct PyField {
  FieldPtr ptr;
};

py::object to_pyint(const BigInt& b) {
  return py::module_::import("builtins").attr("int")(b.str());
}

Normalization norm_from_name(const std::string& name) {
  if (name == "none") return Normalization::none;
  if (name == "a0") return Normalization::a0;
  if (name == "a0a1") return Normalization::a0a1;
  fail(errc::usage, "unknown normalization " + name);
}

FieldFamily family_from_name(const std::string& name) {
  if (name == "primes") return FieldFamily::primes;
  if (name == "prime-powers") return FieldFamily::prime_powers;
  fail(errc::usage, "unknown family " + name);
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::completed: return "completed";
    case Outcome::budget_exceeded: return "budget-exceeded";
    case Outcome::cap_exceeded: return "cap-exceeded";
  }
  return "?";
}

py::dict stats_dict(const SearchStats& s) {
  py::dict d;
  d["nodes"] = s.nodes;
  d["seconds"] = s.seconds;
  d["deepest_level"] = s.deepest_level;
  return d;
}

py::list formatted_col(const Toeplitz& t) {
  py::list out;
  for (code_t v : t.col) out.append(t.field->format(v));
  return out;
}

/// Accepts python ints (codes) or strings (element notation) per entry.
std::vector<code_t> parse_col(const Field& f, const py::sequence& col) {
  std::vector<code_t> out;
  for (const auto& item : col) {
    if (py::isinstance<py::int_>(item)) {
      out.push_back(static_cast<code_t>(item.cast<std::uint32_t>()));
    } else {
      out.push_back(f.parse(item.cast<std::string>()));
    }
  }
  return out;
}

Poly parse_poly(const Field& f, const py::sequence& coeffs) {
  Poly p;
  for (const auto& item : coeffs) {
    if (py::isinstance<py::int_>(item))
      p.c.push_back(static_cast<code_t>(item.cast<std::uint32_t>()));
    else
      p.c.push_back(f.parse(item.cast<std::string>()));
  }
  return poly_trim(p);
}

py::dict complexity_dict(const ComplexityReport& r) {
  py::dict d;
  d["delta_hat"] = r.delta_hat;
  d["basic"] = r.basic;
  d["minor_degrees"] = r.minor_degrees;
  d["degree_sum"] = r.degree_sum;
  return d;
}

py::list mat_rows(const Mat& m) {
  py::list rows;
  for (int i = 0; i < m.rows; ++i) {
    py::list row;
    for (int j = 0; j < m.cols; ++j) row.append(m.field->format(m.at(i, j)));
    rows.append(std::move(row));
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_srkit, m) {
  m.doc() = "superregular Toeplitz matrices and MDP convolutional code data over finite fields";

  py::register_exception<Error>(m, "SrkitError");

  py::class_<PyField>(m, "Field")
      .def_static(
          "create",
          [](std::uint32_t p, std::uint32_t e, const std::vector<std::uint32_t>& modulus) {
            return PyField{modulus.empty() ? Field::create(p, e) : Field::create(p, e, modulus)};
          },
          py::arg("p"), py::arg("e") = 1, py::arg("modulus") = std::vector<std::uint32_t>{})
      .def_static("of_order", [](std::uint32_t q) { return PyField{field_for_order(q)}; },
                  py::arg("q"))
      .def_property_readonly("p", [](const PyField& f) { return f.ptr->p(); })
      .def_property_readonly("e", [](const PyField& f) { return f.ptr->e(); })
      .def_property_readonly("q", [](const PyField& f) { return f.ptr->q(); })
      .def_property_readonly("modulus", [](const PyField& f) { return f.ptr->modulus(); })
      .def("add", [](const PyField& f, code_t a, code_t b) { return f.ptr->add(a, b); })
      .def("sub", [](const PyField& f, code_t a, code_t b) { return f.ptr->sub(a, b); })
      .def("neg", [](const PyField& f, code_t a) { return f.ptr->neg(a); })
      .def("mul", [](const PyField& f, code_t a, code_t b) { return f.ptr->mul(a, b); })
      .def("div", [](const PyField& f, code_t a, code_t b) { return f.ptr->div(a, b); })
      .def("inv", [](const PyField& f, code_t a) { return f.ptr->inv(a); })
      .def("pow", [](const PyField& f, code_t a, long long n) { return f.ptr->pow(a, n); })
      .def("frobenius",
           [](const PyField& f, code_t a, std::uint32_t i) { return f.ptr->frobenius(a, i); })
      .def("format", [](const PyField& f, code_t a) { return f.ptr->format(a); })
      .def("parse", [](const PyField& f, const std::string& s) { return f.ptr->parse(s); })
      .def("header", [](const PyField& f) { return f.ptr->header(); })
      .def("__repr__", [](const PyField& f) { return "<" + f.ptr->header() + ">"; });

  py::class_<Toeplitz>(m, "Toeplitz")
      .def(py::init([](const PyField& f, const py::sequence& col) {
             return Toeplitz(f.ptr, parse_col(*f.ptr, col));
           }),
           py::arg("field"), py::arg("col"))
      .def_property_readonly("field", [](const Toeplitz& t) { return PyField{t.field}; })
      .def_property_readonly("dim", &Toeplitz::dim)
      .def_property_readonly("gamma", &Toeplitz::gamma)
      .def_property_readonly("col", [](const Toeplitz& t) { return t.col; })
      .def_property_readonly("col_formatted", &formatted_col)
      .def("to_text", [](const Toeplitz& t) { return to_text(t); })
      .def("__eq__", [](const Toeplitz& a, const Toeplitz& b) { return a == b; })
      .def("__repr__", [](const Toeplitz& t) {
        std::string s = "Toeplitz([";
        for (std::size_t i = 0; i < t.col.size(); ++i)
          s += (i ? ", " : "") + t.field->format(t.col[i]);
        return s + "] over GF(" + std::to_string(t.field->q()) + "))";
      });

  m.def("toeplitz_from_text", [](const std::string& text) {
    std::istringstream in(text);
    return read_toeplitz(in);
  });

  m.def("is_superregular", [](const Toeplitz& t) {
    const SrCheck r = is_superregular(t);
    py::dict d;
    d["superregular"] = r.superregular;
    if (r.witness) {
      py::dict w;
      w["rows"] = r.witness->rows;
      w["cols"] = r.witness->cols;
      d["witness"] = w;
    } else {
      d["witness"] = py::none();
    }
    return d;
  });

  m.def("act_inverse", &act_inverse);
  m.def("act_scale", &act_scale, py::arg("alpha"), py::arg("a"));
  m.def("act_frobenius", &act_frobenius, py::arg("i"), py::arg("a"));
  m.def("act_global_scale", &act_global_scale, py::arg("c"), py::arg("a"));

  m.def(
      "orbit",
      [](const Toeplitz& t, const std::vector<std::string>& generators) {
        std::vector<ActionKind> kinds;
        for (const std::string& g : generators) {
          if (g == "inverse")
            kinds.push_back(ActionKind::inverse);
          else if (g == "scale")
            kinds.push_back(ActionKind::scale);
          else if (g == "frobenius")
            kinds.push_back(ActionKind::frobenius);
          else if (g == "global-scale")
            kinds.push_back(ActionKind::global_scale);
          else
            fail(errc::usage, "unknown generator " + g);
        }
        py::list out;
        for (const OrbitElement& e : orbit(t, kinds)) {
          py::dict item;
          item["word"] = e.word;
          item["matrix"] = e.matrix;
          out.append(std::move(item));
        }
        return out;
      },
      py::arg("matrix"),
      py::arg("generators") = std::vector<std::string>{"inverse", "scale", "frobenius"});

  m.def(
      "canonical_form",
      [](const Toeplitz& t, const std::vector<std::string>& generators) {
        std::vector<ActionKind> kinds;
        for (const std::string& g : generators) {
          if (g == "inverse")
            kinds.push_back(ActionKind::inverse);
          else if (g == "scale")
            kinds.push_back(ActionKind::scale);
          else if (g == "frobenius")
            kinds.push_back(ActionKind::frobenius);
          else if (g == "global-scale")
            kinds.push_back(ActionKind::global_scale);
          else
            fail(errc::usage, "unknown generator " + g);
        }
        return canonical_form(t, kinds);
      },
      py::arg("matrix"),
      py::arg("generators") = std::vector<std::string>{"inverse", "scale", "frobenius"});

  m.def(
      "find_superregular",
      [](std::uint32_t q, int gamma, const std::string& normalize, double budget, int threads) {
        SearchConfig cfg;
        cfg.field = field_for_order(q);
        cfg.gamma = gamma;
        cfg.norm = norm_from_name(normalize);
        cfg.budget_seconds = budget;
        cfg.threads = threads;
        const FindResult r = find_superregular(cfg);
        py::dict d;
        d["outcome"] = outcome_name(r.outcome);
        d["found"] = r.found;
        d["witness"] = r.witness ? py::cast(*r.witness) : py::object(py::none());
        d["stats"] = stats_dict(r.stats);
        return d;
      },
      py::arg("q"), py::arg("gamma"), py::arg("normalize") = "none", py::arg("budget") = 60.0,
      py::arg("threads") = 1);

  m.def(
      "count_superregular",
      [](std::uint32_t q, int gamma, double budget, int threads) {
        SearchConfig cfg;
        cfg.field = field_for_order(q);
        cfg.gamma = gamma;
        cfg.budget_seconds = budget;
        cfg.threads = threads;
        const CountResult r = count_superregular(cfg);
        py::dict d;
        d["outcome"] = outcome_name(r.outcome);
        d["count"] = r.count;
        d["stats"] = stats_dict(r.stats);
        return d;
      },
      py::arg("q"), py::arg("gamma"), py::arg("budget") = 60.0, py::arg("threads") = 1);

  m.def(
      "enumerate_superregular",
      [](std::uint32_t q, int gamma) {
        SearchConfig cfg;
        cfg.field = field_for_order(q);
        cfg.gamma = gamma;
        py::list out;
        enumerate_superregular(cfg, [&](const Toeplitz& t) {
          out.append(t);
          return true;
        });
        return out;
      },
      py::arg("q"), py::arg("gamma"));

  m.def(
      "min_field_size",
      [](int dimension, const std::string& family, std::uint32_t cap, double budget, int threads) {
        const MinFieldResult r =
            min_field_size(dimension, family_from_name(family), cap, budget, threads);
        py::dict d;
        d["outcome"] = outcome_name(r.outcome);
        d["dimension"] = r.dimension;
        d["q"] = r.q ? py::cast(*r.q) : py::object(py::none());
        d["witness"] = r.witness ? py::cast(*r.witness) : py::object(py::none());
        d["ruled_out"] = r.ruled_out;
        d["stats"] = stats_dict(r.stats);
        return d;
      },
      py::arg("dimension"), py::arg("family") = "primes", py::arg("cap") = 127,
      py::arg("budget") = 60.0, py::arg("threads") = 1);

  m.def(
      "test_conjecture",
      [](int dimension, double budget, int threads) {
        const ConjectureResult r = test_conjecture(dimension, budget, threads);
        py::dict d;
        d["status"] = r.status == ConjectureResult::Status::witness_found ? "witness-found"
                      : r.status == ConjectureResult::Status::refuted_by_exhaustion
                          ? "refuted-by-exhaustion"
                          : "budget-exceeded";
        d["q"] = r.q;
        d["witness"] = r.witness ? py::cast(*r.witness) : py::object(py::none());
        d["stats"] = stats_dict(r.stats);
        return d;
      },
      py::arg("dimension"), py::arg("budget") = 60.0, py::arg("threads") = 1);

  m.def("field_size_bound", [](int gamma) {
    const BoundReport r = field_size_bound(gamma);
    py::dict d;
    d["gamma"] = r.gamma;
    d["catalan"] = to_pyint(r.catalan_prev);
    d["walks"] = to_pyint(r.walks);
    d["L"] = to_pyint(r.L_count);
    d["Lprime"] = to_pyint(r.Lprime_count);
    d["N"] = to_pyint(r.N);
    d["bound"] = to_pyint(r.bound);
    return d;
  });

  m.def("catalan", [](unsigned n) { return to_pyint(catalan(n)); });
  m.def("binom", [](unsigned n, unsigned k) { return to_pyint(big_binom(n, k)); });
  m.def("product_identity_check",
        [](unsigned gamma) { return product_identity_check(gamma).equal; });

  py::class_<PolyMatrix>(m, "PolyMatrix")
      .def(py::init([](const PyField& f, int rows, int cols, const py::dict& entries) {
             PolyMatrix p(f.ptr, rows, cols);
             for (const auto& kv : entries) {
               const auto key = kv.first.cast<std::pair<int, int>>();
               if (key.first < 1 || key.first > rows || key.second < 1 || key.second > cols)
                 fail(errc::index_out_of_range,
                      "entry (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                          ") outside a " + std::to_string(rows) + "x" + std::to_string(cols) +
                          " matrix");
               p.at(key.first - 1, key.second - 1) =
                   parse_poly(*f.ptr, kv.second.cast<py::sequence>());
             }
             return p;
           }),
           py::arg("field"), py::arg("rows"), py::arg("cols"), py::arg("entries") = py::dict())
      .def_property_readonly("rows", [](const PolyMatrix& p) { return p.rows; })
      .def_property_readonly("cols", [](const PolyMatrix& p) { return p.cols; })
      .def("entry",
           [](const PolyMatrix& p, int i, int j) {
             if (i < 1 || i > p.rows || j < 1 || j > p.cols)
               fail(errc::index_out_of_range,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside a " +
                        std::to_string(p.rows) + "x" + std::to_string(p.cols) + " matrix");
             py::list out;
             for (code_t c : p.at(i - 1, j - 1).c) out.append(p.field->format(c));
             return out;
           })
      .def("to_text", [](const PolyMatrix& p) { return to_text(p); });

  m.def("poly_matrix_from_text", [](const std::string& text) {
    std::istringstream in(text);
    return read_poly_matrix(in);
  });

  m.def(
      "extract_mdp",
      [](const Toeplitz& t, int n, int k, int delta, py::object j_arg) {
        const CodeParams params{n, k, delta};
        validate_params(params);
        const int j = j_arg.is_none() ? params.L() : j_arg.cast<int>();
        const MdpExtraction ex = extract_mdp(t, params, j);
        py::dict d;
        d["rows"] = ex.rows1;
        d["cols"] = ex.cols1;
        d["assembled"] = mat_rows(ex.assembled);
        d["assembled_text"] = to_text(ex.assembled);
        return d;
      },
      py::arg("matrix"), py::arg("n"), py::arg("k"), py::arg("delta"), py::arg("j") = py::none());

  m.def("column_distance", &column_distance, py::arg("g"), py::arg("j"),
        py::arg("enum_budget") = std::uint64_t(1) << 24);

  m.def("coldist_bound", [](int n, int k, int j) { return coldist_bound({n, k, 0}, j); });

  m.def(
      "mdp_certify",
      [](const PolyMatrix& g, int n, int k, int delta, std::uint64_t enum_budget) {
        const CertifyReport r = mdp_certify(g, {n, k, delta}, enum_budget);
        py::dict d;
        d["L"] = r.L;
        d["profile"] = r.profile;
        d["bounds"] = r.bounds;
        d["methods"] = r.profile_method;
        d["is_mdp"] = r.is_mdp;
        d["monotone"] = r.monotone;
        d["within_bounds"] = r.within_bounds;
        d["complexity"] = complexity_dict(r.complexity);
        d["delta_matches"] = r.delta_matches;
        return d;
      },
      py::arg("g"), py::arg("n"), py::arg("k"), py::arg("delta"),
      py::arg("enum_budget") = std::uint64_t(1) << 24);

  m.def("pascal_mod_p", &pascal_mod_p, py::arg("gamma"), py::arg("p"));

  m.def(
      "pascal_min_prime",
      [](int gamma, std::uint32_t cap) {
        const PascalMinPrime r = pascal_min_prime(gamma, cap);
        py::dict d;
        d["outcome"] = outcome_name(r.outcome);
        d["prime"] = r.prime ? py::cast(*r.prime) : py::object(py::none());
        d["failures"] = r.failures;
        d["witness"] = r.witness ? py::cast(*r.witness) : py::object(py::none());
        return d;
      },
      py::arg("gamma"), py::arg("cap") = 10000);

  m.attr("__version__") = "0.1.0";
}
