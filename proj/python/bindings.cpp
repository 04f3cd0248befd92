#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "audioactive/cosmology.hpp"
#include "audioactive/errors.hpp"
#include "audioactive/io.hpp"
#include "audioactive/spectral.hpp"
#include "audioactive/splitting.hpp"
#include "audioactive/table.hpp"

namespace py = pybind11;
using namespace audioactive;

namespace {

AudioString lit(const std::string& s) {
  AudioString a = AudioString::parse(s);
  if (a.empty()) throw ParseError("empty literal");
  return a;
}

Sex sex_of(const std::string& s) {
  if (s == "female") return Sex::Female;
  if (s == "male") return Sex::Male;
  throw py::value_error("sex must be 'female' or 'male'");
}

PeriodicTable table_for(const std::string& seed) {
  return TableCache(TableCache::default_dir()).load_or_derive(lit(seed));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Look-and-say chemistry: splitting, elements, Conway's constant, Cosmo.";

  // Later registrations are tried first, so the base class goes first.
  auto base = py::register_exception<Error>(m, "AudioactiveError");
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<LongevityCapExceeded>(m, "LongevityCapExceeded", base.ptr());

  m.def("jhc", [](const std::string& s) { return jhc(lit(s)).to_literal(); },
        "One day of look-and-say.");
  m.def("evolve",
        [](const std::string& s, std::size_t days) { return evolve(lit(s), days).to_literal(); },
        py::arg("s"), py::arg("days"));
  m.def("splits_after",
        [](const std::string& l, const std::string& r) { return splits_after(lit(l), lit(r)); });
  m.def("split_atoms", [](const std::string& s) {
    std::vector<std::string> out;
    for (const auto& a : split_atoms(lit(s)).atoms) out.push_back(a.to_literal());
    return out;
  });
  m.def("screen",
        [](const std::string& s, const std::string& sex, int depth) {
          return screen(lit(s), sex_of(sex), depth);
        },
        py::arg("chunk"), py::arg("sex") = "female", py::arg("depth") = kDefaultScreenDepth);

  m.def("table_json", [](const std::string& seed) { return table_to_json(table_for(seed)); },
        py::arg("seed") = "1");
  m.def("longevity",
        [](const std::string& s, int cap_days, const std::string& seed) {
          return longevity(lit(s), table_for(seed), cap_days).days;
        },
        py::arg("s"), py::arg("cap_days") = kDefaultCapDays, py::arg("seed") = "1");
  m.def("conway_constant",
        [](const std::string& seed) {
          const SpectralResult r = dominant_eigenvalue(decay_matrix(table_for(seed)));
          return py::make_tuple(r.lambda, r.residual);
        },
        py::arg("seed") = "1", "(lambda, residual) from the decay matrix.");
  m.def("abundances",
        [](const std::string& seed) {
          const PeriodicTable t = table_for(seed);
          const SpectralResult r = dominant_eigenvalue(decay_matrix(t));
          std::vector<std::tuple<int, std::string, double>> out;
          for (std::size_t i = 0; i < t.size(); ++i) {
            out.emplace_back(t.elements()[i].id, t.elements()[i].string.to_literal(),
                             r.abundance[i]);
          }
          return out;
        },
        py::arg("seed") = "1");
  m.def("char_poly",
        [](const std::string& seed) {
          // Coefficients of x^0 .. x^n as Python ints.
          const BigPolynomial p = char_poly(decay_matrix(table_for(seed)));
          py::list out;
          for (const auto& c : p.coefficients()) {
            out.append(py::int_(py::str(c.str())));
          }
          return out;
        },
        py::arg("seed") = "1");
  m.def("cosmo",
        [](int depth, int cap_days, int generation_cap, unsigned threads, const std::string& seed) {
          CosmoOptions opts;
          opts.depth = depth;
          opts.cap_days = cap_days;
          opts.generation_cap = generation_cap;
          opts.threads = threads;
          const PeriodicTable t = table_for(seed);
          ProofCertificate c;
          {
            py::gil_scoped_release release;
            c = cosmo(t, opts);
          }
          return certificate_to_json(c);
        },
        py::arg("depth") = kDefaultScreenDepth, py::arg("cap_days") = kDefaultCapDays,
        py::arg("generation_cap") = kDefaultGenerationCap, py::arg("threads") = 1u,
        py::arg("seed") = "1", "Certificate JSON of the cosmological search.");
}
