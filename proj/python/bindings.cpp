#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "latrep/birkhoff.hpp"
#include "latrep/fuzzy.hpp"
#include "latrep/io.hpp"
#include "latrep/operator_classes.hpp"
#include "latrep/quotient.hpp"

namespace py = pybind11;
using namespace latrep;

namespace {

std::vector<std::string> mask_names(const Poset& p, Mask m) {
  std::vector<std::string> out;
  for (int i : bits_of(m)) out.push_back(p.name(i));
  return out;
}

Mask names_mask(const Poset& p, const std::vector<std::string>& names) {
  Mask m = 0;
  for (const auto& n : names) m |= bit(p.index_of(n));
  return m;
}

std::vector<std::vector<std::string>> family_names(const UpSetFamily& fam) {
  std::vector<std::vector<std::string>> out;
  for (Mask s : fam.sets) out.push_back(mask_names(fam.carrier, s));
  return out;
}

MonotonicOperator make_operator(const Poset& p,
                                const std::map<std::string, std::vector<std::string>>& assign) {
  std::vector<Mask> values(static_cast<std::size_t>(p.size()), 0);
  if (static_cast<int>(assign.size()) != p.size()) {
    throw error("operator must assign a set to every element");
  }
  for (const auto& [k, v] : assign) values[static_cast<std::size_t>(p.index_of(k))] = names_mask(p, v);
  return MonotonicOperator(p, std::move(values));
}

}  // namespace

PYBIND11_MODULE(latrep, m) {
  m.doc() = "finite lattices as up-set families: representation, embedding, operator classes";

  py::register_exception<error>(m, "Error");

  py::class_<Poset>(m, "Poset")
      .def_static("parse", [](const std::string& text) { return parse_poset_text(text).poset; })
      .def_property_readonly("names", &Poset::names)
      .def("__len__", &Poset::size)
      .def("leq", [](const Poset& p, const std::string& a, const std::string& b) {
        return p.leq(p.index_of(a), p.index_of(b));
      })
      .def("covers",
           [](const Poset& p) {
             std::vector<std::pair<std::string, std::string>> out;
             for (int i = 0; i < p.size(); ++i) {
               for (int j : bits_of(p.covers_up(i))) out.emplace_back(p.name(i), p.name(j));
             }
             return out;
           })
      .def("upsets", [](const Poset& p, int cap) {
             std::vector<std::vector<std::string>> out;
             for (Mask s : all_upsets(p, cap)) out.push_back(mask_names(p, s));
             return out;
           },
           py::arg("cap") = kDefaultElementCap)
      .def("isomorphic", [](const Poset& p, const Poset& q) {
        return poset_isomorphism(p, q).has_value();
      })
      .def("__repr__", [](const Poset& p) {
        return "<Poset of " + std::to_string(p.size()) + " elements>";
      });

  py::class_<Lattice>(m, "Lattice")
      .def_static("parse",
                  [](const std::string& text) { return parse_lattice_text(text).lattice; })
      .def_property_readonly("order", &Lattice::order)
      .def("__len__", &Lattice::size)
      .def_property_readonly("bottom", [](const Lattice& l) { return l.name(l.bottom()); })
      .def_property_readonly("top", [](const Lattice& l) { return l.name(l.top()); })
      .def("meet", [](const Lattice& l, const std::string& a, const std::string& b) {
        return l.name(l.meet(l.order().index_of(a), l.order().index_of(b)));
      })
      .def("join", [](const Lattice& l, const std::string& a, const std::string& b) {
        return l.name(l.join(l.order().index_of(a), l.order().index_of(b)));
      })
      .def("meet_irreducibles",
           [](const Lattice& l) { return mask_names(l.order(), meet_irreducibles(l)); })
      .def("distributive", [](const Lattice& l) { return distributivity(l).holds; })
      .def("__repr__", [](const Lattice& l) {
        return "<Lattice of " + std::to_string(l.size()) + " elements>";
      });

  py::class_<MonotonicOperator>(m, "MonotonicOperator")
      .def(py::init(&make_operator), py::arg("carrier"), py::arg("assign"))
      .def_property_readonly("carrier", &MonotonicOperator::carrier)
      .def("at", [](const MonotonicOperator& g, const std::string& x) {
        return mask_names(g.carrier(), g.at(g.carrier().index_of(x)));
      })
      .def("quotient", [](const MonotonicOperator& g) { return quotient(g).classes; })
      .def("family", [](const MonotonicOperator& g) { return family_names(operator_family(g)); });

  py::class_<FuzzyUpSet>(m, "FuzzyUpSet")
      .def(py::init([](const Poset& domain, const Lattice& codomain,
                       const std::map<std::string, std::string>& values) {
             std::vector<int> v(static_cast<std::size_t>(domain.size()), -1);
             for (const auto& [x, p] : values) {
               v[static_cast<std::size_t>(domain.index_of(x))] = codomain.order().index_of(p);
             }
             for (int i : v) {
               if (i < 0) throw error("every domain element needs a value");
             }
             return FuzzyUpSet(domain, codomain, std::move(v));
           }),
           py::arg("domain"), py::arg("codomain"), py::arg("values"))
      .def("cut", [](const FuzzyUpSet& mu, const std::string& p) {
        return mask_names(mu.domain(), cut(mu, mu.codomain().order().index_of(p)));
      })
      .def("cut_family", [](const FuzzyUpSet& mu) { return family_names(cut_family(mu)); })
      .def("cuts_are_all_upsets",
           [](const FuzzyUpSet& mu) { return cuts_are_all_upsets(mu).holds; })
      .def("image_in_irreducibles",
           [](const FuzzyUpSet& mu) { return image_in_irreducibles(mu); });

  m.def("canonical_fuzzy", [](const Poset& x, const std::vector<std::vector<std::string>>& family) {
    std::vector<Mask> sets;
    sets.reserve(family.size());
    for (const auto& names : family) sets.push_back(names_mask(x, names));
    UpSetFamily fam = UpSetFamily::of(x, std::move(sets));
    FuzzyUpSet mu = canonical_fuzzy_upset(fam);
    py::dict out;
    for (int e = 0; e < x.size(); ++e) {
      out[py::str(x.name(e))] = mask_names(x, fam.sets[static_cast<std::size_t>(mu.value(e))]);
    }
    return out;
  });

  m.def("upset_lattice",
        [](const Poset& x, int cap) { return upset_lattice(x, cap).lattice; },
        py::arg("poset"), py::arg("cap") = kDefaultElementCap);

  m.def("representation", [](const Lattice& l) {
    auto v = upset_representation(l);
    py::dict out;
    out["representable"] = v.representable;
    out["reason"] = v.reason;
    py::dict f;
    for (int p = 0; p < l.size(); ++p) {
      f[py::str(l.name(p))] = mask_names(v.irreducibles, v.map[static_cast<std::size_t>(p)]);
    }
    out["map"] = f;
    return out;
  });

  m.def("are_equivalent", [](const MonotonicOperator& a, const MonotonicOperator& b) {
    return are_equivalent(a, b);
  });

  m.def("decide_embedding", [](const Lattice& l0, const Lattice& host) {
    auto v = decide_embedding(l0, host);
    py::dict out;
    out["embeds"] = v.embeds;
    if (v.witness) {
      py::dict w;
      const auto& g = *v.witness;
      for (int e = 0; e < g.carrier().size(); ++e) {
        w[py::str(g.carrier().name(e))] = mask_names(g.carrier(), g.at(e));
      }
      out["witness"] = w;
    } else {
      out["witness"] = py::none();
    }
    return out;
  });

  m.def("operator_classes", [](const Lattice& l, bool force) {
    auto cl = class_lattice(l, kDefaultFamilyCap, force);
    std::vector<std::vector<std::vector<std::string>>> out;
    for (const auto& fam : cl.families) out.push_back(family_names(fam));
    return out;
  }, py::arg("lattice"), py::arg("force") = false);

  m.def("enumerate_posets", [](int n) { return enumerate_posets(n); });

  m.attr("__version__") = "0.1.0";
}
