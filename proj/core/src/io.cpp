#include "liedual/io.hpp"

#include <sstream>
#include <stdexcept>

namespace liedual::io {

namespace {

std::int64_t parse_exponent(const std::string& s) {
  std::size_t pos = 0;
  long long e = 0;
  try {
    e = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad exponent key: " + s);
  }
  if (pos != s.size()) throw std::invalid_argument("bad exponent key: " + s);
  return e;
}

std::string latex_scalar(const Scalar& s) {
  const BigInt num = numerator(s);
  const BigInt den = denominator(s);
  if (den == 1) return num.str();
  std::string sign = num < 0 ? "-" : "";
  const BigInt abs_num = num < 0 ? BigInt(-num) : num;
  return sign + "\\tfrac{" + abs_num.str() + "}{" + den.str() + "}";
}

}  // namespace

json element_to_json(const LieElement& a) {
  json coeffs = json::object();
  for (const auto& [e, c] : a.body.terms()) {
    coeffs[std::to_string(e)] = scalar_str(c);
  }
  return json{{"domain", domain_name(a.domain())},
              {"coeffs", coeffs},
              {"central", scalar_str(a.central)}};
}

LieElement element_from_json(const json& j) {
  const Domain domain = domain_from_name(j.at("domain").get<std::string>());
  LieElement out(domain);
  for (const auto& [key, val] : j.at("coeffs").items()) {
    out.body.add_term(parse_exponent(key), parse_scalar(val.get<std::string>()));
  }
  if (j.contains("central")) {
    out.central = parse_scalar(j.at("central").get<std::string>());
  }
  return out;
}

namespace {

template <typename Tensor, typename KeyToLabels>
json tensor_to_json_impl(const Tensor& t, KeyToLabels&& labels_of) {
  json terms = json::array();
  for (const auto& [key, c] : t.terms()) {
    json labels = json::array();
    for (const auto& l : labels_of(key)) labels.push_back(label_str(l));
    terms.push_back(json{{"labels", labels}, {"coeff", scalar_str(c)}});
  }
  return json{{"kind", kind_name(t.kind())}, {"terms", terms}};
}

}  // namespace

json tensor_to_json(const Tensor2& t) {
  return tensor_to_json_impl(t, [](const Tensor2::Key& k) {
    return std::vector<BasisLabel>{k.first, k.second};
  });
}

json tensor_to_json(const Tensor3& t) {
  return tensor_to_json_impl(t, [](const Tensor3::Key& k) {
    return std::vector<BasisLabel>{k[0], k[1], k[2]};
  });
}

Tensor2 tensor2_from_json(const json& j) {
  Tensor2 out(kind_from_name(j.at("kind").get<std::string>()));
  for (const auto& term : j.at("terms")) {
    const auto& labels = term.at("labels");
    if (labels.size() != 2) throw std::invalid_argument("tensor2 term needs 2 labels");
    out.add_term(label_from_str(labels[0].get<std::string>()),
                 label_from_str(labels[1].get<std::string>()),
                 parse_scalar(term.at("coeff").get<std::string>()));
  }
  return out;
}

Tensor3 tensor3_from_json(const json& j) {
  Tensor3 out(kind_from_name(j.at("kind").get<std::string>()));
  for (const auto& term : j.at("terms")) {
    const auto& labels = term.at("labels");
    if (labels.size() != 3) throw std::invalid_argument("tensor3 term needs 3 labels");
    out.add_term(label_from_str(labels[0].get<std::string>()),
                 label_from_str(labels[1].get<std::string>()),
                 label_from_str(labels[2].get<std::string>()),
                 parse_scalar(term.at("coeff").get<std::string>()));
  }
  return out;
}

json dual_to_json(const DualElement& f) {
  json rep;
  if (f.is_finite()) {
    json coeffs = json::object();
    for (const auto& [e, c] : f.finite_terms()) {
      coeffs[std::to_string(e)] = scalar_str(c);
    }
    rep = json{{"type", "finite"}, {"coeffs", coeffs}};
  } else {
    const auto& r = f.recursive_rep();
    json h = json::array(), seeds = json::array();
    for (const auto& c : r.h) h.push_back(scalar_str(c));
    for (const auto& c : r.seeds) seeds.push_back(scalar_str(c));
    rep = json{{"type", "recursive"},
               {"order", r.order},
               {"h", h},
               {"anchor", r.anchor},
               {"seeds", seeds}};
  }
  return json{{"domain", domain_name(f.domain())}, {"rep", rep}};
}

DualElement dual_from_json(const json& j) {
  const Domain domain = domain_from_name(j.at("domain").get<std::string>());
  const json& rep = j.at("rep");
  const std::string type = rep.at("type").get<std::string>();
  if (type == "finite") {
    std::map<std::int64_t, Scalar> coeffs;
    for (const auto& [key, val] : rep.at("coeffs").items()) {
      coeffs.emplace(parse_exponent(key), parse_scalar(val.get<std::string>()));
    }
    return DualElement::finite(domain, std::move(coeffs));
  }
  if (type != "recursive") throw std::invalid_argument("unknown dual rep: " + type);
  DualElement::Recursive r;
  r.order = rep.at("order").get<int>();
  r.anchor = rep.value("anchor", std::int64_t(0));
  for (const auto& v : rep.at("h")) r.h.push_back(parse_scalar(v.get<std::string>()));
  for (const auto& v : rep.at("seeds")) {
    r.seeds.push_back(parse_scalar(v.get<std::string>()));
  }
  return DualElement::recursive(domain, std::move(r));
}

json params_to_json(const BialgebraParams& p) {
  return json{{"n", p.n()}, {"ell", scalar_str(p.ell())}, {"k", scalar_str(p.k())}};
}

BialgebraParams params_from_json(const json& j) {
  return BialgebraParams(j.at("n").get<std::int64_t>(),
                         parse_scalar(j.at("ell").get<std::string>()),
                         parse_scalar(j.at("k").get<std::string>()));
}

json table_to_json(const BracketTable& t) {
  json params;
  if (t.family.is_xy()) {
    params = params_to_json(t.family.params());
    params["family"] = "xy";
  } else {
    params = json{{"family", "witt-n"}, {"n", t.family.n()}};
  }
  json entries = json::array();
  for (const auto& [key, value] : t.entries) {
    entries.push_back(
        json{{"i", key.first}, {"j", key.second}, {"value", dual_to_json(value)}});
  }
  return json{{"kind", kind_name(t.family.kind())},
              {"params", params},
              {"window", json::array({t.window.lo, t.window.hi})},
              {"entries", entries},
              {"provenance", provenance_name(t.provenance)}};
}

BracketTable table_from_json(const json& j) {
  const AlgebraKind kind = kind_from_name(j.at("kind").get<std::string>());
  const json& params = j.at("params");
  const std::string family_name = params.at("family").get<std::string>();
  BracketFamily family =
      family_name == "xy"
          ? BracketFamily::xy(kind, params_from_json(params))
          : BracketFamily::witt(kind, params.at("n").get<std::int64_t>());
  const Window window(j.at("window")[0].get<std::int64_t>(),
                      j.at("window")[1].get<std::int64_t>());
  BracketTable out{family, window, {},
                   provenance_from_name(j.at("provenance").get<std::string>())};
  for (const auto& e : j.at("entries")) {
    out.entries.emplace(
        std::make_pair(e.at("i").get<std::int64_t>(), e.at("j").get<std::int64_t>()),
        dual_from_json(e.at("value")));
  }
  return out;
}

std::string dual_finite_str(const DualElement& f) {
  const auto& terms = f.finite_terms();
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Scalar v = c;
    if (first) {
      if (v < 0) {
        os << "-";
        v = -v;
      }
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    if (v != 1) os << scalar_str(v) << "*";
    os << "e^" << e;
  }
  return os.str();
}

std::string table_to_csv(const BracketTable& t) {
  std::ostringstream os;
  os << "i,j,value\n";
  for (const auto& [key, value] : t.entries) {
    os << key.first << "," << key.second << ",\"" << dual_finite_str(value) << "\"\n";
  }
  return os.str();
}

std::string table_to_latex(const BracketTable& t) {
  std::ostringstream os;
  os << "\\begin{tabular}{rrl}\n";
  os << "$i$ & $j$ & $[\\varepsilon^i, \\varepsilon^j]$ \\\\\n\\hline\n";
  for (const auto& [key, value] : t.entries) {
    os << key.first << " & " << key.second << " & $";
    const auto& terms = value.finite_terms();
    if (terms.empty()) {
      os << "0";
    } else {
      bool first = true;
      for (const auto& [e, c] : terms) {
        Scalar v = c;
        if (first) {
          if (v < 0) {
            os << "-";
            v = -v;
          }
        } else {
          os << (v < 0 ? " - " : " + ");
          if (v < 0) v = -v;
        }
        first = false;
        if (v != 1) os << latex_scalar(v);
        os << "\\varepsilon^{" << e << "}";
      }
    }
    os << "$ \\\\\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

json decompose_result_to_json(const DecomposeResult& r) {
  if (std::holds_alternative<Decomposition>(r)) {
    const auto& d = std::get<Decomposition>(r);
    json comps = json::array();
    for (const auto& c : d.components) {
      json poly = json::array();
      for (const auto& coeff : c.poly.coeffs()) poly.push_back(scalar_str(coeff));
      comps.push_back(json{{"root", scalar_str(c.root)}, {"poly", poly}});
    }
    json finite = json::object();
    for (const auto& [e, c] : d.finite_part) {
      finite[std::to_string(e)] = scalar_str(c);
    }
    return json{{"type", "decomposition"},
                {"components", comps},
                {"finite_part", finite}};
  }
  const auto& rep = std::get<IrreducibleFactorReport>(r);
  json factors = json::array();
  for (const auto& f : rep.factors) {
    json coeffs = json::array();
    for (const auto& c : f.factor.coeffs()) coeffs.push_back(scalar_str(c));
    factors.push_back(json{{"coeffs", coeffs},
                           {"text", f.factor.str()},
                           {"multiplicity", f.multiplicity},
                           {"certified_irreducible", f.certified_irreducible}});
  }
  return json{{"type", "irreducible-factors"}, {"factors", factors}};
}

}  // namespace liedual::io
