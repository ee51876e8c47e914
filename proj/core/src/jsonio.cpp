#include "macsym/jsonio.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace macsym {

using nlohmann::json;

json int_to_json(const Int& v) {
  static const Int kMin = std::numeric_limits<std::int64_t>::min();
  static const Int kMax = std::numeric_limits<std::int64_t>::max();
  if (v >= kMin && v <= kMax) return v.convert_to<std::int64_t>();
  return v.str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer or integer string");
}

void to_json(json& j, const Partition& p) { j = p.parts(); }

void from_json(const json& j, Partition& p) {
  if (!j.is_array()) throw std::invalid_argument("partition must be an array");
  p = Partition(j.get<std::vector<int>>());
}

void to_json(json& j, const PolyQT& p) {
  j = json::array();
  for (const auto& [e, c] : p.terms())
    j.push_back(json::array({int_to_json(c), e.eq, e.et}));
}

void from_json(const json& j, PolyQT& p) {
  p = PolyQT::zero();
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array");
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 3)
      throw std::invalid_argument("polynomial term must be [c,eq,et]");
    p += PolyQT::monomial(int_from_json(term[0]), term[1].get<int>(),
                          term[2].get<int>());
  }
}

void to_json(json& j, const RatQT& r) {
  j = json{{"num", r.num()}, {"den", r.den()}};
}

void from_json(const json& j, RatQT& r) {
  PolyQT num = j.at("num").get<PolyQT>();
  PolyQT den = j.at("den").get<PolyQT>();
  r = RatQT(std::move(num), std::move(den));
}

void to_json(json& j, const FamilyLabel& f) {
  j = json{{"kind", f.kind == FamilyKind::M ? "M" : "L"},
           {"deg", f.degree},
           {"id", f.id}};
}

void from_json(const json& j, FamilyLabel& f) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind != "M" && kind != "L")
    throw std::invalid_argument("family kind must be M or L");
  f.kind = kind == "M" ? FamilyKind::M : FamilyKind::L;
  f.degree = j.at("deg").get<int>();
  f.id = j.at("id").get<std::string>();
  if (f.degree < 1) throw std::invalid_argument("family degree must be >= 1");
}

void to_json(json& j, const SymFunc& f) {
  json terms = json::array();
  for (const auto& [t, c] : f.terms()) {
    json factors = json::array();
    for (const auto& fac : t) {
      json jf{{"family", fac.family},
              {"basis", basis_name(fac.basis.kind)},
              {"partition", fac.part}};
      if (fac.basis.binding != Binding::none)
        jf["binding"] = binding_name(fac.basis.binding);
      factors.push_back(std::move(jf));
    }
    terms.push_back(json{{"coeff", c}, {"factors", std::move(factors)}});
  }
  j = json{{"terms", std::move(terms)}};
}

void from_json(const json& j, SymFunc& f) {
  f = SymFunc::zero();
  for (const auto& term : j.at("terms")) {
    SymFunc::Term t;
    for (const auto& jf : term.at("factors")) {
      Factor fac;
      fac.family = jf.at("family").get<FamilyLabel>();
      fac.basis.kind = parse_basis(jf.at("basis").get<std::string>());
      fac.basis.binding = jf.contains("binding")
                              ? parse_binding(jf.at("binding").get<std::string>())
                              : Binding::none;
      fac.part = jf.at("partition").get<Partition>();
      t.push_back(std::move(fac));
    }
    std::sort(t.begin(), t.end());
    f.add_term(std::move(t), term.at("coeff").get<RatQT>());
  }
}

void to_json(json& j, const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k));
    rows.push_back(std::move(row));
  }
  j = json{{"rows", m.rows()}, {"cols", m.cols()}, {"a", std::move(rows)}};
}

void from_json(const json& j, Matrix& m) {
  const int rows = j.at("rows").get<int>(), cols = j.at("cols").get<int>();
  m = Matrix(rows, cols);
  const auto& a = j.at("a");
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) m.at(i, k) = a.at(i).at(k).get<RatQT>();
}

void to_json(json& j, const MacdonaldBasisTable& t) {
  j = json{{"degree", t.degree},
           {"binding", binding_name(t.binding)},
           {"order", t.order},
           {"P_in_m", t.P_in_m},
           {"m_in_P", t.m_in_P}};
}

void from_json(const json& j, MacdonaldBasisTable& t) {
  t.degree = j.at("degree").get<int>();
  t.binding = parse_binding(j.at("binding").get<std::string>());
  t.order = j.at("order").get<std::vector<Partition>>();
  t.P_in_m = j.at("P_in_m").get<Matrix>();
  t.m_in_P = j.at("m_in_P").get<Matrix>();
}

void to_json(json& j, const GreenTable& t) {
  j = json{{"degree", t.degree}, {"order", t.order}, {"Q", t.Q}};
}

void from_json(const json& j, GreenTable& t) {
  t.degree = j.at("degree").get<int>();
  t.order = j.at("order").get<std::vector<Partition>>();
  t.Q = j.at("Q").get<Matrix>();
}

PartitionFn partition_fn_from_json(const json& j, FamilyKind default_kind) {
  if (!j.is_object())
    throw std::invalid_argument("partition-valued function must be an object");
  PartitionFn fn;
  for (const auto& [id, parts] : j.items()) {
    FamilyLabel fam;
    if (id == "f1") {
      fam = FamilyLabel::f1();
    } else if (id == "triv") {
      fam = FamilyLabel::triv();
    } else {
      int degree = 1;
      const auto colon = id.rfind(':');
      if (colon != std::string::npos) {
        degree = std::stoi(id.substr(colon + 1));
        if (degree < 1) throw std::invalid_argument("family degree: " + id);
      }
      fam = default_kind == FamilyKind::M ? FamilyLabel::M_orbit(degree, id)
                                          : FamilyLabel::L_orbit(degree, id);
    }
    fn.set(fam, parts.get<Partition>());
  }
  return fn;
}

json partition_fn_to_json(const PartitionFn& fn) {
  json j = json::object();
  for (const auto& [fam, part] : fn.assignments()) j[fam.id] = part;
  return j;
}

}  // namespace macsym
