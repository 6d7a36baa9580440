#pragma once

// Serialization: the "cct/1" JSON schema, CSV seed tables and 4OFF files.
//
// Field elements are objects {"a","b","c","d"} of "p/q" strings for
// a + b√2 + c√3 + d√6, rationals are "p/q" strings and floats are decimal
// strings.

#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cct/abstract.hpp"
#include "cct/bigfloat.hpp"
#include "cct/geom.hpp"
#include "cct/symmetric.hpp"

namespace cct {

using json = nlohmann::json;

inline constexpr const char* kSchema = "cct/1";

inline json to_json(const FieldElement& x) {
  return {{"a", x.a().get_str()}, {"b", x.b().get_str()}, {"c", x.c().get_str()}, {"d", x.d().get_str()}};
}

inline json to_json(const Rational& x) { return x.get_str(); }

inline json to_json(const BigFloat& x) { return x.str(); }

inline FieldElement field_from_json(const json& j) {
  try {
    if (j.is_object()) {
      return {parse_rational(j.at("a").get<std::string>()), parse_rational(j.at("b").get<std::string>()),
              parse_rational(j.at("c").get<std::string>()), parse_rational(j.at("d").get<std::string>())};
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Schema, e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::Schema, std::string("bad number: ") + e.what());
  }
  throw Error(ErrorCode::Schema, "field element must be an object");
}

inline BigFloat float_from_json(const json& j, long prec) {
  if (!j.is_string()) throw Error(ErrorCode::Schema, "float coordinate must be a string");
  return BigFloat(j.get<std::string>(), prec);
}

template <class T>
json vec_to_json(const Vec<T>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

// Header shared by every document.
inline json document(const std::string& family, int n, const std::string& backend) {
  return {{"schema", kSchema}, {"family", family}, {"n", n}, {"backend", backend}};
}

template <class T>
json complex_to_json(const SymmetricCCT<T>& t) {
  json seeds = json::array();
  for (const auto& s : t.seeds) seeds.push_back(vec_to_json(s));
  return {{"ambient", ambient_name(t.ambient)}, {"width", t.width}, {"seeds", seeds}};
}

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::Schema, std::string("missing field '") + key + "'");
  return j.at(key);
}

inline Ambient ambient_from_json(const json& j) {
  std::string a = field(j, "ambient").get<std::string>();
  if (a == "S4") return Ambient::S4;
  if (a == "S3eq") return Ambient::S3eq;
  throw Error(ErrorCode::Schema, "unknown ambient '" + a + "'");
}

}  // namespace detail

inline void require_schema(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::Schema, "document is not an object");
  const json& s = detail::field(doc, "schema");
  if (!s.is_string() || s.get<std::string>() != kSchema) throw Error(ErrorCode::Schema, "unsupported schema");
}

// Seeds are re-expanded through build_symmetric, so the symmetry of the
// stored complex is re-checked on load.
inline SymmetricCCT<FieldElement> exact_complex_from_json(const json& doc) {
  try {
    const json& c = detail::field(doc, "complex");
    Ambient amb = detail::ambient_from_json(c);
    int width = detail::field(c, "width").get<int>();
    std::vector<Point> seeds;
    for (const auto& s : detail::field(c, "seeds")) {
      Point p;
      for (const auto& x : s) p.push_back(field_from_json(x));
      seeds.push_back(std::move(p));
    }
    if (static_cast<int>(seeds.size()) != width + 1) throw Error(ErrorCode::Schema, "seed count does not match width");
    return build_symmetric<FieldElement>(seeds, amb);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Schema, e.what());
  }
}

inline SymmetricCCT<BigFloat> float_complex_from_json(const json& doc, long prec) {
  try {
    const json& c = detail::field(doc, "complex");
    Ambient amb = detail::ambient_from_json(c);
    int width = detail::field(c, "width").get<int>();
    std::vector<Vec<BigFloat>> seeds;
    for (const auto& s : detail::field(c, "seeds")) {
      Vec<BigFloat> p;
      for (const auto& x : s) p.push_back(float_from_json(x, prec));
      seeds.push_back(std::move(p));
    }
    if (static_cast<int>(seeds.size()) != width + 1) throw Error(ErrorCode::Schema, "seed count does not match width");
    return build_symmetric<BigFloat>(seeds, amb);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Schema, e.what());
  }
}

// Plain "p/q" for rationals, "(p+q√2)/r" otherwise.
inline std::string table_entry(const FieldElement& x) {
  if (!x.in_q_sqrt2()) throw Error(ErrorCode::Precondition, "table entries must lie in Q(sqrt2)");
  return format_sqrt2(x);
}

inline std::string format_sci(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, v);
  return buf;
}

// One row per layer: kappa_l = r12^(2l) seed_l, the first three coordinates
// and lambda(kappa_l) to five significant digits.
inline std::string csv_table(const SymmetricCCT<FieldElement>& t) {
  std::ostringstream out;
  out << "vertex,first,second,third,lambda\n";
  for (int l = 0; l <= t.width; ++l) {
    Point k = rotate(2 * l, 0, t.seeds.at(l));
    out << "kappa_" << l << ',' << table_entry(k[0]) << ',' << table_entry(k[1]) << ',' << table_entry(k[2]) << ','
        << format_sci(clifford_lambda(k).to_double(), 5) << '\n';
  }
  return out.str();
}

// Float variant with seven decimals and the homogeneous norm.
inline std::string csv_table(const SymmetricCCT<BigFloat>& t) {
  std::ostringstream out;
  out << "vertex,first,second,third,lambda,norm\n";
  auto fixed7 = [](const BigFloat& x) {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.7Rf", x.get());
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  };
  for (int l = 0; l <= t.width; ++l) {
    Vec<BigFloat> k = rotate(2 * l, 0, t.seeds.at(l));
    out << "kappa_" << l << ',' << fixed7(k[0]) << ',' << fixed7(k[1]) << ',' << fixed7(k[2]) << ','
        << format_sci(clifford_lambda(k).to_double(), 5) << ',' << format_sci(sqrt(dot(k, k)).to_double(), 5) << '\n';
  }
  return out.str();
}

// 4OFF: dehomogenized vertices and the quadrilaterals of the complex.
template <class T>
std::string off_file(const SymmetricCCT<T>& t) {
  if (t.ambient != Ambient::S4) throw Error(ErrorCode::Precondition, "OFF export needs a complex in S4");
  AbstractCCT ab = build_abstract(t.width);
  std::ostringstream out;
  out << "4OFF\n" << t.num_vertices() << ' ' << ab.quads.size() << " 0\n";
  out.precision(17);
  for (const auto& v : t.vertices()) {
    double w = v[4].to_double();
    out << v[0].to_double() / w << ' ' << v[1].to_double() / w << ' ' << v[2].to_double() / w << ' '
        << v[3].to_double() / w << '\n';
  }
  for (const auto& q : ab.quads) out << "4 " << q[0] << ' ' << q[1] << ' ' << q[2] << ' ' << q[3] << '\n';
  return out.str();
}

}  // namespace cct
