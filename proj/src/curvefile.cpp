#include "kummerlab/curvefile.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace kummerlab {

using nlohmann::json;

namespace {

mpz_class parse_integer(const json& v, const std::string& what) {
  if (v.is_number_integer()) return mpz_class(std::to_string(v.get<long long>()));
  if (v.is_number_unsigned()) return mpz_class(std::to_string(v.get<unsigned long long>()));
  if (v.is_number_float()) throw InputError(what + ": coefficient is not integral (" + v.dump() + ")");
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.find('/') != std::string::npos || s.find('.') != std::string::npos)
      throw InputError(what + ": coefficient is not integral (" + s + ")");
    mpz_class z;
    if (s.empty() || z.set_str(s, 10) != 0) throw InputError(what + ": '" + s + "' is not an integer");
    return z;
  }
  throw InputError(what + ": expected an integer, got " + v.dump());
}

long field_long(const json& f, const char* key) {
  if (!f.contains(key)) throw InputError(std::string("field: missing '") + key + "'");
  const json& v = f.at(key);
  if (!v.is_number_integer()) throw InputError(std::string("field: '") + key + "' must be an integer");
  return v.get<long>();
}

}  // namespace

NumberRing parse_field(const json& f) {
  if (!f.is_object() || !f.contains("kind") || !f.at("kind").is_string())
    throw InputError("field: expected an object with a string 'kind'");
  const std::string kind = f.at("kind").get<std::string>();
  try {
    if (kind == "rational") return NumberRing::rational();
    if (kind == "quadratic") return NumberRing::quadratic(field_long(f, "m"));
    if (kind == "tower") return NumberRing::tower(f.contains("a") ? field_long(f, "a") : 2);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("field: ") + e.what());
  }
  throw InputError("field: unknown kind '" + kind + "' (expected rational, quadratic or tower)");
}

Element parse_element(const NumberRing& R, const json& v, const std::string& what) {
  switch (R.kind()) {
    case NumberRing::Kind::Rational:
      if (v.is_array()) throw InputError(what + ": rational ring takes a bare integer");
      return Element(R, parse_integer(v, what));
    case NumberRing::Kind::Quadratic:
      if (!v.is_array() || v.size() != 2) throw InputError(what + ": expected a pair [x, y]");
      return Element(R, {parse_integer(v[0], what), parse_integer(v[1], what)});
    case NumberRing::Kind::Tower: {
      if (!v.is_array() || v.size() != 3) throw InputError(what + ": expected three pairs [[x0,y0],[x1,y1],[x2,y2]]");
      std::vector<mpz_class> c;
      for (const auto& pair : v) {
        if (!pair.is_array() || pair.size() != 2) throw InputError(what + ": expected three pairs");
        c.push_back(parse_integer(pair[0], what));
        c.push_back(parse_integer(pair[1], what));
      }
      return Element(R, c);
    }
  }
  throw std::logic_error("unknown ring kind");
}

json element_to_json(const Element& x) {
  auto num = [&](const mpz_class& c) -> json {
    if (x.denominator() != 1) return mpq_class(c, x.denominator()).get_str();
    if (c.fits_slong_p()) return c.get_si();
    return c.get_str();
  };
  const auto& c = x.coeffs();
  switch (x.ring().kind()) {
    case NumberRing::Kind::Rational: return num(c[0]);
    case NumberRing::Kind::Quadratic: return json::array({num(c[0]), num(c[1])});
    case NumberRing::Kind::Tower:
      return json::array({json::array({num(c[0]), num(c[1])}), json::array({num(c[2]), num(c[3])}),
                          json::array({num(c[4]), num(c[5])})});
  }
  return nullptr;
}

json field_to_json(const NumberRing& R) {
  switch (R.kind()) {
    case NumberRing::Kind::Rational: return {{"kind", "rational"}};
    case NumberRing::Kind::Quadratic: return {{"kind", "quadratic"}, {"m", R.m()}};
    case NumberRing::Kind::Tower: return {{"kind", "tower"}, {"a", R.tower_a()}};
  }
  return nullptr;
}

CurveRecord parse_curve_json(const json& doc, const std::string& fallback_id) {
  if (!doc.is_object()) throw InputError("curve file: top level must be an object");
  if (!doc.contains("field")) throw InputError("curve file: missing 'field'");
  if (!doc.contains("curve") || !doc.at("curve").is_object()) throw InputError("curve file: missing 'curve' object");
  CurveRecord rec;
  rec.id = doc.contains("id") && doc.at("id").is_string() ? doc.at("id").get<std::string>() : fallback_id;
  if (doc.contains("source") && doc.at("source").is_string()) rec.source = doc.at("source").get<std::string>();
  rec.ring = parse_field(doc.at("field"));
  const json& c = doc.at("curve");
  static const char* names[5] = {"a1", "a2", "a3", "a4", "a6"};
  for (const auto& [key, value] : c.items()) {
    (void)value;
    if (std::find(std::begin(names), std::end(names), key) == std::end(names))
      throw InputError("curve: unknown coefficient '" + key + "'");
  }
  std::array<Element, 5> a;
  for (int i = 0; i < 5; ++i)
    a[i] = c.contains(names[i]) ? parse_element(rec.ring, c.at(names[i]), names[i]) : Element(rec.ring);
  try {
    rec.model = WeierstrassModel(rec.ring, a[0], a[1], a[2], a[3], a[4]);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("curve: ") + e.what());
  }
  if (doc.contains("expected")) rec.expected = doc.at("expected");
  return rec;
}

CurveRecord parse_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
  return parse_curve_json(doc, std::filesystem::path(path).stem().string());
}

}  // namespace kummerlab
