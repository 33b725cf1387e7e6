#include "hsca/poly_json.hpp"

#include <stdexcept>

#include <json.hpp>

namespace hsca {

namespace {

using nlohmann::json;

json exponents_to_json(const std::array<std::uint8_t, kMaxDim>& exps, int dim) {
  json arr = json::array();
  for (int j = 0; j < dim; ++j) arr.push_back(static_cast<int>(exps[j]));
  return arr;
}

void exponents_from_json(const json& arr, std::array<std::uint8_t, kMaxDim>& exps, int dim) {
  if (!arr.is_array() || static_cast<int>(arr.size()) != dim) {
    throw std::invalid_argument("poly_from_json: exponent array has wrong length");
  }
  for (int j = 0; j < dim; ++j) {
    const int e = arr[j].get<int>();
    if (e < 0 || e > 255) throw std::invalid_argument("poly_from_json: exponent out of range");
    exps[j] = static_cast<std::uint8_t>(e);
  }
}

}  // namespace

std::string poly_to_json(const CliffPoly& p) {
  json out;
  out["dim"] = p.dim();
  json terms = json::array();
  for (const auto& [mono, coeff] : p.terms()) {
    for (const auto& [blade, scalar] : coeff.terms()) {
      json t;
      t["x"] = exponents_to_json(mono.x, p.dim());
      t["u"] = exponents_to_json(mono.u, p.dim());
      if (mono.degree(Family::V) > 0) t["v"] = exponents_to_json(mono.v, p.dim());
      json indices = json::array();
      for (int j = 0; j < p.dim(); ++j) {
        if (blade & (1u << j)) indices.push_back(j + 1);
      }
      t["blade"] = indices;
      t["a"] = scalar.rational_part().to_string();
      t["b"] = scalar.radical_part().to_string();
      t["r"] = scalar.radicand();
      terms.push_back(std::move(t));
    }
  }
  out["terms"] = std::move(terms);
  return out.dump();
}

CliffPoly poly_from_json(const std::string& text) {
  const json in = json::parse(text);
  const int dim = in.at("dim").get<int>();
  CliffPoly p(dim);
  for (const auto& t : in.at("terms")) {
    Monomial mono;
    exponents_from_json(t.at("x"), mono.x, dim);
    exponents_from_json(t.at("u"), mono.u, dim);
    if (t.contains("v")) exponents_from_json(t.at("v"), mono.v, dim);
    BladeMask blade = 0;
    for (const auto& idx : t.at("blade")) {
      const int j = idx.get<int>();
      if (j < 1 || j > dim) throw std::invalid_argument("poly_from_json: blade index");
      blade |= static_cast<BladeMask>(1u << (j - 1));
    }
    const Rational a = Rational::from_string(t.at("a").get<std::string>());
    const Rational b = Rational::from_string(t.at("b").get<std::string>());
    const auto r = t.at("r").get<std::uint64_t>();
    p.add_term(mono, Multivector(dim, blade, ExactScalar(a, b, r)));
  }
  return p;
}

}  // namespace hsca
