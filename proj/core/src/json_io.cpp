#include "coinv/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace coinv {

namespace {

using nlohmann::json;

json parse(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

SimplicialComplex read_complex_json(std::istream& in) {
  const json j = parse(in);
  if (!j.is_object() || !j.contains("facets")) {
    throw std::invalid_argument("complex file must be an object with a 'facets' array");
  }
  std::vector<Face> facets;
  for (const auto& jf : j.at("facets")) {
    Face f;
    for (const auto& v : jf) {
      if (!v.is_number_integer()) throw std::invalid_argument("vertex ids must be integers");
      f.push_back(v.get<int>());
    }
    facets.push_back(std::move(f));
  }
  if (j.contains("labels")) {
    std::vector<int> labels;
    for (const auto& v : j.at("labels")) labels.push_back(v.get<int>());
    return SimplicialComplex::from_labeled_facets(facets, labels);
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return read_complex_json(in);
}

std::string complex_to_json(const SimplicialComplex& cx) {
  json j;
  j["labels"] = cx.labels();
  j["facets"] = cx.facets_labeled();
  return j.dump();
}

void write_complex_json(std::ostream& out, const SimplicialComplex& cx) {
  out << complex_to_json(cx) << "\n";
}

std::string dual_polynomial_to_json(const DualPolynomial& p) {
  json arr = json::array();
  for (const auto& [e, c] : p.terms()) {
    json term;
    term["exps"] = e;
    term["coeff"] = rat_to_string(c);
    arr.push_back(std::move(term));
  }
  return arr.dump();
}

std::vector<DualPolynomial> read_forms_file(const std::string& path, int n_expected) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  const json j = parse(in);
  if (!j.is_object() || !j.contains("n") || !j.contains("forms")) {
    throw std::invalid_argument("forms file must be an object with 'n' and 'forms'");
  }
  const int n = j.at("n").get<int>();
  if (n != n_expected) {
    throw std::invalid_argument("forms are on " + std::to_string(n) +
                                " variables, complex has " + std::to_string(n_expected));
  }
  std::vector<DualPolynomial> out;
  for (const auto& jform : j.at("forms")) {
    DualPolynomial p(n);
    for (const auto& jterm : jform) {
      Exponents e = jterm.at("exps").get<Exponents>();
      p.add_term(e, rat_from_string(jterm.at("coeff").get<std::string>()));
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace coinv
