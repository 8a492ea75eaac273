#include "clifford/serialize.hpp"

#include "clifford/error.hpp"

namespace clifford {

using nlohmann::json;

json to_json(const Multivector &a) {
  json record;
  Signature sig = a.signature();
  if (sig.is_euclidean())
    record["signature"] = "euclidean";
  else
    record["signature"] = json{{"p", *sig.p()}};
  record["mode"] = a.mode() == Mode::rational ? "rational" : "float";
  json terms = json::array();
  for (const auto &[b, c] : a.terms()) {
    json term;
    term["indices"] = b.indices();
    if (c.is_rational()) {
      const Rational &q = c.rational();
      term["coeff"] = q.get_num().get_str() + "/" + q.get_den().get_str();
    } else {
      term["coeff"] = c.to_double();
    }
    terms.push_back(std::move(term));
  }
  record["terms"] = std::move(terms);
  return record;
}

Multivector from_json(const json &record) {
  try {
    Signature sig;
    const json &s = record.at("signature");
    if (s.is_string()) {
      if (s.get<std::string>() != "euclidean")
        throw Error(ErrorKind::DomainError, "unknown signature '" + s.get<std::string>() + "'");
    } else {
      sig = Signature::threshold(s.at("p").get<unsigned>());
    }
    std::string mode = record.at("mode").get<std::string>();
    if (mode != "rational" && mode != "float")
      throw Error(ErrorKind::DomainError, "unknown mode '" + mode + "'");
    Multivector out(sig, mode == "float" ? Mode::floating : Mode::rational);
    for (const json &term : record.at("terms")) {
      auto indices = term.at("indices").get<std::vector<unsigned>>();
      const json &c = term.at("coeff");
      Scalar value = c.is_string() ? Scalar::parse(c.get<std::string>()) : Scalar(c.get<double>());
      out.accumulate(Blade::from_indices(indices), value.in_mode(out.mode()));
    }
    return out;
  } catch (const json::exception &e) {
    throw Error(ErrorKind::DomainError, std::string("malformed multivector record: ") + e.what());
  }
}

} // namespace clifford
