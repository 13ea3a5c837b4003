#pragma once

// Published Jones polynomials V(t), frozen in tests/data/knotinfo_jones.csv.

#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "knotvol/laurent.hpp"

namespace oracle {

/// name -> V(t) stored in Variable::q with q standing for t.
inline std::map<std::string, knotvol::LaurentPolynomial> published_jones(const std::string& path) {
  std::map<std::string, knotvol::LaurentPolynomial> out;
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    std::vector<std::pair<int, mpz_class>> terms;
    std::istringstream pairs(line.substr(comma + 1));
    std::string item;
    while (std::getline(pairs, item, ';')) {
      const auto colon = item.find(':');
      terms.emplace_back(std::stoi(item.substr(0, colon)), mpz_class(item.substr(colon + 1)));
    }
    out.emplace(line.substr(0, comma), knotvol::LaurentPolynomial::from_terms(terms));
  }
  return out;
}

}  // namespace oracle
