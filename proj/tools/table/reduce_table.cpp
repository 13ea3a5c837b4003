// Rewrites a knot table so every PD code is a twist-reduced diagram.
#include <iostream>

#include "knotvol/diagram.hpp"
#include "knotvol/flype.hpp"
#include "knotvol/knotbase.hpp"

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: " << argv[0] << " <table.csv> <out.csv>\n";
    return 1;
  }
  try {
    auto load = knotvol::load_table(argv[1]);
    for (const auto& e : load.errors) std::cerr << "line " << e.line << ": " << e.message << "\n";
    int changed = 0;
    for (auto& r : load.records) {
      const auto d = knotvol::parse_pd(r.pd);
      if (knotvol::is_twist_reduced(d)) continue;
      r.pd = knotvol::serialize_pd_compact(knotvol::twist_reduce(d));
      r.provenance += "; flyped to a twist-reduced diagram";
      ++changed;
    }
    knotvol::save_table(argv[2], load.records);
    std::cout << changed << " of " << load.records.size() << " diagrams flyped\n";
    return load.errors.empty() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
