// Usage: json_roundtrip <file> <class> [<file> <class> ...]
// Reloads triple documents, re-serializes them, and checks the class survives.

#include "spectral/json_io.hpp"

#include <fstream>
#include <iostream>

using namespace spectral;

int main(int argc, char** argv) {
  if (argc < 3 || argc % 2 == 0) {
    std::cerr << "usage: json_roundtrip <file> <class> ...\n";
    return 2;
  }
  int failures = 0;
  for (int a = 1; a + 1 < argc; a += 2) {
    std::ifstream in(argv[a]);
    const Json doc = Json::parse(in);
    const RealSpectralTriple t = triple_from_json(doc);
    const bool lossless = triple_to_json(t) == doc;
    const KOClass got = validate(t).cls;
    const bool same = got == KOClass::parse(argv[a + 1]);
    std::cout << argv[a] << ": " << (lossless ? "lossless" : "LOSSY") << ", class " << got << '\n';
    failures += !(lossless && same);
  }
  return failures == 0 ? 0 : 1;
}
