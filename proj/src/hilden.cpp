#include "platorder/hilden.hpp"

#include "platorder/errors.hpp"
#include "platorder/plat.hpp"

namespace platorder {

std::string HildenGenerator::name() const {
  const char* base = family == CapTwist      ? "CapTwist"
                     : family == CapThrough  ? "CapThrough"
                                             : "CapInterchange";
  return std::string(base) + "(" + std::to_string(index) + ")";
}

std::vector<HildenGenerator> hilden_generators(int n) {
  if (n < 1) throw usage_error("level n must be at least 1");
  int strands = 2 * n;
  std::vector<HildenGenerator> gens;
  for (int i = 1; i <= n; ++i)
    gens.push_back({HildenGenerator::CapTwist, i, BraidWord(strands, {2 * i - 1})});
  for (int i = 1; i <= n - 1; ++i)
    gens.push_back({HildenGenerator::CapThrough, i,
                    BraidWord(strands, {2 * i, 2 * i - 1, 2 * i - 1, 2 * i})});
  for (int i = 1; i <= n - 1; ++i)
    gens.push_back({HildenGenerator::CapInterchange, i,
                    BraidWord(strands, {2 * i, 2 * i + 1, 2 * i - 1, 2 * i})});
  return gens;
}

std::vector<GeneratorCheck> verify_generators(int n, int max_n) {
  if (n > max_n)
    throw usage_error("generator verification is configured up to n = " +
                      std::to_string(max_n));
  const PlatSignature unlink = plat_signature(BraidWord(2 * n));
  std::vector<GeneratorCheck> checks;
  for (const auto& g : hilden_generators(n)) {
    for (bool inverted : {false, true}) {
      BraidWord w = inverted ? inverse(g.word) : g.word;
      bool ok = plat_signature(w) == unlink;
      checks.push_back({g.name(), inverted, ok});
      if (!ok)
        throw integrity_error("generator " + g.name() +
                              (inverted ? " (inverse)" : "") +
                              " does not fix the unlink signature");
    }
  }
  return checks;
}

}  // namespace platorder
