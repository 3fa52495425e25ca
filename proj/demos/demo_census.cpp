// Census walkthrough: enumerate every quasiaction of Z2 on S3, count the
// degree-2 cocycles and their classes per fiber, and print the holonomy
// strata.  Exercises the same path as `parityc census --base cyclic:2
// --fiber sym:3 --degree 2`.

#include <iostream>

#include <parityc/census.hpp>
#include <parityc/io.hpp>

int main() {
  using namespace parityc;
  auto G = builtin_group("cyclic:2");
  auto N = builtin_group("sym:3");

  auto report = cocycle_census(G, N, 2, "all");
  std::cout << "base " << G->name << ", fiber " << N->name << ": " << report.quasiactions
            << " quasiactions, " << report.actions << " actions\n";
  for (const auto& fb : report.fibers) {
    std::cout << "  L#" << fb.l_index << (fb.action ? " (action)" : "        ") << "  |C2| = "
              << fb.cochain_space << "  |Z2| = " << fb.z << "  |B2| = " << fb.coboundaries_in_z
              << "  |H2| = " << fb.classes << "  strata:";
    for (const auto& st : fb.strata) {
      std::cout << " {";
      for (std::size_t i = 0; i < st.members.size(); ++i)
        std::cout << (i ? "," : "") << N->labels[st.members[i]];
      std::cout << "}x" << st.count;
    }
    std::cout << "\n";
  }
  std::cout << "total cocycles: " << report.z_total << ", total classes: " << report.class_total
            << "\n";

  // The same counts again through the serialization layer, as TSV.
  std::cout << "\n" << census_to_tsv(report);
  return 0;
}
