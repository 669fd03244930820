#pragma once

#include <string_view>
#include <vector>

namespace homlp::appendix {

// Preimage tables of the worked examples, rows as typeset (header row omitted).
struct ExampleTable {
  const char* name;
  int p, q, k;
  std::vector<int> s;
  std::string_view rows;
};

inline const std::vector<ExampleTable>& examples() {
  static const std::vector<ExampleTable> all = {
      {"ex_k22_9", 22, 9, 2, {14,1,11,20,7,17,4,13},
       R"tbl(v_0 & v_9 & v_{18} & v_5 & \\
& v_{1} & v_{14} &  \\
& & v_{10} & v_{19} & v_6 \\
v_{15} & v_{2} & & & \\
v_{11} & & & & \\
& & & v_7 & v_{20} \\
& & & & v_{16} \\
v_3 & v_{12} & v_{21} & v_8 & \\
v_{13} & v_4 & v_{17} & &
)tbl"},
      {"ex_k33_14", 33, 14, 3, {29,10,24,5,19,0},
       R"tbl(v_0 & v_{14} & v_{28} & v_9 & v_{23} & v_4 & v_{18} \\
v_{32} & v_{13} & v_{27} & v_8 & v_{22} & v_3 & v_{17} \\
v_{31} & v_{12} & v_{26} & v_7 & v_{21} & v_2 & v_{16} \\
v_{30} & v_{11} & v_{25} & v_6 & v_{20} & v_1 & v_{15} \\
& v_{19} & v_5 & v_{24} & v_{10} & v_{29} &
)tbl"},
      {"ex_k31_13_end", 31, 13, 3, {10,23,5,18,0},
       R"tbl(v_0 & v_{13} & v_{26} & v_8 & v_{21} & v_3 & v_{16} \\
v_{29} & v_{11} & v_{24} & v_6 & v_{19} & v_1 & v_{14} \\
v_{27} & v_{9} & v_{22} & v_4 & v_{17} & v_{30} & v_{12} \\
v_{25} & v_{7} & v_{20} & v_2 & v_{15} & v_{28} &  \\
& v_{18} & v_5 & v_{23} & v_{10} & &
)tbl"},
      {"ex_k31_13_middle", 31, 13, 3, {14,27,9,22,4,17,28,10,23,5,18,0},
       R"tbl(v_0 & v_{13} & v_{26} & v_8 & v_{21} & v_3 & v_{16} \\
v_{29} & v_{11} & v_{24} & v_6 & v_{19} & v_1 &  \\
v_4 & v_{22} & v_{9} & v_{27} & v_{14} & & \\
& & & & & & v_{17} \\
v_{30} & v_{12} & v_{25} & v_{7} & v_{20} & v_2 & v_{15}  \\
& v_{18} & v_5 & v_{23} & v_{10} & v_{28} &
)tbl"},
  };
  return all;
}

}  // namespace homlp::appendix
