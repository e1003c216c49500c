#include "cellgeom/reference_data.hpp"

#include <sstream>

#include "cellgeom/numeric.hpp"

namespace cellgeom {

const std::vector<ReferenceEntry>& reference_data() {
  static const std::vector<ReferenceEntry> data = {
      {"hecke.kl_generator", "H_s + v H_id", "Hecke algebra normalization"},
      {"b2.cell", "s,ts,sts", "type B2 cell module example"},
      {"b2.wgraph.descents", "s,t,s", "type B2 cell module example, W-graph"},
      {"b2.bases", "2", "type B2 cell module example"},
      {"b2.nontrivial", "M'_sts = M_sts + M_s", "type B2 cell module example"},
      {"s4.bases.(3,1)", "1", "remark on computer searches, S4 counts"},
      {"s4.bases.(2,1,1)", "2", "remark on computer searches, S4 counts"},
      {"n4.x", "2143", "n = 4 slice example"},
      {"n4.y", "4231", "n = 4 slice example"},
      {"n4.layout", "0,1,0,0/1,0,0,0/a,b,0,1/c,d,1,0", "n = 4 slice example, matrix of N_x"},
      {"n4.equation", "ad-bc", "n = 4 slice example"},
      {"ks.dim", "8", "Kashiwara-Saito singularity"},
      {"gl8.u", "21654387", "GL8 realization"},
      {"gl8.v", "62845173", "GL8 realization"},
      {"gl8.u.parabolic", "1,3,4,5,7", "GL8 realization, parabolic subgroup of u"},
      {"gl8.u.length", "8", "GL8 realization"},
      {"gl8.v.length", "16", "GL8 realization"},
      {"gl8.layout", "J,0,0,0/A1,0,J,0/A2,J,0,0/A0,A3,A4,J", "GL8 realization, block matrix of N_u"},
      {"gl12.x", "438721a965cb", "GL12 realization"},
      {"gl12.y", "4387a2c691b5", "GL12 realization"},
      {"gl12.x.word", "b567895678712345123431", "GL12 realization, reduced word for x"},
      {"gl12.y.word", "56789aba1234567897845671234531", "GL12 realization, reduced word for y"},
      {"gl12.x.length", "22", "GL12 realization"},
      {"gl12.y.length", "30", "GL12 realization"},
      {"gl12.x.P", "1 5 9 b\n2 6 a c\n3 7\n4 8", "GL12 realization, tableaux of x"},
      {"gl12.x.Q", "1 3 7 b\n2 4 8 c\n5 9\n6 a", "GL12 realization, tableaux of x"},
      {"gl12.y.P", "1 5 9 b\n2 6 a c\n3 7\n4 8", "GL12 realization, tableaux of y"},
      {"gl12.y.Q", "1 3 5 7\n2 4 9 b\n6 8\na c", "GL12 realization, tableaux of y"},
      {"gl12.layout", "0,0,J,0,0,0/J,0,0,0,0,0/B1,0,A1,0,J,0/B2,J,0,0,0,0/B3,B5,A2,J,0,0/B4,B6,B7,A3,A4,J",
       "GL12 realization, block matrix of N_x"},
      {"gl13.x.word", "12132156543765438798765ba98c", "GL13 remark"},
      {"gl13.y.word", "121321546543765438798765aba9876cba98", "GL13 remark"},
  };
  return data;
}

const ReferenceEntry& reference_entry(std::string_view key) {
  for (const auto& e : reference_data())
    if (e.key == key) return e;
  throw Error("unknown reference key '" + std::string(key) + "'");
}

const std::string& reference_value(std::string_view key) { return reference_entry(key).value; }

std::vector<std::vector<std::string>> parse_block_layout(const std::string& s) {
  std::vector<std::vector<std::string>> out;
  std::stringstream rows(s);
  std::string row;
  while (std::getline(rows, row, '/')) {
    std::vector<std::string> cells;
    std::stringstream cs(row);
    std::string cell;
    while (std::getline(cs, cell, ',')) cells.push_back(cell);
    if (!out.empty() && cells.size() != out.front().size()) throw Error("ragged block layout");
    out.push_back(std::move(cells));
  }
  return out;
}

}  // namespace cellgeom
