#include "permgf/tableio.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace permgf {

namespace {
using nlohmann::json;

json coeff_strings(const XPolynomial& p) {
  json arr = json::array();
  for (const Int& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}
}  // namespace

void sort_rows(std::vector<TableRow>& rows) {
  std::sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
    return a.n != b.n ? a.n < b.n : a.r < b.r;
  });
}

std::string rows_to_csv(std::vector<TableRow> rows) {
  sort_rows(rows);
  std::string out = "n,r,count\n";
  for (const TableRow& row : rows) {
    out += std::to_string(row.n);
    out += ',';
    out += std::to_string(row.r);
    out += ',';
    out += row.count.str();
    out += '\n';
  }
  return out;
}

std::string rows_to_json(std::int64_t k, std::vector<TableRow> rows) {
  sort_rows(rows);
  json doc;
  doc["k"] = k;
  json arr = json::array();
  for (const TableRow& row : rows) {
    arr.push_back({{"n", row.n}, {"r", row.r}, {"count", row.count.str()}});
  }
  doc["rows"] = std::move(arr);
  return doc.dump() + "\n";
}

std::string rational_to_csv(const RationalGF& f) {
  std::string out = "part,degree,coeff\n";
  for (std::size_t i = 0; i < f.num.coeffs().size(); ++i) {
    out += "num," + std::to_string(i) + ',' + f.num.coeffs()[i].str() + '\n';
  }
  for (std::size_t i = 0; i < f.den.coeffs().size(); ++i) {
    out += "den," + std::to_string(i) + ',' + f.den.coeffs()[i].str() + '\n';
  }
  return out;
}

std::string rational_to_json(const std::string& family, std::int64_t k,
                             std::int64_t r, const RationalGF& f) {
  json doc;
  doc["family"] = family;
  doc["k"] = k;
  doc["r"] = r;
  doc["num"] = coeff_strings(f.num);
  doc["den"] = coeff_strings(f.den);
  return doc.dump() + "\n";
}

}  // namespace permgf
