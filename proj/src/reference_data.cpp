#include "quartic/reference_data.hpp"

namespace quartic {

namespace {

RationalPoly ints(std::initializer_list<const char*> coeffs) {
  std::vector<Rat> c;
  for (const char* s : coeffs) c.emplace_back(Int(s));
  return RationalPoly(c);
}

}  // namespace

const std::vector<ExpectedRow>& expected_table() {
  static const std::vector<ExpectedRow> rows = {
      {{1, -1, -6, 1, 1}, 51, {{-1, 0, {}, 0}, {0, 1, {}, 2}, {1, 2, {}, 3}, {-2, 1, {}, 1}}},
      {{1, 2, -6, -2, 1}, 60, {{1, 0, {}, {}}, {0, 1, {}, {}}}},
      {{1, 0, -12, 16, -4}, 96, {{5, 2, 1, {}}, {1, 3, 1, {}}, {1, 1, 1, {}}, {1, 0, 1, {}}}},
      {{1, 8, 6, -4, -2}, 108, {{1, 0, {}, {}}, {-1, 1, {}, {}}}},
      {{1, 1, -15, 18, -4}, 123, {{1, 1, {}, {}}, {1, 0, {}, {}}}},
  };
  return rows;
}

const std::vector<PadeLiterals>& pade_literals() {
  static const std::vector<PadeLiterals> lists = {
      {1, Rat(4), ints({"8", "-5"}), ints({"8", "-3"}), ints({"320", "-320", "81"})},
      {2, Rat(32, 3), ints({"64", "-72", "15"}), ints({"64", "-56", "7"}),
       ints({"86016", "-172032", "114624", "-28608", "2401"})},
      {3, Rat(128), ints({"2560", "-4160", "1872", "-195"}), ints({"2560", "-3520", "1232", "-77"}),
       ints({"14057472000", "-42172416000", "48483635200", "-26679910400", "7150266240", "-839047040",
             "35153041"})},
      {4, Rat(2048, 5), ints({"28672", "-60928", "42432", "-10608", "663"}),
       ints({"28672", "-53760", "31680", "-6160", "231"}),
       ints({"13989396348928", "-55957585395712", "91916125077504", "-79896826347520", "39463764078592",
             "-11050000539648", "1648475542656", "-113348764800", "2847396321"})},
      {5, Rat(8192, 21), ints({"98304", "-258048", "243712", "-99008", "15912", "-663"}),
       ints({"98304", "-233472", "194560", "-66880", "8360", "-209"}),
       ints({"121733331812352", "-608666659061760", "1301756554248192", "-1555026262622208",
             "1136607561252864", "-523630732640256", "151029162176512", "-26204424888320", "2515441608384",
             "-113971885760", "1908029761"})},
  };
  return lists;
}

}  // namespace quartic
